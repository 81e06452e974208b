# The same language from a grammar in Chomsky form: every axiom is
# either A a or -> B x1 -> C x2 D x1 x2.
constants: a [ ] + *
predicates: L Bra Ket P T BraL LP LT
L a
Bra [
Ket ]
P +
T *
-> Bra x1 -> L x2 BraL x1 x2
-> BraL x1 -> Ket x2 L x1 x2
-> L x1 -> P x2 LP x1 x2
-> LP x1 -> L x2 L x1 x2
-> L x1 -> T x2 LT x1 x2
-> LT x1 -> L x2 L x1 x2
