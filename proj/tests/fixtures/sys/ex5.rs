# Nonnegative integers as elementary terms; + and * fold the sum and
# the product over a list of numbers.
constants: 0 1 [] s + *
predicates: N0 NL0
N0 0
-> N0 x1 N0 s(x1)
~ 1 , s(0)
NL0 []
-> N0 x1 NL0 x1
-> NL0 x1 -> NL0 x2 NL0 x1 x2
-> NL0 x1 ~ x1 [] , x1
-> NL0 x1 ~ [] x1 , x1
~ +([]) , 0
-> NL0 x1 ~ +(0 x1) , +(x1)
-> N0 x1 -> NL0 x2 ~ +(s(x1) x2) , s(+(x1 x2))
~ *([]) , 1
-> NL0 x1 ~ *(0 x1) , 0
-> N0 x1 -> NL0 x2 ~ *(s(x1) x2) , +(*(x1 x2) *(x2))
