#include "derivus/codec.hpp"
#include "derivus/rsfile.hpp"

namespace derivus {

// The axiom table of the universal system, in the text format of
// parse_system.  tests/fixtures/sys/universal.rs carries the same text
// as a golden copy.  Variable roles: x1 x2 range over strings, x3 the
// constant count, x4 the predicate count, x5 a variable encoding or a
// string, x6 x7 x8 further strings.
static const char* universal_table = R"(
constants: a v p [] ' * ~_ (_ )_ ,_ ->_
predicates: Acc N0 < <= A_s P_s V L EL LL Eq PRF ELL EPRF RF VV SbL SbLL SbPRF SbRF AP EqA RBasis+ RBasis BRA RA PBRA D_s+ D_s Omega_s

# accent strings and counts
Acc '
-> Acc x1 Acc x1 '
N0 []
-> Acc x1 N0 x1
-> Acc x1 -> Acc x2 < x1 , x1 x2
-> Acc x1 <= x1 , x1
-> < x1 , x2 <= x1 , x2

# indexed constants, predicates, variables
-> <= x1 , x3 A_s a x1 , x3
-> <= x1 , x4 P_s p x1 , x4
-> Acc x1 V v x1

# lists and elementary lists over the encoded alphabet
-> A_s x1 , x3 L x1 , x3
-> V x1 -> N0 x3 L x1 , x3
-> A_s x1 , x3 -> L x2 , x3 L x1 (_ x2 )_ , x3
-> L x1 , x3 -> L x2 , x3 L x1 x2 , x3
-> A_s x1 , x3 EL x1 , x3
-> A_s x1 , x3 -> EL x2 , x3 EL x1 (_ x2 )_ , x3
-> EL x1 , x3 -> EL x2 , x3 EL x1 x2 , x3

# comma-separated list sequences
-> L x1 , x3 LL x1 , x3
-> LL x1 , x3 -> L x2 , x3 LL x1 ,_ x2 , x3

# equations and prime formulas
-> N0 x4 -> L x1 , x3 -> L x2 , x3 Eq ~_ x1 ,_ x2 , x3 , x4
-> Eq x1 , x3 , x4 PRF x1 , x3 , x4
-> P_s x1 , x4 -> N0 x3 PRF x1 , x3 , x4
-> P_s x1 , x4 -> LL x2 , x3 PRF x1 x2 , x3 , x4

# elementary counterparts
-> EL x1 , x3 ELL x1 , x3
-> ELL x1 , x3 -> EL x2 , x3 ELL x1 ,_ x2 , x3
-> N0 x4 -> EL x1 , x3 -> EL x2 , x3 EPRF ~_ x1 ,_ x2 , x3 , x4
-> P_s x1 , x4 -> N0 x3 EPRF x1 , x3 , x4
-> P_s x1 , x4 -> ELL x2 , x3 EPRF x1 x2 , x3 , x4

# implication chains
-> PRF x1 , x3 , x4 RF x1 , x3 , x4
-> PRF x1 , x3 , x4 -> RF x2 , x3 , x4 RF ->_ x1 x2 , x3 , x4

# distinct variables
-> < x1 , x2 VV v x1 , v x2
-> < x1 , x2 VV v x2 , v x1

# substitution into lists
-> A_s x1 , x3 -> V x5 -> L x6 , x3 SbL x1 , x6 , x5 , x1 , x3
-> V x1 -> L x6 , x3 SbL x1 , x6 , x1 , x6 , x3
-> VV x1 , x5 -> L x6 , x3 SbL x1 , x6 , x5 , x1 , x3
-> A_s x1 , x3 -> SbL x2 , x6 , x5 , x7 , x3 SbL x1 (_ x2 )_ , x6 , x5 , x1 (_ x7 )_ , x3
-> SbL x1 , x6 , x5 , x8 , x3 -> SbL x2 , x6 , x5 , x7 , x3 SbL x1 x2 , x6 , x5 , x8 x7 , x3

# substitution into list sequences
-> SbL x1 , x6 , x5 , x8 , x3 SbLL x1 , x6 , x5 , x8 , x3
-> SbLL x1 , x6 , x5 , x8 , x3 -> SbL x2 , x6 , x5 , x7 , x3 SbLL x1 ,_ x2 , x6 , x5 , x8 ,_ x7 , x3

# substitution into prime formulas
-> N0 x4 -> SbL x1 , x6 , x5 , x8 , x3 -> SbL x2 , x6 , x5 , x7 , x3 SbPRF ~_ x1 ,_ x2 , x6 , x5 , ~_ x8 ,_ x7 , x3 , x4
-> P_s x1 , x4 -> V x5 -> L x6 , x3 SbPRF x1 , x6 , x5 , x1 , x3 , x4
-> P_s x1 , x4 -> SbLL x2 , x6 , x5 , x7 , x3 SbPRF x1 x2 , x6 , x5 , x1 x7 , x3 , x4

# substitution into implication chains, then the arity-four closure
-> SbPRF x1 , x6 , x5 , x8 , x3 , x4 SbRF x1 , x6 , x5 , x8 , x3 , x4
-> SbPRF x1 , x6 , x5 , x8 , x3 , x4 -> SbRF x2 , x6 , x5 , x7 , x3 , x4 SbRF ->_ x1 x2 , x6 , x5 , ->_ x8 x7 , x3 , x4
-> RF x1 , x3 , x4 SbRF x1 , x1 , x3 , x4
-> SbRF x1 x5 , x8 , x5 , x6 x8 , x3 , x4 SbRF x1 x5 , x6 x8 , x3 , x4
-> SbRF x1 x5 x2 , x8 , x5 , x6 x8 x7 , x3 , x4 SbRF x1 x5 x2 , x6 x8 x7 , x3 , x4

# premise chains for the congruence axioms
-> V x1 -> V x2 AP ->_ ~_ x1 ,_ x2 , x1 , x2
-> V x1 -> V x2 -> AP x6 , x8 , x7 AP ->_ ~_ x1 ,_ x2 x6 , x1 ,_ x8 , x2 ,_ x7

# equality axiom encodings
-> N0 x3 -> N0 x4 -> V x1 EqA ~_ x1 ,_ x1 , x3 , x4
-> V x1 -> V x2 -> Eq x5 , x3 , x4 -> SbPRF x5 , x1 , x2 , x8 , x3 , x4 EqA ->_ x8 ->_ ~_ x1 ,_ x2 x5 , x3 , x4
-> AP x6 , x8 , x7 -> P_s x5 , x4 -> N0 x3 EqA x6 ->_ x5 x8 x5 x7 , x3 , x4

# basis strings
-> RF x1 , x3 , x4 RBasis+ x3 * x4 * x1 *
-> RF x1 , x3 , x4 -> RBasis+ x3 * x4 * x8 * RBasis+ x3 * x4 * x8 * x1 *
-> N0 x3 -> N0 x4 RBasis x3 * x4 * [] *
-> RBasis+ x1 RBasis x1

# membership of a formula in a basis string
-> RF x1 , x3 , x4 BRA x3 * x4 * x1 * , x1
-> RF x1 , x3 , x4 -> RBasis+ x3 * x4 * x8 * BRA x3 * x4 * x8 * x1 * , x1
-> RF x1 , x3 , x4 -> BRA x3 * x4 * x8 * , x2 BRA x3 * x4 * x8 * x1 * , x2

# axioms of an encoded system: equality axioms or basis members
-> EqA x1 , x3 , x4 -> RBasis x3 * x4 * x8 * RA x3 * x4 * x8 * , x1
-> BRA x1 , x2 RA x1 , x2
-> PRF x1 , x3 , x4 -> BRA x3 * x4 * x8 * , x1 PBRA x3 * x4 * x8 * , x1

# derivation strings: start, axiom step, detachment step, substitution step
-> N0 x3 -> N0 x4 -> RA x3 * x4 * x8 * , x1 D_s+ x3 * x4 * x1 * , x3 * x4 * x8 *
-> D_s+ x1 , x2 -> RA x2 , x5 D_s+ x1 x5 * , x2
-> D_s+ x1 ->_ x6 x8 x5 , x7 -> BRA x1 ->_ x6 x8 x5 , ->_ x6 x8 -> PBRA x1 ->_ x6 x8 x5 , x6 -> RBasis+ x1 ->_ x6 x8 x5 x8 * D_s+ x1 ->_ x6 x8 x5 x8 * , x7
-> D_s+ x3 * x4 x1 x2 x5 , x7 -> BRA x3 * x4 x1 x2 x5 , x2 -> SbRF x2 , x8 , x3 , x4 D_s+ x3 * x4 x1 x2 x5 x8 * , x7
-> N0 x3 -> N0 x4 -> RBasis x3 * x4 * x8 * D_s x3 * x4 * [] * , x3 * x4 * x8 *
-> D_s+ x1 , x2 D_s x1 , x2

# derivable elementary prime formulas of an encoded system
-> EPRF x1 , x3 , x4 -> BRA x7 , x1 -> D_s x7 , x2 Omega_s x2 x1
)";

const RecursiveSystem& universal_system() {
    static const RecursiveSystem sys = parse_system(universal_table);
    return sys;
}

} // namespace derivus
