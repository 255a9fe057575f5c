#pragma once

#include "qtor/report.hpp"
#include "qtor/toroidal.hpp"

namespace qtor {

// Heisenberg commutation: [e_i(m), e_j(n)] = (m/2)(e_i,e_j) delta_{m,-n} on
// every basis state of degree <= maxdeg, for odd |m|,|n| <= mode_limit.
Report suite_heisenberg(int mode_limit, int maxdeg);

// Exchange identity: E+(a,z) E-(b,w) = E-(b,w) E+(a,z) ((1-w/z)/(1+w/z))^{(a,b)}
// for all unit weights, windows |m|,|n| <= comp_limit, states deg <= maxdeg.
Report suite_exchange(int comp_limit, int maxdeg);

// Contraction factorization: products of two X words equal their normal-ordered
// form convolved with the four-factor kernel; all index pairs, a in {1,-1}^2.
Report suite_prop1(int window, int maxdeg, int latrange);

// Limit specializations to u/v words: word-level cancellation plus
// componentwise equality to the stated window.
Report suite_lemma3(int window, int maxdeg);

// Partial fractions: (2,3), (q, q^{-1}) with the quantum-integer cross check,
// and `random_pairs` seeded random monomial pairs, all to the given order.
Report suite_lemma4(int order, int random_pairs, unsigned long long seed);

// Commutator formula windows for both index pairs and a = b in {1,-1}, plus
// the (q+q^{-1})/2 value of [pi(h_11), pi(h_1,-1)].
Report suite_prop5(int window, int maxdeg, int latrange);

// Deliberately perturbed constant; must fail with both sides printed.
Report suite_selftest(int perturb);

}  // namespace qtor
