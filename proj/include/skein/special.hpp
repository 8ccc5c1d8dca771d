#ifndef SKEIN_SPECIAL_HPP
#define SKEIN_SPECIAL_HPP

#include <cstdint>

#include "skein/invariants.hpp"
#include "skein/ring.hpp"

namespace skein {

// q = 1 slice of the normalized invariant equals the |lambda| + |mu| power
// of the box colored slice
Verdict special_poly_check(const FramedKnot& k, const Partition& lambda,
                           const Partition& mu = Partition());

// the composite quotient at the unknot is exactly one before any limit
Verdict special_composite_check(const FramedKnot& k, const Partition& nu);

// a = 1 slice of the framing independent normalized invariant; a Laurent
// polynomial in q alone
LaurentQA colored_alexander(const FramedKnot& k, const Partition& lambda);

// closed form for the hook colored torus value: {d}{drs}/({dr}{ds}) with
// d = m + n + 1; depends on the hook only through d
LaurentQA torus_alexander_closed(int r, int s, int m, int n);

// every hook of size d colors the torus knot to the same closed form,
// which is the box value at q -> q^d
Verdict hook_conjecture_check(const TorusKnot& t, int d);

// integer polynomial in z^2 with [p]^2 alpha = sum_{k} (q^{p tau})^{p-1-2k}
// - p (-1)^{(p-1) tau}
LaurentQA alpha_p_tau(int p, std::int64_t tau);

// hook character generating identity: sum over hooks of size |B| of
// chi_(a|b)(B) (-1)^b u^{a-b} equals prod {B_j} / {1}
Verdict sumchi_check(const Partition& B);

// a = 1 slice of the prime row g-tilde against z^{-2} A(T; q^p) alpha_p^w
Verdict gtilde_a1_check(const TorusKnot& t, int p);

}  // namespace skein

#endif
