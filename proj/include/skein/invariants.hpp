#ifndef SKEIN_INVARIANTS_HPP
#define SKEIN_INVARIANTS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include "skein/fraction.hpp"
#include "skein/partition.hpp"
#include "skein/ring.hpp"

namespace skein {

struct WeightMismatch : std::runtime_error {
  explicit WeightMismatch(const std::string& what) : std::runtime_error(what) {}
};

// fractional q-exponents survived a sum that should live on the integer
// lattice; indicates a genuine bug, never expected on valid input
struct LatticeResidue : std::runtime_error {
  explicit LatticeResidue(const std::string& what) : std::runtime_error(what) {}
};

struct UnsupportedFlavor : std::runtime_error {
  explicit UnsupportedFlavor(const std::string& what)
      : std::runtime_error(what) {}
};

// positive torus knot T_{r,s}: closure of (sigma_1 ... sigma_{r-1})^s,
// diagram writhe s(r-1); mirror is reached by q -> 1/q, a -> 1/a
struct TorusKnot {
  int r = 2;
  int s = 1;
  TorusKnot(int r_, int s_);
  int writhe() const { return s * (r - 1); }
  std::string to_string() const;
};

// unknot or torus knot with an explicit framing tau (the writhe of the
// chosen diagram); tau defaults to 0 for the unknot and to the standard
// braid diagram writhe for torus knots
struct FramedKnot {
  bool is_torus = false;
  TorusKnot torus{2, 1};
  std::int64_t tau = 0;

  static FramedKnot unknot(std::int64_t tau = 0);
  static FramedKnot torus_knot(int r, int s);
  static FramedKnot torus_knot(int r, int s, std::int64_t tau);
  std::string to_string() const;
};

// W_lambda(U) = prod over cells (a q^cn - 1/(a q^cn)) / {hook}
BracketFrac unknot_colored(const Partition& lambda);

// full colored invariant of the unknot via the signed LR resolution of the
// two-sided basis element into products of one-sided ones
BracketFrac unknot_full_colored(const Partition& lambda, const Partition& mu);

// composite invariant: LR-weighted sum of full colored unknot invariants
BracketFrac unknot_composite(const Partition& nu);

// cabling coefficient: the coefficient of s_Lambda in p_r composed with
// s_lambda; requires |Lambda| = r |lambda|, always an integer
Int c_lambda_r(const Partition& Lambda, const Partition& lambda, int r);

// framing-independent colored invariant of a torus knot via the cabling
// character sum; throws LatticeResidue if the q^{1/r} bookkeeping fails
// to land on the integer lattice
BracketFrac torus_colored_W(const TorusKnot& t, const Partition& lambda);

// framed invariant: q^{kappa tau} a^{|lambda| tau} times the framing
// independent value; full colors (mu nonempty) are supported for the
// unknot family only
BracketFrac framed_H(const FramedKnot& k, const Partition& lambda,
                     const Partition& mu = Partition());

// normalized invariant: framed value divided by the matching unknot value;
// always a Laurent polynomial (throws NotDivisible on a genuine failure)
LaurentQA normalized_P(const FramedKnot& k, const Partition& lambda,
                       const Partition& mu = Partition());

// meridian map eigenvalue t_{lambda,mu} as an exact pair over {1}
BracketFrac meridian_t(const Partition& lambda, const Partition& mu);

// checks normalized_P lies in a^eps Z[q^{+-2}, a^{+-2}], eps = (|lambda| +
// |mu|) tau mod 2
Verdict verify_strong_integrality(const FramedKnot& k, const Partition& lambda,
                                  const Partition& mu = Partition());

// checks the three substitution symmetries of the framed invariant:
//   H(-q, a) = (-1)^{|lambda|+|mu|} H(q, a)
//   H(q, -a) = (-1)^{(|lambda|+|mu|)(tau+1)} H(q, a)
//   H(1/q, a) = (-1)^{|lambda|+|mu|} H[conjugate colors](q, a)
Verdict verify_symmetries(const FramedKnot& k, const Partition& lambda,
                          const Partition& mu = Partition());

}  // namespace skein

#endif
