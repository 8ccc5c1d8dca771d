#ifndef SKEIN_HECKE_HPP
#define SKEIN_HECKE_HPP

#include <map>
#include <stdexcept>
#include <vector>

#include "skein/fraction.hpp"
#include "skein/partition.hpp"

namespace skein {

struct StrandMismatch : std::runtime_error {
  explicit StrandMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct SizeCap : std::runtime_error {
  explicit SizeCap(const std::string& what) : std::runtime_error(what) {}
};

// permutation of {0..n-1} as the image vector i -> p[i]
using Perm = std::vector<int>;

Perm identity_perm(int n);
int perm_length(const Perm& p);  // inversion count
Partition cycle_type(const Perm& p);
// (p o q)(i) = p[q[i]]
Perm perm_compose(const Perm& p, const Perm& q);
Perm perm_inverse(const Perm& p);
std::vector<Perm> all_perms(int n);

// Element of the Hecke algebra H_n in the positive-permutation-braid basis
// T_w. Coefficients are localized Laurent polynomials in q alone; the
// bracket denominators appear only through division by the alpha_lambda
// normalization.
class HeckeElement {
 public:
  HeckeElement() = default;
  explicit HeckeElement(int n) : n_(n) {}
  static HeckeElement zero(int n) { return HeckeElement(n); }
  static HeckeElement unit(int n);
  static HeckeElement basis(int n, const Perm& w);

  int strands() const { return n_; }
  const std::map<Perm, BracketFrac>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  BracketFrac coeff(const Perm& w) const;

  HeckeElement& operator+=(const HeckeElement& rhs);
  HeckeElement& operator-=(const HeckeElement& rhs);
  friend HeckeElement operator+(HeckeElement a, const HeckeElement& b) {
    return a += b;
  }
  friend HeckeElement operator-(HeckeElement a, const HeckeElement& b) {
    return a -= b;
  }
  HeckeElement scaled(const BracketFrac& c) const;

  // value equality (coefficients compared as fractions)
  bool equals(const HeckeElement& rhs) const;

  void add_term(const Perm& w, const BracketFrac& c);

 private:
  int n_ = 0;
  std::map<Perm, BracketFrac> terms_;
};

HeckeElement hecke_mul(const HeckeElement& x, const HeckeElement& y);

// T_w^{-1}, expanded from a reduced word
HeckeElement hecke_basis_inverse(int n, const Perm& w);

// Jones symmetrizers a_n = sum q^{l} T_w and b_n = sum (-q)^{-l} T_w
HeckeElement jones_row(int n);
HeckeElement jones_col(int n);

// image of x under the inclusion H_k -> H_n acting on strands
// offset..offset+k-1
HeckeElement hecke_embed(const HeckeElement& x, int n, int offset);

// tensor over parts: E_lambda = a_{lambda_1} x a_{lambda_2} x ... on
// consecutive blocks; F_lambda likewise from b
HeckeElement row_symmetrizer_product(const Partition& lambda);   // E_lambda
HeckeElement col_symmetrizer_product(const Partition& lambda);   // F_lambda

// strand permutation carrying the row-major numbering of lambda to the
// row-major numbering of its conjugate: pi(N_lambda(i,j)) = N_conj(j,i)
Perm pi_lambda(const Partition& lambda);

// Young subgroup preserving the consecutive row blocks of lambda
std::vector<Perm> row_group(const Partition& lambda);

// true when no two strands of one mu block land in one lambda block;
// E_lambda T_pi F_mu vanishes otherwise
bool separates(const Partition& lambda, const Partition& mu, const Perm& pi);

// alpha normalizer: prod over cells q^{j-i} [hook length]
BracketFrac alpha_lambda(const Partition& lambda);

// e_lambda = E_lambda T_{pi_lambda} F_{conj} T_{pi_lambda}^{-1}
HeckeElement e_lambda(const Partition& lambda);

// y_lambda = e_lambda / alpha_lambda, the idempotent; cap on |lambda|
HeckeElement idempotent_y(const Partition& lambda, int max_n = 5);

struct SandwichResult {
  bool pass = false;
  bool factored = false;     // pi = pi_lambda sigma pi_lambda^{-1} rho found
  int sigma_length = 0;      // l(sigma) when factored
  std::string detail;
};

// checks y_lambda T_pi y_lambda against the predicted scalar multiple:
// (-1)^{l(sigma)} q^{l(pi)-l(sigma)-l(pi_lambda^{-1} sigma pi_lambda)} y
// when pi = rho (pi_lambda^{-1} sigma pi_lambda) with rho, sigma ranging
// over the row groups of lambda and its conjugate, and otherwise zero up
// to an allowed (q - 1/q) multiple that vanishes at q = 1
SandwichResult sandwich_check(const Partition& lambda, const Perm& pi,
                              int max_n = 4);

}  // namespace skein

#endif
