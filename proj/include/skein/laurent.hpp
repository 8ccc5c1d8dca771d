#ifndef SKEIN_LAURENT_HPP
#define SKEIN_LAURENT_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "skein/rational.hpp"

namespace skein {

struct NotDivisible : std::runtime_error {
  explicit NotDivisible(const std::string& what) : std::runtime_error(what) {}
};

struct FractionalExponent : std::runtime_error {
  explicit FractionalExponent(const std::string& what) : std::runtime_error(what) {}
};

// Exponent pair (q, a). qnum is the numerator of the q-exponent over the
// owning polynomial's lattice denominator; aexp is a plain integer.
struct QAExp {
  std::int64_t qnum = 0;
  std::int64_t aexp = 0;
  auto operator<=>(const QAExp&) const = default;
};

// Sparse bivariate Laurent polynomial in q and a over Q. q-exponents are
// rationals on a common lattice 1/lden; a-exponents are integers. The term
// map holds no zero coefficients and the lattice is kept minimal, so equal
// values compare equal structurally.
class LaurentQA {
 public:
  LaurentQA() = default;

  static LaurentQA constant(const Rational& c);
  static LaurentQA one() { return constant(1); }
  // c * q^(qnum/qden) * a^aexp
  static LaurentQA monomial(const Rational& c, std::int64_t qnum,
                            std::int64_t qden, std::int64_t aexp);
  static LaurentQA monomial(const Rational& c, std::int64_t qexp,
                            std::int64_t aexp) {
    return monomial(c, qexp, 1, aexp);
  }

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  std::int64_t lattice() const { return lden_; }
  bool has_integer_qexp() const { return lden_ == 1; }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<QAExp, Rational>& terms() const { return terms_; }
  Rational qexp_of(const QAExp& e) const {
    return Rational(e.qnum, lden_);
  }

  Rational coeff(std::int64_t qexp, std::int64_t aexp) const;

  LaurentQA operator-() const;
  LaurentQA& operator+=(const LaurentQA& rhs);
  LaurentQA& operator-=(const LaurentQA& rhs);
  friend LaurentQA operator+(LaurentQA a, const LaurentQA& b) { return a += b; }
  friend LaurentQA operator-(LaurentQA a, const LaurentQA& b) { return a -= b; }
  friend LaurentQA operator*(const LaurentQA& a, const LaurentQA& b);
  LaurentQA& operator*=(const LaurentQA& rhs) { return *this = *this * rhs; }
  LaurentQA scaled(const Rational& c) const;
  bool operator==(const LaurentQA& rhs) const = default;

  // q -> q^d, a -> a^d (ring homomorphism for d >= 1)
  LaurentQA adams(std::int64_t d) const;
  LaurentQA invert_q() const;   // q -> 1/q
  LaurentQA invert_a() const;   // a -> 1/a
  // q -> -q and/or a -> -a; requires integer q-exponents when flip_q is set
  LaurentQA substitute_sign(bool flip_q, bool flip_a) const;
  LaurentQA eval_q1() const;    // q -> 1, Laurent polynomial in a
  LaurentQA eval_a1() const;    // a -> 1, Laurent polynomial in q

  // exact quotient; throws NotDivisible when none exists
  friend LaurentQA exact_div(const LaurentQA& f, const LaurentQA& g);

  std::string to_string() const;

  void insert_term(std::int64_t qnum, std::int64_t qden, std::int64_t aexp,
                   const Rational& c);

 private:
  void normalize_lattice();
  void promote_lattice(std::int64_t new_lden);

  std::int64_t lden_ = 1;
  std::map<QAExp, Rational> terms_;
};

// {n} = q^n - q^-n
LaurentQA quantum_bracket(std::int64_t n);
// [n] = {n}/{1}
LaurentQA quantum_int(std::int64_t n);
// z^{2h} = (q - 1/q)^{2h} expanded
LaurentQA z_even_power(std::int64_t h);

}  // namespace skein

#endif
