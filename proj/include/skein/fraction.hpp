#ifndef SKEIN_FRACTION_HPP
#define SKEIN_FRACTION_HPP

#include <cstdint>
#include <map>

#include "skein/laurent.hpp"

namespace skein {

// Laurent polynomial divided by a product of quantum brackets {k}^m, k >= 1.
// This is the transient localization the invariants live in before
// normalization; to_laurent() performs the exact division and fails loudly
// when the value is not actually polynomial.
class BracketFrac {
 public:
  BracketFrac() = default;
  /*implicit*/ BracketFrac(LaurentQA num) : num_(std::move(num)) {}
  static BracketFrac one() { return BracketFrac(LaurentQA::one()); }

  const LaurentQA& numerator() const { return num_; }
  const std::map<std::int64_t, int>& denominator_brackets() const {
    return den_;
  }
  bool is_zero() const { return num_.is_zero(); }

  BracketFrac operator-() const;
  BracketFrac& operator+=(const BracketFrac& rhs);
  BracketFrac& operator-=(const BracketFrac& rhs);
  friend BracketFrac operator+(BracketFrac a, const BracketFrac& b) { return a += b; }
  friend BracketFrac operator-(BracketFrac a, const BracketFrac& b) { return a -= b; }
  friend BracketFrac operator*(const BracketFrac& a, const BracketFrac& b);
  BracketFrac& operator*=(const BracketFrac& rhs) { return *this = *this * rhs; }
  BracketFrac scaled(const Rational& c) const;

  // divide by {k}; k != 0, {-k} contributes a sign
  BracketFrac& div_bracket(std::int64_t k);
  BracketFrac& mul_bracket(std::int64_t k);

  // q -> q^d, a -> a^d; bracket {k} -> {dk}
  BracketFrac adams(std::int64_t d) const;

  // cancel denominator brackets that divide the numerator exactly
  void reduce();

  LaurentQA expanded_denominator() const;
  // exact value as a Laurent polynomial; throws NotDivisible otherwise
  LaurentQA to_laurent() const;

  bool equals(const BracketFrac& rhs) const;  // cross-multiplied comparison

 private:
  LaurentQA num_;
  std::map<std::int64_t, int> den_;  // bracket index (>=1) -> multiplicity
};

}  // namespace skein

#endif
