#include "skein/fraction.hpp"

namespace skein {

BracketFrac BracketFrac::operator-() const {
  BracketFrac f = *this;
  f.num_ = -f.num_;
  return f;
}

BracketFrac& BracketFrac::operator+=(const BracketFrac& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;
  // common denominator: atom-wise max multiplicity
  std::map<std::int64_t, int> common = den_;
  for (const auto& [k, m] : rhs.den_) {
    int& slot = common[k];
    if (m > slot) slot = m;
  }
  LaurentQA lhs_scale = LaurentQA::one();
  LaurentQA rhs_scale = LaurentQA::one();
  for (const auto& [k, m] : common) {
    auto it = den_.find(k);
    int have = it == den_.end() ? 0 : it->second;
    for (int i = have; i < m; ++i) lhs_scale *= quantum_bracket(k);
    auto rit = rhs.den_.find(k);
    have = rit == rhs.den_.end() ? 0 : rit->second;
    for (int i = have; i < m; ++i) rhs_scale *= quantum_bracket(k);
  }
  num_ = num_ * lhs_scale + rhs.num_ * rhs_scale;
  den_ = std::move(common);
  if (num_.is_zero()) den_.clear();
  return *this;
}

BracketFrac& BracketFrac::operator-=(const BracketFrac& rhs) {
  return *this += -rhs;
}

BracketFrac operator*(const BracketFrac& a, const BracketFrac& b) {
  BracketFrac f;
  f.num_ = a.num_ * b.num_;
  if (f.num_.is_zero()) return f;
  f.den_ = a.den_;
  for (const auto& [k, m] : b.den_) f.den_[k] += m;
  return f;
}

BracketFrac BracketFrac::scaled(const Rational& c) const {
  BracketFrac f;
  f.num_ = num_.scaled(c);
  if (!f.num_.is_zero()) f.den_ = den_;
  return f;
}

BracketFrac& BracketFrac::div_bracket(std::int64_t k) {
  if (k == 0) throw std::invalid_argument("div_bracket: {0} = 0");
  if (k < 0) {
    num_ = -num_;
    k = -k;
  }
  den_[k] += 1;
  return *this;
}

BracketFrac& BracketFrac::mul_bracket(std::int64_t k) {
  if (k < 0) {
    num_ = -num_;
    k = -k;
  }
  auto it = den_.find(k);
  if (it != den_.end()) {
    if (--it->second == 0) den_.erase(it);
  } else {
    num_ *= quantum_bracket(k);
  }
  return *this;
}

BracketFrac BracketFrac::adams(std::int64_t d) const {
  BracketFrac f;
  f.num_ = num_.adams(d);
  for (const auto& [k, m] : den_) f.den_[k * d] += m;
  return f;
}

void BracketFrac::reduce() {
  if (num_.is_zero()) {
    den_.clear();
    return;
  }
  for (auto it = den_.begin(); it != den_.end();) {
    bool erased = false;
    while (it->second > 0) {
      try {
        num_ = exact_div(num_, quantum_bracket(it->first));
      } catch (const NotDivisible&) {
        break;
      }
      if (--it->second == 0) {
        it = den_.erase(it);
        erased = true;
        break;
      }
    }
    if (!erased) ++it;
  }
}

LaurentQA BracketFrac::expanded_denominator() const {
  LaurentQA d = LaurentQA::one();
  for (const auto& [k, m] : den_)
    for (int i = 0; i < m; ++i) d *= quantum_bracket(k);
  return d;
}

LaurentQA BracketFrac::to_laurent() const {
  if (den_.empty()) return num_;
  return exact_div(num_, expanded_denominator());
}

bool BracketFrac::equals(const BracketFrac& rhs) const {
  return num_ * rhs.expanded_denominator() ==
         rhs.num_ * expanded_denominator();
}

}  // namespace skein
