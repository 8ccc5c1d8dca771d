#include "skein/laurent.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace skein {

namespace {

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
  return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b);
}

std::int64_t lcm64(std::int64_t a, std::int64_t b) {
  return a / gcd64(a, b) * b;
}

}  // namespace

LaurentQA LaurentQA::constant(const Rational& c) {
  LaurentQA f;
  if (c != 0) f.terms_[{0, 0}] = c;
  return f;
}

LaurentQA LaurentQA::monomial(const Rational& c, std::int64_t qnum,
                              std::int64_t qden, std::int64_t aexp) {
  if (qden <= 0) throw std::invalid_argument("lattice denominator must be positive");
  LaurentQA f;
  if (c != 0) {
    f.lden_ = qden;
    f.terms_[{qnum, aexp}] = c;
    f.normalize_lattice();
  }
  return f;
}

bool LaurentQA::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == QAExp{0, 0} &&
         terms_.begin()->second == 1;
}

Rational LaurentQA::coeff(std::int64_t qexp, std::int64_t aexp) const {
  auto it = terms_.find({qexp * lden_, aexp});
  return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentQA::normalize_lattice() {
  if (lden_ == 1) return;
  std::int64_t g = lden_;
  for (const auto& [e, c] : terms_) {
    g = gcd64(g, e.qnum);
    if (g == 1) return;
  }
  if (terms_.empty()) {
    lden_ = 1;
    return;
  }
  std::map<QAExp, Rational> rescaled;
  for (auto& [e, c] : terms_) rescaled[{e.qnum / g, e.aexp}] = c;
  terms_ = std::move(rescaled);
  lden_ /= g;
}

void LaurentQA::promote_lattice(std::int64_t new_lden) {
  if (new_lden == lden_) return;
  std::int64_t m = new_lden / lden_;
  std::map<QAExp, Rational> rescaled;
  for (auto& [e, c] : terms_) rescaled[{e.qnum * m, e.aexp}] = c;
  terms_ = std::move(rescaled);
  lden_ = new_lden;
}

void LaurentQA::insert_term(std::int64_t qnum, std::int64_t qden,
                            std::int64_t aexp, const Rational& c) {
  if (c == 0) return;
  std::int64_t g = gcd64(qnum, qden);
  qnum /= g;
  qden /= g;
  std::int64_t l = lcm64(lden_, qden);
  promote_lattice(l);
  QAExp key{qnum * (l / qden), aexp};
  Rational& slot = terms_[key];
  slot += c;
  if (slot == 0) terms_.erase(key);
  normalize_lattice();
}

LaurentQA LaurentQA::operator-() const {
  LaurentQA f = *this;
  for (auto& [e, c] : f.terms_) c = -c;
  return f;
}

LaurentQA& LaurentQA::operator+=(const LaurentQA& rhs) {
  std::int64_t l = lcm64(lden_, rhs.lden_);
  promote_lattice(l);
  std::int64_t m = l / rhs.lden_;
  for (const auto& [e, c] : rhs.terms_) {
    QAExp key{e.qnum * m, e.aexp};
    Rational& slot = terms_[key];
    slot += c;
    if (slot == 0) terms_.erase(key);
  }
  normalize_lattice();
  return *this;
}

LaurentQA& LaurentQA::operator-=(const LaurentQA& rhs) {
  return *this += -rhs;
}

LaurentQA operator*(const LaurentQA& a, const LaurentQA& b) {
  LaurentQA f;
  if (a.is_zero() || b.is_zero()) return f;
  std::int64_t l = lcm64(a.lden_, b.lden_);
  std::int64_t ma = l / a.lden_, mb = l / b.lden_;
  f.lden_ = l;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      QAExp key{ea.qnum * ma + eb.qnum * mb, ea.aexp + eb.aexp};
      Rational& slot = f.terms_[key];
      slot += ca * cb;
      if (slot == 0) f.terms_.erase(key);
    }
  }
  f.normalize_lattice();
  return f;
}

LaurentQA LaurentQA::scaled(const Rational& c) const {
  LaurentQA f;
  if (c == 0) return f;
  f.lden_ = lden_;
  for (const auto& [e, cc] : terms_) f.terms_[e] = cc * c;
  return f;
}

LaurentQA LaurentQA::adams(std::int64_t d) const {
  if (d < 1) throw std::invalid_argument("adams: d must be positive");
  LaurentQA f;
  f.lden_ = lden_;
  for (const auto& [e, c] : terms_) f.terms_[{e.qnum * d, e.aexp * d}] = c;
  f.normalize_lattice();
  return f;
}

LaurentQA LaurentQA::invert_q() const {
  LaurentQA f;
  f.lden_ = lden_;
  for (const auto& [e, c] : terms_) f.terms_[{-e.qnum, e.aexp}] = c;
  return f;
}

LaurentQA LaurentQA::invert_a() const {
  LaurentQA f;
  f.lden_ = lden_;
  for (const auto& [e, c] : terms_) f.terms_[{e.qnum, -e.aexp}] = c;
  return f;
}

LaurentQA LaurentQA::substitute_sign(bool flip_q, bool flip_a) const {
  if (flip_q && lden_ != 1)
    throw FractionalExponent("substitute_sign: fractional q-exponents remain");
  LaurentQA f;
  f.lden_ = lden_;
  for (const auto& [e, c] : terms_) {
    bool neg = (flip_q && (e.qnum % 2 != 0)) != (flip_a && (e.aexp % 2 != 0));
    f.terms_[e] = neg ? Rational(-c) : c;
  }
  return f;
}

LaurentQA LaurentQA::eval_q1() const {
  if (lden_ != 1)
    throw FractionalExponent("eval_q1: fractional q-exponents remain");
  LaurentQA f;
  for (const auto& [e, c] : terms_) {
    Rational& slot = f.terms_[{0, e.aexp}];
    slot += c;
    if (slot == 0) f.terms_.erase({0, e.aexp});
  }
  return f;
}

LaurentQA LaurentQA::eval_a1() const {
  if (lden_ != 1)
    throw FractionalExponent("eval_a1: fractional q-exponents remain");
  LaurentQA f;
  for (const auto& [e, c] : terms_) {
    Rational& slot = f.terms_[{e.qnum, 0}];
    slot += c;
    if (slot == 0) f.terms_.erase({e.qnum, 0});
  }
  return f;
}

LaurentQA exact_div(const LaurentQA& f, const LaurentQA& g) {
  if (g.is_zero()) throw std::invalid_argument("exact_div: division by zero");
  if (f.is_zero()) return {};
  LaurentQA num = f, den = g;
  std::int64_t l = lcm64(num.lden_, den.lden_);
  num.promote_lattice(l);
  den.promote_lattice(l);

  // leading/trailing in lex order on (qexp, aexp); the quotient's exponents
  // are confined to the box spanned by lt(f)/lt(g) and tt(f)/tt(g)
  const QAExp lt_g = den.terms_.rbegin()->first;
  const Rational lc_g = den.terms_.rbegin()->second;
  const QAExp tt_f = num.terms_.begin()->first;
  const QAExp tt_g = den.terms_.begin()->first;
  const QAExp floor_exp{tt_f.qnum - tt_g.qnum, tt_f.aexp - tt_g.aexp};

  LaurentQA q;
  q.lden_ = l;
  LaurentQA r = num;
  while (!r.is_zero()) {
    const QAExp lt_r = r.terms_.rbegin()->first;
    const QAExp t{lt_r.qnum - lt_g.qnum, lt_r.aexp - lt_g.aexp};
    if (t < floor_exp)
      throw NotDivisible("exact_div: remainder at q^" +
                         Rational(lt_r.qnum, l).get_str() + " a^" +
                         std::to_string(lt_r.aexp));
    const Rational c = r.terms_.rbegin()->second / lc_g;
    q.terms_[t] = c;
    LaurentQA mono;
    mono.lden_ = l;
    mono.terms_[t] = c;
    r -= mono * den;
    r.promote_lattice(l);
  }
  q.normalize_lattice();
  return q;
}

std::string LaurentQA::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    if (!first) os << " + ";
    first = false;
    os << "(" << c.get_str() << ")";
    if (e.qnum != 0) os << "*q^(" << Rational(e.qnum, lden_).get_str() << ")";
    if (e.aexp != 0) os << "*a^" << e.aexp;
  }
  return os.str();
}

LaurentQA quantum_bracket(std::int64_t n) {
  if (n == 0) return {};
  LaurentQA f = LaurentQA::monomial(1, n, 0);
  f += LaurentQA::monomial(-1, -n, 0);
  return f;
}

LaurentQA quantum_int(std::int64_t n) {
  if (n == 0) return {};
  std::int64_t m = n < 0 ? -n : n;
  LaurentQA f;
  for (std::int64_t k = 0; k < m; ++k)
    f += LaurentQA::monomial(1, m - 1 - 2 * k, 0);
  return n < 0 ? -f : f;
}

LaurentQA z_even_power(std::int64_t h) {
  LaurentQA f = LaurentQA::one();
  LaurentQA z2 = quantum_bracket(1) * quantum_bracket(1);
  for (std::int64_t i = 0; i < h; ++i) f *= z2;
  return f;
}

}  // namespace skein
