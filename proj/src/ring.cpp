#include "skein/ring.hpp"

#include <vector>

namespace skein {

namespace {

std::string monomial_name(const LaurentQA& f, const QAExp& e) {
  return "coefficient " + f.terms().at(e).get_str() + " at q^" +
         f.qexp_of(e).get_str() + " a^" + std::to_string(e.aexp);
}

bool parity_matches(std::int64_t aexp, int eps) {
  return ((aexp % 2) + 2) % 2 == eps;
}

// Greedy top-down reduction of a symmetric q-Laurent polynomial into integer
// multiples of z^{2h}, h >= 0. Returns false with `why` on the first
// irreducible monomial.
bool reduce_z2(const LaurentQA& comp, std::int64_t aexp,
               std::map<std::pair<std::int64_t, std::int64_t>, Int>* out,
               std::int64_t Q, std::string* why) {
  LaurentQA r = comp;
  while (!r.is_zero()) {
    const auto& [e, c] = *r.terms().rbegin();
    if (e.qnum < 0) {
      *why = "residual below z^0: " + monomial_name(r, e) + " (a^" +
             std::to_string(aexp) + " component)";
      return false;
    }
    if (e.qnum % 2 != 0) {
      *why = "odd q-exponent: " + monomial_name(r, e);
      return false;
    }
    if (!is_integer(c)) {
      *why = "non-integer " + monomial_name(r, e);
      return false;
    }
    std::int64_t h = e.qnum / 2;
    (*out)[{h, Q}] = c.get_num();
    r -= z_even_power(h).scaled(c);
  }
  return true;
}

}  // namespace

LaurentQA ZARewrite::expand_cleared() const {
  LaurentQA f;
  for (const auto& [key, n] : coefficients) {
    Rational c(n);
    if (basis == Basis::Z2A2) {
      LaurentQA mono = z_even_power(key.first);
      f += mono.scaled(c) *
           LaurentQA::monomial(1, 0, 2 * key.second + epsilon);
    } else {
      f += LaurentQA::monomial(c, key.first, 2 * key.second + epsilon);
    }
  }
  return f;
}

Verdict ring_membership(const LaurentQA& f, const RingSpec& spec) {
  if (!f.has_integer_qexp())
    throw FractionalExponent("ring_membership: fractional q-exponents");

  switch (spec.kind) {
    case RingSpec::Kind::EvenLaurent: {
      for (const auto& [e, c] : f.terms()) {
        if (e.qnum % 2 != 0)
          return Verdict::fail("odd q-exponent: " + monomial_name(f, e));
        if (!parity_matches(e.aexp, spec.epsilon))
          return Verdict::fail("a-exponent parity != " +
                               std::to_string(spec.epsilon) + ": " +
                               monomial_name(f, e));
        if (!is_integer(c))
          return Verdict::fail("non-integer " + monomial_name(f, e));
      }
      return Verdict::ok();
    }

    case RingSpec::Kind::QIntA: {
      ZARewrite rw;
      rw.basis = ZARewrite::Basis::QA2;
      rw.epsilon = spec.epsilon;
      for (const auto& [e, c] : f.terms()) {
        if (!parity_matches(e.aexp, spec.epsilon))
          return Verdict::fail("a-exponent parity != " +
                               std::to_string(spec.epsilon) + ": " +
                               monomial_name(f, e));
        if (!is_integer(c))
          return Verdict::fail("non-integer " + monomial_name(f, e));
        rw.coefficients[{e.qnum, (e.aexp - spec.epsilon) / 2}] = c.get_num();
      }
      return Verdict::ok(std::move(rw));
    }

    case RingSpec::Kind::Zz2:
    case RingSpec::Kind::ZsqA: {
      const bool zz2 = spec.kind == RingSpec::Kind::Zz2;
      // split by a-degree
      std::map<std::int64_t, LaurentQA> by_a;
      for (const auto& [e, c] : f.terms()) {
        if (zz2 && e.aexp != 0)
          return Verdict::fail("a-dependence: " + monomial_name(f, e));
        if (!zz2 && !parity_matches(e.aexp, spec.epsilon))
          return Verdict::fail("a-exponent parity != " +
                               std::to_string(spec.epsilon) + ": " +
                               monomial_name(f, e));
        by_a[e.aexp] += LaurentQA::monomial(c, e.qnum, 0);
      }
      ZARewrite rw;
      rw.basis = ZARewrite::Basis::Z2A2;
      rw.epsilon = zz2 ? 0 : spec.epsilon;
      rw.pole = spec.pole;
      for (const auto& [aexp, comp] : by_a) {
        if (comp.invert_q() != comp)
          return Verdict::fail("not symmetric under q -> 1/q (a^" +
                               std::to_string(aexp) + " component)");
        std::string why;
        std::int64_t Q = zz2 ? 0 : (aexp - spec.epsilon) / 2;
        if (!reduce_z2(comp, aexp, &rw.coefficients, Q, &why))
          return Verdict::fail(why);
      }
      return Verdict::ok(std::move(rw));
    }
  }
  return Verdict::fail("unknown ring kind");
}

}  // namespace skein
