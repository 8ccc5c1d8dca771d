#include "skein/special.hpp"

#include "skein/character.hpp"
#include "skein/lmov.hpp"

namespace skein {

Verdict special_poly_check(const FramedKnot& k, const Partition& lambda,
                           const Partition& mu) {
  const int n = lambda.weight() + mu.weight();
  LaurentQA lhs = normalized_P(k, lambda, mu).eval_q1();
  LaurentQA base = normalized_P(k, Partition({1})).eval_q1();
  LaurentQA rhs = LaurentQA::one();
  for (int i = 0; i < n; ++i) rhs *= base;
  if (lhs == rhs) return Verdict::ok();
  return Verdict::fail(k.to_string() + " color " + lambda.to_string() + "," +
                       mu.to_string() + ": q = 1 slice " + lhs.to_string() +
                       " != power " + rhs.to_string());
}

Verdict special_composite_check(const FramedKnot& k, const Partition& nu) {
  if (k.is_torus || k.tau != 0)
    return Verdict::fail("composite quotient only computable for the unknot");
  const BracketFrac c = unknot_composite(nu);
  // the quotient c / c is one on the nose; confirm c is nonzero so the
  // statement is not vacuous
  if (c.is_zero())
    return Verdict::fail("composite invariant vanished for " + nu.to_string());
  return Verdict::ok();
}

LaurentQA colored_alexander(const FramedKnot& k, const Partition& lambda) {
  FramedKnot flat = k;
  flat.tau = 0;  // framing independent quotient
  return normalized_P(flat, lambda).eval_a1();
}

LaurentQA torus_alexander_closed(int r, int s, int m, int n) {
  TorusKnot check(r, s);  // validates coprimality
  (void)check;
  if (m < 0 || n < 0) throw std::invalid_argument("hook arms must be >= 0");
  const std::int64_t d = m + n + 1;
  BracketFrac f(quantum_bracket(d) * quantum_bracket(d * r * s));
  f.div_bracket(d * r);
  f.div_bracket(d * s);
  return f.to_laurent();
}

Verdict hook_conjecture_check(const TorusKnot& t, int d) {
  const LaurentQA closed = torus_alexander_closed(t.r, t.s, d - 1, 0);
  const LaurentQA box_scaled = torus_alexander_closed(t.r, t.s, 0, 0).adams(d);
  if (closed != box_scaled)
    return Verdict::fail("closed form is not the box value at q^" +
                         std::to_string(d));
  FramedKnot k = FramedKnot::torus_knot(t.r, t.s, 0);
  for (int m = 0; m < d; ++m) {
    const Partition hook = Partition::hook(m, d - 1 - m);
    LaurentQA a = colored_alexander(k, hook);
    if (a != closed)
      return Verdict::fail(t.to_string() + " hook " + hook.to_string() +
                           ": " + a.to_string() + " != closed form " +
                           closed.to_string());
    if (a.invert_q() != a || a.substitute_sign(true, false) != a)
      return Verdict::fail(t.to_string() + " hook " + hook.to_string() +
                           ": slice lost its q symmetry");
  }
  return Verdict::ok();
}

LaurentQA alpha_p_tau(int p, std::int64_t tau) {
  LaurentQA num;
  for (int k = 0; k < p; ++k)
    num += LaurentQA::monomial(1, std::int64_t(p) * tau * (p - 1 - 2 * k), 0);
  const int sgn = ((p - 1) * tau) % 2 == 0 ? 1 : -1;
  num -= LaurentQA::constant(p * sgn);
  return exact_div(num, quantum_int(p) * quantum_int(p));
}

Verdict sumchi_check(const Partition& B) {
  if (B.empty()) return Verdict::fail("needs a nonempty partition");
  const int n = B.weight();
  LaurentQA lhs;
  for (int a = 0; a < n; ++a) {
    const int b = n - 1 - a;
    const Int chi = sym_character(Partition::hook(a, b), B);
    if (chi == 0) continue;
    Rational c(chi);
    if (b % 2 != 0) c = -c;
    lhs += LaurentQA::monomial(c, a - b, 0);
  }
  BracketFrac rhs = BracketFrac::one();
  for (int part : B.parts()) rhs.mul_bracket(part);
  rhs.div_bracket(1);
  LaurentQA rhs_poly = rhs.to_laurent();
  if (lhs == rhs_poly) return Verdict::ok();
  return Verdict::fail("hook character sum for " + B.to_string() + ": " +
                       lhs.to_string() + " != " + rhs_poly.to_string());
}

Verdict gtilde_a1_check(const TorusKnot& t, int p) {
  const FramedKnot k = FramedKnot::torus_knot(t.r, t.s);
  BracketFrac gt = prime_special_gtilde(k, p);
  gt *= BracketFrac(quantum_bracket(1) * quantum_bracket(1));
  gt.reduce();
  LaurentQA cleared;
  try {
    cleared = gt.to_laurent();
  } catch (const NotDivisible& e) {
    return Verdict::fail(std::string("pole clearing failed: ") + e.what());
  }
  const LaurentQA lhs = cleared.eval_a1();
  // the series route carries the tau framing phase (-1)^{p w}
  const Rational phase = (std::int64_t(p) * t.writhe()) % 2 != 0 ? -1 : 1;
  const LaurentQA rhs = (torus_alexander_closed(t.r, t.s, 0, 0).adams(p) *
                         alpha_p_tau(p, t.writhe()))
                            .scaled(phase);
  if (lhs != rhs)
    return Verdict::fail(t.to_string() + " p=" + std::to_string(p) +
                         ": a = 1 slice " + lhs.to_string() +
                         " != closed form " + rhs.to_string());
  Verdict ring = ring_membership(lhs, RingSpec::zz2());
  if (!ring.pass)
    return Verdict::fail(t.to_string() + " p=" + std::to_string(p) + ": " +
                         ring.detail);
  return Verdict::ok();
}

}  // namespace skein
