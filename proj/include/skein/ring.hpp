#ifndef SKEIN_RING_HPP
#define SKEIN_RING_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "skein/laurent.hpp"

namespace skein {

// Target rings of the integrality statements.
struct RingSpec {
  enum class Kind {
    EvenLaurent,  // a^eps Z[q^{+-2}, a^{+-2}]
    ZsqA,         // z^{-2 pole} a^eps Z[z^2, a^{+-2}]
    QIntA,        // a^eps Z[q^{+-1}, a^{+-2}]
    Zz2,          // Z[z^2]
  };
  Kind kind = Kind::EvenLaurent;
  int epsilon = 0;  // 0 or 1
  int pole = 0;     // 0 or 1, ZsqA only

  static RingSpec even_laurent(int eps) { return {Kind::EvenLaurent, eps, 0}; }
  static RingSpec zsq_a(int eps, int pole) { return {Kind::ZsqA, eps, pole}; }
  static RingSpec q_int_a(int eps) { return {Kind::QIntA, eps, 0}; }
  static RingSpec zz2() { return {Kind::Zz2, 0, 0}; }
};

// Exact rewrite of a polynomial in the ZsqA basis:
//   sum N_{g,Q} z^{2g - 2 pole} a^{2Q + eps}
// For QIntA the same table holds (i, j) with basis monomials q^i a^{2j+eps}.
struct ZARewrite {
  enum class Basis { Z2A2, QA2 };
  Basis basis = Basis::Z2A2;
  std::map<std::pair<std::int64_t, std::int64_t>, Int> coefficients;
  int pole = 0;
  int epsilon = 0;

  // reproduces the pole-cleared source polynomial
  LaurentQA expand_cleared() const;
};

struct Verdict {
  bool pass = false;
  std::string detail;  // offending monomial / instance on failure
  std::optional<ZARewrite> rewrite;

  static Verdict ok() { return {true, "", std::nullopt}; }
  static Verdict ok(ZARewrite rw) { return {true, "", std::move(rw)}; }
  static Verdict fail(std::string why) {
    return {false, std::move(why), std::nullopt};
  }
};

// Membership of f in spec's ring. For ZsqA, f must already be pole-cleared
// (the caller multiplied by z^{2 pole}); on pass the rewrite table N_{g,Q}
// is returned and expand_cleared() reproduces f term-for-term.
// Failure is a Verdict, not an error.
Verdict ring_membership(const LaurentQA& f, const RingSpec& spec);

}  // namespace skein

#endif
