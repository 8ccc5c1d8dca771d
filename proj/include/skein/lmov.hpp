#ifndef SKEIN_LMOV_HPP
#define SKEIN_LMOV_HPP

#include <map>
#include <vector>

#include "skein/fraction.hpp"
#include "skein/invariants.hpp"
#include "skein/partition.hpp"
#include "skein/ring.hpp"

namespace skein {

inline constexpr int kDefaultTruncation = 6;

enum class SeriesFlavor { Z, LogZ };
enum class InvariantFlavor { Colored, Composite };

// generating series in power sum coordinates, truncated at total weight D;
// the constant term is implicit (1 for Z, 0 for LogZ)
struct PowerSumSeries {
  int truncation = kDefaultTruncation;
  SeriesFlavor flavor = SeriesFlavor::Z;
  std::map<Partition, BracketFrac> coeffs;  // nonempty mu, |mu| <= truncation

  BracketFrac at(const Partition& mu) const {
    auto it = coeffs.find(mu);
    return it == coeffs.end() ? BracketFrac() : it->second;
  }
};

// framing corrected invariant that feeds the LMOV pipeline:
// (-1)^{|lambda| tau} a^{-|lambda| tau} times the framed value
BracketFrac tau_framed_H(const FramedKnot& k, const Partition& lambda);

// Z_mu = (1/z_mu) sum over |lambda| = |mu| of chi_lambda(mu) H_lambda;
// composite flavor uses the composite invariants and needs the unknot at
// framing zero
PowerSumSeries build_partition_function(const FramedKnot& k, int D,
                                        InvariantFlavor flavor);

// plethystic log, coefficient by coefficient: F_mu is the Theta weighted sum
// over multiset partitions of mu of products of Z blocks
PowerSumSeries series_log(const PowerSumSeries& z);
// same value through the power series log(1 + u); cross-check route
PowerSumSeries series_log_oracle(const PowerSumSeries& z);
// plain exp of a log-type series, for the round trip identity
PowerSumSeries series_exp(const PowerSumSeries& f);

// f_lambda = sum_{|mu|=|lambda|} chi_lambda(mu) sum_{d | mu} (mob(d)/d) F_{mu/d}(q^d, a^d)
BracketFrac lmov_f(const Partition& lambda, const PowerSumSeries& F);
// g_mu = (z_mu / {mu}) sum_{d | mu} (mob(d)/d) F_{mu/d}(q^d, a^d)
BracketFrac lmov_g(const Partition& mu, const PowerSumSeries& F);
// g_mu / (a - 1/a); exact division, fails loudly
BracketFrac lmov_g_tilde(const Partition& mu, const PowerSumSeries& F);

// pole-cleared membership of g-tilde in z^{-2} a^eps Z[z^2, a^{+-2}],
// eps = (|mu| - 1) mod 2; on pass the rewrite holds the integer table
Verdict check_refined_lmov(const FramedKnot& k, const Partition& mu);

// one variable restriction: the log coefficient of x^n for the row colored
// series, then Moebius summed
BracketFrac special_lmov(const FramedKnot& k, int n,
                         int D = kDefaultTruncation);
// (q - 1/q) times the special function lies in a^eps Z[q^{+-1}, a^{+-2}],
// eps = n mod 2
Verdict check_special_lmov(const FramedKnot& k, int n);

// the prime row g-tilde through the hook resolution of the power sum color,
// bypassing the series machinery; must agree with lmov_g_tilde((p))
BracketFrac prime_special_gtilde(const FramedKnot& k, int p);

}  // namespace skein

#endif
