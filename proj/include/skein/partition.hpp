#ifndef SKEIN_PARTITION_HPP
#define SKEIN_PARTITION_HPP

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "skein/rational.hpp"

namespace skein {

struct NotDivisor : std::runtime_error {
  explicit NotDivisor(const std::string& what) : std::runtime_error(what) {}
};

// Integer partition: non-increasing sequence of positive parts.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  // hook (m|n) = (m+1, 1^n)
  static Partition hook(int arm, int leg);

  const std::vector<int>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }
  int weight() const;
  int length() const { return static_cast<int>(parts_.size()); }
  int part(int i) const { return parts_[i]; }  // 0-based

  Partition conjugate() const;
  bool is_hook() const;

  // per-cell tables in row-major cell order
  std::vector<int> contents() const;      // cn(x) = j - i
  std::vector<int> hook_lengths() const;  // hl(x) = lambda_i + lambda^v_j - i - j + 1
  std::int64_t kappa() const;             // sum lambda_j (lambda_j - 2j + 1)
  Int zmu() const;                        // prod j^{m_j} m_j!
  Int aut_order() const;                  // prod m_j!
  Int hook_product() const;

  // scale every part by d / divide every part by d (d must divide all parts)
  Partition scaled(int d) const;
  Partition quotient(int d) const;

  auto operator<=>(const Partition&) const = default;

  std::string to_string() const;  // "(2,1)"

 private:
  std::vector<int> parts_;
};

// all partitions of n, in deterministic (lex-descending) order
std::vector<Partition> partitions_of(int n);
// all partitions of weight <= n, ordered by weight then lex
std::vector<Partition> partitions_up_to(int n);
// all hooks (m|n) with m+n+1 = d, in order of decreasing arm
std::vector<Partition> hooks_of(int d);

// multiset of nonempty partitions; canonical: sorted descending
class PPartition {
 public:
  PPartition() = default;
  explicit PPartition(std::vector<Partition> blocks);

  const std::vector<Partition>& blocks() const { return blocks_; }
  int length() const { return static_cast<int>(blocks_.size()); }
  // union of all blocks' parts, as a partition
  Partition flatten() const;
  Int aut_order() const;
  // Theta = (-1)^{l-1} (l-1)! / |Aut|
  Rational theta() const;

  auto operator<=>(const PPartition&) const = default;

 private:
  std::vector<Partition> blocks_;
};

// all multisets of nonempty partitions whose combined parts equal mu
std::vector<PPartition> ppartitions_of(const Partition& mu);

int mobius(std::int64_t d);
// all d >= 1 dividing every part of mu (for empty mu: {1})
std::vector<int> partition_divisors(const Partition& mu);

}  // namespace skein

#endif
