#include "skein/partition.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace skein {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("parts must be non-increasing");
  }
}

Partition Partition::hook(int arm, int leg) {
  std::vector<int> p{arm + 1};
  p.insert(p.end(), leg, 1);
  return Partition(p);
}

int Partition::weight() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::conjugate() const {
  if (parts_.empty()) return {};
  std::vector<int> c(parts_[0], 0);
  for (int p : parts_)
    for (int j = 0; j < p; ++j) ++c[j];
  return Partition(c);
}

bool Partition::is_hook() const {
  return !parts_.empty() && (length() == 1 || parts_[1] == 1);
}

std::vector<int> Partition::contents() const {
  std::vector<int> out;
  for (int i = 0; i < length(); ++i)
    for (int j = 0; j < parts_[i]; ++j) out.push_back(j - i);
  return out;
}

std::vector<int> Partition::hook_lengths() const {
  std::vector<int> out;
  const Partition conj = conjugate();
  for (int i = 0; i < length(); ++i)
    for (int j = 0; j < parts_[i]; ++j)
      out.push_back(parts_[i] + conj.parts_[j] - i - j - 1);
  return out;
}

std::int64_t Partition::kappa() const {
  std::int64_t k = 0;
  for (int i = 0; i < length(); ++i) {
    std::int64_t p = parts_[i];
    k += p * (p - 2 * (i + 1) + 1);
  }
  return k;
}

Int Partition::zmu() const {
  std::map<int, int> mult;
  for (int p : parts_) ++mult[p];
  Int z = 1;
  for (const auto& [j, m] : mult) {
    for (int i = 0; i < m; ++i) z *= j;
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), m);
    z *= f;
  }
  return z;
}

Int Partition::aut_order() const {
  std::map<int, int> mult;
  for (int p : parts_) ++mult[p];
  Int z = 1;
  for (const auto& [j, m] : mult) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), m);
    z *= f;
  }
  return z;
}

Int Partition::hook_product() const {
  Int h = 1;
  for (int x : hook_lengths()) h *= x;
  return h;
}

Partition Partition::scaled(int d) const {
  std::vector<int> p = parts_;
  for (int& x : p) x *= d;
  return Partition(p);
}

Partition Partition::quotient(int d) const {
  std::vector<int> p = parts_;
  for (int& x : p) {
    if (x % d != 0)
      throw NotDivisor(std::to_string(d) + " does not divide part " +
                       std::to_string(x));
    x /= d;
  }
  return Partition(p);
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << ",";
    os << parts_[i];
  }
  os << ")";
  return os.str();
}

namespace {

void enum_partitions(int n, int max_part, std::vector<int>* cur,
                     std::vector<Partition>* out) {
  if (n == 0) {
    out->push_back(Partition(*cur));
    return;
  }
  for (int p = std::min(n, max_part); p >= 1; --p) {
    cur->push_back(p);
    enum_partitions(n - p, p, cur, out);
    cur->pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  enum_partitions(n, n, &cur, &out);
  return out;
}

std::vector<Partition> partitions_up_to(int n) {
  std::vector<Partition> out;
  for (int k = 0; k <= n; ++k) {
    auto pk = partitions_of(k);
    out.insert(out.end(), pk.begin(), pk.end());
  }
  return out;
}

std::vector<Partition> hooks_of(int d) {
  std::vector<Partition> out;
  for (int arm = d - 1; arm >= 0; --arm)
    out.push_back(Partition::hook(arm, d - 1 - arm));
  return out;
}

PPartition::PPartition(std::vector<Partition> blocks)
    : blocks_(std::move(blocks)) {
  for (const auto& b : blocks_)
    if (b.empty()) throw std::invalid_argument("empty block");
  std::sort(blocks_.begin(), blocks_.end(),
            [](const Partition& a, const Partition& b) { return b < a; });
}

Partition PPartition::flatten() const {
  std::vector<int> parts;
  for (const auto& b : blocks_)
    parts.insert(parts.end(), b.parts().begin(), b.parts().end());
  std::sort(parts.rbegin(), parts.rend());
  return Partition(parts);
}

Int PPartition::aut_order() const {
  Int z = 1;
  std::size_t i = 0;
  while (i < blocks_.size()) {
    std::size_t j = i;
    while (j < blocks_.size() && blocks_[j] == blocks_[i]) ++j;
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), j - i);
    z *= f;
    i = j;
  }
  return z;
}

Rational PPartition::theta() const {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), length() - 1);
  Rational t(f, aut_order());
  t.canonicalize();
  return length() % 2 == 0 ? Rational(-t) : t;
}

std::vector<PPartition> ppartitions_of(const Partition& mu) {
  const auto& parts = mu.parts();
  const int k = static_cast<int>(parts.size());
  std::set<PPartition> out;
  if (k == 0) return {PPartition()};
  // set partitions of the index set via restricted growth strings; duplicate
  // multisets collapse in the std::set
  std::vector<int> label(k, 0);
  auto emit = [&] {
    int nblocks = *std::max_element(label.begin(), label.end()) + 1;
    std::vector<std::vector<int>> groups(nblocks);
    for (int i = 0; i < k; ++i) groups[label[i]].push_back(parts[i]);
    std::vector<Partition> blocks;
    for (auto& g : groups) {
      std::sort(g.rbegin(), g.rend());
      blocks.push_back(Partition(g));
    }
    out.insert(PPartition(std::move(blocks)));
  };
  auto rec = [&](auto&& self, int i, int maxl) -> void {
    if (i == k) {
      emit();
      return;
    }
    for (int l = 0; l <= maxl + 1; ++l) {
      label[i] = l;
      self(self, i + 1, std::max(maxl, l));
    }
  };
  rec(rec, 1, 0);
  return {out.begin(), out.end()};
}

int mobius(std::int64_t d) {
  if (d <= 0) throw std::invalid_argument("mobius: d must be positive");
  int primes = 0;
  for (std::int64_t p = 2; p * p <= d; ++p) {
    if (d % p == 0) {
      d /= p;
      if (d % p == 0) return 0;
      ++primes;
    }
  }
  if (d > 1) ++primes;
  return primes % 2 == 0 ? 1 : -1;
}

std::vector<int> partition_divisors(const Partition& mu) {
  int g = 0;
  for (int p : mu.parts()) g = std::gcd(g, p);
  if (g == 0) return {1};
  std::vector<int> divs;
  for (int d = 1; d <= g; ++d)
    if (g % d == 0) divs.push_back(d);
  return divs;
}

}  // namespace skein
