#include "skein/character.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <vector>

namespace skein {

namespace {

// Murnaghan-Nakayama on beta-numbers (first-column hook lengths). Removing a
// border strip of size r is subtracting r from one beta-number, valid when
// the result is nonnegative and not already present; the height change is
// the number of beta-numbers jumped over.
Int mn_rec(std::vector<int> beta, const std::vector<int>& mu, std::size_t k,
           std::map<std::pair<std::vector<int>, std::size_t>, Int>* memo) {
  if (k == mu.size()) return 1;
  auto key = std::make_pair(beta, k);
  auto it = memo->find(key);
  if (it != memo->end()) return it->second;
  const int r = mu[k];
  Int total = 0;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    const int b = beta[i] - r;
    if (b < 0) continue;
    if (std::find(beta.begin(), beta.end(), b) != beta.end()) continue;
    int height = 0;
    for (int x : beta)
      if (x < beta[i] && x > b) ++height;
    std::vector<int> nb = beta;
    nb[i] = b;
    std::sort(nb.begin(), nb.end());
    Int sub = mn_rec(std::move(nb), mu, k + 1, memo);
    total += (height % 2 == 0) ? sub : -sub;
  }
  memo->emplace(std::move(key), total);
  return total;
}

}  // namespace

Int sym_character(const Partition& lambda, const Partition& mu) {
  if (lambda.weight() != mu.weight())
    throw std::invalid_argument("character: weights differ");
  if (lambda.empty()) return 1;
  const int l = lambda.length();
  std::vector<int> beta(l);
  for (int i = 0; i < l; ++i) beta[i] = lambda.part(i) + (l - 1 - i);
  std::sort(beta.begin(), beta.end());
  // process longest strips first so the memo keys stay small
  std::vector<int> parts = mu.parts();
  std::map<std::pair<std::vector<int>, std::size_t>, Int> memo;
  return mn_rec(std::move(beta), parts, 0, &memo);
}

Int sym_character_oracle(const Partition& lambda, const Partition& mu) {
  if (lambda.weight() != mu.weight())
    throw std::invalid_argument("character: weights differ");
  const int n = lambda.weight();
  if (n > 7) throw TooLarge("character oracle capped at weight 7");
  if (n == 0) return 1;
  const int l = n;  // work with n variables
  // monomials of p_mu = prod_k (x_1^{mu_k} + ... + x_l^{mu_k}), sparse
  std::map<std::vector<int>, Int> poly{{std::vector<int>(l, 0), Int(1)}};
  for (int part : mu.parts()) {
    std::map<std::vector<int>, Int> next;
    for (const auto& [e, c] : poly)
      for (int v = 0; v < l; ++v) {
        std::vector<int> e2 = e;
        e2[v] += part;
        next[std::move(e2)] += c;
      }
    poly = std::move(next);
  }
  // chi = sum over permutations sigma of sign(sigma) * [x^{lambda+delta-sigma(delta)}] p_mu
  std::vector<int> lam(l, 0);
  for (int i = 0; i < lambda.length(); ++i) lam[i] = lambda.part(i);
  std::vector<int> perm(l);
  std::iota(perm.begin(), perm.end(), 0);
  Int chi = 0;
  do {
    int inv = 0;
    for (int i = 0; i < l; ++i)
      for (int j = i + 1; j < l; ++j)
        if (perm[i] > perm[j]) ++inv;
    std::vector<int> target(l);
    bool ok = true;
    for (int i = 0; i < l; ++i) {
      target[i] = lam[i] + (l - 1 - i) - (l - 1 - perm[i]);
      if (target[i] < 0) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    auto it = poly.find(target);
    if (it == poly.end()) continue;
    chi += (inv % 2 == 0) ? it->second : -it->second;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return chi;
}

namespace {

// count fillings of the skew shape nu/lambda with content mu whose reverse
// reading word is a lattice word, rows weakly and columns strictly increasing
Int lr_count(const std::vector<int>& nu, const std::vector<int>& lambda,
             const std::vector<int>& mu) {
  const int rows = static_cast<int>(nu.size());
  std::vector<std::vector<int>> fill(rows);
  for (int i = 0; i < rows; ++i)
    fill[i].assign(nu[i], 0);  // 0 marks cells in lambda / unfilled
  std::vector<int> used(mu.size(), 0);
  Int count = 0;
  // cells of nu/lambda in reading order: top row to bottom, right to left
  std::vector<std::pair<int, int>> cells;
  for (int i = 0; i < rows; ++i) {
    const int lo = i < static_cast<int>(lambda.size()) ? lambda[i] : 0;
    for (int j = nu[i] - 1; j >= lo; --j) cells.emplace_back(i, j);
  }
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == cells.size()) {
      ++count;
      return;
    }
    auto [i, j] = cells[k];
    const int lo_here =
        i < static_cast<int>(lambda.size()) ? lambda[i] : 0;
    for (int v = 1; v <= static_cast<int>(mu.size()); ++v) {
      if (used[v - 1] >= mu[v - 1]) continue;
      // lattice condition along the reading word
      if (v > 1 && used[v - 1] >= used[v - 2]) continue;
      // row weakly increasing: right neighbor (filled earlier) must be >= v
      if (j + 1 < nu[i] && fill[i][j + 1] < v) continue;
      // column strictly increasing: cell above must hold something < v
      if (i > 0 && j < nu[i - 1]) {
        const int lo_up =
            i - 1 < static_cast<int>(lambda.size()) ? lambda[i - 1] : 0;
        if (j >= lo_up && fill[i - 1][j] >= v) continue;
      }
      (void)lo_here;
      fill[i][j] = v;
      ++used[v - 1];
      rec(k + 1);
      --used[v - 1];
      fill[i][j] = 0;
    }
  };
  rec(0);
  return count;
}

}  // namespace

Int lr_coeff(const Partition& nu, const Partition& lambda,
             const Partition& mu) {
  if (nu.weight() != lambda.weight() + mu.weight()) return 0;
  if (lambda.empty()) return nu == mu ? 1 : 0;
  if (mu.empty()) return nu == lambda ? 1 : 0;
  // lambda must fit inside nu
  if (lambda.length() > nu.length()) return 0;
  for (int i = 0; i < lambda.length(); ++i)
    if (lambda.part(i) > nu.part(i)) return 0;
  return lr_count(nu.parts(), lambda.parts(), mu.parts());
}

namespace {

// monomial expansion of s_lambda in l variables via SSYT enumeration
std::map<std::vector<int>, Int> schur_monomials(const Partition& lambda,
                                                int l) {
  std::map<std::vector<int>, Int> out;
  if (lambda.length() > l) return out;
  const int rows = lambda.length();
  std::vector<std::vector<int>> fill(rows);
  for (int i = 0; i < rows; ++i) fill[i].assign(lambda.part(i), 0);
  std::function<void(int, int)> rec = [&](int i, int j) {
    if (i == rows) {
      std::vector<int> e(l, 0);
      for (const auto& row : fill)
        for (int v : row) ++e[v - 1];
      out[std::move(e)] += 1;
      return;
    }
    if (j == lambda.part(i)) {
      rec(i + 1, 0);
      return;
    }
    int lo = 1;
    if (j > 0) lo = std::max(lo, fill[i][j - 1]);
    if (i > 0) lo = std::max(lo, fill[i - 1][j] + 1);
    for (int v = lo; v <= l; ++v) {
      fill[i][j] = v;
      rec(i, j + 1);
    }
    fill[i][j] = 0;
  };
  rec(0, 0);
  return out;
}

}  // namespace

std::map<Partition, Int> schur_product_oracle(const Partition& lambda,
                                              const Partition& mu) {
  const int n = lambda.weight() + mu.weight();
  if (n > 8) throw TooLarge("schur product oracle capped at weight 8");
  const int l = n == 0 ? 1 : n;
  auto a = schur_monomials(lambda, l);
  auto b = schur_monomials(mu, l);
  std::map<std::vector<int>, Int> prod;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      std::vector<int> e(l);
      for (int i = 0; i < l; ++i) e[i] = ea[i] + eb[i];
      prod[std::move(e)] += ca * cb;
    }
  // repeatedly peel off the Schur function of the lex-largest exponent
  std::map<Partition, Int> result;
  while (true) {
    // drop zero entries, find lex-largest remaining monomial
    for (auto it = prod.begin(); it != prod.end();)
      it = (it->second == 0) ? prod.erase(it) : std::next(it);
    if (prod.empty()) break;
    auto lead = std::prev(prod.end());
    std::vector<int> shape = lead->first;
    // leading exponent of a Schur expansion is always a partition
    std::vector<int> trimmed;
    for (int x : shape)
      if (x > 0) trimmed.push_back(x);
    if (!std::is_sorted(trimmed.rbegin(), trimmed.rend()))
      throw std::logic_error("schur oracle: leading term not a partition");
    Partition p(trimmed);
    Int c = lead->second;
    result[p] = c;
    for (const auto& [e, coef] : schur_monomials(p, l)) prod[e] -= c * coef;
  }
  return result;
}

}  // namespace skein
