#pragma once

// Slow, independent re-implementations used as ground truth by the tests.
// Nothing here calls into the library except for value types.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

using Word = std::vector<int>;

inline std::vector<Word> all_perms(int n) {
  std::vector<Word> out;
  Word w(n);
  std::iota(w.begin(), w.end(), 1);
  do out.push_back(w);
  while (std::next_permutation(w.begin(), w.end()));
  return out;
}

inline Word standardize(const Word& values) {
  Word sorted = values;
  std::sort(sorted.begin(), sorted.end());
  Word out;
  for (int v : values) out.push_back(static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), v) - sorted.begin()) + 1);
  return out;
}

// Every k-subset of positions, standardized and compared.
inline bool contains(const Word& pi, const Word& sigma) {
  const int n = static_cast<int>(pi.size()), k = static_cast<int>(sigma.size());
  if (k == 0) return true;
  if (k > n) return false;
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + k, true);
  do {
    Word sub;
    for (int i = 0; i < n; ++i)
      if (pick[i]) sub.push_back(pi[i]);
    if (standardize(sub) == sigma) return true;
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return false;
}

inline std::vector<Word> avoiders(int n, const Word& sigma) {
  std::vector<Word> out;
  for (auto& w : all_perms(n))
    if (!contains(w, sigma)) out.push_back(w);
  return out;
}

inline std::uint64_t catalan(int n) {
  std::vector<std::uint64_t> c(n + 1, 0);
  c[0] = 1;
  for (int m = 1; m <= n; ++m)
    for (int i = 0; i < m; ++i) c[m] += c[i] * c[m - 1 - i];
  return c[n];
}

inline std::uint64_t motzkin(int n) {
  std::vector<std::uint64_t> m(std::max(n + 1, 2), 0);
  m[0] = 1;
  m[1] = 1;
  for (int k = 2; k <= n; ++k) {
    m[k] = m[k - 1];
    for (int j = 0; j <= k - 2; ++j) m[k] += m[j] * m[k - 2 - j];
  }
  return m[n];
}

// Inversions as value pairs (small, large) with large appearing first.
inline std::set<std::pair<int, int>> inversion_values(const Word& w) {
  std::set<std::pair<int, int>> inv;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      if (w[i] > w[j]) inv.insert({w[j], w[i]});
  return inv;
}

inline bool weak_leq(const Word& a, const Word& b) {
  const auto ia = inversion_values(a), ib = inversion_values(b);
  return std::includes(ib.begin(), ib.end(), ia.begin(), ia.end());
}

// Motzkin paths as strings over U/D/E, all 3^n words filtered.
inline bool is_motzkin(const std::string& p) {
  int h = 0;
  for (char c : p) {
    h += c == 'U' ? 1 : (c == 'D' ? -1 : 0);
    if (h < 0) return false;
  }
  return h == 0;
}

inline std::vector<std::string> motzkin_paths(int n) {
  std::vector<std::string> out;
  std::string p(n, 'U');
  const std::string letters = "UDE";
  std::vector<int> digit(n, 0);
  while (true) {
    for (int i = 0; i < n; ++i) p[i] = letters[digit[i]];
    if (is_motzkin(p)) out.push_back(p);
    int i = n - 1;
    while (i >= 0 && digit[i] == 2) digit[i--] = 0;
    if (i < 0) break;
    ++digit[i];
  }
  return out;
}

inline std::vector<int> heights(const std::string& p) {
  std::vector<int> h;
  int cur = 0;
  for (char c : p) h.push_back(cur += c == 'U' ? 1 : (c == 'D' ? -1 : 0));
  return h;
}

inline std::string cls(const std::string& p) {
  std::string out;
  for (char c : p)
    if (c != 'D') out += c;
  return out;
}

// lng by trying every substring length from each non-D step.
inline std::vector<int> lng(const std::string& p) {
  std::vector<int> out;
  for (std::size_t s = 0; s < p.size(); ++s) {
    if (p[s] == 'D') continue;
    for (std::size_t len = 1; s + len <= p.size(); ++len) {
      if (is_motzkin(p.substr(s, len))) {
        out.push_back(static_cast<int>(len));
        break;
      }
    }
  }
  return out;
}

inline bool leq_s(const std::string& p, const std::string& q) {
  const auto hp = heights(p), hq = heights(q);
  for (std::size_t i = 0; i < hp.size(); ++i)
    if (hp[i] > hq[i]) return false;
  return true;
}

inline bool leq_c(const std::string& p, const std::string& q) { return cls(p) == cls(q) && leq_s(p, q); }

inline bool leq_t(const std::string& p, const std::string& q) {
  if (cls(p) != cls(q)) return false;
  const auto a = lng(p), b = lng(q);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

// Quadrant walks by running over all 5^k step words.
inline std::uint64_t walks_brute(int k) {
  static const int dx[5] = {-1, -1, 0, 0, 1};
  static const int dy[5] = {0, 1, -1, 1, -1};
  std::uint64_t total = 0, words = 1;
  for (int i = 0; i < k; ++i) words *= 5;
  for (std::uint64_t code = 0; code < words; ++code) {
    std::uint64_t c = code;
    int x = 0, y = 0;
    bool ok = true;
    for (int i = 0; i < k && ok; ++i) {
      const int s = static_cast<int>(c % 5);
      c /= 5;
      x += dx[s];
      y += dy[s];
      ok = x >= 0 && y >= 0;
    }
    if (ok && x == 0 && y == 0) ++total;
  }
  return total;
}

// swl by the recursive block picture for 132-avoiders: the last entry c
// splits the rest into a high block A followed by a low block B, and
// swl(A B c) = swl(B) swl(A) c with values kept.
inline Word swl_blocks(const Word& tau) {
  if (tau.size() <= 1) return tau;
  const int c = tau.back();
  Word a, b;
  for (std::size_t i = 0; i + 1 < tau.size(); ++i) (tau[i] > c ? a : b).push_back(tau[i]);
  auto relabel = [](const Word& block) {
    const Word s = swl_blocks(standardize(block));
    Word sorted = block;
    std::sort(sorted.begin(), sorted.end());
    Word out;
    for (int v : s) out.push_back(sorted[v - 1]);
    return out;
  };
  Word out = relabel(b);
  const Word high = relabel(a);
  out.insert(out.end(), high.begin(), high.end());
  out.push_back(c);
  return out;
}

inline std::uint64_t binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(20240611);
  return gen;
}

}  // namespace oracle
