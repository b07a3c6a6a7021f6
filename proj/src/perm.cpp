#include "hookwalk/perm.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>

namespace hookwalk {

Permutation::Permutation(std::vector<int> entries) : entries_(std::move(entries)) {
  const int n = size();
  positions_.assign(n, 0);
  for (int i = 0; i < n; ++i) {
    const int v = entries_[i];
    if (v < 1 || v > n || positions_[v - 1] != 0) {
      throw std::invalid_argument("not a permutation of 1.." + std::to_string(n));
    }
    positions_[v - 1] = i + 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> e(n);
  std::iota(e.begin(), e.end(), 1);
  return Permutation(std::move(e));
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<int> e;
  if (text.find(',') == std::string_view::npos) {
    for (char c : text) {
      if (c < '1' || c > '9') {
        throw std::invalid_argument("bad permutation digit in '" + std::string(text) + "'");
      }
      e.push_back(c - '0');
    }
  } else {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      const std::size_t next = std::min(text.find(',', pos), text.size());
      const auto field = text.substr(pos, next - pos);
      int value = 0;
      auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
      if (ec != std::errc{} || ptr != field.data() + field.size()) {
        throw std::invalid_argument("bad permutation entry '" + std::string(field) + "'");
      }
      e.push_back(value);
      pos = next + 1;
    }
  }
  return Permutation(std::move(e));
}

std::vector<Point> Permutation::points() const {
  std::vector<Point> out;
  out.reserve(entries_.size());
  for (int i = 1; i <= size(); ++i) out.push_back(point(i));
  return out;
}

std::string Permutation::to_string() const {
  std::string s;
  if (size() <= 9) {
    for (int v : entries_) s.push_back(static_cast<char>('0' + v));
    return s;
  }
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) s.push_back(',');
    s += std::to_string(entries_[i]);
  }
  return s;
}

Permutation standardize(std::span<const int> values) {
  std::vector<int> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return values[a] < values[b]; });
  std::vector<int> e(values.size());
  for (std::size_t r = 0; r < order.size(); ++r) e[order[r]] = static_cast<int>(r) + 1;
  return Permutation(std::move(e));
}

namespace {

// Extends a partial occurrence: chosen[0..t) are positions in `word` already
// matched to sigma_1..sigma_t. Positions must increase and relative order
// must agree with sigma on every pair.
bool extend_occurrence(std::span<const int> word, const Permutation& sigma, std::vector<int>& chosen,
                       int first_free, int last_fixed) {
  const int t = static_cast<int>(chosen.size());
  const int k = sigma.size();
  if (last_fixed >= 0 && t == k - 1) {
    // The final letter is pinned to word[last_fixed]; check it against all chosen.
    for (int s = 0; s < t; ++s) {
      if ((word[chosen[s]] < word[last_fixed]) != (sigma(s + 1) < sigma(k))) return false;
    }
    chosen.push_back(last_fixed);
    return true;
  }
  if (t == k) return true;
  const int limit = last_fixed >= 0 ? last_fixed : static_cast<int>(word.size());
  for (int p = first_free; p < limit; ++p) {
    bool ok = true;
    for (int s = 0; s < t && ok; ++s) {
      ok = (word[chosen[s]] < word[p]) == (sigma(s + 1) < sigma(t + 1));
    }
    if (!ok) continue;
    chosen.push_back(p);
    if (extend_occurrence(word, sigma, chosen, p + 1, last_fixed)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> find_pattern(const Permutation& pi, const Permutation& sigma) {
  if (sigma.empty()) return std::vector<int>{};
  std::vector<int> chosen;
  if (!extend_occurrence(pi.entries(), sigma, chosen, 0, -1)) return std::nullopt;
  for (int& c : chosen) ++c;
  return chosen;
}

bool contains_pattern(const Permutation& pi, const Permutation& sigma) {
  return find_pattern(pi, sigma).has_value();
}

bool completes_pattern(std::span<const int> prefix, const Permutation& sigma) {
  if (sigma.empty()) return true;
  if (prefix.size() < static_cast<std::size_t>(sigma.size())) return false;
  std::vector<int> chosen;
  chosen.reserve(sigma.size());
  return extend_occurrence(prefix, sigma, chosen, 0, static_cast<int>(prefix.size()) - 1);
}

namespace {

void extend_avoider(int n, const Permutation& sigma, std::vector<int>& word, std::vector<char>& used,
                    const std::function<void(const Permutation&)>& visit) {
  if (static_cast<int>(word.size()) == n) {
    visit(Permutation(word));
    return;
  }
  for (int v = 1; v <= n; ++v) {
    if (used[v - 1]) continue;
    word.push_back(v);
    if (!completes_pattern(word, sigma)) {
      used[v - 1] = 1;
      extend_avoider(n, sigma, word, used, visit);
      used[v - 1] = 0;
    }
    word.pop_back();
  }
}

}  // namespace

void for_each_avoider_with_prefix(int n, const Permutation& sigma, std::span<const int> prefix,
                                  const std::function<void(const Permutation&)>& visit) {
  if (n < 0) throw std::invalid_argument("negative length");
  if (sigma.empty()) return;
  std::vector<int> word;
  std::vector<char> used(n, 0);
  for (int v : prefix) {
    if (v < 1 || v > n || used[v - 1]) throw std::invalid_argument("bad avoider prefix");
    word.push_back(v);
    used[v - 1] = 1;
    if (completes_pattern(word, sigma)) return;
  }
  extend_avoider(n, sigma, word, used, visit);
}

void for_each_avoider(int n, const Permutation& sigma,
                      const std::function<void(const Permutation&)>& visit) {
  for_each_avoider_with_prefix(n, sigma, {}, visit);
}

std::vector<Permutation> avoiders(int n, const Permutation& sigma) {
  std::vector<Permutation> out;
  for_each_avoider(n, sigma, [&](const Permutation& p) { out.push_back(p); });
  return out;
}

std::vector<std::vector<int>> avoider_prefixes(int n, const Permutation& sigma, int depth) {
  depth = std::min(depth, n);
  std::vector<std::vector<int>> layer{{}};
  if (sigma.empty()) return {};
  for (int d = 0; d < depth; ++d) {
    std::vector<std::vector<int>> next;
    for (const auto& prefix : layer) {
      for (int v = 1; v <= n; ++v) {
        if (std::find(prefix.begin(), prefix.end(), v) != prefix.end()) continue;
        auto candidate = prefix;
        candidate.push_back(v);
        if (!completes_pattern(candidate, sigma)) next.push_back(std::move(candidate));
      }
    }
    layer = std::move(next);
  }
  return layer;
}

std::vector<Point> descent_tops(const Permutation& pi) {
  std::vector<Point> out;
  for (int i = 1; i < pi.size(); ++i) {
    if (pi(i) > pi(i + 1)) out.push_back(pi.point(i));
  }
  return out;
}

std::vector<Point> descent_bottoms(const Permutation& pi) {
  std::vector<Point> out;
  for (int i = 1; i < pi.size(); ++i) {
    if (pi(i) > pi(i + 1)) out.push_back(pi.point(i + 1));
  }
  return out;
}

int descent_count(const Permutation& pi) {
  int d = 0;
  for (int i = 1; i < pi.size(); ++i) d += pi(i) > pi(i + 1);
  return d;
}

std::vector<Point> ltr_extrema(const Permutation& pi, Extremum kind) {
  std::vector<Point> out;
  for (int i = 1; i <= pi.size(); ++i) {
    if (out.empty() || (kind == Extremum::maxima ? pi(i) > out.back().value : pi(i) < out.back().value)) {
      out.push_back(pi.point(i));
    }
  }
  return out;
}

int inversion_count(const Permutation& pi) {
  int inv = 0;
  for (int i = 1; i <= pi.size(); ++i)
    for (int j = i + 1; j <= pi.size(); ++j) inv += pi(i) > pi(j);
  return inv;
}

bool bruhat_leq(const Permutation& sigma, const Permutation& tau) {
  if (sigma.size() != tau.size()) throw std::invalid_argument("bruhat_leq: length mismatch");
  const int target = inversion_count(tau);
  std::set<std::vector<int>> seen;
  std::deque<std::vector<int>> frontier;
  const std::vector<int> start(sigma.entries().begin(), sigma.entries().end());
  const std::vector<int> goal(tau.entries().begin(), tau.entries().end());
  frontier.push_back(start);
  seen.insert(start);
  while (!frontier.empty()) {
    auto cur = std::move(frontier.front());
    frontier.pop_front();
    if (cur == goal) return true;
    // Covers raise the inversion count by exactly one.
    if (inversion_count(Permutation(cur)) >= target) continue;
    for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
      if (cur[i] > cur[i + 1]) continue;
      auto up = cur;
      std::swap(up[i], up[i + 1]);
      if (seen.insert(up).second) frontier.push_back(std::move(up));
    }
  }
  return false;
}

}  // namespace hookwalk
