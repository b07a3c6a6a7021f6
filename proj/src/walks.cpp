#include "hookwalk/walks.hpp"

#include <cmath>
#include <cstdint>
#include <sstream>
#include <stdexcept>

namespace hookwalk {

std::string CountTable::to_csv(const std::string& index_name) const {
  std::ostringstream out;
  out << index_name << ",value\n";
  for (std::size_t k = 0; k < values.size(); ++k) out << k << ',' << values[k] << '\n';
  return out.str();
}

nlohmann::ordered_json CountTable::to_json() const {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& v : values) arr.push_back(v.str());
  return arr;
}

CountTable count_walks(int k_max) {
  if (k_max < 0) throw std::invalid_argument("count_walks: negative k_max");
  CountTable table{"walks", {}};
  table.values.reserve(k_max + 1);
  table.values.emplace_back(1);

  // A state (x, y) needs at least x + y further steps to get home, and x + y
  // never exceeds the number of steps taken, so x + y <= k_max / 2.
  const int reach = k_max / 2 + 1;
  const int dim = reach + 2;
  auto idx = [dim](int x, int y) { return static_cast<std::size_t>(x) * dim + y; };
  std::vector<BigInt> prev(static_cast<std::size_t>(dim) * dim), cur(prev.size());
  prev[idx(0, 0)] = 1;

  for (int t = 1; t <= k_max; ++t) {
    const int bound = std::min(t, k_max - t);
#pragma omp parallel for schedule(dynamic, 4)
    for (int x = 0; x <= reach; ++x) {
      for (int y = 0; x + y <= reach; ++y) {
        BigInt& out = cur[idx(x, y)];
        if (x + y > bound) {
          if (!out.is_zero()) out = 0;
          continue;
        }
        out = prev[idx(x + 1, y)];                   // (-1, 0)
        out += prev[idx(x, y + 1)];                  // (0, -1)
        if (y > 0) out += prev[idx(x + 1, y - 1)];   // (-1, 1)
        if (y > 0) out += prev[idx(x, y - 1)];       // (0, 1)
        if (x > 0) out += prev[idx(x - 1, y + 1)];   // (1, -1)
      }
    }
    std::swap(prev, cur);
    table.values.push_back(prev[idx(0, 0)]);
  }
  return table;
}

CountTable count_walks_reference(int k_max) {
  if (k_max < 0) throw std::invalid_argument("count_walks_reference: negative k_max");
  CountTable table{"walks", {}};
  table.values.emplace_back(1);
  const int dim = k_max + 2;
  auto idx = [dim](int x, int y) { return static_cast<std::size_t>(x) * dim + y; };
  std::vector<BigInt> prev(static_cast<std::size_t>(dim) * dim), next(prev.size());
  prev[idx(0, 0)] = 1;
  for (int t = 0; t < k_max; ++t) {
    for (auto& v : next) v = 0;
    for (int x = 0; x <= t; ++x) {
      for (int y = 0; y <= t; ++y) {
        const BigInt& c = prev[idx(x, y)];
        if (c.is_zero()) continue;
        for (const auto& s : kWalkSteps) {
          const int a = x + s.dx, b = y + s.dy;
          if (a < 0 || b < 0) continue;
          next[idx(a, b)] += c;
        }
      }
    }
    std::swap(prev, next);
    table.values.push_back(prev[idx(0, 0)]);
  }
  return table;
}

namespace {

void extend_walk(int k, int x, int y, std::vector<WalkStep>& walk,
                 std::vector<std::vector<WalkStep>>& out) {
  const int left = k - static_cast<int>(walk.size());
  if (left == 0) {
    if (x == 0 && y == 0) out.push_back(walk);
    return;
  }
  for (const auto& s : kWalkSteps) {
    const int a = x + s.dx, b = y + s.dy;
    if (a < 0 || b < 0 || a + b > left - 1) continue;
    walk.push_back(s);
    extend_walk(k, a, b, walk, out);
    walk.pop_back();
  }
}

}  // namespace

std::vector<std::vector<WalkStep>> enumerate_walks(int k) {
  if (k < 0 || k > 10) throw std::invalid_argument("enumerate_walks: k must be in [0,10]");
  std::vector<std::vector<WalkStep>> out;
  std::vector<WalkStep> walk;
  extend_walk(k, 0, 0, walk, out);
  return out;
}

BigInt binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

BigInt count_pair_class(int n) {
  if (n < 0) throw std::invalid_argument("count_pair_class: negative n");
  const CountTable w = count_walks(n);
  BigInt total = 0;
  for (int k = 0; k <= n; ++k) total += binomial(n, k) * w.at(k);
  return total;
}

namespace {

// Allowed (X_i, Y_i) as height changes.
constexpr std::array<std::pair<int, int>, 6> kPairSteps{
    {{-1, 0}, {-1, 1}, {0, -1}, {0, 0}, {0, 1}, {1, -1}}};

std::uint64_t count_pairs_from(int left, int hx, int hy) {
  if (left == 0) return hx == 0 && hy == 0 ? 1 : 0;
  std::uint64_t total = 0;
  for (auto [dx, dy] : kPairSteps) {
    const int a = hx + dx, b = hy + dy;
    if (a < 0 || b < 0 || a > left - 1 || b > left - 1) continue;
    total += count_pairs_from(left - 1, a, b);
  }
  return total;
}

}  // namespace

BigInt count_pair_class_direct(int n) {
  if (n < 0 || n > 12) throw std::invalid_argument("count_pair_class_direct: n must be in [0,12]");
  return count_pairs_from(n, 0, 0);
}

BigInt vhc312_count(int n) {
  if (n < 1) throw std::invalid_argument("vhc312_count: n must be >= 1");
  return count_pair_class(n - 1);
}

std::vector<BigInt> vhc312_counts(int n_max) {
  if (n_max < 1) throw std::invalid_argument("vhc312_counts: n_max must be >= 1");
  const CountTable w = count_walks(n_max - 1);
  std::vector<BigInt> out(n_max + 1);
  std::vector<BigInt> row{1};  // binomial row m = n - 1
  for (int n = 1; n <= n_max; ++n) {
    if (n > 1) {
      std::vector<BigInt> next(row.size() + 1);
      next.front() = next.back() = 1;
      for (std::size_t k = 1; k < row.size(); ++k) next[k] = row[k - 1] + row[k];
      row = std::move(next);
    }
    BigInt s = 0;
    for (std::size_t k = 0; k < row.size(); ++k) s += row[k] * w.values[k];
    out[n] = std::move(s);
  }
  return out;
}

double log_bigint(const BigInt& x) {
  if (x <= 0) throw std::domain_error("log_bigint: non-positive argument");
  const auto top = boost::multiprecision::msb(x);
  if (top < 60) return std::log(x.convert_to<double>());
  const auto shift = static_cast<unsigned>(top - 60);
  const BigInt head = x >> shift;
  return std::log(head.convert_to<double>()) + static_cast<double>(shift) * std::log(2.0);
}

}  // namespace hookwalk
