#pragma once

#include <array>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

namespace hookwalk {

using BigInt = boost::multiprecision::cpp_int;

struct WalkStep {
  int dx;
  int dy;

  auto operator<=>(const WalkStep&) const = default;
};

/// Step set of the quarter-plane walks counted by `count_walks`.
inline constexpr std::array<WalkStep, 5> kWalkSteps{{{-1, 0}, {-1, 1}, {0, -1}, {0, 1}, {1, -1}}};

/// Exact integer sequence indexed from 0.
struct CountTable {
  std::string label;
  std::vector<BigInt> values;

  int size() const { return static_cast<int>(values.size()); }
  const BigInt& at(int k) const { return values.at(static_cast<std::size_t>(k)); }

  /// Value with the extra convention value(-1) = 1 used by the alternating
  /// reduced-configuration formula.
  BigInt at_with_sentinel(int k) const { return k == -1 ? BigInt(1) : at(k); }

  /// "k,value" lines after a header row.
  std::string to_csv(const std::string& index_name = "k") const;

  /// JSON array of decimal strings.
  nlohmann::ordered_json to_json() const;
};

/// Closed first-quadrant walks of length k = 0..k_max from the origin.
/// OpenMP kernel: each layer pulls from the previous one, one x-row per
/// task, with states that cannot return to the origin in time pruned.
CountTable count_walks(int k_max);

/// Serial reference: pushes every state forward over an unpruned grid.
CountTable count_walks_reference(int k_max);

/// Every closed walk of length k, by depth-first search. Throws
/// std::invalid_argument for k > 10.
std::vector<std::vector<WalkStep>> enumerate_walks(int k);

BigInt binomial(int n, int k);

/// |N_n| = sum_k binom(n, k) w(k).
BigInt count_pair_class(int n);

/// |N_n| by walking pairs of Motzkin paths step by step. Throws
/// std::invalid_argument for n > 12.
BigInt count_pair_class_direct(int n);

/// |VHC(Av_n(312))| = sum_{k<n} binom(n-1, k) w(k), for n >= 1.
BigInt vhc312_count(int n);

/// vhc312_count(1..n_max) from a single walk table; entry 0 is unused (0).
std::vector<BigInt> vhc312_counts(int n_max);

/// Natural log of a positive big integer, without overflow.
double log_bigint(const BigInt& x);

}  // namespace hookwalk
