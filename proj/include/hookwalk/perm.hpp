#pragma once

#include <compare>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hookwalk {

/// A point (i, pi_i) of a permutation plot. Both coordinates are 1-based.
struct Point {
  int index = 0;
  int value = 0;

  auto operator<=>(const Point&) const = default;
};

/// A permutation of [n] in one-line notation.
///
/// Indices and values are 1-based throughout the public interface, so
/// `pi(i)` is the i-th letter of the word and `pi.point(i)` is (i, pi_i).
/// The empty permutation (n = 0) is legal.
class Permutation {
 public:
  Permutation() = default;

  /// Throws std::invalid_argument unless `entries` is a rearrangement of 1..n.
  explicit Permutation(std::vector<int> entries);

  static Permutation identity(int n);

  /// Accepts "324156" (digits, n <= 9) or "10,3,2,..." (comma separated).
  static Permutation parse(std::string_view text);

  int size() const { return static_cast<int>(entries_.size()); }
  bool empty() const { return entries_.empty(); }

  int operator()(int index) const { return entries_[index - 1]; }
  Point point(int index) const { return {index, entries_[index - 1]}; }
  int index_of(int value) const { return positions_[value - 1]; }

  std::span<const int> entries() const { return entries_; }
  std::vector<Point> points() const;

  /// Digit string for n <= 9, comma-separated otherwise.
  std::string to_string() const;

  bool operator==(const Permutation& other) const { return entries_ == other.entries_; }
  auto operator<=>(const Permutation& other) const { return entries_ <=> other.entries_; }

 private:
  std::vector<int> entries_;
  std::vector<int> positions_;
};

/// Order-isomorphic standardization of distinct integers onto 1..k.
Permutation standardize(std::span<const int> values);

/// Indices (1-based, increasing) of the first occurrence of `sigma` in `pi`
/// in lexicographic order of index tuples, if any.
std::optional<std::vector<int>> find_pattern(const Permutation& pi, const Permutation& sigma);

bool contains_pattern(const Permutation& pi, const Permutation& sigma);
inline bool avoids(const Permutation& pi, const Permutation& sigma) {
  return !contains_pattern(pi, sigma);
}

/// True when the word `prefix` has an occurrence of `sigma` that uses its
/// last letter. Values need not be standardized.
bool completes_pattern(std::span<const int> prefix, const Permutation& sigma);

/// Calls `visit` on every sigma-avoider of length n, lexicographically.
void for_each_avoider(int n, const Permutation& sigma,
                      const std::function<void(const Permutation&)>& visit);

/// Same, restricted to avoiders that start with `prefix`.
void for_each_avoider_with_prefix(int n, const Permutation& sigma, std::span<const int> prefix,
                                  const std::function<void(const Permutation&)>& visit);

std::vector<Permutation> avoiders(int n, const Permutation& sigma);

/// All sigma-avoiding prefixes of length min(depth, n), in lexicographic
/// order. Their subtrees partition Av_n(sigma); some may be empty.
std::vector<std::vector<int>> avoider_prefixes(int n, const Permutation& sigma, int depth);

std::vector<Point> descent_tops(const Permutation& pi);
std::vector<Point> descent_bottoms(const Permutation& pi);
int descent_count(const Permutation& pi);

enum class Extremum { maxima, minima };

/// Left-to-right maxima or minima in increasing index order.
std::vector<Point> ltr_extrema(const Permutation& pi, Extremum kind);

int inversion_count(const Permutation& pi);

/// Weak Bruhat order: tau is reachable from sigma by swapping adjacent
/// ascents. Throws std::invalid_argument on a length mismatch.
bool bruhat_leq(const Permutation& sigma, const Permutation& tau);

}  // namespace hookwalk
