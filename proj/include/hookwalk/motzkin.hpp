#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace hookwalk {

/// Motzkin steps. The enumerator order U < D < E is the lexicographic order
/// used by every path enumeration.
enum class Step : char { U, D, E };

/// y-displacement: U = +1, E = 0, D = -1.
constexpr int step_displacement(Step s) {
  switch (s) {
    case Step::U: return 1;
    case Step::D: return -1;
    case Step::E: return 0;
  }
  return 0;
}

char to_char(Step s);

/// A lattice path over {U, D, E} that starts and ends at height 0 and never
/// goes below it. The empty path is legal.
class MotzkinPath {
 public:
  MotzkinPath() = default;

  /// Throws std::invalid_argument if `steps` is not a Motzkin path.
  explicit MotzkinPath(std::vector<Step> steps);

  static MotzkinPath parse(std::string_view text);
  static bool is_motzkin(std::span<const Step> steps);

  int size() const { return static_cast<int>(steps_.size()); }
  Step operator[](int i) const { return steps_[i]; }  // 0-based
  std::span<const Step> steps() const { return steps_; }
  std::string to_string() const;

  /// Height after each step; heights()[i] is the height after step i+1.
  std::vector<int> heights() const;

  auto operator<=>(const MotzkinPath&) const = default;

 private:
  std::vector<Step> steps_;
};

enum class DyckLetter : char { u, d };

/// A word over {u, d} whose every prefix has at least as many u's as d's.
class DyckPrefix {
 public:
  DyckPrefix() = default;
  explicit DyckPrefix(std::vector<DyckLetter> letters);
  static DyckPrefix parse(std::string_view text);

  int size() const { return static_cast<int>(letters_.size()); }
  DyckLetter operator[](int i) const { return letters_[i]; }
  std::span<const DyckLetter> letters() const { return letters_; }
  int up_count() const;
  std::string to_string() const;

  auto operator<=>(const DyckPrefix&) const = default;

 private:
  std::vector<DyckLetter> letters_;
};

/// a >= b: every prefix of a has at least as many u's as the same prefix
/// of b. Throws std::invalid_argument on a length mismatch.
bool dyck_geq(const DyckPrefix& a, const DyckPrefix& b);

/// Subsequence of non-D steps.
std::vector<Step> path_class(const MotzkinPath& p);

/// For each non-D step, the length of the shortest Motzkin substring that
/// starts there.
std::vector<int> lng_all(const MotzkinPath& p);

/// U, E -> u; D -> d.
DyckPrefix support(const MotzkinPath& p);

/// Inverse of (class, support); empty when the pair encodes no Motzkin path.
std::optional<MotzkinPath> reconstruct(std::span<const Step> cls, const DyckPrefix& sup);

enum class Order : char { S, C, T };

char to_char(Order o);
Order parse_order(std::string_view text);

/// S: pointwise below-or-equal. C: S with equal class. T: equal class and
/// componentwise lng. Throws std::invalid_argument on a length mismatch.
bool leq(Order order, const MotzkinPath& p, const MotzkinPath& q);

struct Interval {
  MotzkinPath lower;
  MotzkinPath upper;
  Order order = Order::C;

  auto operator<=>(const Interval&) const = default;
};

/// Throws std::invalid_argument if the pair is not related under `order`.
Interval make_interval(Order order, MotzkinPath lower, MotzkinPath upper);

/// All Motzkin paths of length n, lexicographic with U < D < E.
std::vector<MotzkinPath> enumerate_paths(int n);

/// All related pairs, lexicographic on (lower, upper).
std::vector<Interval> enumerate_intervals(Order order, int n);

/// {"lower":"UDE","upper":"UED","order":"T"}
nlohmann::ordered_json to_json(const Interval& interval);
Interval interval_from_json(const nlohmann::json& j);

}  // namespace hookwalk
