#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include <json.hpp>

#include "hookwalk/perm.hpp"

namespace hookwalk {

/// An L-shaped hook: up from `sw`, then right to `ne`.
struct Hook {
  Point sw;
  Point ne;

  auto operator<=>(const Hook&) const = default;
};

/// Sorted set of 1-based indices.
using IndexSet = std::vector<int>;

/// A valid hook configuration, identified by its permutation and the index
/// set of its northeast endpoints. The hook matching is derived and always
/// listed in increasing order of southwest index.
///
/// Values are only produced by `validate`, `validate_bruteforce` and the
/// enumerators, so every Vhc in circulation is valid.
class Vhc {
 public:
  const Permutation& perm() const { return perm_; }
  const IndexSet& ne_set() const { return ne_; }
  const std::vector<Hook>& hooks() const { return hooks_; }
  int size() const { return perm_.size(); }
  int hook_count() const { return static_cast<int>(hooks_.size()); }

  bool operator==(const Vhc& o) const { return perm_ == o.perm_ && ne_ == o.ne_; }
  auto operator<=>(const Vhc& o) const {
    if (auto c = perm_ <=> o.perm_; c != 0) return c;
    return ne_ <=> o.ne_;
  }

 private:
  Vhc(Permutation perm, IndexSet ne, std::vector<Hook> hooks)
      : perm_(std::move(perm)), ne_(std::move(ne)), hooks_(std::move(hooks)) {}

  friend std::optional<Vhc> validate(const Permutation&, std::span<const int>);
  friend std::optional<Vhc> validate_bruteforce(const Permutation&, std::span<const int>);

  Permutation perm_;
  IndexSet ne_;
  std::vector<Hook> hooks_;
};

/// Parenthesis-matching validator. Descent tops open, northeast endpoints
/// close; at a point in both roles the close is listed first. The stack
/// matching is the only candidate, so the check is complete.
///
/// Throws std::out_of_range if an index is outside [1, n]; every other
/// failure yields std::nullopt.
std::optional<Vhc> validate(const Permutation& pi, std::span<const int> ne_set);

/// Geometric oracle for `validate`: tries every bijection from descent tops
/// to `ne_set` and checks the hook definition directly (nothing above a
/// hook, no crossings except at shared endpoints). Desk scale only
/// (at most 8 descents; throws std::invalid_argument beyond that).
std::optional<Vhc> validate_bruteforce(const Permutation& pi, std::span<const int> ne_set);

/// Number of bijections accepted by the geometric check. At most one.
std::size_t count_valid_assignments(const Permutation& pi, std::span<const int> ne_set);

/// Backtracking enumeration of the northeast sets of all VHCs on `pi`, in
/// lexicographic order of the sorted sets.
void for_each_vhc_ne_set(const Permutation& pi, const std::function<void(const IndexSet&)>& visit);

std::vector<Vhc> enumerate_vhcs(const Permutation& pi);

/// Slow oracle: filters every subset of [n] of the right size through validate.
std::vector<Vhc> enumerate_vhcs_by_subsets(const Permutation& pi);

/// Every point is a hook endpoint or a descent bottom.
bool is_reduced(const Vhc& v);
bool is_reduced(const Permutation& pi, std::span<const int> ne_set);

struct Restriction {
  Vhc vhc;
  IndexSet support;  // kept indices of the original permutation
  IndexSet values;   // their values, sorted
};

/// Deletes every point that is neither a hook endpoint nor a descent bottom
/// and standardizes what remains. On 312-avoiders the pair (vhc, values)
/// determines the input; (vhc, support) does not.
Restriction restrict_to_endpoints(const Vhc& v);

/// {"perm":"3215647","ne":[4,5,7]}
nlohmann::ordered_json to_json(const Vhc& v);

/// Parses and validates; throws std::invalid_argument on malformed input or
/// an invalid configuration.
Vhc vhc_from_json(const nlohmann::json& j);

}  // namespace hookwalk
