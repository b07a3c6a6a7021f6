#pragma once

#include <cstdint>
#include <vector>

#include "hookwalk/perm.hpp"

namespace hookwalk {

/// Counts of valid hook configurations over Av_n(sigma), split by number
/// of hooks (which always equals the descent count of the permutation).
struct VhcTally {
  int n = 0;
  std::uint64_t permutations = 0;
  std::uint64_t total = 0;
  std::vector<std::uint64_t> by_hooks;          // index k = number of hooks
  std::vector<std::uint64_t> reduced_by_hooks;  // reduced configurations only

  std::uint64_t reduced_total() const;
  VhcTally& operator+=(const VhcTally& other);
  bool operator==(const VhcTally&) const = default;
};

/// Sets the worker count used by the OpenMP kernels. Values < 1 restore the
/// runtime default.
void set_thread_count(int threads);
int thread_count();

/// Serial reference: walks Av_n(sigma) in lexicographic order.
VhcTally tally_vhcs_reference(int n, const Permutation& sigma);

/// OpenMP kernel: splits Av_n(sigma) into prefix subtrees, tallies each on
/// its own, and merges in prefix order. Equal to the reference for every
/// thread count.
VhcTally tally_vhcs(int n, const Permutation& sigma);

/// As tally_vhcs, but skips permutations whose descent count differs from
/// `hooks`.
VhcTally tally_vhcs_with_hooks(int n, const Permutation& sigma, int hooks);

}  // namespace hookwalk
