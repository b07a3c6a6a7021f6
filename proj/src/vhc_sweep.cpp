#include "hookwalk/vhc_sweep.hpp"

#include <omp.h>

#include <algorithm>

#include "hookwalk/vhc.hpp"

namespace hookwalk {

std::uint64_t VhcTally::reduced_total() const {
  std::uint64_t s = 0;
  for (auto c : reduced_by_hooks) s += c;
  return s;
}

VhcTally& VhcTally::operator+=(const VhcTally& other) {
  permutations += other.permutations;
  total += other.total;
  for (std::size_t k = 0; k < other.by_hooks.size(); ++k) by_hooks[k] += other.by_hooks[k];
  for (std::size_t k = 0; k < other.reduced_by_hooks.size(); ++k)
    reduced_by_hooks[k] += other.reduced_by_hooks[k];
  return *this;
}

namespace {

int default_threads = 0;

VhcTally empty_tally(int n) {
  VhcTally t;
  t.n = n;
  t.by_hooks.assign(std::max(n, 1), 0);
  t.reduced_by_hooks.assign(std::max(n, 1), 0);
  return t;
}

void tally_one(const Permutation& pi, int hooks_filter, VhcTally& t) {
  const int d = descent_count(pi);
  if (hooks_filter >= 0 && d != hooks_filter) return;
  ++t.permutations;
  for_each_vhc_ne_set(pi, [&](const IndexSet& ne) {
    ++t.total;
    ++t.by_hooks[d];
    if (is_reduced(pi, ne)) ++t.reduced_by_hooks[d];
  });
}

VhcTally tally_parallel(int n, const Permutation& sigma, int hooks_filter) {
  // Depth 3 gives enough subtrees to balance while keeping the merge cheap.
  const auto prefixes = avoider_prefixes(n, sigma, 3);
  std::vector<VhcTally> parts(prefixes.size(), empty_tally(n));
  const auto count = static_cast<std::int64_t>(prefixes.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t p = 0; p < count; ++p) {
    for_each_avoider_with_prefix(n, sigma, prefixes[p],
                                 [&](const Permutation& pi) { tally_one(pi, hooks_filter, parts[p]); });
  }
  VhcTally out = empty_tally(n);
  for (const auto& part : parts) out += part;
  return out;
}

}  // namespace

void set_thread_count(int threads) {
  default_threads = threads;
  omp_set_num_threads(threads >= 1 ? threads : omp_get_num_procs());
}

int thread_count() { return default_threads >= 1 ? default_threads : omp_get_max_threads(); }

VhcTally tally_vhcs_reference(int n, const Permutation& sigma) {
  VhcTally t = empty_tally(n);
  for_each_avoider(n, sigma, [&](const Permutation& pi) { tally_one(pi, -1, t); });
  return t;
}

VhcTally tally_vhcs(int n, const Permutation& sigma) { return tally_parallel(n, sigma, -1); }

VhcTally tally_vhcs_with_hooks(int n, const Permutation& sigma, int hooks) {
  return tally_parallel(n, sigma, hooks);
}

}  // namespace hookwalk
