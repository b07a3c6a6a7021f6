#include "hookwalk/vhc.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace hookwalk {

namespace {

IndexSet normalized_index_set(const Permutation& pi, std::span<const int> ne_set) {
  IndexSet ne(ne_set.begin(), ne_set.end());
  for (int i : ne) {
    if (i < 1 || i > pi.size()) {
      throw std::out_of_range("northeast index " + std::to_string(i) + " outside [1," +
                              std::to_string(pi.size()) + "]");
    }
  }
  std::sort(ne.begin(), ne.end());
  ne.erase(std::unique(ne.begin(), ne.end()), ne.end());
  return ne;
}

bool has_point_above(const Permutation& pi, const Hook& h) {
  for (int k = h.sw.index + 1; k < h.ne.index; ++k) {
    if (pi(k) > h.ne.value) return true;
  }
  return false;
}

// Axis-aligned closed segment. Vertical when x0 == x1.
struct Segment {
  int x0, y0, x1, y1;
};

bool is_endpoint(const Hook& h, int x, int y) {
  return (h.sw.index == x && h.sw.value == y) || (h.ne.index == x && h.ne.value == y);
}

// Two hooks may only meet in points that are endpoints of both.
bool hooks_cross(const Hook& a, const Hook& b) {
  const Segment sa[2] = {{a.sw.index, a.sw.value, a.sw.index, a.ne.value},
                         {a.sw.index, a.ne.value, a.ne.index, a.ne.value}};
  const Segment sb[2] = {{b.sw.index, b.sw.value, b.sw.index, b.ne.value},
                         {b.sw.index, b.ne.value, b.ne.index, b.ne.value}};
  for (const auto& s : sa) {
    for (const auto& t : sb) {
      const int xlo = std::max(std::min(s.x0, s.x1), std::min(t.x0, t.x1));
      const int xhi = std::min(std::max(s.x0, s.x1), std::max(t.x0, t.x1));
      const int ylo = std::max(std::min(s.y0, s.y1), std::min(t.y0, t.y1));
      const int yhi = std::min(std::max(s.y0, s.y1), std::max(t.y0, t.y1));
      if (xlo > xhi || ylo > yhi) continue;
      if (xlo != xhi || ylo != yhi) return true;  // overlap along a stretch
      if (!(is_endpoint(a, xlo, ylo) && is_endpoint(b, xlo, ylo))) return true;
    }
  }
  return false;
}

template <typename OnValid>
void for_each_geometric_assignment(const Permutation& pi, const IndexSet& ne, OnValid on_valid) {
  const auto tops = descent_tops(pi);
  if (tops.size() > 8) throw std::invalid_argument("validate_bruteforce: more than 8 descents");
  if (tops.size() != ne.size()) return;
  std::vector<int> targets = ne;
  std::vector<Hook> hooks(tops.size());
  do {
    bool ok = true;
    for (std::size_t t = 0; t < tops.size() && ok; ++t) {
      hooks[t] = Hook{tops[t], pi.point(targets[t])};
      const Hook& h = hooks[t];
      ok = h.ne.index > h.sw.index && h.ne.value > h.sw.value && !has_point_above(pi, h);
    }
    for (std::size_t s = 0; s < hooks.size() && ok; ++s)
      for (std::size_t t = s + 1; t < hooks.size() && ok; ++t) ok = !hooks_cross(hooks[s], hooks[t]);
    if (ok) on_valid(hooks);
  } while (std::next_permutation(targets.begin(), targets.end()));
}

}  // namespace

std::optional<Vhc> validate(const Permutation& pi, std::span<const int> ne_set) {
  IndexSet ne = normalized_index_set(pi, ne_set);
  const int n = pi.size();
  if (static_cast<int>(ne.size()) != descent_count(pi)) return std::nullopt;

  std::vector<char> is_ne(n + 1, 0);
  for (int i : ne) is_ne[i] = 1;

  std::vector<int> open;
  std::vector<Hook> hooks;
  for (int i = 1; i <= n; ++i) {
    if (is_ne[i]) {
      if (open.empty()) return std::nullopt;
      hooks.push_back({pi.point(open.back()), pi.point(i)});
      open.pop_back();
    }
    if (i < n && pi(i) > pi(i + 1)) open.push_back(i);
  }
  if (!open.empty()) return std::nullopt;

  for (const Hook& h : hooks) {
    if (h.ne.value <= h.sw.value || has_point_above(pi, h)) return std::nullopt;
  }
  std::sort(hooks.begin(), hooks.end());
  return Vhc(pi, std::move(ne), std::move(hooks));
}

std::optional<Vhc> validate_bruteforce(const Permutation& pi, std::span<const int> ne_set) {
  IndexSet ne = normalized_index_set(pi, ne_set);
  std::optional<std::vector<Hook>> found;
  for_each_geometric_assignment(pi, ne, [&](const std::vector<Hook>& hooks) {
    if (!found) found = hooks;
  });
  if (!found) return std::nullopt;
  std::sort(found->begin(), found->end());
  return Vhc(pi, std::move(ne), std::move(*found));
}

std::size_t count_valid_assignments(const Permutation& pi, std::span<const int> ne_set) {
  IndexSet ne = normalized_index_set(pi, ne_set);
  std::size_t count = 0;
  for_each_geometric_assignment(pi, ne, [&](const std::vector<Hook>&) { ++count; });
  return count;
}

namespace {

class NeSetSearch {
 public:
  NeSetSearch(const Permutation& pi, const std::function<void(const IndexSet&)>& visit)
      : pi_(pi), n_(pi.size()), visit_(visit), gap_max_((n_ + 2) * (n_ + 2), 0) {
    for (int i = 1; i <= n_; ++i) {
      int m = 0;
      for (int j = i + 1; j <= n_; ++j) {
        gap_max_[i * (n_ + 2) + j] = m;  // max of pi strictly between i and j
        m = std::max(m, pi_(j));
      }
    }
  }

  void run() { step(1); }

 private:
  bool is_top(int j) const { return j < n_ && pi_(j) > pi_(j + 1); }

  void step(int j) {
    if (j > n_) {
      if (open_.empty()) visit_(chosen_);
      return;
    }
    if (static_cast<int>(open_.size()) > n_ - j + 1) return;
    if (!open_.empty()) {
      const int i = open_.back();
      if (pi_(j) > pi_(i) && gap_max_[i * (n_ + 2) + j] < pi_(j)) {
        open_.pop_back();
        chosen_.push_back(j);
        descend(j);
        chosen_.pop_back();
        open_.push_back(i);
      }
    }
    descend(j);
  }

  void descend(int j) {
    if (is_top(j)) {
      open_.push_back(j);
      step(j + 1);
      open_.pop_back();
    } else {
      step(j + 1);
    }
  }

  const Permutation& pi_;
  int n_;
  const std::function<void(const IndexSet&)>& visit_;
  std::vector<int> gap_max_;
  std::vector<int> open_;
  IndexSet chosen_;
};

}  // namespace

void for_each_vhc_ne_set(const Permutation& pi, const std::function<void(const IndexSet&)>& visit) {
  NeSetSearch(pi, visit).run();
}

std::vector<Vhc> enumerate_vhcs(const Permutation& pi) {
  std::vector<Vhc> out;
  for_each_vhc_ne_set(pi, [&](const IndexSet& ne) { out.push_back(*validate(pi, ne)); });
  return out;
}

std::vector<Vhc> enumerate_vhcs_by_subsets(const Permutation& pi) {
  const int n = pi.size();
  const int d = descent_count(pi);
  std::vector<IndexSet> sets;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) != d) continue;
    IndexSet s;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) s.push_back(i + 1);
    sets.push_back(std::move(s));
  }
  std::sort(sets.begin(), sets.end());
  std::vector<Vhc> out;
  for (const auto& s : sets) {
    if (auto v = validate(pi, s)) out.push_back(std::move(*v));
  }
  return out;
}

bool is_reduced(const Permutation& pi, std::span<const int> ne_set) {
  const int n = pi.size();
  std::vector<char> covered(n + 1, 0);
  for (int i : ne_set) covered[i] = 1;
  for (int i = 1; i < n; ++i) {
    if (pi(i) > pi(i + 1)) covered[i] = covered[i + 1] = 1;
  }
  return std::all_of(covered.begin() + 1, covered.end(), [](char c) { return c != 0; });
}

bool is_reduced(const Vhc& v) { return is_reduced(v.perm(), v.ne_set()); }

Restriction restrict_to_endpoints(const Vhc& v) {
  const Permutation& pi = v.perm();
  const int n = pi.size();
  std::vector<char> keep(n + 1, 0);
  for (const Hook& h : v.hooks()) keep[h.sw.index] = keep[h.ne.index] = 1;
  for (const Point& b : descent_bottoms(pi)) keep[b.index] = 1;

  IndexSet support;
  std::vector<int> values;
  std::vector<int> new_index(n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    if (!keep[i]) continue;
    support.push_back(i);
    values.push_back(pi(i));
    new_index[i] = static_cast<int>(support.size());
  }
  IndexSet ne;
  for (int i : v.ne_set()) ne.push_back(new_index[i]);
  auto restricted = validate(standardize(values), ne);
  if (!restricted) throw std::logic_error("restriction of a valid configuration is invalid");
  std::sort(values.begin(), values.end());
  return {std::move(*restricted), std::move(support), std::move(values)};
}

nlohmann::ordered_json to_json(const Vhc& v) {
  nlohmann::ordered_json j;
  j["perm"] = v.perm().to_string();
  j["ne"] = v.ne_set();
  return j;
}

Vhc vhc_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("perm") || !j.contains("ne") || !j["perm"].is_string() ||
      !j["ne"].is_array()) {
    throw std::invalid_argument(R"(expected {"perm": "...", "ne": [...]})");
  }
  const auto pi = Permutation::parse(j["perm"].get<std::string>());
  const auto ne = j["ne"].get<std::vector<int>>();
  std::optional<Vhc> v;
  try {
    v = validate(pi, ne);
  } catch (const std::out_of_range& e) {
    throw std::invalid_argument(e.what());
  }
  if (!v) throw std::invalid_argument("not a valid hook configuration: " + j.dump());
  return std::move(*v);
}

}  // namespace hookwalk
