#include <gtest/gtest.h>

#include <map>

#include "hookwalk/vhc.hpp"
#include "hookwalk/vhc_sweep.hpp"
#include "oracles.hpp"

using namespace hookwalk;

namespace {

Permutation P(const char* s) { return Permutation::parse(s); }

struct Seg {
  int x0, x1, y0, y1;
};

// Geometric hook check, written from the definition: every descent top is
// hooked to a distinct chosen point above and to its right, no plot point
// lies above a hook, and two hooks meet only at a shared endpoint.
std::optional<std::vector<Hook>> geometric_vhc(const oracle::Word& w, const std::vector<int>& ne) {
  const int n = static_cast<int>(w.size());
  std::vector<int> tops;
  for (int i = 1; i < n; ++i)
    if (w[i - 1] > w[i]) tops.push_back(i);
  if (tops.size() != ne.size()) return std::nullopt;
  std::vector<int> order(ne.size());
  std::iota(order.begin(), order.end(), 0);
  std::optional<std::vector<Hook>> found;
  do {
    std::vector<Hook> hooks;
    bool ok = true;
    for (std::size_t t = 0; t < tops.size() && ok; ++t) {
      const int a = tops[t], b = ne[order[t]];
      ok = b > a && w[b - 1] > w[a - 1];
      for (int k = a + 1; k < b && ok; ++k) ok = w[k - 1] < w[b - 1];
      hooks.push_back({{a, w[a - 1]}, {b, w[b - 1]}});
    }
    for (std::size_t p = 0; p < hooks.size() && ok; ++p) {
      for (std::size_t q = p + 1; q < hooks.size() && ok; ++q) {
        const Hook& h = hooks[p];
        const Hook& g = hooks[q];
        const Seg hs[2] = {{h.sw.index, h.sw.index, h.sw.value, h.ne.value},
                           {h.sw.index, h.ne.index, h.ne.value, h.ne.value}};
        const Seg gs[2] = {{g.sw.index, g.sw.index, g.sw.value, g.ne.value},
                           {g.sw.index, g.ne.index, g.ne.value, g.ne.value}};
        for (const Seg& s : hs) {
          for (const Seg& r : gs) {
            const int xl = std::max(s.x0, r.x0), xh = std::min(s.x1, r.x1);
            const int yl = std::max(s.y0, r.y0), yh = std::min(s.y1, r.y1);
            if (xl > xh || yl > yh) continue;
            if (xl != xh || yl != yh) {
              ok = false;
              continue;
            }
            const Point meet{xl, yl};
            const bool end_h = meet == h.sw || meet == h.ne;
            const bool end_g = meet == g.sw || meet == g.ne;
            if (!(end_h && end_g)) ok = false;
          }
        }
      }
    }
    if (ok) {
      if (found) return std::nullopt;  // two valid matchings would be a bug
      std::sort(hooks.begin(), hooks.end());
      found = hooks;
    }
  } while (std::next_permutation(order.begin(), order.end()));
  return found;
}

bool reduced_oracle(const oracle::Word& w, const std::vector<Hook>& hooks) {
  const int n = static_cast<int>(w.size());
  std::vector<bool> covered(n + 1, false);
  for (const Hook& h : hooks) covered[h.sw.index] = covered[h.ne.index] = true;
  for (int i = 2; i <= n; ++i)
    if (w[i - 2] > w[i - 1]) covered[i] = true;
  for (int i = 1; i <= n; ++i)
    if (!covered[i]) return false;
  return true;
}

std::vector<std::vector<int>> subsets(int n) {
  std::vector<std::vector<int>> out;
  for (int mask = 0; mask < (1 << n); ++mask) {
    std::vector<int> s;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1) s.push_back(i + 1);
    out.push_back(s);
  }
  return out;
}

}  // namespace

TEST(Validate, HookConfigurationOn3215647) {
  const auto v = validate(P("3215647"), std::vector<int>{4, 5, 7});
  ASSERT_TRUE(v.has_value());
  const std::vector<Hook> expect{{{1, 3}, {5, 6}}, {{2, 2}, {4, 5}}, {{5, 6}, {7, 7}}};
  EXPECT_EQ(v->hooks(), expect);
  EXPECT_EQ(v->hook_count(), 3);
}

TEST(Validate, SmallCases) {
  const auto id = validate(P("1234"), std::vector<int>{});
  ASSERT_TRUE(id.has_value());
  EXPECT_TRUE(id->hooks().empty());
  EXPECT_FALSE(validate(P("21"), std::vector<int>{2}).has_value());
  EXPECT_FALSE(validate(P("2134"), std::vector<int>{}).has_value());
  EXPECT_FALSE(validate(P("2134"), std::vector<int>{3, 4}).has_value());
  EXPECT_THROW(validate(P("2134"), std::vector<int>{5}), std::out_of_range);
  EXPECT_THROW(validate(P("2134"), std::vector<int>{0}), std::out_of_range);
}

TEST(Validate, BruteforceAgreesOnExamples) {
  EXPECT_TRUE(validate_bruteforce(P("3215647"), std::vector<int>{4, 5, 7}).has_value());
  EXPECT_TRUE(validate_bruteforce(P("1234"), std::vector<int>{}).has_value());
  EXPECT_FALSE(validate_bruteforce(P("21"), std::vector<int>{2}).has_value());
}

TEST(Validate, AgreesWithGeometricDefinitionUpTo7) {
  for (int n = 0; n <= 7; ++n) {
    const auto sets = subsets(n);
    for (const auto& w : oracle::all_perms(n)) {
      const Permutation pi(w);
      const int d = descent_count(pi);
      for (const auto& ne : sets) {
        if (static_cast<int>(ne.size()) != d) continue;
        const auto fast = validate(pi, ne);
        const auto slow = validate_bruteforce(pi, ne);
        const auto truth = geometric_vhc(w, ne);
        ASSERT_EQ(fast.has_value(), truth.has_value()) << pi.to_string();
        ASSERT_EQ(slow.has_value(), truth.has_value()) << pi.to_string();
        if (truth) {
          ASSERT_EQ(fast->hooks(), *truth);
          ASSERT_EQ(slow->hooks(), *truth);
        }
        ASSERT_LE(count_valid_assignments(pi, ne), 1u);
      }
    }
  }
}

TEST(Validate, WrongSizeSetsAreInvalid) {
  for (const auto& w : oracle::all_perms(5)) {
    const Permutation pi(w);
    for (const auto& ne : subsets(5))
      if (static_cast<int>(ne.size()) != descent_count(pi)) ASSERT_FALSE(validate(pi, ne).has_value());
  }
}

TEST(Enumerate, Examples) {
  const auto id = enumerate_vhcs(P("1234"));
  ASSERT_EQ(id.size(), 1u);
  EXPECT_TRUE(id[0].ne_set().empty());
  const auto two = enumerate_vhcs(P("2134"));
  ASSERT_EQ(two.size(), 2u);
  EXPECT_EQ(two[0].ne_set(), (IndexSet{3}));
  EXPECT_EQ(two[1].ne_set(), (IndexSet{4}));
  std::size_t total = 0;
  for (const auto& pi : avoiders(4, P("132"))) total += enumerate_vhcs(pi).size();
  EXPECT_EQ(total, 5u);
}

TEST(Enumerate, MatchesSubsetFilterUpTo8) {
  for (int n = 0; n <= 8; ++n) {
    for (const auto& w : oracle::all_perms(n)) {
      const Permutation pi(w);
      const auto a = enumerate_vhcs(pi);
      const auto b = enumerate_vhcs_by_subsets(pi);
      ASSERT_EQ(a, b) << pi.to_string();
      ASSERT_TRUE(std::is_sorted(a.begin(), a.end()));
    }
  }
}

TEST(Enumerate, LastEntryIsMaximal) {
  for (int n = 1; n <= 9; ++n) {
    for (const char* s : {"123", "132", "213", "231", "312", "321"}) {
      for_each_avoider(n, P(s), [&](const Permutation& pi) {
        if (!enumerate_vhcs(pi).empty()) ASSERT_EQ(pi(n), n) << pi.to_string();
      });
    }
  }
}

TEST(Reduced, Examples) {
  EXPECT_FALSE(is_reduced(*validate(P("1"), std::vector<int>{})));
  EXPECT_TRUE(is_reduced(*validate(P("213"), std::vector<int>{3})));
  std::size_t red = 0;
  for (const auto& pi : avoiders(3, P("312")))
    for (const auto& v : enumerate_vhcs(pi)) red += v.hook_count() == 1 && is_reduced(v);
  EXPECT_EQ(red, 1u);
  EXPECT_TRUE(is_reduced(Permutation{}, std::vector<int>{}));
}

TEST(Reduced, MatchesOracle) {
  for (int n = 1; n <= 7; ++n)
    for (const auto& w : oracle::all_perms(n))
      for (const auto& v : enumerate_vhcs(Permutation(w))) ASSERT_EQ(is_reduced(v), reduced_oracle(w, v.hooks()));
}

TEST(Restrict, Example) {
  const auto r = restrict_to_endpoints(*validate(P("2134"), std::vector<int>{4}));
  EXPECT_EQ(r.vhc.perm(), P("213"));
  EXPECT_EQ(r.vhc.ne_set(), (IndexSet{3}));
  EXPECT_EQ(r.support, (IndexSet{1, 2, 4}));
}

TEST(Restrict, ReducedInputIsFixed) {
  for (int n = 1; n <= 7; ++n) {
    for_each_avoider(n, P("312"), [&](const Permutation& pi) {
      for (const auto& v : enumerate_vhcs(pi)) {
        if (!is_reduced(v)) continue;
        const auto r = restrict_to_endpoints(v);
        ASSERT_EQ(r.vhc, v);
        ASSERT_EQ(static_cast<int>(r.support.size()), n);
      }
    });
  }
}

TEST(Restrict, InjectiveWithValuesAndLandsInReduced) {
  for (int n = 1; n <= 8; ++n) {
    std::set<std::pair<std::string, IndexSet>> seen;
    for_each_avoider(n, P("312"), [&](const Permutation& pi) {
      for (const auto& v : enumerate_vhcs(pi)) {
        const auto r = restrict_to_endpoints(v);
        ASSERT_TRUE(is_reduced(r.vhc));
        ASSERT_TRUE(avoids(r.vhc.perm(), P("312")));
        ASSERT_EQ(r.values.size(), r.support.size());
        for (std::size_t i = 0; i < r.support.size(); ++i)
          ASSERT_NE(std::find(r.values.begin(), r.values.end(), pi(r.support[i])), r.values.end());
        ASSERT_TRUE(seen.emplace(to_json(r.vhc).dump(), r.values).second) << to_json(v).dump();
      }
    });
  }
}

TEST(Restrict, IndexSupportAloneCollides) {
  const auto a = restrict_to_endpoints(*validate(P("1324"), std::vector<int>{4}));
  const auto b = restrict_to_endpoints(*validate(P("2314"), std::vector<int>{4}));
  EXPECT_EQ(a.vhc, b.vhc);
  EXPECT_EQ(a.support, b.support);
  EXPECT_EQ(a.values, (IndexSet{2, 3, 4}));
  EXPECT_EQ(b.values, (IndexSet{1, 3, 4}));
}

TEST(Restrict, BinomialDecompositionOfCounts) {
  std::vector<std::uint64_t> red(10, 0), all(10, 0);
  red[0] = all[0] = 1;
  for (int n = 1; n <= 9; ++n) {
    for_each_avoider(n, P("312"), [&](const Permutation& pi) {
      for (const auto& v : enumerate_vhcs(pi)) {
        ++all[n];
        red[n] += reduced_oracle({pi.entries().begin(), pi.entries().end()}, v.hooks());
      }
    });
  }
  for (int n = 1; n <= 9; ++n) {
    std::uint64_t s = 0;
    for (int r = 0; r <= n; ++r) s += oracle::binom(n, r) * red[r];
    EXPECT_EQ(s, all[n]) << n;
  }
}

TEST(Json, RoundTrip) {
  const auto v = *validate(P("3215647"), std::vector<int>{4, 5, 7});
  EXPECT_EQ(to_json(v).dump(), R"({"perm":"3215647","ne":[4,5,7]})");
  EXPECT_EQ(vhc_from_json(nlohmann::json::parse(to_json(v).dump())), v);
  EXPECT_THROW(vhc_from_json(nlohmann::json::parse(R"({"perm":"21","ne":[2]})")), std::invalid_argument);
  EXPECT_THROW(vhc_from_json(nlohmann::json::parse(R"({"perm":"21"})")), std::invalid_argument);
  EXPECT_THROW(vhc_from_json(nlohmann::json::parse(R"([1,2])")), std::invalid_argument);
}

TEST(Sweep, ParallelMatchesReference) {
  for (int n = 1; n <= 9; ++n) {
    for (const char* s : {"132", "312", "321", "123"}) {
      const auto ref = tally_vhcs_reference(n, P(s));
      EXPECT_EQ(tally_vhcs(n, P(s)), ref) << n << " " << s;
      std::uint64_t split = 0;
      for (int k = 0; k < n; ++k) split += tally_vhcs_with_hooks(n, P(s), k).total;
      EXPECT_EQ(split, ref.total);
    }
  }
}

TEST(Sweep, ThreadCountDoesNotChangeResult) {
  const auto ref = tally_vhcs_reference(10, P("312"));
  for (int t : {1, 2, 3, 4, 7}) {
    set_thread_count(t);
    EXPECT_EQ(tally_vhcs(10, P("312")), ref) << t;
  }
  set_thread_count(0);
}
