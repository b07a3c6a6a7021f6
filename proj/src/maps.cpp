#include "hookwalk/maps.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace hookwalk {

namespace {

const Permutation& pattern_132() {
  static const Permutation p = Permutation::parse("132");
  return p;
}

const Permutation& pattern_312() {
  static const Permutation p = Permutation::parse("312");
  return p;
}

void require_avoids(const Permutation& pi, const Permutation& sigma, std::string_view who) {
  if (auto occ = find_pattern(pi, sigma)) {
    std::string where;
    for (int i : *occ) {
      if (!where.empty()) where += ",";
      where += std::to_string(pi(i));
    }
    throw std::invalid_argument(std::string(who) + ": " + pi.to_string() + " contains " +
                                sigma.to_string() + " at values (" + where + ")");
  }
}

Permutation slide_at(const Permutation& pi, int height, bool left) {
  if (height < 1 || height > pi.size()) {
    throw std::out_of_range("slide height " + std::to_string(height) + " outside [1," +
                            std::to_string(pi.size()) + "]");
  }
  const int m = pi.index_of(height);
  std::vector<int> below, above;
  for (int j = 1; j < m; ++j) (pi(j) < height ? below : above).push_back(pi(j));
  std::vector<int> out;
  out.reserve(pi.size());
  const auto& first = left ? below : above;
  const auto& second = left ? above : below;
  out.insert(out.end(), first.begin(), first.end());
  out.insert(out.end(), second.begin(), second.end());
  for (int j = m; j <= pi.size(); ++j) out.push_back(pi(j));
  return Permutation(std::move(out));
}

Permutation slide_all(Permutation pi, bool left) {
  for (int h = pi.size(); h >= 1; --h) pi = slide_at(pi, h, left);
  return pi;
}

void require_point(const Permutation& pi, Point p) {
  if (p.index < 1 || p.index > pi.size() || pi(p.index) != p.value) {
    throw std::invalid_argument("(" + std::to_string(p.index) + "," + std::to_string(p.value) +
                                ") is not a point of " + pi.to_string());
  }
}

// nw without the avoidance check; callers have already verified it.
Point nw_unchecked(const Permutation& pi, Point p) {
  int best = 0;
  for (int j = 1; j <= p.index; ++j) {
    if (pi(j) > best) {
      best = pi(j);
      if (best >= p.value) return pi.point(j);
    }
  }
  return p;  // unreachable for a genuine point
}

bool is_ltr_maximum(const Permutation& pi, Point m) {
  for (int j = 1; j < m.index; ++j)
    if (pi(j) > m.value) return false;
  return true;
}

Point nw_inv_unchecked(const Permutation& pi, Point m) {
  Point last = m;
  for (int j = m.index + 1; j <= pi.size(); ++j) {
    if (nw_unchecked(pi, pi.point(j)) == m) last = pi.point(j);
  }
  return last;
}

}  // namespace

Permutation swl_at(const Permutation& pi, int height) { return slide_at(pi, height, true); }
Permutation swr_at(const Permutation& pi, int height) { return slide_at(pi, height, false); }

Permutation swl(const Permutation& tau) {
  require_avoids(tau, pattern_132(), "swl");
  return slide_all(tau, true);
}

Permutation swr(const Permutation& pi) {
  require_avoids(pi, pattern_312(), "swr");
  return slide_all(pi, false);
}

Point point_image(Slide map, const Permutation& pi, Point p) {
  require_point(pi, p);
  const Permutation image = map == Slide::left ? swl(pi) : swr(pi);
  return {image.index_of(p.value), p.value};
}

Point nw(const Permutation& pi, Point p) {
  require_avoids(pi, pattern_312(), "nw");
  require_point(pi, p);
  return nw_unchecked(pi, p);
}

Point nw_inv(const Permutation& pi, Point m) {
  require_avoids(pi, pattern_312(), "nw_inv");
  require_point(pi, m);
  if (!is_ltr_maximum(pi, m)) throw std::invalid_argument("nw_inv: not a left-to-right maximum");
  return nw_inv_unchecked(pi, m);
}

std::vector<Stripe> stripes(const Permutation& pi) {
  require_avoids(pi, pattern_312(), "stripes");
  std::map<int, Stripe> by_value;
  for (const Point& p : pi.points()) {
    const Point rep = nw_unchecked(pi, p);
    auto& s = by_value[rep.value];
    s.representative = rep;
    s.points.push_back(p);
  }
  std::vector<Stripe> out;
  for (auto& [value, s] : by_value) out.push_back(std::move(s));
  return out;
}

Vhc w_map(const Vhc& v) {
  const Permutation& tau = v.perm();
  require_avoids(tau, pattern_132(), "w_map");
  const Permutation pi = slide_all(tau, true);
  IndexSet ne;
  for (int a : v.ne_set()) {
    const Point image{pi.index_of(tau(a)), tau(a)};
    ne.push_back(nw_unchecked(pi, image).index);
  }
  std::sort(ne.begin(), ne.end());
  auto out = validate(pi, ne);
  if (!out) throw std::logic_error("w_map produced an invalid configuration on " + pi.to_string());
  return std::move(*out);
}

WPreimage w_map_left_inverse(const Vhc& v) {
  const Permutation& pi = v.perm();
  require_avoids(pi, pattern_312(), "w_map_left_inverse");
  Permutation tau = slide_all(pi, false);
  IndexSet ne;
  for (int b : v.ne_set()) {
    const Point m = pi.point(b);
    if (!is_ltr_maximum(pi, m)) {
      throw std::invalid_argument("w_map_left_inverse: northeast endpoint is not a left-to-right maximum");
    }
    const Point r = nw_inv_unchecked(pi, m);
    ne.push_back(tau.index_of(r.value));
  }
  std::sort(ne.begin(), ne.end());
  auto vhc = validate(tau, ne);
  return {std::move(tau), std::move(ne), std::move(vhc)};
}

LLFrame ll_frame(const Vhc& v) {
  const Permutation& pi = v.perm();
  const int n = pi.size();
  if (n == 0) throw std::invalid_argument("ll_map: empty permutation");
  require_avoids(pi, pattern_312(), "ll_map");
  if (pi(n) != n) throw std::invalid_argument("ll_map: last entry must be n");

  LLFrame f;
  auto maxima = ltr_extrema(pi, Extremum::maxima);
  f.maxima.assign(maxima.rbegin(), maxima.rend());
  f.maxima.push_back({0, 0});
  const int l = static_cast<int>(f.maxima.size()) - 2;

  std::vector<char> is_ne(n + 1, 0);
  for (int i : v.ne_set()) is_ne[i] = 1;
  for (int i = 1; i <= l; ++i) {
    f.gamma.push_back(f.maxima[i - 1].index - f.maxima[i].index - 1);
    f.gamma_prime.push_back(f.maxima[i].value - f.maxima[i + 1].value - 1);
    f.letters.push_back(is_ne[f.maxima[i - 1].index] ? Step::U : Step::E);
  }
  return f;
}

Interval ll_map(const Vhc& v) {
  const LLFrame f = ll_frame(v);
  std::vector<Step> lower, upper;
  for (int i = 0; i < f.length(); ++i) {
    lower.push_back(f.letters[i]);
    lower.insert(lower.end(), f.gamma[i], Step::D);
    upper.push_back(f.letters[i]);
    upper.insert(upper.end(), f.gamma_prime[i], Step::D);
  }
  return make_interval(Order::C, MotzkinPath(std::move(lower)), MotzkinPath(std::move(upper)));
}

namespace {

using LLTable = std::map<std::pair<MotzkinPath, MotzkinPath>, Vhc>;

std::shared_ptr<const LLTable> ll_table(int n) {
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const LLTable>> cache;
  std::lock_guard lock(mu);
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  auto table = std::make_shared<LLTable>();
  for_each_avoider(n, pattern_312(), [&](const Permutation& pi) {
    for (Vhc& v : enumerate_vhcs(pi)) {
      Interval iv = ll_map(v);
      table->emplace(std::make_pair(std::move(iv.lower), std::move(iv.upper)), std::move(v));
    }
  });
  cache.emplace(n, table);
  return table;
}

}  // namespace

std::optional<Vhc> ll_inverse_lookup(const Interval& interval, int n) {
  if (n < 1 || n > 10) throw std::invalid_argument("ll_inverse_lookup: n must be in [1,10]");
  if (interval.lower.size() != n - 1) return std::nullopt;
  const auto table = ll_table(n);
  auto it = table->find({interval.lower, interval.upper});
  if (it == table->end()) return std::nullopt;
  return it->second;
}

bool in_pair_class(const MotzkinPath& x, const MotzkinPath& y) {
  if (x.size() != y.size()) return false;
  for (int i = 0; i < x.size(); ++i) {
    const Step a = x[i], b = y[i];
    if ((a == Step::D && b == Step::D) || (a == Step::U && b != Step::D)) return false;
  }
  return true;
}

PathPair phi(const Interval& interval) {
  const MotzkinPath& p = interval.lower;
  const MotzkinPath& q = interval.upper;
  if (!leq(Order::C, p, q)) {
    throw std::invalid_argument("phi: " + p.to_string() + " is not <=_C " + q.to_string());
  }
  const DyckPrefix sp = support(p), sq = support(q);
  std::vector<Step> x;
  for (int i = 0; i < p.size(); ++i) {
    if (sp[i] == sq[i]) x.push_back(Step::E);
    else if (sp[i] == DyckLetter::d) x.push_back(Step::U);
    else x.push_back(Step::D);
  }
  return {MotzkinPath(std::move(x)), p};
}

Interval phi_inverse(const PathPair& pair) {
  if (!in_pair_class(pair.x, pair.y)) {
    throw std::invalid_argument("phi_inverse: (" + pair.x.to_string() + ", " + pair.y.to_string() +
                                ") is not in N_n");
  }
  // Each matched (U, D) pair of X flips a "d ... u" of the lower support
  // into "u ... d", raising it while keeping the letter counts.
  const DyckPrefix lower_support = support(pair.y);
  std::vector<DyckLetter> letters(lower_support.letters().begin(), lower_support.letters().end());
  std::vector<int> open;
  for (int i = 0; i < pair.x.size(); ++i) {
    if (pair.x[i] == Step::U) {
      open.push_back(i);
    } else if (pair.x[i] == Step::D) {
      const int j = open.back();
      open.pop_back();
      letters[j] = DyckLetter::u;
      letters[i] = DyckLetter::d;
    }
  }
  auto upper = reconstruct(path_class(pair.y), DyckPrefix(std::move(letters)));
  if (!upper) throw std::logic_error("phi_inverse: support does not reconstruct a Motzkin path");
  return make_interval(Order::C, pair.y, std::move(*upper));
}

std::vector<Point> pivot_points(const Vhc& v, const Hook& hook) {
  if (std::find(v.hooks().begin(), v.hooks().end(), hook) == v.hooks().end()) {
    throw std::invalid_argument("pivot_points: hook is not part of the configuration");
  }
  const Permutation& pi = v.perm();
  const Point r = nw_inv(pi, hook.ne);
  std::vector<Point> out;
  if (r.index <= hook.sw.index) return out;
  for (int k = r.index + 1; k <= pi.size(); ++k) {
    if (pi(k) > hook.sw.value && pi(k) < r.value) out.push_back(pi.point(k));
  }
  return out;
}

nlohmann::ordered_json audit_record(std::string_view map_name, nlohmann::ordered_json input,
                                    nlohmann::ordered_json output) {
  nlohmann::ordered_json j;
  j["input"] = std::move(input);
  j["output"] = std::move(output);
  j["map"] = std::string(map_name);
  return j;
}

}  // namespace hookwalk
