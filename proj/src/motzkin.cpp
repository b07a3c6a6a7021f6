#include "hookwalk/motzkin.hpp"

#include <cstdint>
#include <stdexcept>

namespace hookwalk {

char to_char(Step s) {
  switch (s) {
    case Step::U: return 'U';
    case Step::D: return 'D';
    case Step::E: return 'E';
  }
  return '?';
}

bool MotzkinPath::is_motzkin(std::span<const Step> steps) {
  int h = 0;
  for (Step s : steps) {
    h += step_displacement(s);
    if (h < 0) return false;
  }
  return h == 0;
}

MotzkinPath::MotzkinPath(std::vector<Step> steps) : steps_(std::move(steps)) {
  if (!is_motzkin(steps_)) throw std::invalid_argument("not a Motzkin path: " + to_string());
}

MotzkinPath MotzkinPath::parse(std::string_view text) {
  std::vector<Step> steps;
  for (char c : text) {
    switch (c) {
      case 'U': steps.push_back(Step::U); break;
      case 'D': steps.push_back(Step::D); break;
      case 'E': steps.push_back(Step::E); break;
      default: throw std::invalid_argument("bad Motzkin step '" + std::string(1, c) + "'");
    }
  }
  return MotzkinPath(std::move(steps));
}

std::string MotzkinPath::to_string() const {
  std::string s;
  for (Step step : steps_) s.push_back(to_char(step));
  return s;
}

std::vector<int> MotzkinPath::heights() const {
  std::vector<int> h;
  h.reserve(steps_.size());
  int cur = 0;
  for (Step s : steps_) h.push_back(cur += step_displacement(s));
  return h;
}

DyckPrefix::DyckPrefix(std::vector<DyckLetter> letters) : letters_(std::move(letters)) {
  int h = 0;
  for (DyckLetter l : letters_) {
    h += l == DyckLetter::u ? 1 : -1;
    if (h < 0) throw std::invalid_argument("not a Dyck prefix: " + to_string());
  }
}

DyckPrefix DyckPrefix::parse(std::string_view text) {
  std::vector<DyckLetter> letters;
  for (char c : text) {
    if (c == 'u') letters.push_back(DyckLetter::u);
    else if (c == 'd') letters.push_back(DyckLetter::d);
    else throw std::invalid_argument("bad Dyck letter '" + std::string(1, c) + "'");
  }
  return DyckPrefix(std::move(letters));
}

int DyckPrefix::up_count() const {
  int c = 0;
  for (DyckLetter l : letters_) c += l == DyckLetter::u;
  return c;
}

std::string DyckPrefix::to_string() const {
  std::string s;
  for (DyckLetter l : letters_) s.push_back(l == DyckLetter::u ? 'u' : 'd');
  return s;
}

bool dyck_geq(const DyckPrefix& a, const DyckPrefix& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dyck_geq: length mismatch");
  int ua = 0, ub = 0;
  for (int i = 0; i < a.size(); ++i) {
    ua += a[i] == DyckLetter::u;
    ub += b[i] == DyckLetter::u;
    if (ua < ub) return false;
  }
  return true;
}

std::vector<Step> path_class(const MotzkinPath& p) {
  std::vector<Step> cls;
  for (Step s : p.steps())
    if (s != Step::D) cls.push_back(s);
  return cls;
}

std::vector<int> lng_all(const MotzkinPath& p) {
  std::vector<int> out;
  const int n = p.size();
  for (int start = 0; start < n; ++start) {
    if (p[start] == Step::D) continue;
    int h = 0;
    for (int t = start; t < n; ++t) {
      h += step_displacement(p[t]);
      if (h == 0) {
        out.push_back(t - start + 1);
        break;
      }
    }
  }
  return out;
}

DyckPrefix support(const MotzkinPath& p) {
  std::vector<DyckLetter> letters;
  letters.reserve(p.size());
  for (Step s : p.steps()) letters.push_back(s == Step::D ? DyckLetter::d : DyckLetter::u);
  return DyckPrefix(std::move(letters));
}

std::optional<MotzkinPath> reconstruct(std::span<const Step> cls, const DyckPrefix& sup) {
  std::vector<Step> steps;
  std::size_t next = 0;
  for (DyckLetter l : sup.letters()) {
    if (l == DyckLetter::d) {
      steps.push_back(Step::D);
      continue;
    }
    if (next == cls.size() || cls[next] == Step::D) return std::nullopt;
    steps.push_back(cls[next++]);
  }
  if (next != cls.size() || !MotzkinPath::is_motzkin(steps)) return std::nullopt;
  return MotzkinPath(std::move(steps));
}

char to_char(Order o) {
  switch (o) {
    case Order::S: return 'S';
    case Order::C: return 'C';
    case Order::T: return 'T';
  }
  return '?';
}

Order parse_order(std::string_view text) {
  if (text == "S") return Order::S;
  if (text == "C") return Order::C;
  if (text == "T") return Order::T;
  throw std::invalid_argument("unknown order '" + std::string(text) + "' (expected S, C or T)");
}

namespace {

bool below_or_equal(const MotzkinPath& p, const MotzkinPath& q) {
  int hp = 0, hq = 0;
  for (int i = 0; i < p.size(); ++i) {
    hp += step_displacement(p[i]);
    hq += step_displacement(q[i]);
    if (hp > hq) return false;
  }
  return true;
}

}  // namespace

bool leq(Order order, const MotzkinPath& p, const MotzkinPath& q) {
  if (p.size() != q.size()) throw std::invalid_argument("leq: length mismatch");
  switch (order) {
    case Order::S: return below_or_equal(p, q);
    case Order::C: return path_class(p) == path_class(q) && below_or_equal(p, q);
    case Order::T: {
      if (path_class(p) != path_class(q)) return false;
      const auto lp = lng_all(p);
      const auto lq = lng_all(q);
      for (std::size_t i = 0; i < lp.size(); ++i)
        if (lp[i] > lq[i]) return false;
      return true;
    }
  }
  return false;
}

Interval make_interval(Order order, MotzkinPath lower, MotzkinPath upper) {
  if (!leq(order, lower, upper)) {
    throw std::invalid_argument(lower.to_string() + " is not <=_" + to_char(order) + " " +
                                upper.to_string());
  }
  return {std::move(lower), std::move(upper), order};
}

namespace {

void extend_path(int n, int height, std::vector<Step>& steps, std::vector<MotzkinPath>& out) {
  const int left = n - static_cast<int>(steps.size());
  if (left == 0) {
    out.emplace_back(steps);
    return;
  }
  for (Step s : {Step::U, Step::D, Step::E}) {
    const int h = height + step_displacement(s);
    if (h < 0 || h > left - 1) continue;
    steps.push_back(s);
    extend_path(n, h, steps, out);
    steps.pop_back();
  }
}

}  // namespace

std::vector<MotzkinPath> enumerate_paths(int n) {
  if (n < 0) throw std::invalid_argument("negative path length");
  std::vector<MotzkinPath> out;
  std::vector<Step> steps;
  extend_path(n, 0, steps, out);
  return out;
}

std::vector<Interval> enumerate_intervals(Order order, int n) {
  const auto paths = enumerate_paths(n);
  std::vector<std::vector<Interval>> per_lower(paths.size());
  const auto count = static_cast<std::int64_t>(paths.size());
#pragma omp parallel for schedule(dynamic, 4)
  for (std::int64_t a = 0; a < count; ++a) {
    for (const auto& q : paths) {
      if (leq(order, paths[a], q)) per_lower[a].push_back({paths[a], q, order});
    }
  }
  std::vector<Interval> out;
  for (auto& chunk : per_lower)
    for (auto& iv : chunk) out.push_back(std::move(iv));
  return out;
}

nlohmann::ordered_json to_json(const Interval& interval) {
  nlohmann::ordered_json j;
  j["lower"] = interval.lower.to_string();
  j["upper"] = interval.upper.to_string();
  j["order"] = std::string(1, to_char(interval.order));
  return j;
}

Interval interval_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("lower") || !j.contains("upper")) {
    throw std::invalid_argument(R"(expected {"lower": "...", "upper": "...", "order": "S|C|T"})");
  }
  const Order order = j.contains("order") ? parse_order(j["order"].get<std::string>()) : Order::C;
  return make_interval(order, MotzkinPath::parse(j["lower"].get<std::string>()),
                       MotzkinPath::parse(j["upper"].get<std::string>()));
}

}  // namespace hookwalk
