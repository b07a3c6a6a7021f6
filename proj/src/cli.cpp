#include "hookwalk/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <optional>
#include <stdexcept>

#include "hookwalk/experiments.hpp"
#include "hookwalk/maps.hpp"
#include "hookwalk/motzkin.hpp"
#include "hookwalk/perm.hpp"
#include "hookwalk/render.hpp"
#include "hookwalk/vhc.hpp"
#include "hookwalk/vhc_sweep.hpp"
#include "hookwalk/walks.hpp"

namespace hookwalk::cli {

namespace {

using json = nlohmann::ordered_json;

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Range {
  int lo;
  int hi;
};

int parse_int(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(text, &used);
  } catch (const std::exception&) {
    throw ConfigError("bad " + what + ": '" + text + "'");
  }
  if (used != text.size()) throw ConfigError("bad " + what + ": '" + text + "'");
  return v;
}

// "7" or "1..9" (or "200:400" when sep is ':').
Range parse_range(const std::string& text, const std::string& sep, const std::string& what) {
  const auto at = text.find(sep);
  Range r{};
  if (at == std::string::npos) {
    r.lo = r.hi = parse_int(text, what);
  } else {
    r.lo = parse_int(text.substr(0, at), what);
    r.hi = parse_int(text.substr(at + sep.size()), what);
  }
  if (r.lo > r.hi) throw ConfigError(what + " range is empty: '" + text + "'");
  return r;
}

void require_within(Range r, int lo, int hi, const std::string& what) {
  if (r.lo < lo || r.hi > hi) {
    throw ConfigError(what + " must lie in [" + std::to_string(lo) + "," + std::to_string(hi) + "]");
  }
}

IndexSet parse_ne(const std::string& text) {
  IndexSet out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    out.push_back(parse_int(text.substr(start, comma - start), "--ne entry"));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

Vhc require_vhc(const Permutation& pi, const IndexSet& ne) {
  auto v = validate(pi, ne);
  if (!v) {
    throw ConfigError("no valid hook configuration on " + pi.to_string() + " with northeast set " +
                      json(ne).dump());
  }
  return std::move(*v);
}

void emit_lines(std::ostream& out, const Report& report) {
  for (const auto& j : report) out << j.dump() << '\n';
}

struct Options {
  // count
  std::string pattern;
  std::string n_range;
  std::string method = "exhaustive";
  // shared
  std::string format;
  // walks
  int k_max = 0;
  // map
  std::string name;
  std::string perm;
  std::string ne;
  std::string lower, upper, x, y;
  bool audit = false;
  // intervals
  std::string order;
  int n = 0;
  // check
  std::string suite;
  int n_max = 0;
  // fit
  std::string window = "200:400";
  // render
  std::string vhc_json;
  std::string path;
  std::string out_file;
};

void do_count(const Options& o, std::ostream& out) {
  const Permutation sigma = Permutation::parse(o.pattern);
  const Range r = parse_range(o.n_range, "..", "--n");
  std::vector<std::pair<int, BigInt>> rows;
  if (o.method == "formula") {
    if (sigma != Permutation::parse("312")) throw ConfigError("--method formula is available for 312 only");
    require_within(r, 1, 2000, "--n");
    const auto counts = vhc312_counts(r.hi);
    for (int n = r.lo; n <= r.hi; ++n) rows.emplace_back(n, counts[n]);
  } else {
    require_within(r, 1, 13, "--n");
    for (int n = r.lo; n <= r.hi; ++n) rows.emplace_back(n, BigInt(tally_vhcs(n, sigma).total));
  }
  if (o.format == "csv") {
    out << "n,count\n";
    for (const auto& [n, c] : rows) out << n << ',' << c << '\n';
  } else if (o.format == "json") {
    json arr = json::array();
    for (const auto& [n, c] : rows) arr.push_back({{"n", n}, {"count", c.str()}});
    out << arr.dump() << '\n';
  } else {
    for (const auto& row : rows) out << row.second << '\n';
  }
}

void do_walks(const Options& o, std::ostream& out) {
  if (o.k_max < 0 || o.k_max > 2000) throw ConfigError("--kmax must lie in [0,2000]");
  const CountTable t = count_walks(o.k_max);
  if (o.format == "json") out << t.to_json().dump() << '\n';
  else out << t.to_csv("k");
}

json map_input(const Options& o) {
  json in;
  if (!o.perm.empty()) in["perm"] = o.perm;
  if (!o.ne.empty() || o.name == "ll" || o.name == "w" || o.name == "winv" || o.name == "restrict")
    in["ne"] = parse_ne(o.ne);
  if (!o.lower.empty()) in["lower"] = o.lower;
  if (!o.upper.empty()) in["upper"] = o.upper;
  if (!o.x.empty()) in["x"] = o.x;
  if (!o.y.empty()) in["y"] = o.y;
  return in;
}

json do_map_output(const Options& o) {
  auto need = [&](const std::string& value, const char* flag) {
    if (value.empty()) throw ConfigError("--name " + o.name + " needs " + flag);
  };
  if (o.name == "swl" || o.name == "swr") {
    need(o.perm, "--perm");
    const Permutation pi = Permutation::parse(o.perm);
    return {{"perm", (o.name == "swl" ? swl(pi) : swr(pi)).to_string()}};
  }
  if (o.name == "phi") {
    need(o.lower, "--lower");
    need(o.upper, "--upper");
    const PathPair p =
        phi(make_interval(Order::C, MotzkinPath::parse(o.lower), MotzkinPath::parse(o.upper)));
    return {{"x", p.x.to_string()}, {"y", p.y.to_string()}};
  }
  if (o.name == "phiinv") {
    need(o.x, "--x");
    need(o.y, "--y");
    return to_json(phi_inverse({MotzkinPath::parse(o.x), MotzkinPath::parse(o.y)}));
  }
  need(o.perm, "--perm");
  const Permutation pi = Permutation::parse(o.perm);
  const IndexSet ne = parse_ne(o.ne);
  if (o.name == "winv") {
    const WPreimage w = w_map_left_inverse(require_vhc(pi, ne));
    return {{"perm", w.perm.to_string()}, {"ne", w.ne_set}, {"valid", w.valid()}};
  }
  const Vhc v = require_vhc(pi, ne);
  if (o.name == "ll") return to_json(ll_map(v));
  if (o.name == "w") return to_json(w_map(v));
  if (o.name == "restrict") {
    const Restriction r = restrict_to_endpoints(v);
    json j = to_json(r.vhc);
    j["support"] = r.support;
    j["values"] = r.values;
    return j;
  }
  throw ConfigError("unknown map '" + o.name + "'");
}

void do_map(const Options& o, std::ostream& out) {
  json result = do_map_output(o);
  if (o.audit) result = audit_record(o.name, map_input(o), std::move(result));
  out << result.dump() << '\n';
}

void do_intervals(const Options& o, std::ostream& out) {
  if (o.n < 0 || o.n > 10) throw ConfigError("--n must lie in [0,10]");
  for (const auto& iv : enumerate_intervals(parse_order(o.order), o.n)) out << to_json(iv).dump() << '\n';
}

void do_triangle(const Options& o, std::ostream& out) {
  for (const auto& row : triangle(o.k_max)) {
    json j;
    j["k"] = row.k;
    j["entries"] = row.entries;
    out << j.dump() << '\n';
  }
}

void do_check(const Options& o, std::ostream& out) {
  if (o.suite == "conjectures") emit_lines(out, check_conjectures(o.k_max, o.n_max));
  else if (o.suite == "tamari") emit_lines(out, check_tamari_image(std::min(o.n_max, 8)));
  else if (o.suite == "eq2") emit_lines(out, check_eq2(o.n_max));
  else throw ConfigError("unknown suite '" + o.suite + "'");
}

void do_fit(const Options& o, std::ostream& out) {
  const Range w = parse_range(o.window, ":", "--window");
  require_within(w, 1, 2000, "--window");
  const AsymptoticFit fit = asymptotic_fit(w.lo, w.hi);
  json j;
  j["growth_hat"] = fit.growth_hat;
  j["alpha_hat"] = fit.alpha_hat;
  j["log_const"] = fit.log_const;
  j["window"] = {fit.n_lo, fit.n_hi};
  j["residual"] = fit.residual;
  out << j.dump() << '\n';
  emit_lines(out, fit_report(fit));
}

void do_render(const Options& o, std::ostream& out) {
  if (o.vhc_json.empty() == o.path.empty()) throw ConfigError("render needs exactly one of --vhc and --path");
  std::string svg;
  if (!o.vhc_json.empty()) {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(o.vhc_json);
    } catch (const nlohmann::json::exception& e) {
      throw ConfigError(std::string("--vhc is not JSON: ") + e.what());
    }
    svg = render_svg(vhc_from_json(j));
  } else {
    svg = render_svg(MotzkinPath::parse(o.path));
  }
  if (o.out_file.empty()) out << svg;
  else write_file(o.out_file, svg);
}

std::optional<int> env_threads() {
  const char* v = std::getenv("HOOKWALK_THREADS");
  if (v == nullptr || *v == '\0') return std::nullopt;
  return parse_int(v, "HOOKWALK_THREADS");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hook configurations, Motzkin intervals and quadrant walks"};
  app.name("hookwalk");
  app.require_subcommand(1);
  Options o;
  int threads = 0;

  auto* count = app.add_subcommand("count", "Count valid hook configurations on Av_n(pattern)");
  count->add_option("--pattern", o.pattern, "Pattern to avoid, e.g. 312")->required();
  count->add_option("--n", o.n_range, "n or a range lo..hi")->required();
  count->add_option("--method", o.method, "exhaustive, or formula for 312")
      ->check(CLI::IsMember({"exhaustive", "formula"}));
  count->add_option("--format", o.format, "text, csv or json")->check(CLI::IsMember({"text", "csv", "json"}));

  auto* walks = app.add_subcommand("walks", "Closed quadrant walk counts w(0..kmax)");
  walks->add_option("--kmax", o.k_max, "Largest walk length")->required();
  walks->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  auto* map = app.add_subcommand("map", "Apply one of the bijections to a single input");
  map->add_option("--name", o.name, "ll, w, winv, swl, swr, phi, phiinv or restrict")
      ->required()
      ->check(CLI::IsMember({"ll", "w", "winv", "swl", "swr", "phi", "phiinv", "restrict"}));
  map->add_option("--perm", o.perm, "Permutation in one-line notation");
  map->add_option("--ne", o.ne, "Northeast endpoint indices, comma separated");
  map->add_option("--lower", o.lower, "Lower Motzkin path (phi)");
  map->add_option("--upper", o.upper, "Upper Motzkin path (phi)");
  map->add_option("--x", o.x, "First path of the pair (phiinv)");
  map->add_option("--y", o.y, "Second path of the pair (phiinv)");
  map->add_flag("--audit", o.audit, "Wrap the result with its input");

  auto* intervals = app.add_subcommand("intervals", "All intervals of a Motzkin poset, as JSON lines");
  intervals->add_option("--order", o.order, "S, C or T")->required()->check(CLI::IsMember({"S", "C", "T"}));
  intervals->add_option("--n", o.n, "Path length")->required();

  auto* tri = app.add_subcommand("triangle", "Rows of the reduced-configuration triangle");
  tri->add_option("--kmax", o.k_max, "Last row")->required();

  auto* check = app.add_subcommand("check", "Run a verification suite; verdicts go to the report");
  check->add_option("--suite", o.suite, "conjectures, tamari or eq2")
      ->required()
      ->check(CLI::IsMember({"conjectures", "tamari", "eq2"}));
  o.k_max = 4;
  o.n_max = 9;
  check->add_option("--kmax", o.k_max, "Triangle rows for the conjectures suite")->capture_default_str();
  check->add_option("--nmax", o.n_max, "Largest n")->capture_default_str();

  auto* fit = app.add_subcommand("fit", "Growth and exponent fit of the 312 counts");
  fit->add_option("--window", o.window, "lo:hi")->capture_default_str();

  auto* render = app.add_subcommand("render", "SVG of a configuration or a Motzkin path");
  render->add_option("--vhc", o.vhc_json, R"(e.g. {"perm":"3215647","ne":[4,5,7]})");
  render->add_option("--path", o.path, "Motzkin path, e.g. UDEUEUDD");
  render->add_option("--out", o.out_file, "Output file (stdout when omitted)");

  app.add_option("--threads", threads, "Worker threads (default: HOOKWALK_THREADS or all cores)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (threads > 0) set_thread_count(threads);
    else if (auto t = env_threads()) set_thread_count(*t);

    if (*count) do_count(o, out);
    else if (*walks) do_walks(o, out);
    else if (*map) do_map(o, out);
    else if (*intervals) do_intervals(o, out);
    else if (*tri) do_triangle(o, out);
    else if (*check) do_check(o, out);
    else if (*fit) do_fit(o, out);
    else if (*render) do_render(o, out);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  out.flush();
  return kExitOk;
}

}  // namespace hookwalk::cli
