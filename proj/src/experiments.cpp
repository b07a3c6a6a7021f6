#include "hookwalk/experiments.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

#include "hookwalk/maps.hpp"
#include "hookwalk/motzkin.hpp"
#include "hookwalk/perm.hpp"
#include "hookwalk/vhc.hpp"
#include "hookwalk/vhc_sweep.hpp"

namespace hookwalk {

namespace {

using Rational = boost::multiprecision::cpp_rational;
using Poly = std::vector<Rational>;  // lowest degree first, no trailing zeros

Permutation pattern(const char* text) { return Permutation::parse(text); }

std::string str(const BigInt& x) { return x.str(); }
std::string str(std::uint64_t x) { return std::to_string(x); }

const char* verdict(bool ok) { return ok ? "holds" : "fails"; }

nlohmann::ordered_json finding(const char* check) {
  nlohmann::ordered_json j;
  j["check"] = check;
  return j;
}

BigInt factorial(int n) {
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

// Reduced configurations on Av_n(312) with exactly `hooks` hooks.
std::uint64_t reduced_with_hooks(int n, int hooks) {
  const VhcTally t = tally_vhcs_with_hooks(n, pattern("312"), hooks);
  return hooks < static_cast<int>(t.reduced_by_hooks.size()) ? t.reduced_by_hooks[hooks] : 0;
}

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int degree(const Poly& p) { return static_cast<int>(p.size()) - 1; }

Poly derivative(const Poly& p) {
  Poly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<int>(i));
  trim(d);
  return d;
}

Poly remainder(Poly a, const Poly& b) {
  while (!a.empty() && degree(a) >= degree(b)) {
    const Rational f = a.back() / b.back();
    const int shift = degree(a) - degree(b);
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= f * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

int sign(const Rational& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

int sign_changes(const std::vector<int>& signs) {
  int changes = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

Poly to_poly(std::span<const BigInt> coeffs) {
  Poly p;
  for (const auto& c : coeffs) p.emplace_back(c);
  trim(p);
  return p;
}

// Sturm chain p, p', -rem(...), ... ; the last entry is gcd(p, p') up to a unit.
std::vector<Poly> sturm_chain(const Poly& p) {
  std::vector<Poly> chain{p};
  Poly d = derivative(p);
  if (d.empty()) return chain;
  chain.push_back(d);
  while (true) {
    Poly r = remainder(chain[chain.size() - 2], chain.back());
    if (r.empty()) break;
    for (auto& c : r) c = -c;
    chain.push_back(std::move(r));
  }
  return chain;
}

}  // namespace

std::vector<TriangleRow> triangle(int k_max) {
  if (k_max < 0) throw std::invalid_argument("triangle: negative k_max");
  if (k_max > 5) {
    std::ostringstream msg;
    msg << "triangle: k_max=" << k_max << " needs every permutation of Av_" << 3 * k_max
        << "(312), about " << catalan(3 * k_max).str() << " of them; the limit is k_max=5";
    throw std::invalid_argument(msg.str());
  }
  std::vector<TriangleRow> rows;
  for (int k = 1; k <= k_max; ++k) {
    TriangleRow row{k, {}};
    for (int i = 1; i <= k; ++i) row.entries.push_back(reduced_with_hooks(2 * k + i, k));
    rows.push_back(std::move(row));
  }
  return rows;
}

bool all_hold(const Report& report) {
  return std::none_of(report.begin(), report.end(),
                      [](const auto& j) { return j.value("verdict", "") == "fails"; });
}

BigInt catalan(int k) {
  if (k < 0) throw std::invalid_argument("catalan: negative index");
  return binomial(2 * k, k) / (k + 1);
}

BigInt three_dim_catalan(int k) {
  if (k < 0) throw std::invalid_argument("three_dim_catalan: negative index");
  return 2 * factorial(3 * k) / (factorial(k) * factorial(k + 1) * factorial(k + 2));
}

BigInt reduced_count_formula(int n, const CountTable& walks) {
  BigInt s = 0;
  for (int i = 0; i <= n; ++i) {
    const BigInt term = walks.at_with_sentinel(n - i - 1);
    if (i % 2 == 0) s += term;
    else s -= term;
  }
  return s;
}

Report check_eq2(int n_max) {
  if (n_max < 0 || n_max > 9) throw std::invalid_argument("check_eq2: n_max must be in [0,9]");
  const CountTable walks = count_walks(std::max(n_max - 1, 0));
  Report report;

  // cell[k][n] = reduced configurations with k hooks on Av_n(312), only
  // where 2k+1 <= n <= 3k.
  std::map<std::pair<int, int>, std::uint64_t> cell;
  for (int k = 1; 2 * k + 1 <= n_max; ++k)
    for (int n = 2 * k + 1; n <= std::min(3 * k, n_max); ++n) cell[{k, n}] = reduced_with_hooks(n, k);

  for (int n = 0; n <= n_max; ++n) {
    std::uint64_t exhaustive = 0;
    if (n == 0) {
      exhaustive = is_reduced(Permutation{}, {}) ? 1 : 0;
    } else {
      exhaustive = tally_vhcs(n, pattern("312")).reduced_total();
    }
    const BigInt formula = reduced_count_formula(n, walks);
    auto j = finding("eq2");
    j["n"] = n;
    j["lhs"] = str(exhaustive);
    j["rhs"] = str(formula);
    j["verdict"] = verdict(BigInt(exhaustive) == formula);
    report.push_back(std::move(j));

    // Triangle entries with the same n, summed across rows. Row 0 would hold
    // only the empty configuration on the empty permutation.
    std::uint64_t across = n == 0 ? 1 : 0;
    for (const auto& [key, value] : cell)
      if (key.second == n) across += value;
    auto x = finding("eq2_triangle_column");
    x["n"] = n;
    x["lhs"] = str(across);
    x["rhs"] = str(formula);
    x["verdict"] = verdict(BigInt(across) == formula);
    report.push_back(std::move(x));
  }

  // Complete rows are listed for reference; a row mixes several n.
  for (int k = 1; 3 * k <= n_max; ++k) {
    std::uint64_t sum = 0;
    for (int n = 2 * k + 1; n <= 3 * k; ++n) sum += cell[{k, n}];
    auto j = finding("eq2_row_sum");
    j["k"] = k;
    j["lhs"] = str(sum);
    j["verdict"] = "info";
    report.push_back(std::move(j));
  }
  return report;
}

Report check_conjectures(int k_max, int n_max) {
  if (k_max < 1 || k_max > 5) throw std::invalid_argument("check_conjectures: k_max must be in [1,5]");
  if (n_max < 1 || n_max > 9) throw std::invalid_argument("check_conjectures: n_max must be in [1,9]");
  Report report;
  const auto rows = triangle(k_max);

  for (const auto& row : rows) {
    const int k = row.k;
    std::vector<BigInt> coeffs(row.entries.begin(), row.entries.end());

    auto first = finding("first_column");
    first["k"] = k;
    first["lhs"] = str(coeffs.front());
    const BigInt expect_first = catalan(k) * catalan(k + 2) - catalan(k + 1) * catalan(k + 1);
    first["rhs"] = str(expect_first);
    first["verdict"] = verdict(coeffs.front() == expect_first);
    report.push_back(std::move(first));

    auto c1 = finding("conjecture1");
    c1["k"] = k;
    c1["lhs"] = str(coeffs.back());
    c1["rhs"] = str(three_dim_catalan(k));
    c1["verdict"] = verdict(coeffs.back() == three_dim_catalan(k));
    report.push_back(std::move(c1));

    BigInt alternating = 0;
    for (int i = 1; i <= k; ++i) {
      if ((k - i) % 2 == 0) alternating += coeffs[i - 1];
      else alternating -= coeffs[i - 1];
    }
    auto c2 = finding("conjecture2");
    c2["k"] = k;
    c2["lhs"] = str(alternating);
    c2["rhs"] = str(catalan(k));
    c2["verdict"] = verdict(alternating == catalan(k));
    report.push_back(std::move(c2));

    auto c3 = finding("conjecture3");
    c3["k"] = k;
    c3["lhs"] = distinct_real_roots(coeffs);
    c3["rhs"] = k - 1;
    c3["verdict"] = verdict(is_real_rooted(coeffs));
    report.push_back(std::move(c3));

    auto lc = finding("log_concave");
    lc["k"] = k;
    lc["verdict"] = verdict(is_log_concave(coeffs));
    report.push_back(std::move(lc));

    auto um = finding("unimodal");
    um["k"] = k;
    um["verdict"] = verdict(is_unimodal(coeffs));
    report.push_back(std::move(um));
  }

  // Conjecture 4 over S_3.
  const std::array<const char*, 6> s3{"123", "132", "213", "231", "312", "321"};
  std::map<std::string, std::vector<std::uint64_t>> counts;
  for (const char* s : s3) {
    auto& c = counts[s];
    c.push_back(0);
    for (int n = 1; n <= n_max; ++n) c.push_back(tally_vhcs(n, pattern(s)).total);
  }
  for (const char* s : s3) {
    for (const char* t : s3) {
      if (std::string(s) == t || !bruhat_leq(pattern(s), pattern(t))) continue;
      for (int n = 1; n <= n_max; ++n) {
        auto c4 = finding("conjecture4");
        c4["sigma"] = s;
        c4["tau"] = t;
        c4["n"] = n;
        c4["lhs"] = str(counts[s][n]);
        c4["rhs"] = str(counts[t][n]);
        c4["verdict"] = verdict(counts[s][n] <= counts[t][n]);
        report.push_back(std::move(c4));
      }
    }
  }
  for (int n = 1; n <= n_max; ++n) {
    auto j = finding("vhc_count_321");
    j["n"] = n;
    j["lhs"] = str(counts["321"][n]);
    j["verdict"] = "info";
    report.push_back(std::move(j));
  }
  return report;
}

Report check_tamari_image(int n_max) {
  if (n_max < 1 || n_max > 8) throw std::invalid_argument("check_tamari_image: n_max must be in [1,8]");
  Report report;
  for (int n = 1; n <= n_max; ++n) {
    std::set<std::pair<std::string, std::string>> image;
    std::size_t domain = 0;
    bool inverse_ok = true;
    for_each_avoider(n, pattern("132"), [&](const Permutation& tau) {
      for (const Vhc& v : enumerate_vhcs(tau)) {
        ++domain;
        const Vhc w = w_map(v);
        const WPreimage back = w_map_left_inverse(w);
        if (!back.valid() || *back.vhc != v) inverse_ok = false;
        const Interval iv = ll_map(w);
        image.emplace(iv.lower.to_string(), iv.upper.to_string());
      }
    });
    std::set<std::pair<std::string, std::string>> tamari;
    for (const auto& iv : enumerate_intervals(Order::T, n - 1))
      tamari.emplace(iv.lower.to_string(), iv.upper.to_string());

    auto j = finding("tamari_image");
    j["n"] = n;
    j["lhs"] = std::to_string(image.size());
    j["rhs"] = std::to_string(tamari.size());
    j["domain"] = std::to_string(domain);
    j["injective"] = image.size() == domain;
    j["left_inverse"] = inverse_ok;
    j["verdict"] = verdict(image == tamari && image.size() == domain && inverse_ok);
    report.push_back(std::move(j));
  }
  return report;
}

int distinct_real_roots(std::span<const BigInt> coeffs) {
  const Poly p = to_poly(coeffs);
  if (p.empty()) throw std::invalid_argument("distinct_real_roots: zero polynomial");
  const auto chain = sturm_chain(p);
  std::vector<int> at_neg, at_pos;
  for (const auto& q : chain) {
    const int lead = sign(q.back());
    at_pos.push_back(lead);
    at_neg.push_back(degree(q) % 2 == 0 ? lead : -lead);
  }
  return sign_changes(at_neg) - sign_changes(at_pos);
}

bool is_real_rooted(std::span<const BigInt> coeffs) {
  const Poly p = to_poly(coeffs);
  if (p.empty()) throw std::invalid_argument("is_real_rooted: zero polynomial");
  const auto chain = sturm_chain(p);
  const int squarefree_degree = degree(p) - (chain.size() > 1 ? degree(chain.back()) : 0);
  return distinct_real_roots(coeffs) == squarefree_degree;
}

bool is_log_concave(std::span<const BigInt> coeffs) {
  for (std::size_t i = 1; i + 1 < coeffs.size(); ++i)
    if (coeffs[i] * coeffs[i] < coeffs[i - 1] * coeffs[i + 1]) return false;
  return true;
}

bool is_unimodal(std::span<const BigInt> coeffs) {
  std::size_t i = 1;
  while (i < coeffs.size() && coeffs[i] >= coeffs[i - 1]) ++i;
  while (i < coeffs.size() && coeffs[i] <= coeffs[i - 1]) ++i;
  return i >= coeffs.size();
}

AsymptoticFit fit_growth(std::span<const double> logs, int n_lo) {
  const std::size_t m = logs.size();
  if (m < 50) throw std::invalid_argument("fit_growth: window has fewer than 50 points");

  // Columns n, -log n, 1; solved by modified Gram-Schmidt.
  std::array<std::vector<double>, 3> q;
  for (auto& c : q) c.resize(m);
  for (std::size_t j = 0; j < m; ++j) {
    const double n = n_lo + static_cast<double>(j);
    q[0][j] = n;
    q[1][j] = -std::log(n);
    q[2][j] = 1.0;
  }
  std::array<std::array<double, 3>, 3> r{};
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < a; ++b) {
      double dot = 0;
      for (std::size_t j = 0; j < m; ++j) dot += q[b][j] * q[a][j];
      r[b][a] = dot;
      for (std::size_t j = 0; j < m; ++j) q[a][j] -= dot * q[b][j];
    }
    double norm = 0;
    for (std::size_t j = 0; j < m; ++j) norm += q[a][j] * q[a][j];
    norm = std::sqrt(norm);
    r[a][a] = norm;
    for (std::size_t j = 0; j < m; ++j) q[a][j] /= norm;
  }
  std::array<double, 3> rhs{};
  for (int a = 0; a < 3; ++a)
    for (std::size_t j = 0; j < m; ++j) rhs[a] += q[a][j] * logs[j];
  std::array<double, 3> x{};
  for (int a = 2; a >= 0; --a) {
    double s = rhs[a];
    for (int b = a + 1; b < 3; ++b) s -= r[a][b] * x[b];
    x[a] = s / r[a][a];
  }

  double sq = 0;
  for (std::size_t j = 0; j < m; ++j) {
    const double n = n_lo + static_cast<double>(j);
    const double e = logs[j] - (x[0] * n - x[1] * std::log(n) + x[2]);
    sq += e * e;
  }
  AsymptoticFit fit;
  fit.growth_hat = std::exp(x[0]);
  fit.alpha_hat = x[1];
  fit.log_const = x[2];
  fit.n_lo = n_lo;
  fit.n_hi = n_lo + static_cast<int>(m) - 1;
  fit.residual = std::sqrt(sq / static_cast<double>(m));
  return fit;
}

AsymptoticFit asymptotic_fit(int n_lo, int n_hi) {
  if (n_lo < 1 || n_hi < n_lo) throw std::invalid_argument("asymptotic_fit: bad window");
  if (n_hi - n_lo + 1 < 50) throw std::invalid_argument("asymptotic_fit: window has fewer than 50 points");
  const auto counts = vhc312_counts(n_hi);
  std::vector<double> logs;
  for (int n = n_lo; n <= n_hi; ++n) logs.push_back(log_bigint(counts[n]));
  return fit_growth(logs, n_lo);
}

Report fit_report(const AsymptoticFit& fit, const FitTolerance& tol) {
  Report report;
  auto g = finding("fit_growth");
  g["window"] = {fit.n_lo, fit.n_hi};
  g["lhs"] = fit.growth_hat;
  g["rhs"] = tol.growth;
  g["tolerance"] = tol.growth_rel;
  g["verdict"] = verdict(std::abs(fit.growth_hat - tol.growth) <= tol.growth_rel * tol.growth);
  report.push_back(std::move(g));

  auto a = finding("fit_alpha");
  a["window"] = {fit.n_lo, fit.n_hi};
  a["lhs"] = fit.alpha_hat;
  a["rhs"] = tol.alpha;
  a["tolerance"] = tol.alpha_abs;
  a["verdict"] = verdict(std::abs(fit.alpha_hat - tol.alpha) <= tol.alpha_abs);
  report.push_back(std::move(a));

  auto c = finding("fit_constant");
  c["lhs"] = fit.log_const;
  c["residual"] = fit.residual;
  c["verdict"] = "info";
  report.push_back(std::move(c));
  return report;
}

}  // namespace hookwalk
