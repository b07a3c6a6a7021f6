#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <json.hpp>

#include "hookwalk/walks.hpp"

namespace hookwalk {

/// Row k of the reduced-configuration triangle: entry i-1 counts reduced
/// configurations with k hooks on Av_{2k+i}(312), i = 1..k.
struct TriangleRow {
  int k = 0;
  std::vector<std::uint64_t> entries;
};

/// Exhaustive. Throws std::invalid_argument (with a size estimate) when
/// k_max > 5.
std::vector<TriangleRow> triangle(int k_max);

/// One finding per entry, e.g.
/// {"check":"conjecture2","k":3,"lhs":"5","rhs":"5","verdict":"holds"}.
/// Verdicts are "holds", "fails" or "info".
using Report = std::vector<nlohmann::ordered_json>;

/// True when no entry of the report has verdict "fails".
bool all_hold(const Report& report);

BigInt catalan(int k);
BigInt three_dim_catalan(int k);  // 2 (3k)! / (k! (k+1)! (k+2)!)

/// Alternating-sum formula for the number of reduced configurations on
/// Av_n(312), with w(-1) = 1.
BigInt reduced_count_formula(int n, const CountTable& walks);

/// Exhaustive reduced counts against the alternating formula for
/// n = 0..n_max (n_max <= 9), plus the triangle cross-reference.
Report check_eq2(int n_max);

/// Conjectures 1-3 on triangle rows 1..k_max and Conjecture 4 over the
/// weak order on S_3 for n = 1..n_max. Never throws on a failing verdict.
Report check_conjectures(int k_max, int n_max = 9);

/// Image of ll_map after w_map over VHC(Av_n(132)) against the Tamari
/// intervals of length n-1, for n = 1..n_max (n_max <= 8).
Report check_tamari_image(int n_max);

// Polynomial checks on exact integer coefficients, lowest degree first.
int distinct_real_roots(std::span<const BigInt> coeffs);
bool is_real_rooted(std::span<const BigInt> coeffs);
bool is_log_concave(std::span<const BigInt> coeffs);
bool is_unimodal(std::span<const BigInt> coeffs);

struct AsymptoticFit {
  double growth_hat = 0;
  double alpha_hat = 0;
  double log_const = 0;
  int n_lo = 0;
  int n_hi = 0;
  double residual = 0;  // root mean square, in log units
};

/// Least squares of logs[j] (the log of term n_lo + j) against
/// n log g - a log n + c. Needs at least 50 points.
AsymptoticFit fit_growth(std::span<const double> logs, int n_lo);

/// The fit applied to log vhc312_count(n) over [n_lo, n_hi].
AsymptoticFit asymptotic_fit(int n_lo = 200, int n_hi = 400);

struct FitTolerance {
  double growth = 5.729;
  double growth_rel = 0.02;
  double alpha = 4.515;
  double alpha_abs = 1.0;
};

Report fit_report(const AsymptoticFit& fit, const FitTolerance& tol = {});

}  // namespace hookwalk
