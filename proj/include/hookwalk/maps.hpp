#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "hookwalk/motzkin.hpp"
#include "hookwalk/perm.hpp"
#include "hookwalk/vhc.hpp"

namespace hookwalk {

// ---------------------------------------------------------------------------
// Sliding operators
// ---------------------------------------------------------------------------

/// With m the position of value h, and B / T the entries of pi_1..pi_{m-1}
/// below / above h: swl_at returns B T pi_{>=m}, swr_at returns T B pi_{>=m}.
/// Throws std::out_of_range unless 1 <= h <= n.
Permutation swl_at(const Permutation& pi, int height);
Permutation swr_at(const Permutation& pi, int height);

/// swl = swl_1 o ... o swl_n (swl_n applied first). Defined on 132-avoiders
/// only; maps onto the 312-avoiders. swr is the inverse direction.
/// Throws std::invalid_argument naming the offending occurrence otherwise.
Permutation swl(const Permutation& tau);
Permutation swr(const Permutation& pi);

enum class Slide { left, right };

/// The point with the same value in swl(pi) or swr(pi).
Point point_image(Slide map, const Permutation& pi, Point p);

// ---------------------------------------------------------------------------
// Northwest representatives and stripes (312-avoiders)
// ---------------------------------------------------------------------------

/// Leftmost left-to-right maximum weakly northwest of `p`.
Point nw(const Permutation& pi, Point p);

/// Rightmost point of the stripe of the left-to-right maximum `m`.
Point nw_inv(const Permutation& pi, Point m);

struct Stripe {
  Point representative;
  std::vector<Point> points;  // left to right, hence descending
};

/// Stripes ordered bottom to top.
std::vector<Stripe> stripes(const Permutation& pi);

// ---------------------------------------------------------------------------
// VHC(Av_n(132)) -> VHC(Av_n(312)) and its left inverse
// ---------------------------------------------------------------------------

/// (pi, V) -> (swl(pi), nw(swl(V))). Throws std::invalid_argument unless the
/// permutation avoids 132.
Vhc w_map(const Vhc& v);

struct WPreimage {
  Permutation perm;
  IndexSet ne_set;
  std::optional<Vhc> vhc;  // set when the candidate validates

  bool valid() const { return vhc.has_value(); }
};

/// (pi, W) -> (swr(pi), swr(nw_inv(W))), validated. Defined on all of
/// VHC(Av_n(312)); the candidate is not always valid.
WPreimage w_map_left_inverse(const Vhc& v);

// ---------------------------------------------------------------------------
// VHC(Av_n(312)) -> Int(M^C_{n-1})
// ---------------------------------------------------------------------------

struct LLFrame {
  std::vector<Point> maxima;      // R_0..R_l then the sentinel (0,0)
  std::vector<int> gamma;         // horizontal gaps, i = 1..l
  std::vector<int> gamma_prime;   // vertical gaps, i = 1..l
  std::vector<Step> letters;      // U when R_{i-1} is a northeast endpoint, else E

  int length() const { return static_cast<int>(letters.size()); }
};

LLFrame ll_frame(const Vhc& v);

/// Throws std::invalid_argument for an empty permutation or one that
/// contains 312.
Interval ll_map(const Vhc& v);

/// Inverse of ll_map by lookup in a table of VHC(Av_n(312)), built once per
/// n and then shared read-only. Desk scale (n <= 10).
std::optional<Vhc> ll_inverse_lookup(const Interval& interval, int n);

// ---------------------------------------------------------------------------
// Int(M^C_n) <-> N_n
// ---------------------------------------------------------------------------

struct PathPair {
  MotzkinPath x;
  MotzkinPath y;

  auto operator<=>(const PathPair&) const = default;
};

/// (X_i, Y_i) in {(D,E), (D,U), (E,D), (E,E), (E,U), (U,D)} for every i.
bool in_pair_class(const MotzkinPath& x, const MotzkinPath& y);

/// Throws std::invalid_argument unless lower <=_C upper.
PathPair phi(const Interval& interval);

/// Throws std::invalid_argument unless the pair lies in N_n.
Interval phi_inverse(const PathPair& pair);

// ---------------------------------------------------------------------------
// Pivot points
// ---------------------------------------------------------------------------

/// Points rho with (sw, nw_inv(ne), rho) an occurrence of 132. Throws
/// std::invalid_argument if `hook` is not part of `v`.
std::vector<Point> pivot_points(const Vhc& v, const Hook& hook);

/// {"input":{...},"output":{...},"map":"ll"}
nlohmann::ordered_json audit_record(std::string_view map_name, nlohmann::ordered_json input,
                                    nlohmann::ordered_json output);

}  // namespace hookwalk
