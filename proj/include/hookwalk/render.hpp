#pragma once

#include <string>

#include "hookwalk/motzkin.hpp"
#include "hookwalk/vhc.hpp"

namespace hookwalk {

inline constexpr int kSvgScale = 40;
inline constexpr int kSvgMargin = 20;

/// Permutation plot with one circle per point (left to right) and one
/// L-shaped polyline per hook (in hook order).
std::string render_svg(const Vhc& v);

/// The path as a single polyline over a dotted unit grid.
std::string render_svg(const MotzkinPath& p);

/// Throws std::runtime_error if the file cannot be written.
void write_file(const std::string& path, const std::string& contents);

}  // namespace hookwalk
