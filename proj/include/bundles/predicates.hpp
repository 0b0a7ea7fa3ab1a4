#pragma once

#include <array>

namespace bundles {

using Point = std::array<double, 2>;

/// Sign of the orientation determinant: +1 when (a, b, c) turn
/// counterclockwise, -1 clockwise, 0 exactly collinear.
///
/// Evaluated with a floating-point filter first; when the filter cannot
/// certify the sign the determinant is recomputed in exact rational
/// arithmetic, so the result is correct for every double input. This matters
/// here: the pipeline triangulates lattices perturbed by as little as 1e-12,
/// far below the robustness margin of naive double evaluation.
int orient2d(const Point& a, const Point& b, const Point& c);

/// Sign of the in-circle determinant: for a counterclockwise triangle
/// (a, b, c), +1 when d lies strictly inside the circumcircle, -1 strictly
/// outside, 0 exactly cocircular. Same filter + exact-fallback scheme as
/// orient2d.
int incircle(const Point& a, const Point& b, const Point& c, const Point& d);

}  // namespace bundles
