#ifndef PIGOU_CURVE_HPP
#define PIGOU_CURVE_HPP

#include <cmath>

#include "pigou/errors.hpp"

namespace pigou {

enum class CurveLabel { MPC, MSC, MSB_noncoop, MSB_coop };

/// A marginal curve y = slope * x + intercept, in currency per unit of
/// activity. MPC/MSC pass through the origin with positive slope; MSB
/// curves start at y1 > 0 and slope downward.
struct AffineCurve {
    double slope = 0.0;
    double intercept = 0.0;
    CurveLabel label = CurveLabel::MPC;

    double value(double x) const { return slope * x + intercept; }
};

struct Point {
    double x = 0.0;
    double y = 0.0;
};

inline constexpr double kParallelSlopeTol = 1e-12;  // absolute

/// Intersection of two affine curves. The returned x may be negative;
/// domain checks belong to the caller.
inline Point intersect(const AffineCurve& first, const AffineCurve& second) {
    if (std::abs(first.slope - second.slope) <= kParallelSlopeTol) {
        throw ParallelCurves("curves have equal slope, no unique intersection");
    }
    const double x = (second.intercept - first.intercept) / (first.slope - second.slope);
    return {x, first.value(x)};
}

}  // namespace pigou

#endif
