#ifndef PIGOU_EQUILIBRIUM_HPP
#define PIGOU_EQUILIBRIUM_HPP

#include <string_view>

#include "pigou/curve.hpp"
#include "pigou/scenario.hpp"

namespace pigou {

enum class Regime { noncooperative, cooperative };

inline std::string_view to_string(Regime r) {
    return r == Regime::noncooperative ? "noncooperative" : "cooperative";
}

struct CurveSet {
    AffineCurve mpc;
    AffineCurve msc;
    AffineCurve msb;
};

/// The three marginal curves of a scenario under a regime. The MPB is
/// identical to the MSB (the producer is the only beneficiary), so no
/// separate private-benefit curve exists. The cooperative MSB slopes
/// downward at magnitude c; the non-cooperative one at magnitude a.
inline CurveSet curves(const ExternalityScenario& s, Regime regime) {
    const double msb_slope = regime == Regime::noncooperative ? -s.a() : -s.c();
    const CurveLabel msb_label = regime == Regime::noncooperative
                                     ? CurveLabel::MSB_noncoop
                                     : CurveLabel::MSB_coop;
    return CurveSet{
        AffineCurve{s.a(), 0.0, CurveLabel::MPC},
        AffineCurve{s.b(), 0.0, CurveLabel::MSC},
        AffineCurve{msb_slope, s.y1(), msb_label},
    };
}

/// Private equilibrium (MPC = MSB) and social optimum (MSC = MSB) of one
/// regime, with the curve values at each. x_social < x_private always,
/// since the MSC is steeper than the MPC.
struct EquilibriumSet {
    Regime regime = Regime::noncooperative;
    double x_private = 0.0;
    double x_social = 0.0;
    double y_private = 0.0;
    double y_social = 0.0;
};

inline EquilibriumSet equilibria(const ExternalityScenario& s, Regime regime) {
    const CurveSet cs = curves(s, regime);
    const Point priv = intersect(cs.mpc, cs.msb);
    const Point soc = intersect(cs.msc, cs.msb);
    return EquilibriumSet{regime, priv.x, soc.x, priv.y, soc.y};
}

}  // namespace pigou

#endif
