#ifndef PIGOU_WELFARE_HPP
#define PIGOU_WELFARE_HPP

#include <stdexcept>
#include <string_view>

#include "pigou/equilibrium.hpp"

namespace pigou {

enum class WelfareMode { paper, standard };

inline std::string_view to_string(WelfareMode m) {
    return m == WelfareMode::paper ? "paper" : "standard";
}

/// Pigouvian tax tau and deadweight loss alpha for one regime.
/// evaluation_x is the activity level at which the MSC-MPC gap was taken.
struct WelfareResult {
    Regime regime = Regime::noncooperative;
    WelfareMode mode = WelfareMode::paper;
    double tau = 0.0;
    double alpha = 0.0;
    double evaluation_x = 0.0;
};

/// Closed-form tax and deadweight loss, tabulated form:
///   non-cooperative: tau1 = (b-a)y1/(a+b),  alpha1 = tau1^2 / (4a)
///   cooperative:     tau2 = (b-a)y1/(a+c),  alpha2 = tau2^2 / (2(b+c))
/// The two rows take the gap at different x: y1/(a+b) for the first,
/// y1/(a+c) for the second; evaluation_x records which.
inline WelfareResult welfare_paper(const ExternalityScenario& s, Regime regime) {
    const double gap = s.b() - s.a();
    if (regime == Regime::noncooperative) {
        const double tau = gap * s.y1() / (s.a() + s.b());
        const double alpha = tau * tau / (4 * s.a());
        return WelfareResult{regime, WelfareMode::paper, tau, alpha,
                             s.y1() / (s.a() + s.b())};
    }
    const double tau = gap * s.y1() / (s.a() + s.c());
    const double alpha = tau * tau / (2 * (s.b() + s.c()));
    return WelfareResult{regime, WelfareMode::paper, tau, alpha,
                         s.y1() / (s.a() + s.c())};
}

/// Textbook definitions as a cross-check: tau is the MSC-MPC gap at the
/// social optimum, alpha the triangle integral of (MSC - MSB) between the
/// social optimum and the private equilibrium.
inline WelfareResult welfare_standard(const ExternalityScenario& s, Regime regime) {
    const CurveSet cs = curves(s, regime);
    const EquilibriumSet eq = equilibria(s, regime);
    const double tau = cs.msc.value(eq.x_social) - cs.mpc.value(eq.x_social);
    const double alpha = 0.5 * (eq.x_private - eq.x_social) *
                         (cs.msc.value(eq.x_private) - cs.msb.value(eq.x_private));
    return WelfareResult{regime, WelfareMode::standard, tau, alpha, eq.x_social};
}

/// Composite trapezoid rule for the deadweight-loss integral
/// int (MSC - MSB) dx over [x_social, x_private]. The integrand is affine,
/// so any panel count reproduces the exact triangle area.
inline double dwl_quadrature(const ExternalityScenario& s, Regime regime,
                             long panels) {
    if (panels < 1) throw std::invalid_argument("panels must be >= 1");
    const CurveSet cs = curves(s, regime);
    const EquilibriumSet eq = equilibria(s, regime);
    const double lo = eq.x_social;
    const double hi = eq.x_private;
    const double h = (hi - lo) / static_cast<double>(panels);
    const auto gap = [&](double x) { return cs.msc.value(x) - cs.msb.value(x); };
    double sum = 0.5 * (gap(lo) + gap(hi));
    for (long i = 1; i < panels; ++i) {
        sum += gap(lo + h * static_cast<double>(i));
    }
    return sum * h;
}

}  // namespace pigou

#endif
