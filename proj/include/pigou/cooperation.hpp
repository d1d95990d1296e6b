#ifndef PIGOU_COOPERATION_HPP
#define PIGOU_COOPERATION_HPP

#include <string>

#include "pigou/format.hpp"
#include "pigou/welfare.hpp"

namespace pigou {

/// The model's three comparative claims, evaluated on concrete numbers.
/// All three hold for every valid scenario; a false field means a bug
/// upstream, and the type exists so tests and guards can say so.
struct InequalityVerdicts {
    bool tau_reduced = false;          // tau1 > tau2
    bool alpha_reduced = false;        // alpha1 > alpha2
    bool equilibrium_lowered = false;  // x_social(coop) < x_social(noncoop)

    bool all() const { return tau_reduced && alpha_reduced && equilibrium_lowered; }
};

struct RegimeOutcome {
    EquilibriumSet equilibrium;
    WelfareResult welfare;
};

/// Paired non-cooperative/cooperative analysis of one scenario in one
/// welfare mode. Delta fields are stored, not recomputed by consumers.
struct ComparisonReport {
    ExternalityScenario scenario;
    WelfareMode mode = WelfareMode::paper;
    RegimeOutcome noncoop;
    RegimeOutcome coop;
    double delta_tau = 0.0;       // tau1 - tau2
    double delta_alpha = 0.0;     // alpha1 - alpha2
    double delta_x_social = 0.0;  // x_social(noncoop) - x_social(coop)
    InequalityVerdicts verdicts;
};

/// Maps an efficiency gain to a candidate cooperative MSB slope:
/// c = a * (energy_before / energy_after). A technology that halves the
/// energy per unit doubles the rate at which the marginal benefit of one
/// more unit of activity falls away.
inline double slope_from_efficiency(double a, double energy_before,
                                    double energy_after) {
    if (!(energy_after < energy_before)) {
        throw NoImprovement("energy_after >= energy_before: cooperation must improve efficiency");
    }
    return a * (energy_before / energy_after);
}

inline ComparisonReport compare(const ExternalityScenario& s, WelfareMode mode) {
    const auto eval = [&](Regime r) {
        return RegimeOutcome{equilibria(s, r),
                             mode == WelfareMode::paper ? welfare_paper(s, r)
                                                        : welfare_standard(s, r)};
    };
    ComparisonReport report{s, mode, eval(Regime::noncooperative),
                            eval(Regime::cooperative)};
    report.delta_tau = report.noncoop.welfare.tau - report.coop.welfare.tau;
    report.delta_alpha = report.noncoop.welfare.alpha - report.coop.welfare.alpha;
    report.delta_x_social =
        report.noncoop.equilibrium.x_social - report.coop.equilibrium.x_social;
    report.verdicts.tau_reduced = report.noncoop.welfare.tau > report.coop.welfare.tau;
    report.verdicts.alpha_reduced =
        report.noncoop.welfare.alpha > report.coop.welfare.alpha;
    report.verdicts.equilibrium_lowered =
        report.coop.equilibrium.x_social < report.noncoop.equilibrium.x_social;
    return report;
}

/// Plain-text summary of a comparison: the identified externality, the
/// cooperative action class for that industry, and the residual correction.
struct RecommendationReport {
    std::string scenario_name;
    Industry industry = Industry::custom;
    double cooperative_slope = 0.0;  // recommended c
    double residual_tax = 0.0;       // tau2
    double avoided_dwl = 0.0;        // alpha1 - alpha2
    std::string narrative;
};

namespace detail {
inline std::string action_template(Industry ind) {
    switch (ind) {
        case Industry::pollution:
            return "partner with emission-reducing technology providers";
        case Industry::agriculture:
            return "partner with water-purification technology businesses";
        case Industry::energy:
            return "substitute production toward clean energy sources";
        case Industry::custom:
            return "pursue a technology partnership that steepens the marginal "
                   "social benefit decline";
    }
    return "";
}
}  // namespace detail

inline RecommendationReport recommend(const ComparisonReport& report) {
    if (!report.verdicts.all()) {
        throw VerdictFailure("comparison report carries a false verdict");
    }
    const ExternalityScenario& s = report.scenario;
    RecommendationReport rec;
    rec.scenario_name = s.meta().name;
    rec.industry = s.meta().industry;
    rec.cooperative_slope = s.c();
    rec.residual_tax = report.coop.welfare.tau;
    rec.avoided_dwl = report.delta_alpha;
    rec.narrative =
        "Scenario '" + rec.scenario_name + "' identifies a " +
        std::string(to_string(rec.industry)) +
        " externality. Recommended action: " + detail::action_template(rec.industry) +
        ", raising the cooperative MSB slope magnitude to " +
        format_number(rec.cooperative_slope) +
        ". Residual per-unit tax after cooperation: " +
        format_number(rec.residual_tax) + " " + s.meta().currency_unit +
        " per " + s.meta().activity_unit + ". Avoided deadweight loss: " +
        format_number(rec.avoided_dwl) + " " + s.meta().currency_unit + ".";
    return rec;
}

}  // namespace pigou

#endif
