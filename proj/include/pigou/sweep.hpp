#ifndef PIGOU_SWEEP_HPP
#define PIGOU_SWEEP_HPP

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "pigou/cooperation.hpp"

namespace pigou {

enum class Parameter { a, b, c, y1 };

inline std::string_view to_string(Parameter p) {
    switch (p) {
        case Parameter::a: return "a";
        case Parameter::b: return "b";
        case Parameter::c: return "c";
        case Parameter::y1: return "y1";
    }
    return "";
}

inline Parameter parse_parameter(std::string_view name) {
    if (name == "a") return Parameter::a;
    if (name == "b") return Parameter::b;
    if (name == "c") return Parameter::c;
    if (name == "y1") return Parameter::y1;
    throw UnknownParameter("unknown parameter '" + std::string(name) +
                           "'; valid parameters are a, b, c, y1");
}

struct Interval {
    double lo = 0.0;
    double hi = 0.0;
};

/// Axis-aligned box of candidate parameters. Lower bounds must be positive
/// so every draw is a candidate for the strict ordering constraints.
struct ParameterRegion {
    Interval a, b, c, y1;
};

namespace detail {

inline void check_interval(const Interval& iv, const char* name) {
    if (!(iv.lo > 0) || !(iv.hi >= iv.lo)) {
        throw ConstraintViolation(std::string(name) + " interval invalid",
                                  "lo=" + std::to_string(iv.lo) +
                                      " hi=" + std::to_string(iv.hi));
    }
}

// Uniform double in [lo, hi) built directly from the generator's bits, so
// output does not depend on the standard library's distribution internals.
inline double uniform_in(std::mt19937_64& gen, const Interval& iv) {
    const double u = static_cast<double>(gen() >> 11) * 0x1.0p-53;
    return iv.lo + u * (iv.hi - iv.lo);
}

}  // namespace detail

/// Rejection-samples exactly n valid scenarios from the region with a seeded
/// deterministic generator. Identical (region, n, seed) reproduces identical
/// output. Throws RegionInfeasible after 10*n rejections with no acceptance.
inline std::vector<ExternalityScenario> sample(const ParameterRegion& region,
                                               std::size_t n, std::uint64_t seed) {
    detail::check_interval(region.a, "a");
    detail::check_interval(region.b, "b");
    detail::check_interval(region.c, "c");
    detail::check_interval(region.y1, "y1");
    std::mt19937_64 gen(seed);
    std::vector<ExternalityScenario> out;
    out.reserve(n);
    std::size_t rejections = 0;
    while (out.size() < n) {
        const double a = detail::uniform_in(gen, region.a);
        const double b = detail::uniform_in(gen, region.b);
        const double c = detail::uniform_in(gen, region.c);
        const double y1 = detail::uniform_in(gen, region.y1);
        try {
            out.push_back(validate(a, b, c, y1));
        } catch (const ConstraintViolation&) {
            ++rejections;
            if (out.empty() && rejections >= 10 * n) {
                throw RegionInfeasible(
                    "no valid scenario found after " + std::to_string(rejections) +
                    " rejections; region cannot satisfy c > b > a");
            }
        }
    }
    return out;
}

struct SweepPoint {
    double value = 0.0;  // swept parameter value
    double tau1 = 0.0, tau2 = 0.0;
    double alpha1 = 0.0, alpha2 = 0.0;
    double x_social_noncoop = 0.0, x_social_coop = 0.0;
};

struct SkippedPoint {
    double value = 0.0;
    std::string reason;  // failed predicate
};

struct SweepSeries {
    Parameter parameter = Parameter::a;
    WelfareMode mode = WelfareMode::paper;
    std::vector<double> grid;  // strictly increasing, endpoints inclusive
    std::vector<SweepPoint> evaluated;
    std::vector<SkippedPoint> skipped;
};

namespace detail {

inline ExternalityScenario with_parameter(const ExternalityScenario& base,
                                          Parameter p, double v) {
    double a = base.a(), b = base.b(), c = base.c(), y1 = base.y1();
    switch (p) {
        case Parameter::a: a = v; break;
        case Parameter::b: b = v; break;
        case Parameter::c: c = v; break;
        case Parameter::y1: y1 = v; break;
    }
    return validate(a, b, c, y1, base.meta());
}

}  // namespace detail

/// Sweeps one parameter over a uniform inclusive grid, re-validating each
/// point. Points that violate the constraints are recorded as skipped with
/// the failed predicate, never dropped silently.
inline SweepSeries sweep_grid(const ExternalityScenario& base, Parameter parameter,
                              double from, double to, long steps, WelfareMode mode) {
    if (!(from < to)) throw std::invalid_argument("sweep requires from < to");
    if (steps < 2) throw std::invalid_argument("sweep requires steps >= 2");
    SweepSeries series{parameter, mode};
    series.grid.reserve(static_cast<std::size_t>(steps));
    series.evaluated.reserve(static_cast<std::size_t>(steps));
    const double h = (to - from) / static_cast<double>(steps - 1);
    for (long i = 0; i < steps; ++i) {
        const double v = i + 1 == steps ? to : from + h * static_cast<double>(i);
        series.grid.push_back(v);
        try {
            const ExternalityScenario s = detail::with_parameter(base, parameter, v);
            const ComparisonReport r = compare(s, mode);
            series.evaluated.push_back(SweepPoint{
                v, r.noncoop.welfare.tau, r.coop.welfare.tau,
                r.noncoop.welfare.alpha, r.coop.welfare.alpha,
                r.noncoop.equilibrium.x_social, r.coop.equilibrium.x_social});
        } catch (const ConstraintViolation& e) {
            series.skipped.push_back(SkippedPoint{v, e.predicate});
        }
    }
    return series;
}

enum class Target { tau1, tau2, alpha1, alpha2 };

inline std::string_view to_string(Target t) {
    switch (t) {
        case Target::tau1: return "tau1";
        case Target::tau2: return "tau2";
        case Target::alpha1: return "alpha1";
        case Target::alpha2: return "alpha2";
    }
    return "";
}

/// Analytic partial vs central finite difference of one closed-form welfare
/// quantity with respect to one parameter.
struct SensitivityResult {
    Target target = Target::tau1;
    Parameter parameter = Parameter::a;
    double closed_form = 0.0;
    double finite_difference = 0.0;
    double relative_gap = 0.0;
};

namespace detail {

// Partials of tau1 = (b-a)y1/(a+b) and tau2 = (b-a)y1/(a+c).
inline double dtau(const ExternalityScenario& s, bool coop, Parameter p) {
    const double a = s.a(), b = s.b(), y1 = s.y1();
    const double d = coop ? a + s.c() : a + b;  // denominator
    switch (p) {
        case Parameter::a:
            return coop ? -(b + s.c()) * y1 / (d * d) : -2 * b * y1 / (d * d);
        case Parameter::b:
            return coop ? y1 / d : 2 * a * y1 / (d * d);
        case Parameter::c:
            return coop ? -(b - a) * y1 / (d * d) : 0.0;
        case Parameter::y1:
            return (b - a) / d;
    }
    return 0.0;
}

inline double tau_value(const ExternalityScenario& s, bool coop) {
    const double d = coop ? s.a() + s.c() : s.a() + s.b();
    return (s.b() - s.a()) * s.y1() / d;
}

// alpha1 = tau1^2/(4a), alpha2 = tau2^2/(2(b+c)): chain rule through tau
// plus the explicit denominator dependence.
inline double dalpha(const ExternalityScenario& s, bool coop, Parameter p) {
    const double tau = tau_value(s, coop);
    const double dt = dtau(s, coop, p);
    if (!coop) {
        double out = tau * dt / (2 * s.a());
        if (p == Parameter::a) out -= tau * tau / (4 * s.a() * s.a());
        return out;
    }
    const double bc = s.b() + s.c();
    double out = tau * dt / bc;
    if (p == Parameter::b || p == Parameter::c) out -= tau * tau / (2 * bc * bc);
    return out;
}

inline double target_value(const ExternalityScenario& s, Target t) {
    switch (t) {
        case Target::tau1: return welfare_paper(s, Regime::noncooperative).tau;
        case Target::tau2: return welfare_paper(s, Regime::cooperative).tau;
        case Target::alpha1: return welfare_paper(s, Regime::noncooperative).alpha;
        case Target::alpha2: return welfare_paper(s, Regime::cooperative).alpha;
    }
    return 0.0;
}

}  // namespace detail

inline double default_step(double parameter_value) {
    return 1e-6 * std::max(1.0, std::abs(parameter_value));
}

inline SensitivityResult sensitivity(const ExternalityScenario& s, Target target,
                                     Parameter parameter, double h) {
    if (!(h > 0)) throw std::invalid_argument("step h must be positive");
    double value = 0.0;
    switch (parameter) {
        case Parameter::a: value = s.a(); break;
        case Parameter::b: value = s.b(); break;
        case Parameter::c: value = s.c(); break;
        case Parameter::y1: value = s.y1(); break;
    }
    const bool coop = target == Target::tau2 || target == Target::alpha2;
    const bool is_alpha = target == Target::alpha1 || target == Target::alpha2;
    SensitivityResult result{target, parameter};
    result.closed_form = is_alpha ? detail::dalpha(s, coop, parameter)
                                  : detail::dtau(s, coop, parameter);
    try {
        const ExternalityScenario plus =
            detail::with_parameter(s, parameter, value + h);
        const ExternalityScenario minus =
            detail::with_parameter(s, parameter, value - h);
        result.finite_difference = (detail::target_value(plus, target) -
                                    detail::target_value(minus, target)) /
                                   (2 * h);
    } catch (const ConstraintViolation& e) {
        throw PerturbationInvalid("perturbation by h=" + std::to_string(h) +
                                  " leaves the valid region: " + e.predicate);
    }
    result.relative_gap = std::abs(result.closed_form - result.finite_difference) /
                          std::max(1.0, std::abs(result.closed_form));
    return result;
}

}  // namespace pigou

#endif
