#ifndef PIGOU_SCENARIO_HPP
#define PIGOU_SCENARIO_HPP

#include <sstream>
#include <string>
#include <string_view>
#include <utility>

#include "pigou/errors.hpp"

namespace pigou {

enum class Industry { pollution, agriculture, energy, custom };

inline std::string_view to_string(Industry ind) {
    switch (ind) {
        case Industry::pollution: return "pollution";
        case Industry::agriculture: return "agriculture";
        case Industry::energy: return "energy";
        case Industry::custom: return "custom";
    }
    return "custom";
}

struct ScenarioMeta {
    std::string name;
    Industry industry = Industry::custom;
    std::string activity_unit;
    std::string currency_unit;
    std::string notes;
};

/// Validated model parameters: a (MPC slope), b (MSC slope), c (cooperative
/// MSB slope magnitude), y1 (MSB intercept, the benefit of the first unit of
/// activity). Construction goes through validate(); instances are immutable.
class ExternalityScenario {
public:
    double a() const { return a_; }
    double b() const { return b_; }
    double c() const { return c_; }
    double y1() const { return y1_; }
    const ScenarioMeta& meta() const { return meta_; }

private:
    ExternalityScenario(double a, double b, double c, double y1, ScenarioMeta meta)
        : a_(a), b_(b), c_(c), y1_(y1), meta_(std::move(meta)) {}

    friend ExternalityScenario validate(double, double, double, double, ScenarioMeta);

    double a_, b_, c_, y1_;
    ScenarioMeta meta_;
};

namespace detail {
inline std::string param_detail(double a, double b, double c, double y1) {
    std::ostringstream os;
    os << "a=" << a << " b=" << b << " c=" << c << " y1=" << y1;
    return os.str();
}
}  // namespace detail

/// Checks the model constraints c > b > a > 0, b + c > 2a, y1 > 0 (all
/// strict) plus metadata sanity, and returns an immutable scenario.
/// Throws ConstraintViolation naming the first failed predicate.
inline ExternalityScenario validate(double a, double b, double c, double y1,
                                    ScenarioMeta meta) {
    const std::string detail = detail::param_detail(a, b, c, y1);
    if (!(a > 0)) throw ConstraintViolation("a <= 0", detail);
    if (!(b > a)) throw ConstraintViolation("b <= a", detail);
    if (!(c > b)) throw ConstraintViolation("c <= b", detail);
    if (!(y1 > 0)) throw ConstraintViolation("y1 <= 0", detail);
    if (!(b + c > 2 * a)) throw ConstraintViolation("b + c <= 2a", detail);
    if (meta.name.empty()) throw ConstraintViolation("name empty", detail);
    if (meta.activity_unit.empty() || meta.currency_unit.empty()) {
        throw ConstraintViolation("units empty", detail);
    }
    return ExternalityScenario(a, b, c, y1, std::move(meta));
}

inline ExternalityScenario validate(double a, double b, double c, double y1) {
    return validate(a, b, c, y1,
                    ScenarioMeta{"unnamed", Industry::custom, "units", "$", ""});
}

}  // namespace pigou

#endif
