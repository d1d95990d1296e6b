#ifndef PIGOU_TEST_SUPPORT_HPP
#define PIGOU_TEST_SUPPORT_HPP

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "pigou/scenario.hpp"

namespace test_support {

// Draws valid scenarios constructively: a first, then positive spacings so
// c > b > a holds by construction. Deliberately independent of the
// library's rejection sampler.
inline std::vector<pigou::ExternalityScenario> random_scenarios(
    std::size_t n, std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    std::uniform_real_distribution<double> u(0.01, 1.0);
    std::vector<pigou::ExternalityScenario> out;
    out.reserve(n);
    while (out.size() < n) {
        const double a = 0.1 + 5.0 * u(gen);
        const double b = a + 5.0 * u(gen);
        const double c = b + 5.0 * u(gen);
        const double y1 = 0.5 + 20.0 * u(gen);
        out.push_back(pigou::validate(a, b, c, y1));
    }
    return out;
}

inline pigou::ExternalityScenario worked() { return pigou::validate(1, 2, 3, 12); }
inline pigou::ExternalityScenario second() { return pigou::validate(1, 3, 5, 8); }

inline bool close_rel(double actual, double expected, double tol) {
    return std::abs(actual - expected) <= tol * std::max(1.0, std::abs(expected));
}

}  // namespace test_support

#endif
