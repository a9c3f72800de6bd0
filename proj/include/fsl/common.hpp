// SPDX-License-Identifier: MIT
#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace fsl {

// Thrown when an input violates an operation's documented precondition.
class precondition_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Thrown when an iterative solver or quadrature fails to reach its tolerance.
class solver_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline void require(bool ok, const std::string& what)
{
    if (!ok) throw precondition_error(what);
}

inline constexpr double pi = 3.14159265358979323846;
inline constexpr double inf = std::numeric_limits<double>::infinity();

// A quadratic-form value that may be infinite.  Divergence is a result, not an error.
struct EnergyValue {
    double value = 0.0;
    bool divergent = false;

    static EnergyValue finite(double v) { return {v, false}; }
    static EnergyValue diverges() { return {inf, true}; }
};

struct Interval {
    double lo = 0.0;
    double hi = 0.0;
    double length() const { return hi - lo; }
    bool contains(double x) const { return lo <= x && x <= hi; }
};

} // namespace fsl
