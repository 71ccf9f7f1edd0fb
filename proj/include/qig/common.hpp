// Shared error types and the open-interval domain used across the library.

#pragma once

#include <stdexcept>
#include <string>

namespace qig {

// Thrown when an iterative routine (quadrature, root-finding) fails to
// converge to its requested tolerance.
class numerical_error : public std::runtime_error {
public:
    explicit numerical_error(const std::string& what) : std::runtime_error(what) {}
};

// Open interval (lo, hi) used as the domain of parametric families and paths.
struct Interval {
    double lo = 0.0;
    double hi = 1.0;

    bool contains(double x) const { return x > lo && x < hi; }
    double width() const { return hi - lo; }

    // Interior sub-interval clipped away from both endpoints.
    Interval trimmed(double margin = 0.05) const { return {lo + margin, hi - margin}; }
};

inline void require(bool condition, const std::string& message) {
    if (!condition) throw std::invalid_argument(message);
}

inline void require_in_domain(bool condition, const std::string& message) {
    if (!condition) throw std::domain_error(message);
}

}  // namespace qig
