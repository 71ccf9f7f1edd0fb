// Adaptive Simpson quadrature with an error estimate, and bisection
// root-finding for monotone functions.

#pragma once

#include <cmath>
#include <functional>

#include "qig/common.hpp"

namespace qig {

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
};

namespace detail {

inline double simpson(double a, double fa, double b, double fb, double fm) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

inline void adaptive_simpson_step(const std::function<double(double)>& f, double a,
                                  double fa, double b, double fb, double m, double fm,
                                  double whole, double tol, int depth,
                                  QuadratureResult& result) {
    if (depth > 60)
        throw numerical_error("adaptive quadrature: subdivision limit reached "
                              "(integrand may be singular)");
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    if (!std::isfinite(flm) || !std::isfinite(frm))
        throw numerical_error("adaptive quadrature: integrand is not finite");
    const double left = simpson(a, fa, m, fm, flm);
    const double right = simpson(m, fm, b, fb, frm);
    const double delta = left + right - whole;
    if (std::abs(delta) <= 15.0 * tol) {
        result.value += left + right + delta / 15.0;
        result.error_estimate += std::abs(delta) / 15.0;
        return;
    }
    adaptive_simpson_step(f, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth + 1, result);
    adaptive_simpson_step(f, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth + 1, result);
}

}  // namespace detail

// Integral of f over [a, b] to absolute tolerance. a <= b required.
inline QuadratureResult integrate(const std::function<double(double)>& f, double a,
                                  double b, double abs_tol = 1e-10) {
    require(a <= b, "integrate: reversed interval");
    QuadratureResult result;
    if (a == b) return result;
    const double fa = f(a);
    const double fb = f(b);
    const double m = 0.5 * (a + b);
    const double fm = f(m);
    if (!std::isfinite(fa) || !std::isfinite(fb) || !std::isfinite(fm))
        throw numerical_error("adaptive quadrature: integrand is not finite");
    const double whole = detail::simpson(a, fa, b, fb, fm);
    detail::adaptive_simpson_step(f, a, fa, b, fb, m, fm, whole, abs_tol, 0, result);
    return result;
}

// Root of a continuous monotone-increasing g on [lo, hi] by bisection;
// brackets must satisfy g(lo) <= 0 <= g(hi).
inline double bisect_increasing(const std::function<double(double)>& g, double lo,
                                double hi, double x_tol = 1e-12) {
    double g_lo = g(lo);
    double g_hi = g(hi);
    if (g_lo > 0.0 || g_hi < 0.0)
        throw std::domain_error("bisect: target outside the bracketed range");
    while (hi - lo > x_tol) {
        const double mid = 0.5 * (lo + hi);
        const double g_mid = g(mid);
        if (g_mid < 0.0)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace qig
