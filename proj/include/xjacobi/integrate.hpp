#pragma once

#include "xjacobi/jacobi.hpp"

#include <functional>
#include <stdexcept>

namespace xjacobi {

class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Endpoint { minus_one = -1, plus_one = +1 };

/// Gauss-Legendre panel integral of f over [a, b].
double integrate_panel(const std::function<double(double)>& f, double a, double b, int order);

/// Integral over [-1+eps, 1-eps] on panels refined dyadically toward both
/// endpoints (breakpoints at +-(1 - 2^-k)), so endpoint-algebraic integrands
/// converge at fixed panel order. Per-panel order doubles from
/// `initial_order` until two sweeps agree to rel_tol (scaled by `scale`);
/// throws ConvergenceError past `max_order`.
double integrate_refined(const std::function<double(double)>& f, double eps = 1e-8,
                         int initial_order = 16, double rel_tol = 1e-12, int max_order = 512,
                         double scale = 0.0);

struct LimitEstimate {
    double value = 0.0;
    bool converged = false;
};

/// Limit of g(x) as x approaches the endpoint along x_k = +-(1 - 2^-k),
/// k = k_lo..k_hi; converged once the last three samples agree to rel_tol
/// (with a small absolute floor so limits equal to zero stabilize).
LimitEstimate dyadic_endpoint_limit(const std::function<double(double)>& g, Endpoint e,
                                    int k_lo = 10, int k_hi = 40, double rel_tol = 1e-8);

}  // namespace xjacobi
