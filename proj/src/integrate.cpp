#include "xjacobi/integrate.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <vector>

namespace xjacobi {

namespace {

// Legendre nodes/weights on [-1,1], cached per order.
const QuadratureRule& legendre_rule(int order) {
    static std::mutex mutex;
    static std::map<int, QuadratureRule> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(order);
    if (it == cache.end())
        it = cache.emplace(order, gauss_jacobi_rule(JacobiParams<double>{0.0, 0.0}, order)).first;
    return it->second;
}

std::vector<double> dyadic_breakpoints(double eps) {
    std::vector<double> pts;
    pts.push_back(-1.0 + eps);
    for (int k = 1;; ++k) {
        const double offset = std::ldexp(1.0, -k);  // 2^-k
        if (offset <= eps) break;
        pts.push_back(-1.0 + offset);
    }
    pts.push_back(0.0);
    for (int k = 1;; ++k) {
        const double offset = std::ldexp(1.0, -k);
        if (offset <= eps) break;
        pts.push_back(1.0 - offset);
    }
    pts.push_back(1.0 - eps);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

}  // namespace

double integrate_panel(const std::function<double(double)>& f, double a, double b, int order) {
    const QuadratureRule& rule = legendre_rule(order);
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double acc = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i)
        acc += rule.weights[i] * f(mid + half * rule.nodes[i]);
    return acc * half;
}

double integrate_refined(const std::function<double(double)>& f, double eps, int initial_order,
                         double rel_tol, int max_order, double scale) {
    const std::vector<double> pts = dyadic_breakpoints(eps);
    auto sweep = [&](int order) {
        double acc = 0.0;
        for (std::size_t i = 0; i + 1 < pts.size(); ++i)
            acc += integrate_panel(f, pts[i], pts[i + 1], order);
        return acc;
    };
    double prev = sweep(initial_order);
    for (int order = initial_order * 2; order <= max_order; order *= 2) {
        const double cur = sweep(order);
        const double tol = rel_tol * std::max({std::fabs(cur), std::fabs(prev), scale});
        if (std::fabs(cur - prev) <= tol) return cur;
        prev = cur;
    }
    throw ConvergenceError("integrate_refined: no convergence before order cap");
}

LimitEstimate dyadic_endpoint_limit(const std::function<double(double)>& g, Endpoint e, int k_lo,
                                    int k_hi, double rel_tol) {
    // Raw samples v_k = g(+-(1 - 2^-k)) approach the limit geometrically for
    // the indicial-type behavior treated here, so Aitken extrapolation of
    // consecutive triples reproduces the limit (exactly for v_k = L + C r^k);
    // convergence is declared once three extrapolants agree.
    LimitEstimate est;
    std::vector<double> raw, acc;
    double scale = 0.0;
    for (int k = k_lo; k <= k_hi; ++k) {
        const double x = (e == Endpoint::plus_one) ? 1.0 - std::ldexp(1.0, -k)
                                                   : -1.0 + std::ldexp(1.0, -k);
        raw.push_back(g(x));
        scale = std::max(scale, std::fabs(raw.back()));
        if (raw.size() < 3) continue;
        const double v0 = raw[raw.size() - 3], v1 = raw[raw.size() - 2], v2 = raw.back();
        const double denom = (v2 - v1) - (v1 - v0);
        double extrapolated = v2;
        if (std::fabs(denom) > 1e-14 * std::max(scale, 1.0))
            extrapolated = v2 - (v2 - v1) * (v2 - v1) / denom;
        acc.push_back(extrapolated);
        if (acc.size() >= 3) {
            const double a0 = acc[acc.size() - 3], a1 = acc[acc.size() - 2], a2 = acc.back();
            const double tol = rel_tol * std::max({std::fabs(a0), std::fabs(a1), std::fabs(a2)}) +
                               1e-13 * std::max(scale, 1.0);
            if (std::fabs(a2 - a1) <= tol && std::fabs(a1 - a0) <= tol) {
                est.value = a2;
                est.converged = true;
                return est;
            }
        }
    }
    est.value = acc.empty() ? (raw.empty() ? 0.0 : raw.back()) : acc.back();
    return est;
}

}  // namespace xjacobi
