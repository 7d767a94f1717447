#pragma once

#include "xjacobi/polynomial.hpp"

#include <functional>
#include <vector>

namespace xjacobi {

/// General Jacobi parameters (a,b). Polynomial construction accepts any
/// values (the exceptional denominator needs a < -1); Gauss-Jacobi
/// quadrature additionally requires a > -1 and b > -1.
template <class T>
struct JacobiParams {
    T a;
    T b;
};

/// Generalized binomial C(z, k) = prod_{i=1..k} (z - i + 1)/i, exact in
/// rational mode. C(z, 0) = 1; k < 0 gives 0. No Gamma evaluation anywhere.
template <class T>
T generalized_binomial(const T& z, int k) {
    if (k < 0) return T(0);
    T acc(1);
    for (int i = 1; i <= k; ++i) acc = acc * (z - T(i) + T(1)) / T(i);
    return acc;
}

/// Classical Jacobi polynomial P_n^{(a,b)} through the pole-free finite sum
///
///   P_n^{(a,b)}(x) = 2^{-n} sum_{k=0}^{n} C(n+a, n-k) C(n+b, k) (x-1)^k (x+1)^{n-k},
///
/// which is entire in (a,b) — the three-term recurrence breaks down for the
/// shifted negative parameters the denominator polynomial needs, the sum
/// never does. Degree is exactly n unless the leading coefficient vanishes
/// at degenerate parameter combinations (visible as poly.degree() < n).
template <class T>
Polynomial<T> jacobi_poly(int n, const JacobiParams<T>& p) {
    if (n < 0) return Polynomial<T>();
    std::vector<Polynomial<T>> pow_minus(static_cast<std::size_t>(n) + 1);
    std::vector<Polynomial<T>> pow_plus(static_cast<std::size_t>(n) + 1);
    pow_minus[0] = pow_plus[0] = Polynomial<T>::constant(T(1));
    const Polynomial<T> xm1({T(-1), T(1)});
    const Polynomial<T> xp1({T(1), T(1)});
    for (int k = 1; k <= n; ++k) {
        pow_minus[static_cast<std::size_t>(k)] = pow_minus[static_cast<std::size_t>(k - 1)] * xm1;
        pow_plus[static_cast<std::size_t>(k)] = pow_plus[static_cast<std::size_t>(k - 1)] * xp1;
    }
    Polynomial<T> sum;
    for (int k = 0; k <= n; ++k) {
        T c = generalized_binomial(T(p.a + T(n)), n - k) * generalized_binomial(T(p.b + T(n)), k);
        if (c == T(0)) continue;
        sum += c * (pow_minus[static_cast<std::size_t>(k)] * pow_plus[static_cast<std::size_t>(n - k)]);
    }
    T scale(1);
    for (int i = 0; i < n; ++i) scale = scale * T(2);
    return sum * (T(1) / scale);
}

template <class T>
T jacobi_eval(int n, const JacobiParams<T>& p, const T& x) {
    return jacobi_poly(n, p)(x);
}

/// Three-term recurrence construction, valid cross-check for a,b > -1 only
/// (recurrence denominators vanish outside the classical range).
template <class T>
Polynomial<T> jacobi_poly_recurrence(int n, const JacobiParams<T>& p) {
    const T &a = p.a, &b = p.b;
    Polynomial<T> prev = Polynomial<T>::constant(T(1));
    if (n == 0) return prev;
    Polynomial<T> cur({(a - b) / T(2), (a + b + T(2)) / T(2)});
    for (int k = 2; k <= n; ++k) {
        const T kk(k);
        const T s = T(2) * kk + a + b;
        const T c0 = T(2) * kk * (kk + a + b) * (s - T(2));
        Polynomial<T> next = (s - T(1)) * Polynomial<T>({a * a - b * b, s * (s - T(2))}) * cur
                             - T(2) * (kk + a - T(1)) * (kk + b - T(1)) * s * prev;
        prev = std::move(cur);
        cur = next * (T(1) / c0);
    }
    return cur;
}

/// Max |coefficient| of d/dx P_n^{(a,b)} - ((n+a+b+1)/2) P_{n-1}^{(a+1,b+1)};
/// identically zero for every (a,b).
template <class T>
T jacobi_derivative_identity_discrepancy(int n, const JacobiParams<T>& p) {
    const Polynomial<T> lhs = jacobi_poly(n, p).derivative();
    const Polynomial<T> rhs =
        ((T(n) + p.a + p.b + T(1)) / T(2)) * jacobi_poly(n - 1, JacobiParams<T>{p.a + T(1), p.b + T(1)});
    const Polynomial<T> diff = lhs - rhs;
    T worst(0);
    for (const auto& c : diff.coeffs()) {
        T m = c < T(0) ? T(-c) : c;
        if (worst < m) worst = m;
    }
    return worst;
}

/// Gauss-Jacobi rule for the weight (1-x)^a (1+x)^b on (-1,1): exactly N
/// nodes, strictly increasing in (-1,1), positive weights summing to the
/// zeroth moment. Exact for polynomials of degree <= 2N-1.
struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
    JacobiParams<double> params;
    int order = 0;

    /// Fixed ascending-node accumulation for reproducibility.
    double integrate(const std::function<double(double)>& f) const {
        double acc = 0.0;
        for (std::size_t i = 0; i < nodes.size(); ++i) acc += weights[i] * f(nodes[i]);
        return acc;
    }
};

/// Zeroth moment of (1-x)^a(1+x)^b: 2^{a+b+1} B(a+1, b+1).
double jacobi_weight_moment0(const JacobiParams<double>& p);

/// Golub-Welsch: eigen-decomposition of the symmetric tridiagonal recurrence
/// matrix of the monic Jacobi orthogonal polynomials. Requires a,b > -1.
QuadratureRule gauss_jacobi_rule(const JacobiParams<double>& p, int n);

}  // namespace xjacobi
