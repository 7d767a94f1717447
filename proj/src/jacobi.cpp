#include "xjacobi/jacobi.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>

namespace xjacobi {

double jacobi_weight_moment0(const JacobiParams<double>& p) {
    return std::pow(2.0, p.a + p.b + 1.0) *
           std::exp(std::lgamma(p.a + 1.0) + std::lgamma(p.b + 1.0) - std::lgamma(p.a + p.b + 2.0));
}

QuadratureRule gauss_jacobi_rule(const JacobiParams<double>& p, int n) {
    if (!(p.a > -1.0) || !(p.b > -1.0))
        throw std::domain_error("gauss_jacobi_rule: parameters must exceed -1");
    if (n < 1) throw std::invalid_argument("gauss_jacobi_rule: order must be >= 1");

    const double a = p.a, b = p.b;
    Eigen::VectorXd diag(n), sub(std::max(n - 1, 0));
    diag(0) = (b - a) / (a + b + 2.0);
    for (int k = 1; k < n; ++k) {
        const double s = 2.0 * k + a + b;
        diag(k) = (b * b - a * a) / (s * (s + 2.0));
        double beta_k;
        if (k == 1)
            beta_k = 4.0 * (a + 1.0) * (b + 1.0) / ((a + b + 2.0) * (a + b + 2.0) * (a + b + 3.0));
        else
            beta_k = 4.0 * k * (k + a) * (k + b) * (k + a + b) / (s * s * (s + 1.0) * (s - 1.0));
        sub(k - 1) = std::sqrt(beta_k);
    }

    QuadratureRule rule;
    rule.params = p;
    rule.order = n;
    rule.nodes.resize(static_cast<std::size_t>(n));
    rule.weights.resize(static_cast<std::size_t>(n));

    const double mu0 = jacobi_weight_moment0(p);
    if (n == 1) {
        rule.nodes[0] = diag(0);
        rule.weights[0] = mu0;
        return rule;
    }

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig;
    eig.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
    if (eig.info() != Eigen::Success)
        throw std::runtime_error("gauss_jacobi_rule: tridiagonal eigensolve failed");

    // Eigen returns ascending eigenvalues, so the nodes come out sorted.
    for (int i = 0; i < n; ++i) {
        rule.nodes[static_cast<std::size_t>(i)] = eig.eigenvalues()(i);
        const double v0 = eig.eigenvectors()(0, i);
        rule.weights[static_cast<std::size_t>(i)] = mu0 * v0 * v0;
    }
    return rule;
}

}  // namespace xjacobi
