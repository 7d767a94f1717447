#include "xjacobi/diffop.hpp"

#include "rational_linalg.hpp"

#include <cmath>

namespace xjacobi {

namespace {

// (1+x)q' + beta*q, the bracket of the exceptional term.
Polynomial<Rational> f_condition_numerator(const Rational& beta, const Polynomial<Rational>& q) {
    const Polynomial<Rational> one_plus_x({Rational(1), Rational(1)});
    return one_plus_x * q.derivative() + beta * q;
}

}  // namespace

double apply_T_pointwise(const ExceptionalFamily& fam, double f, double df, double ddf, double x) {
    if (!(x > -1.0 && x < 1.0)) throw std::domain_error("apply_T_pointwise: x must lie in (-1,1)");
    const double a = fam.alpha_d();
    const double b = fam.beta_d();
    const double m = fam.m();
    const double log_deriv = fam.denominator_derivative_f()(x) / fam.denominator_f()(x);
    const double one_minus_x2 = 1.0 - x * x;
    return one_minus_x2 * ddf + (b - a - (a + b + 2.0) * x - 2.0 * one_minus_x2 * log_deriv) * df +
           (m * (a - b - m + 1.0) - 2.0 * b * (1.0 - x) * log_deriv) * f;
}

double apply_T_pointwise(const ExceptionalFamily& fam, const FunctionBundle& fb, double x) {
    return apply_T_pointwise(fam, fb.f(x), fb.df(x), fb.ddf(x), x);
}

Polynomial<Rational> f_condition_residual(const ExceptionalFamily& fam,
                                          const Polynomial<Rational>& q) {
    return f_condition_numerator(fam.params().beta, q).divrem(fam.denominator()).remainder;
}

bool in_F_space(const ExceptionalFamily& fam, const Polynomial<Rational>& q) {
    return f_condition_residual(fam, q).is_zero();
}

bool in_F_space_at_roots(const ExceptionalFamily& fam, const Polynomial<double>& q, double tol) {
    const Polynomial<double> one_plus_x({1.0, 1.0});
    const Polynomial<double> cond_poly = one_plus_x * q.derivative() + fam.beta_d() * q;
    for (const auto& z : fam.denominator_roots()) {
        std::complex<double> value = 0.0;
        double scale = 0.0;
        double zpow = 1.0;
        const double az = std::max(std::abs(z), 1.0);
        for (int j = cond_poly.degree(); j >= 0; --j) value = value * z + cond_poly.coeff(j);
        for (int j = 0; j <= cond_poly.degree(); ++j) {
            scale += std::fabs(cond_poly.coeff(j)) * zpow;
            zpow *= az;
        }
        if (std::abs(value) >= tol * std::max(scale, 1.0)) return false;
    }
    return true;
}

Polynomial<Rational> apply_T_polynomial(const ExceptionalFamily& fam,
                                        const Polynomial<Rational>& y) {
    const Rational& a = fam.params().alpha;
    const Rational& b = fam.params().beta;
    const int m = fam.params().m;

    const auto division = f_condition_numerator(b, y).divrem(fam.denominator());
    if (!division.remainder.is_zero())
        throw NotInvariant("polynomial is not in the invariant F-space: the exceptional term "
                           "leaves a nonzero remainder");

    const Polynomial<Rational> one_minus_x2({Rational(1), Rational(0), Rational(-1)});
    const Polynomial<Rational> first_coeff({b - a, -(a + b + 2)});
    const Polynomial<Rational> one_minus_x({Rational(1), Rational(-1)});
    const Rational constant = Rational(m) * (a - b - m + 1);

    return one_minus_x2 * y.derivative().derivative() + first_coeff * y.derivative() +
           constant * y -
           Rational(2) * (one_minus_x * fam.denominator_derivative() * division.quotient);
}

int f_space_dimension(const ExceptionalFamily& fam, int max_degree) {
    const int cols = max_degree + 1;
    const int rows = std::max(fam.denominator().degree(), 0);
    detail::RatMatrix system(static_cast<std::size_t>(rows),
                             detail::RatVector(static_cast<std::size_t>(cols), Rational(0)));
    for (int j = 0; j < cols; ++j) {
        const Polynomial<Rational> rem = f_condition_residual(fam, Polynomial<Rational>::monomial(j));
        for (int r = 0; r < rows; ++r) system[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] = rem.coeff(r);
    }
    return cols - detail::rank(std::move(system));
}

double sesquilinear_form(const ExceptionalFamily& fam, double f, double df, double g, double dg,
                         double x) {
    const double den = fam.denominator_f()(x);
    return std::pow(1.0 - x, fam.alpha_d() + 1.0) * std::pow(1.0 + x, fam.beta_d() + 1.0) /
           (den * den) * (df * g - f * dg);
}

BoundaryVerdict boundary_functional(const ExceptionalFamily& fam,
                                    const std::function<double(double)>& df, Endpoint e) {
    const double exponent = (e == Endpoint::plus_one) ? fam.alpha_d() : fam.beta_d();
    auto g = [&](double x) {
        const double factor = (e == Endpoint::plus_one) ? std::pow(1.0 - x, exponent + 1.0)
                                                        : std::pow(1.0 + x, exponent + 1.0);
        return factor * df(x);
    };
    const LimitEstimate limit = dyadic_endpoint_limit(g, e);
    if (!limit.converged)
        throw ConvergenceError("boundary_functional: dyadic estimates did not stabilize");
    BoundaryVerdict verdict;
    verdict.endpoint = e;
    verdict.functional_value = limit.value;
    verdict.required_zero = exponent < 1.0;  // limit-circle endpoints carry the condition
    return verdict;
}

double greens_residual(const ExceptionalFamily& fam, const FunctionBundle& fb,
                       const FunctionBundle& gb, int quad_order) {
    if (quad_order < 10) throw std::invalid_argument("greens_residual: quad_order must be >= 10");

    auto lhs_integrand = [&](double x) {
        return apply_T_pointwise(fam, fb, x) * gb.f(x) * fam.weight(x);
    };
    auto rhs_integrand = [&](double x) {
        return fb.f(x) * apply_T_pointwise(fam, gb, x) * fam.weight(x);
    };
    // Cauchy-Schwarz magnitude reference (the squared integrands are smooth)
    // so near-zero integrals for orthogonal pairs still converge.
    const double eps = 1e-8;
    auto sq_norm = [&](auto&& h) {
        return integrate_refined([&](double x) { const double v = h(x); return v * v * fam.weight(x); },
                                 eps, quad_order, 1e-6, 512, 1.0);
    };
    const double norm_tf = std::sqrt(std::fabs(sq_norm([&](double x) { return apply_T_pointwise(fam, fb, x); })));
    const double norm_tg = std::sqrt(std::fabs(sq_norm([&](double x) { return apply_T_pointwise(fam, gb, x); })));
    const double norm_f = std::sqrt(std::fabs(sq_norm([&](double x) { return fb.f(x); })));
    const double norm_g = std::sqrt(std::fabs(sq_norm([&](double x) { return gb.f(x); })));
    const double scale = std::max({norm_tf * norm_g, norm_f * norm_tg, 1e-30});

    const double lhs = integrate_refined(lhs_integrand, eps, quad_order, 1e-12, 1024, scale);
    const double rhs_int = integrate_refined(rhs_integrand, eps, quad_order, 1e-12, 1024, scale);

    auto form = [&](double x) {
        return sesquilinear_form(fam, fb.f(x), fb.df(x), gb.f(x), gb.df(x), x);
    };
    const LimitEstimate at_plus = dyadic_endpoint_limit(form, Endpoint::plus_one);
    const LimitEstimate at_minus = dyadic_endpoint_limit(form, Endpoint::minus_one);
    if (!at_plus.converged || !at_minus.converged)
        throw ConvergenceError("greens_residual: boundary form limits did not stabilize");

    return std::fabs(lhs - (at_plus.value - at_minus.value) - rhs_int);
}

}  // namespace xjacobi
