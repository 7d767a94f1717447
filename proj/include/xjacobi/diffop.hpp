#pragma once

#include "xjacobi/family.hpp"
#include "xjacobi/integrate.hpp"

#include <functional>

namespace xjacobi {

/// A twice-differentiable test function with its first two derivatives.
struct FunctionBundle {
    std::function<double(double)> f;
    std::function<double(double)> df;
    std::function<double(double)> ddf;
};

/// Signals that the expression does not map the given polynomial to a
/// polynomial: (1+x)y' + beta*y is not divisible by the denominator, i.e.
/// y lies outside the invariant F-space.
class NotInvariant : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// T[f](x) assembled exactly as the expression is written, with
/// (log denom)' = denom'/denom:
///
///   (1-x^2) f'' + (beta - alpha - (alpha+beta+2)x - 2(1-x^2) denom'/denom) f'
///   + (m(alpha-beta-m+1) - 2 beta (1-x) denom'/denom) f .
double apply_T_pointwise(const ExceptionalFamily& fam, double f, double df, double ddf, double x);

double apply_T_pointwise(const ExceptionalFamily& fam, const FunctionBundle& fb, double x);

/// Remainder of (1+x)q' + beta*q modulo the denominator; the zero
/// polynomial exactly when q satisfies the root conditions
/// (1+x_i)q'(x_i) + beta q(x_i) = 0 at every (simple) denominator root.
Polynomial<Rational> f_condition_residual(const ExceptionalFamily& fam,
                                          const Polynomial<Rational>& q);

/// Exact-route F-space membership (divisibility form of the root conditions).
bool in_F_space(const ExceptionalFamily& fam, const Polynomial<Rational>& q);

/// Float-route F-space membership: evaluates the root conditions at the
/// polished denominator roots, |.| < tol * scale with a coefficient-derived
/// scale per root.
bool in_F_space_at_roots(const ExceptionalFamily& fam, const Polynomial<double>& q,
                         double tol = 1e-10);

/// T applied to a polynomial by exact division (never by floating
/// cancellation): the non-polynomial term -2(1-x)(denom'/denom)[(1+x)y'+beta y]
/// is divided out exactly, and a nonzero remainder throws NotInvariant.
Polynomial<Rational> apply_T_polynomial(const ExceptionalFamily& fam,
                                        const Polynomial<Rational>& y);

/// Exact dimension of F ∩ P_D: (D+1) minus the rank of the F-condition
/// system on the monomial basis of P_D.
int f_space_dimension(const ExceptionalFamily& fam, int max_degree);

/// [f,g](x) = (1-x)^{alpha+1}(1+x)^{beta+1}/denom(x)^2 (f'(x)g(x) - f(x)g'(x)).
double sesquilinear_form(const ExceptionalFamily& fam, double f, double df, double g, double dg,
                         double x);

struct BoundaryVerdict {
    Endpoint endpoint;
    double functional_value = 0.0;  // limit of (1 -+ x)^{exp+1} f'(x)
    bool required_zero = false;     // true when the endpoint carries a boundary condition
};

/// Estimates lim (1-x)^{alpha+1} f'(x) at +1 (resp. (1+x)^{beta+1} f'(x) at
/// -1) along the dyadic sequence x_k = +-(1 - 2^-k), k = 10..40, requiring
/// the last three estimates to agree to 1e-8 relative. Throws
/// ConvergenceError if the estimates never stabilize. required_zero follows
/// the boundary-condition case table: a condition is imposed exactly at
/// limit-circle endpoints (exponent < 1).
BoundaryVerdict boundary_functional(const ExceptionalFamily& fam,
                                    const std::function<double(double)>& df, Endpoint e);

/// | LHS - RHS | of Green's formula
///   int T[f] g W = [f,g]|_{-1}^{1} + int f T[g] W
/// with both integrals on [-1+eps, 1-eps] (eps = 1e-8, panels refined toward
/// the endpoints) and the boundary terms taken as dyadic endpoint limits of
/// the sesquilinear form.
double greens_residual(const ExceptionalFamily& fam, const FunctionBundle& fb,
                       const FunctionBundle& gb, int quad_order = 16);

}  // namespace xjacobi
