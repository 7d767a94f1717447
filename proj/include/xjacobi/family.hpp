#pragma once

#include "xjacobi/jacobi.hpp"
#include "xjacobi/polynomial.hpp"

#include <complex>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

namespace xjacobi {

/// Parameter triple (alpha, beta, m). Admissibility:
///   alpha, beta > -1,
///   alpha+1-m-beta not an integer in {0, ..., m-1},
///   sgn(alpha+1-m) = sgn(beta), with a zero sign rejected outright.
struct XParams {
    Rational alpha;
    Rational beta;
    int m = 1;
};

enum class ParamViolation {
    none,
    range_violation,       // alpha or beta <= -1, or m < 1
    forbidden_difference,  // alpha+1-m-beta in {0, ..., m-1}
    sign_mismatch,         // sgn(alpha+1-m) != sgn(beta), or either sign is zero
};

struct ValidationReport {
    bool valid = false;
    ParamViolation violation = ParamViolation::none;
    std::string detail;  // names the violated clause
};

ValidationReport validate_params(const Rational& alpha, const Rational& beta, int m);

const char* to_string(ParamViolation v);

class InvalidParams : public std::invalid_argument {
public:
    InvalidParams(ParamViolation v, const std::string& detail)
        : std::invalid_argument(detail), violation_(v) {}
    ParamViolation violation() const { return violation_; }

private:
    ParamViolation violation_;
};

/// One exceptional family: the denominator polynomial P_m^{(-alpha-1,beta-1)},
/// its (polished) roots, the weight, the family members and their eigenvalues.
/// Immutable after construction except for the guarded member cache; all
/// queries are const and safe to call concurrently.
class ExceptionalFamily {
public:
    struct Diagnostics {
        ValidationReport validation;
        bool denominator_full_degree = false;  // deg == m
        bool roots_off_interval = false;       // no root with Re in [-1,1], |Im| < 1e-10
        bool roots_simple = false;             // pairwise separation > 1e-10
        bool structurally_sound() const {
            return denominator_full_degree && roots_off_interval && roots_simple;
        }
    };

    /// Validates and builds; throws InvalidParams or, when the denominator
    /// invariants fail (degree m, no roots in [-1,1], simple roots),
    /// std::runtime_error — under valid parameters that indicates an
    /// internal inconsistency.
    static ExceptionalFamily make(const Rational& alpha, const Rational& beta, int m);

    /// Builds without enforcing admissibility or the degree invariant,
    /// recording every verdict in diagnostics(). Still refuses a denominator
    /// with a root in [-1,1] (the expression would be singular on the
    /// interval). Intended for probing parameter sets outside the validated
    /// region.
    static ExceptionalFamily make_unchecked(const Rational& alpha, const Rational& beta, int m);

    const XParams& params() const { return params_; }
    const Diagnostics& diagnostics() const { return diag_; }

    double alpha_d() const { return to_double(params_.alpha); }
    double beta_d() const { return to_double(params_.beta); }
    int m() const { return params_.m; }

    const Polynomial<Rational>& denominator() const { return denom_; }
    const Polynomial<Rational>& denominator_derivative() const { return denom_deriv_; }
    const Polynomial<double>& denominator_f() const { return denom_d_; }
    const Polynomial<double>& denominator_derivative_f() const { return denom_deriv_d_; }
    const std::vector<std::complex<double>>& denominator_roots() const { return roots_; }

    /// min |denom| over a 10^4-point grid on [-1,1]; positive for every
    /// structurally sound family.
    double denominator_min_abs() const;

    /// W(x) = (1-x)^alpha (1+x)^beta / denom(x)^2, strictly positive on (-1,1).
    double weight(double x) const;

    /// Family member of degree n >= m, built from the two-term classical
    /// Jacobi combination; P_{n-m-1} of negative degree is the zero
    /// polynomial (the n = m member keeps only the second term). Cached.
    const Polynomial<Rational>& exceptional(int n) const;

    /// lambda_n = -(n-m)(1+alpha+beta+n-m); zero iff n = m.
    Rational eigenvalue(int n) const;

private:
    ExceptionalFamily() = default;
    static ExceptionalFamily build(const Rational& alpha, const Rational& beta, int m);

    XParams params_;
    Diagnostics diag_;
    Polynomial<Rational> denom_;
    Polynomial<Rational> denom_deriv_;
    Polynomial<double> denom_d_;
    Polynomial<double> denom_deriv_d_;
    std::vector<std::complex<double>> roots_;

    struct Cache {
        std::mutex mutex;
        std::map<int, Polynomial<Rational>> members;
    };
    std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

/// Roots of a float polynomial via balanced companion matrix eigenvalues,
/// each polished by a few complex Newton steps.
std::vector<std::complex<double>> polynomial_roots(const Polynomial<double>& p);

}  // namespace xjacobi
