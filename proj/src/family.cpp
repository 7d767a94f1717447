#include "xjacobi/family.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace xjacobi {

namespace {

int sign_of(const Rational& r) {
    if (r > 0) return 1;
    if (r < 0) return -1;
    return 0;
}

std::complex<double> horner(const Polynomial<double>& p, std::complex<double> z) {
    std::complex<double> acc = 0.0;
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * z + *it;
    return acc;
}

}  // namespace

const char* to_string(ParamViolation v) {
    switch (v) {
        case ParamViolation::none: return "none";
        case ParamViolation::range_violation: return "RangeViolation";
        case ParamViolation::forbidden_difference: return "ForbiddenDifference";
        case ParamViolation::sign_mismatch: return "SignMismatch";
    }
    return "unknown";
}

ValidationReport validate_params(const Rational& alpha, const Rational& beta, int m) {
    ValidationReport rep;
    if (m < 1) {
        rep.violation = ParamViolation::range_violation;
        rep.detail = "m must be a positive integer";
        return rep;
    }
    if (!(alpha > -1) || !(beta > -1)) {
        rep.violation = ParamViolation::range_violation;
        rep.detail = "alpha and beta must exceed -1";
        return rep;
    }
    const Rational diff = alpha + 1 - m - beta;
    if (boost::multiprecision::denominator(diff) == 1) {
        const BigInt d = boost::multiprecision::numerator(diff);
        if (d >= 0 && d <= m - 1) {
            std::ostringstream os;
            os << "alpha+1-m-beta = " << d << " lies in {0,...," << (m - 1) << "}";
            rep.violation = ParamViolation::forbidden_difference;
            rep.detail = os.str();
            return rep;
        }
    }
    const int sa = sign_of(alpha + 1 - m);
    const int sb = sign_of(beta);
    if (sa == 0 || sb == 0 || sa != sb) {
        rep.violation = ParamViolation::sign_mismatch;
        rep.detail = (sa == 0 || sb == 0)
                         ? "sgn(alpha+1-m) or sgn(beta) vanishes; zero sign is rejected"
                         : "sgn(alpha+1-m) differs from sgn(beta)";
        return rep;
    }
    rep.valid = true;
    return rep;
}

std::vector<std::complex<double>> polynomial_roots(const Polynomial<double>& p) {
    const int n = p.degree();
    if (n < 1) return {};
    Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
    const double lead = p.leading();
    for (int i = 0; i < n; ++i) companion(i, n - 1) = -p.coeff(i) / lead;
    for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;

    Eigen::EigenSolver<Eigen::MatrixXd> eig(companion);
    const Polynomial<double> dp = p.derivative();
    std::vector<std::complex<double>> roots;
    roots.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        std::complex<double> z = eig.eigenvalues()(i);
        for (int it = 0; it < 8; ++it) {
            const std::complex<double> f = horner(p, z);
            const std::complex<double> d = horner(dp, z);
            if (std::abs(d) == 0.0) break;
            const std::complex<double> step = f / d;
            z -= step;
            if (std::abs(step) < 1e-15 * (1.0 + std::abs(z))) break;
        }
        roots.push_back(z);
    }
    std::sort(roots.begin(), roots.end(), [](const auto& u, const auto& v) {
        return u.real() != v.real() ? u.real() < v.real() : u.imag() < v.imag();
    });
    return roots;
}

ExceptionalFamily ExceptionalFamily::build(const Rational& alpha, const Rational& beta, int m) {
    ExceptionalFamily fam;
    fam.params_ = XParams{alpha, beta, m};
    fam.diag_.validation = validate_params(alpha, beta, m);
    fam.denom_ = jacobi_poly(m, JacobiParams<Rational>{-alpha - 1, beta - 1});
    if (fam.denom_.is_zero())
        throw std::runtime_error("denominator polynomial vanished identically");
    fam.denom_deriv_ = fam.denom_.derivative();
    fam.denom_d_ = to_double(fam.denom_);
    fam.denom_deriv_d_ = to_double(fam.denom_deriv_);
    fam.roots_ = polynomial_roots(fam.denom_d_);

    fam.diag_.denominator_full_degree = fam.denom_.degree() == m;
    fam.diag_.roots_off_interval = true;
    for (const auto& z : fam.roots_) {
        if (std::fabs(z.imag()) < 1e-10 && z.real() >= -1.0 && z.real() <= 1.0)
            fam.diag_.roots_off_interval = false;
    }
    fam.diag_.roots_simple = true;
    for (std::size_t i = 0; i < fam.roots_.size(); ++i)
        for (std::size_t j = i + 1; j < fam.roots_.size(); ++j)
            if (std::abs(fam.roots_[i] - fam.roots_[j]) <= 1e-10) fam.diag_.roots_simple = false;
    return fam;
}

ExceptionalFamily ExceptionalFamily::make(const Rational& alpha, const Rational& beta, int m) {
    const ValidationReport rep = validate_params(alpha, beta, m);
    if (!rep.valid) throw InvalidParams(rep.violation, rep.detail);
    ExceptionalFamily fam = build(alpha, beta, m);
    // e-conditions are supposed to guarantee all three; a failure here means
    // the construction itself is inconsistent.
    if (!fam.diag_.denominator_full_degree)
        throw std::runtime_error("validated parameters produced a degenerate denominator degree");
    if (!fam.diag_.roots_off_interval)
        throw std::runtime_error("validated parameters produced a denominator root in [-1,1]");
    if (!fam.diag_.roots_simple)
        throw std::runtime_error("validated parameters produced a multiple denominator root");
    return fam;
}

ExceptionalFamily ExceptionalFamily::make_unchecked(const Rational& alpha, const Rational& beta,
                                                    int m) {
    ExceptionalFamily fam = build(alpha, beta, m);
    if (!fam.diag_.roots_off_interval)
        throw std::runtime_error("denominator has a root in [-1,1]; expression is singular");
    return fam;
}

double ExceptionalFamily::denominator_min_abs() const {
    const int samples = 10000;
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i <= samples; ++i) {
        const double x = -1.0 + 2.0 * i / samples;
        best = std::min(best, std::fabs(denom_d_(x)));
    }
    return best;
}

double ExceptionalFamily::weight(double x) const {
    if (!(x > -1.0 && x < 1.0)) throw std::domain_error("weight: x must lie in (-1,1)");
    const double d = denom_d_(x);
    return std::pow(1.0 - x, alpha_d()) * std::pow(1.0 + x, beta_d()) / (d * d);
}

const Polynomial<Rational>& ExceptionalFamily::exceptional(int n) const {
    if (n < params_.m) throw std::invalid_argument("exceptional member needs n >= m");
    std::lock_guard<std::mutex> lock(cache_->mutex);
    auto it = cache_->members.find(n);
    if (it != cache_->members.end()) return it->second;

    const Rational& a = params_.alpha;
    const Rational& b = params_.beta;
    const int m = params_.m;
    const Rational pref = Rational((m % 2 == 0) ? 1 : -1) / (a + 1 + n - m);
    const Rational c1 = Rational(a + b + n - m + 1) / 2;
    const Rational c2 = a - m + 1;
    const Polynomial<Rational> x_minus_1({Rational(-1), Rational(1)});
    Polynomial<Rational> term1 =
        c1 * (x_minus_1 * denom_ * jacobi_poly(n - m - 1, JacobiParams<Rational>{a + 2, b}));
    Polynomial<Rational> term2 = c2 * (jacobi_poly(m, JacobiParams<Rational>{-a - 2, b}) *
                                       jacobi_poly(n - m, JacobiParams<Rational>{a + 1, b - 1}));
    Polynomial<Rational> member = pref * (term1 + term2);
    auto [pos, inserted] = cache_->members.emplace(n, std::move(member));
    return pos->second;
}

Rational ExceptionalFamily::eigenvalue(int n) const {
    if (n < params_.m) throw std::invalid_argument("eigenvalue needs n >= m");
    const Rational k(n - params_.m);
    return -k * (1 + params_.alpha + params_.beta + k);
}

}  // namespace xjacobi
