#pragma once

#include "xjacobi/scalar.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace xjacobi {

/// Dense univariate polynomial, coefficients stored low-to-high with no
/// trailing zeros. The zero polynomial has an empty coefficient vector and
/// degree -1. The scalar type selects the computation mode: Rational for
/// exact arithmetic, double for floating work. Instances are plain values;
/// sharing read-only across threads is safe.
template <class T>
class Polynomial {
public:
    Polynomial() = default;

    explicit Polynomial(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

    static Polynomial constant(T c) { return Polynomial(std::vector<T>{std::move(c)}); }

    static Polynomial monomial(int degree, T scale = T(1)) {
        std::vector<T> c(static_cast<std::size_t>(degree) + 1, T(0));
        c.back() = std::move(scale);
        return Polynomial(std::move(c));
    }

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    bool is_zero() const { return coeffs_.empty(); }

    /// Coefficient of x^k; zero outside the stored range.
    T coeff(int k) const {
        if (k < 0 || k > degree()) return T(0);
        return coeffs_[static_cast<std::size_t>(k)];
    }

    const std::vector<T>& coeffs() const { return coeffs_; }

    const T& leading() const {
        if (is_zero()) throw std::domain_error("leading coefficient of zero polynomial");
        return coeffs_.back();
    }

    Polynomial operator-() const {
        Polynomial r(*this);
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    Polynomial& operator+=(const Polynomial& rhs) {
        if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), T(0));
        for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
        normalize();
        return *this;
    }

    Polynomial& operator-=(const Polynomial& rhs) {
        if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), T(0));
        for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
        normalize();
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return Polynomial();
        std::vector<T> prod(a.coeffs_.size() + b.coeffs_.size() - 1, T(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return Polynomial(std::move(prod));
    }

    Polynomial& operator*=(const Polynomial& rhs) { return *this = *this * rhs; }

    friend Polynomial operator*(Polynomial a, const T& s) {
        for (auto& c : a.coeffs_) c = c * s;
        a.normalize();
        return a;
    }
    friend Polynomial operator*(const T& s, Polynomial a) { return std::move(a) * s; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    /// Formal derivative; degree drops by exactly one for nonconstant input.
    Polynomial derivative() const {
        if (degree() < 1) return Polynomial();
        std::vector<T> d(coeffs_.size() - 1);
        for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * T(static_cast<int>(i));
        return Polynomial(std::move(d));
    }

    /// Horner evaluation; exact in rational mode.
    T operator()(const T& x) const {
        T acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    struct DivRem {
        Polynomial quotient;
        Polynomial remainder;
    };

    /// Long division: *this = q*divisor + r with deg r < deg divisor.
    /// Exact in rational mode. Throws on a zero divisor.
    DivRem divrem(const Polynomial& divisor) const {
        if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
        if (degree() < divisor.degree()) return {Polynomial(), *this};
        std::vector<T> rem = coeffs_;
        const int dq = degree() - divisor.degree();
        std::vector<T> quot(static_cast<std::size_t>(dq) + 1, T(0));
        const T& lead = divisor.leading();
        for (int k = dq; k >= 0; --k) {
            T factor = rem[static_cast<std::size_t>(k + divisor.degree())] / lead;
            quot[static_cast<std::size_t>(k)] = factor;
            if (factor == T(0)) continue;
            for (int j = 0; j <= divisor.degree(); ++j)
                rem[static_cast<std::size_t>(k + j)] -= factor * divisor.coeffs_[static_cast<std::size_t>(j)];
        }
        rem.resize(static_cast<std::size_t>(std::max(divisor.degree(), 0)));
        return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
    }

private:
    void normalize() {
        while (!coeffs_.empty() && coeffs_.back() == T(0)) coeffs_.pop_back();
    }

    std::vector<T> coeffs_;
};

inline Polynomial<double> to_double(const Polynomial<Rational>& p) {
    std::vector<double> c;
    c.reserve(p.coeffs().size());
    for (const auto& q : p.coeffs()) c.push_back(to_double(q));
    return Polynomial<double>(std::move(c));
}

}  // namespace xjacobi
