#include "xjacobi/scalar.hpp"

#include <cctype>

namespace xjacobi {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

std::optional<Rational> parse_rational(std::string_view s) {
    if (s.empty()) return std::nullopt;
    bool negative = false;
    if (s.front() == '+' || s.front() == '-') {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (s.empty()) return std::nullopt;

    const auto slash = s.find('/');
    const auto dot = s.find('.');
    if (slash != std::string_view::npos && dot != std::string_view::npos) return std::nullopt;

    Rational value;
    if (slash != std::string_view::npos) {
        const auto num = s.substr(0, slash);
        const auto den = s.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) return std::nullopt;
        BigInt d(std::string(den));
        if (d == 0) return std::nullopt;
        value = Rational(BigInt(std::string(num)), d);
    } else if (dot != std::string_view::npos) {
        const auto whole = s.substr(0, dot);
        const auto frac = s.substr(dot + 1);
        if (whole.empty() && frac.empty()) return std::nullopt;
        if (!whole.empty() && !all_digits(whole)) return std::nullopt;
        if (!frac.empty() && !all_digits(frac)) return std::nullopt;
        BigInt scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
        BigInt digits(whole.empty() ? std::string("0") : std::string(whole));
        digits *= scale;
        if (!frac.empty()) digits += BigInt(std::string(frac));
        value = Rational(digits, scale);
    } else {
        if (!all_digits(s)) return std::nullopt;
        value = Rational(BigInt(std::string(s)));
    }
    if (negative) value = -value;
    return value;
}

std::string rational_to_string(const Rational& r) {
    const BigInt num = boost::multiprecision::numerator(r);
    const BigInt den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

}  // namespace xjacobi
