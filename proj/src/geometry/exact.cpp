#include "kilogram/geometry/exact.hpp"

#include <charconv>
#include <cmath>
#include <numeric>

namespace kilogram::geometry {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticOverflow("rational multiplication overflow");
    return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw ArithmeticOverflow("rational addition overflow");
    return r;
}

std::int64_t parse_int(std::string_view s) {
    std::int64_t v = 0;
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    const auto* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(s.data(), end, v);
    if (s.empty() || ec != std::errc() || ptr != end) {
        throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
    }
    return v;
}

}  // namespace

Rational::Rational(std::int64_t n, std::int64_t d) {
    if (d == 0) throw std::domain_error("zero denominator");
    if (d < 0) {
        if (n == INT64_MIN || d == INT64_MIN) throw ArithmeticOverflow("rational negation overflow");
        n = -n;
        d = -d;
    }
    const std::int64_t g = std::gcd(n, d);
    num_ = g ? n / g : 0;
    den_ = g ? d / g : 1;
}

Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

std::string Rational::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational operator+(const Rational& a, const Rational& b) {
    const std::int64_t g = std::gcd(a.den_, b.den_);
    const std::int64_t lhs = checked_mul(a.num_, b.den_ / g);
    const std::int64_t rhs = checked_mul(b.num_, a.den_ / g);
    return Rational(checked_add(lhs, rhs), checked_mul(a.den_, b.den_ / g));
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
    const std::int64_t g1 = std::gcd(a.num_, b.den_);
    const std::int64_t g2 = std::gcd(b.num_, a.den_);
    const std::int64_t n = checked_mul(g1 ? a.num_ / g1 : 0, g2 ? b.num_ / g2 : 0);
    const std::int64_t d = checked_mul(g2 ? a.den_ / g2 : a.den_, g1 ? b.den_ / g1 : b.den_);
    return Rational(n, d);
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("division by zero");
    return a * Rational(b.den_, b.num_);
}

Rational Rational::operator-() const {
    if (num_ == INT64_MIN) throw ArithmeticOverflow("rational negation overflow");
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
    const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
    return lhs <=> rhs;
}

int ExactCoord::sign() const {
    const int sa = a_.sign();
    const int sb = b_.sign();
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // Opposite signs: compare a^2 with 2 b^2.
    const Rational a2 = a_ * a_;
    const Rational b2 = Rational(2) * b_ * b_;
    const auto cmp = a2 <=> b2;
    if (cmp == 0) return 0;  // unreachable for rational a, b since sqrt(2) is irrational
    return cmp > 0 ? sa : sb;
}

double ExactCoord::to_double() const { return a_.to_double() + b_.to_double() * std::sqrt(2.0); }

ExactCoord operator/(const ExactCoord& x, const ExactCoord& y) {
    // 1 / (a + b r) = (a - b r) / (a^2 - 2 b^2)
    const Rational norm = y.a_ * y.a_ - Rational(2) * y.b_ * y.b_;
    if (norm.is_zero()) throw std::domain_error("division by zero");
    const ExactCoord conj{y.a_, -y.b_};
    const ExactCoord p = x * conj;
    return {p.a_ / norm, p.b_ / norm};
}

std::string ExactCoord::str() const {
    if (b_.is_zero()) return a_.str();
    std::string s = a_.is_zero() ? "" : a_.str() + (b_.sign() > 0 ? "+" : "");
    return s + b_.str() + "*sqrt2";
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }
std::ostream& operator<<(std::ostream& os, const ExactCoord& c) { return os << c.str(); }

}  // namespace kilogram::geometry
