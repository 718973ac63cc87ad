#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace kilogram::geometry {

class ArithmeticOverflow : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

// Reduced fraction over int64 with overflow-checked arithmetic.
class Rational {
public:
    constexpr Rational() = default;
    constexpr Rational(std::int64_t n) : num_(n), den_(1) {}  // NOLINT(implicit)
    Rational(std::int64_t n, std::int64_t d);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    int sign() const { return (num_ > 0) - (num_ < 0); }
    bool is_zero() const { return num_ == 0; }
    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    // "p", "-p", or "p/q".
    static Rational parse(std::string_view text);
    std::string str() const;

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational operator-() const;

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }

    friend bool operator==(const Rational&, const Rational&) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

// The number a + b*sqrt(2) with rational a and b. Closed under + - * and
// division by non-zero values; comparisons are exact.
class ExactCoord {
public:
    constexpr ExactCoord() = default;
    ExactCoord(Rational a) : a_(a) {}  // NOLINT(implicit)
    ExactCoord(std::int64_t a) : a_(a) {}  // NOLINT(implicit)
    ExactCoord(Rational a, Rational b) : a_(a), b_(b) {}

    static ExactCoord sqrt2() { return {Rational(0), Rational(1)}; }

    const Rational& rational_part() const { return a_; }
    const Rational& sqrt2_part() const { return b_; }

    int sign() const;
    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    double to_double() const;

    friend ExactCoord operator+(const ExactCoord& x, const ExactCoord& y) { return {x.a_ + y.a_, x.b_ + y.b_}; }
    friend ExactCoord operator-(const ExactCoord& x, const ExactCoord& y) { return {x.a_ - y.a_, x.b_ - y.b_}; }
    friend ExactCoord operator*(const ExactCoord& x, const ExactCoord& y) {
        return {x.a_ * y.a_ + Rational(2) * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_};
    }
    friend ExactCoord operator/(const ExactCoord& x, const ExactCoord& y);
    ExactCoord operator-() const { return {-a_, -b_}; }

    ExactCoord& operator+=(const ExactCoord& o) { return *this = *this + o; }
    ExactCoord& operator-=(const ExactCoord& o) { return *this = *this - o; }

    friend bool operator==(const ExactCoord&, const ExactCoord&) = default;
    friend std::strong_ordering operator<=>(const ExactCoord& x, const ExactCoord& y) {
        const int s = (x - y).sign();
        return s < 0 ? std::strong_ordering::less : s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }

    std::string str() const;

private:
    Rational a_;
    Rational b_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);
std::ostream& operator<<(std::ostream& os, const ExactCoord& c);

struct Point {
    ExactCoord x;
    ExactCoord y;

    friend bool operator==(const Point&, const Point&) = default;
    friend auto operator<=>(const Point&, const Point&) = default;
    friend Point operator+(const Point& p, const Point& q) { return {p.x + q.x, p.y + q.y}; }
    friend Point operator-(const Point& p, const Point& q) { return {p.x - q.x, p.y - q.y}; }
};

inline ExactCoord cross(const Point& u, const Point& v) { return u.x * v.y - u.y * v.x; }

}  // namespace kilogram::geometry
