#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace zetabound {

class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Violated precondition on a non-interval argument (cutoffs, ranges, ...).
class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Exact rational with 64-bit numerator and denominator, always reduced and
/// with a positive denominator. Used for region parameters and exponents so
/// that decimal inputs such as 0.33559 are carried exactly.
class Rational {
public:
    constexpr Rational() = default;
    Rational(std::int64_t num, std::int64_t den = 1);

    /// Parses decimal notation ("0.33559", "3.80e7", "-21", "1/3").
    static Rational parse(std::string_view text);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }
    bool is_integer() const { return den_ == 1; }
    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
    std::string str() const;
    /// Exact decimal expansion when the denominator divides a power of ten
    /// ("0.33559", "38000000"), otherwise "a/b".
    std::string decimal_str() const;

    friend Rational operator+(Rational a, Rational b);
    friend Rational operator-(Rational a, Rational b);
    friend Rational operator*(Rational a, Rational b);
    friend Rational operator/(Rational a, Rational b);
    friend Rational operator-(Rational a) { return Rational(-a.num_, a.den_); }
    friend bool operator==(Rational a, Rational b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend std::strong_ordering operator<=>(Rational a, Rational b);

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

/// Closed interval [lo, hi] of extended reals with outward-rounded endpoints.
class Interval {
public:
    constexpr Interval() = default;
    constexpr Interval(double x) : lo_(x), hi_(x) {}  // NOLINT(google-explicit-constructor)
    Interval(double lo, double hi);

    static Interval hull(double a, double b);
    static Interval entire();
    /// Tight enclosure of an exact rational.
    static Interval from(Rational r);
    /// Tight enclosure of a decimal literal (e.g. "0.127").
    static Interval decimal(std::string_view text);

    double lo() const { return lo_; }
    double hi() const { return hi_; }
    double mid() const;
    double width() const;  // rounded up
    double mag() const;    // max |x|
    double mig() const;    // min |x|
    bool is_point() const { return lo_ == hi_; }
    bool contains(double x) const { return lo_ <= x && x <= hi_; }
    bool contains(const Interval& o) const { return lo_ <= o.lo_ && o.hi_ <= hi_; }
    bool contains_zero() const { return lo_ <= 0.0 && 0.0 <= hi_; }
    bool intersects(const Interval& o) const { return lo_ <= o.hi_ && o.lo_ <= hi_; }
    bool positive() const { return lo_ > 0.0; }
    bool nonnegative() const { return lo_ >= 0.0; }
    bool negative() const { return hi_ < 0.0; }

    Interval& operator+=(const Interval& o);
    Interval& operator-=(const Interval& o);
    Interval& operator*=(const Interval& o);
    Interval& operator/=(const Interval& o);

private:
    double lo_ = 0.0;
    double hi_ = 0.0;
};

Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval operator*(const Interval& a, const Interval& b);
/// Throws DomainError when the divisor contains zero.
Interval operator/(const Interval& a, const Interval& b);
Interval operator-(const Interval& a);

Interval hull(const Interval& a, const Interval& b);
std::optional<Interval> intersect(const Interval& a, const Interval& b);
Interval widen(const Interval& a, double radius);

Interval sqr(const Interval& a);
Interval abs(const Interval& a);
Interval sqrt(const Interval& a);
Interval log(const Interval& a);
Interval exp(const Interval& a);
Interval cos(const Interval& a);
Interval sin(const Interval& a);
/// x^p for rational p; negative bases only for integer p.
Interval pow(const Interval& x, Rational p);
/// x^n for integer n (any sign of base).
Interval pown(const Interval& x, int n);
/// x^y = exp(y log x) for x > 0.
Interval pow(const Interval& x, const Interval& y);
/// sinh^{-1}(sqrt(x)) = log(sqrt(x) + sqrt(x + 1)), x >= 0.
Interval asinh_sqrt(const Interval& x);

/// Halves meeting at the midpoint. Throws DomainError for point intervals.
std::pair<Interval, Interval> bisect(const Interval& a);

/// Exact floor/ceiling when the enclosure decides it; nullopt when the
/// interval straddles an integer boundary.
std::optional<std::int64_t> floor_exact(const Interval& a);
std::optional<std::int64_t> ceil_exact(const Interval& a);

std::ostream& operator<<(std::ostream& os, const Interval& a);

namespace constants {
Interval pi();
Interval two_pi();
Interval inv_pi();
Interval sqrt_pi();
Interval sqrt_two_pi();
/// (2π)^{1/4}
Interval fourth_root_two_pi();
/// cos(π/8)·(2π)^{1/4}, the leading Gabcke remainder constant.
Interval gabcke_lead();
}  // namespace constants

/// Sum of many intervals with double-double accumulation of each endpoint
/// and a rigorous bound on the accumulated rounding error.
class CompensatedSum {
public:
    void add(const Interval& x);
    Interval value() const;
    std::size_t count() const { return count_; }

private:
    struct Accumulator {
        double head = 0.0;
        double tail = 0.0;
        double abs_err = 0.0;
        void add(double x);
    };
    Accumulator lo_;
    Accumulator hi_;
    std::size_t count_ = 0;
    bool unbounded_lo_ = false;
    bool unbounded_hi_ = false;
};

}  // namespace zetabound
