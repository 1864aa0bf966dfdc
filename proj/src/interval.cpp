#include "zetabound/interval.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numeric>
#include <ostream>

namespace zetabound {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kMax = std::numeric_limits<double>::max();
constexpr double kMinSub = std::numeric_limits<double>::denorm_min();
// Below this magnitude fma/TwoSum residuals may themselves be inexact.
constexpr double kTiny = 0x1p-960;
// Outward widening applied to libm transcendental results.
constexpr int kKernelUlps = 2;

double next_up(double x) { return std::nextafter(x, kInf); }
double next_down(double x) { return std::nextafter(x, -kInf); }

double nudge_down(double x, int n)
{
    for (int i = 0; i < n; ++i) x = next_down(x);
    return x;
}

double nudge_up(double x, int n)
{
    for (int i = 0; i < n; ++i) x = next_up(x);
    return x;
}

void two_sum(double a, double b, double& s, double& e)
{
    s = a + b;
    const double bb = s - a;
    e = (a - (s - bb)) + (b - bb);
}

double add_down(double a, double b)
{
    const double s = a + b;
    if (std::isnan(s)) return -kInf;
    if (std::isinf(s)) {
        if (std::isfinite(a) && std::isfinite(b)) return s > 0 ? kMax : -kInf;
        return s;
    }
    double ss, e;
    two_sum(a, b, ss, e);
    return e < 0 ? next_down(s) : s;
}

double add_up(double a, double b)
{
    const double s = a + b;
    if (std::isnan(s)) return kInf;
    if (std::isinf(s)) {
        if (std::isfinite(a) && std::isfinite(b)) return s < 0 ? -kMax : kInf;
        return s;
    }
    double ss, e;
    two_sum(a, b, ss, e);
    return e > 0 ? next_up(s) : s;
}

// Sign of the exact product relative to the rounded one: -1, 0, +1;
// 2 when undecidable (conservative widening on both sides).
int mul_residual_sign(double a, double b, double p)
{
    if (std::abs(p) < kTiny) return 2;
    const double e = std::fma(a, b, -p);
    return (e > 0) - (e < 0);
}

double mul_down(double a, double b)
{
    if (a == 0.0 || b == 0.0) return 0.0;
    const double p = a * b;
    if (std::isinf(p)) {
        if (std::isfinite(a) && std::isfinite(b)) return p > 0 ? kMax : -kInf;
        return p;
    }
    if (p == 0.0) return (std::signbit(a) != std::signbit(b)) ? -kMinSub : 0.0;
    const int s = mul_residual_sign(a, b, p);
    return (s < 0 || s == 2) ? next_down(p) : p;
}

double mul_up(double a, double b)
{
    if (a == 0.0 || b == 0.0) return 0.0;
    const double p = a * b;
    if (std::isinf(p)) {
        if (std::isfinite(a) && std::isfinite(b)) return p < 0 ? -kMax : kInf;
        return p;
    }
    if (p == 0.0) return (std::signbit(a) != std::signbit(b)) ? 0.0 : kMinSub;
    const int s = mul_residual_sign(a, b, p);
    return (s > 0 || s == 2) ? next_up(p) : p;
}

// a/b - q has the sign of fma(-q, b, a) * sign(b).
int div_residual_sign(double a, double b, double q)
{
    if (std::abs(q) < kTiny || std::abs(a) < kTiny || !std::isfinite(b)) return 2;
    const double r = std::fma(-q, b, a);
    const int rs = (r > 0) - (r < 0);
    return b > 0 ? rs : -rs;
}

double div_down(double a, double b)
{
    const double q = a / b;
    if (std::isnan(q)) return -kInf;
    if (std::isinf(q)) {
        if (std::isfinite(a)) return q > 0 ? kMax : -kInf;
        return q;
    }
    if (a == 0.0) return 0.0;
    if (std::isinf(b)) return q;  // exact limit 0
    if (q == 0.0) return (std::signbit(a) != std::signbit(b)) ? -kMinSub : 0.0;
    const int s = div_residual_sign(a, b, q);
    return (s < 0 || s == 2) ? next_down(q) : q;
}

double div_up(double a, double b)
{
    const double q = a / b;
    if (std::isnan(q)) return kInf;
    if (std::isinf(q)) {
        if (std::isfinite(a)) return q < 0 ? -kMax : kInf;
        return q;
    }
    if (a == 0.0) return 0.0;
    if (std::isinf(b)) return q;
    if (q == 0.0) return (std::signbit(a) != std::signbit(b)) ? 0.0 : kMinSub;
    const int s = div_residual_sign(a, b, q);
    return (s > 0 || s == 2) ? next_up(q) : q;
}

double sqrt_down(double x)
{
    if (x <= 0.0) return 0.0;
    const double s = std::sqrt(x);
    if (std::isinf(s)) return kMax;
    if (x < kTiny) return next_down(s);
    const double r = std::fma(-s, s, x);
    return r < 0 ? next_down(s) : s;
}

double sqrt_up(double x)
{
    if (x <= 0.0) return 0.0;
    const double s = std::sqrt(x);
    if (std::isinf(s)) return s;
    if (x < kTiny) return next_up(s);
    const double r = std::fma(-s, s, x);
    return r > 0 ? next_up(s) : s;
}

Interval make_unchecked(double lo, double hi)
{
    return Interval::hull(lo, hi);
}

std::int64_t checked_narrow(__int128 v)
{
    if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
        throw std::overflow_error("rational overflow");
    return static_cast<std::int64_t>(v);
}

Rational reduce(__int128 num, __int128 den)
{
    if (den == 0) throw DomainError("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    __int128 a = num < 0 ? -num : num;
    __int128 b = den;
    while (b != 0) {
        const __int128 r = a % b;
        a = b;
        b = r;
    }
    if (a > 1) {
        num /= a;
        den /= a;
    }
    return Rational(checked_narrow(num), checked_narrow(den));
}

// Enclosure of an exactly known integer that may exceed 2^53.
Interval integer_enclosure(std::int64_t v)
{
    const double d = static_cast<double>(v);
    if (std::abs(v) <= (std::int64_t{1} << 53)) return Interval(d);
    return Interval(next_down(d), next_up(d));
}

Interval kernel(double lo_value, double hi_value)
{
    return Interval(nudge_down(lo_value, kKernelUlps), nudge_up(hi_value, kKernelUlps));
}

// Extremum test for cos/sin: does some point (j + shift)·π lie in [lo, hi]?
// Returns a pair (touches max, touches min); conservative when undecided.
std::pair<bool, bool> extrema(const Interval& a, double shift)
{
    const Interval pi = constants::pi();
    const double jlo = std::floor(a.lo() / pi.hi() - shift) - 1.0;
    const double jhi = std::ceil(a.hi() / pi.lo() - shift) + 1.0;
    bool hits_max = false;
    bool hits_min = false;
    for (double j = jlo; j <= jhi; j += 1.0) {
        const Interval point = Interval(j + shift) * pi;
        if (!point.intersects(a)) continue;
        // j even -> +1 (cos at 2kπ, sin at π/2 + 2kπ), j odd -> -1.
        const bool even = std::fmod(std::abs(j), 2.0) == 0.0;
        if (even)
            hits_max = true;
        else
            hits_min = true;
    }
    return {hits_max, hits_min};
}

Interval trig(const Interval& a, bool is_sin)
{
    if (!std::isfinite(a.lo()) || !std::isfinite(a.hi())) return Interval(-1.0, 1.0);
    if (a.width() >= 7.0 || a.mag() > 0x1p50) return Interval(-1.0, 1.0);
    const double flo = is_sin ? std::sin(a.lo()) : std::cos(a.lo());
    const double fhi = is_sin ? std::sin(a.hi()) : std::cos(a.hi());
    double lo = nudge_down(std::min(flo, fhi), kKernelUlps);
    double hi = nudge_up(std::max(flo, fhi), kKernelUlps);
    const auto [hits_max, hits_min] = extrema(a, is_sin ? 0.5 : 0.0);
    if (hits_max) hi = 1.0;
    if (hits_min) lo = -1.0;
    return Interval(std::max(lo, -1.0), std::min(hi, 1.0));
}

}  // namespace

// ---------------------------------------------------------------- Rational

Rational::Rational(std::int64_t num, std::int64_t den)
{
    if (den == 0) throw DomainError("rational with zero denominator");
    __int128 n = num;
    __int128 d = den;
    if (d < 0) {
        n = -n;
        d = -d;
    }
    __int128 a = n < 0 ? -n : n;
    __int128 b = d;
    while (b != 0) {
        const __int128 r = a % b;
        a = b;
        b = r;
    }
    if (a > 1) {
        n /= a;
        d /= a;
    }
    num_ = checked_narrow(n);
    den_ = checked_narrow(d);
}

Rational Rational::parse(std::string_view text)
{
    auto bad = [&] { return DomainError("cannot parse rational '" + std::string(text) + "'"); };
    if (text.empty()) throw bad();
    if (const auto slash = text.find('/'); slash != std::string_view::npos) {
        const Rational n = parse(text.substr(0, slash));
        const Rational d = parse(text.substr(slash + 1));
        return n / d;
    }
    std::size_t i = 0;
    bool neg = false;
    if (text[i] == '+' || text[i] == '-') {
        neg = text[i] == '-';
        ++i;
    }
    __int128 mantissa = 0;
    int scale = 0;
    int digits = 0;
    bool seen_point = false;
    for (; i < text.size(); ++i) {
        const char ch = text[i];
        if (ch == '.') {
            if (seen_point) throw bad();
            seen_point = true;
            continue;
        }
        if (ch == 'e' || ch == 'E') break;
        if (ch < '0' || ch > '9') throw bad();
        mantissa = mantissa * 10 + (ch - '0');
        if (++digits > 30) throw bad();
        if (seen_point) --scale;
    }
    if (digits == 0) throw bad();
    if (i < text.size()) {
        int exponent = 0;
        const auto tail = text.substr(i + 1);
        const auto* first = tail.data();
        const auto* last = tail.data() + tail.size();
        if (first != last && *first == '+') ++first;
        const auto [ptr, ec] = std::from_chars(first, last, exponent);
        if (ec != std::errc() || ptr != last) throw bad();
        scale += exponent;
    }
    if (neg) mantissa = -mantissa;
    __int128 den = 1;
    if (scale > 0) {
        for (int k = 0; k < scale; ++k) mantissa *= 10;
    } else {
        for (int k = 0; k < -scale; ++k) den *= 10;
    }
    return reduce(mantissa, den);
}

std::string Rational::str() const
{
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

std::string Rational::decimal_str() const
{
    if (den_ == 1) return std::to_string(num_);
    std::int64_t pow10 = 1;
    int digits = 0;
    while (pow10 % den_ != 0) {
        if (digits == 18) return str();
        pow10 *= 10;
        ++digits;
    }
    const __int128 scaled = static_cast<__int128>(num_) * (pow10 / den_);
    const unsigned __int128 mag = scaled < 0 ? -static_cast<unsigned __int128>(scaled) : scaled;
    std::string body;
    for (unsigned __int128 v = mag; v != 0 || static_cast<int>(body.size()) <= digits; v /= 10)
        body.insert(body.begin(), static_cast<char>('0' + static_cast<int>(v % 10)));
    body.insert(body.end() - digits, '.');
    return (scaled < 0 ? "-" : "") + body;
}

Rational operator+(Rational a, Rational b)
{
    return reduce(static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_,
                  static_cast<__int128>(a.den_) * b.den_);
}

Rational operator-(Rational a, Rational b) { return a + (-b); }

Rational operator*(Rational a, Rational b)
{
    return reduce(static_cast<__int128>(a.num_) * b.num_, static_cast<__int128>(a.den_) * b.den_);
}

Rational operator/(Rational a, Rational b)
{
    return reduce(static_cast<__int128>(a.num_) * b.den_, static_cast<__int128>(a.den_) * b.num_);
}

std::strong_ordering operator<=>(Rational a, Rational b)
{
    const __int128 l = static_cast<__int128>(a.num_) * b.den_;
    const __int128 r = static_cast<__int128>(b.num_) * a.den_;
    if (l < r) return std::strong_ordering::less;
    if (l > r) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

// ----------------------------------------------------------------- Interval

Interval::Interval(double lo, double hi) : lo_(lo), hi_(hi)
{
    if (std::isnan(lo) || std::isnan(hi) || lo > hi)
        throw DomainError("invalid interval endpoints");
}

Interval Interval::hull(double a, double b)
{
    if (std::isnan(a) || std::isnan(b)) return entire();
    return Interval(std::min(a, b), std::max(a, b));
}

Interval Interval::entire() { return Interval(-kInf, kInf); }

Interval Interval::from(Rational r)
{
    const Interval n = integer_enclosure(r.num());
    if (r.den() == 1) return n;
    return n / integer_enclosure(r.den());
}

Interval Interval::decimal(std::string_view text) { return from(Rational::parse(text)); }

double Interval::mid() const
{
    if (lo_ == -kInf && hi_ == kInf) return 0.0;
    if (lo_ == -kInf) return -kMax;
    if (hi_ == kInf) return kMax;
    const double m = 0.5 * lo_ + 0.5 * hi_;
    return std::clamp(m, lo_, hi_);
}

double Interval::width() const { return add_up(hi_, -lo_); }

double Interval::mag() const { return std::max(std::abs(lo_), std::abs(hi_)); }

double Interval::mig() const
{
    if (contains_zero()) return 0.0;
    return std::min(std::abs(lo_), std::abs(hi_));
}

Interval& Interval::operator+=(const Interval& o) { return *this = *this + o; }
Interval& Interval::operator-=(const Interval& o) { return *this = *this - o; }
Interval& Interval::operator*=(const Interval& o) { return *this = *this * o; }
Interval& Interval::operator/=(const Interval& o) { return *this = *this / o; }

Interval operator+(const Interval& a, const Interval& b)
{
    return Interval(add_down(a.lo(), b.lo()), add_up(a.hi(), b.hi()));
}

Interval operator-(const Interval& a, const Interval& b)
{
    return Interval(add_down(a.lo(), -b.hi()), add_up(a.hi(), -b.lo()));
}

Interval operator-(const Interval& a) { return Interval(-a.hi(), -a.lo()); }

Interval operator*(const Interval& a, const Interval& b)
{
    const std::array<double, 4> lows{mul_down(a.lo(), b.lo()), mul_down(a.lo(), b.hi()),
                                     mul_down(a.hi(), b.lo()), mul_down(a.hi(), b.hi())};
    const std::array<double, 4> highs{mul_up(a.lo(), b.lo()), mul_up(a.lo(), b.hi()),
                                      mul_up(a.hi(), b.lo()), mul_up(a.hi(), b.hi())};
    return Interval(*std::min_element(lows.begin(), lows.end()),
                    *std::max_element(highs.begin(), highs.end()));
}

Interval operator/(const Interval& a, const Interval& b)
{
    if (b.contains_zero()) throw DomainError("interval division by an interval containing zero");
    const std::array<double, 4> lows{div_down(a.lo(), b.lo()), div_down(a.lo(), b.hi()),
                                     div_down(a.hi(), b.lo()), div_down(a.hi(), b.hi())};
    const std::array<double, 4> highs{div_up(a.lo(), b.lo()), div_up(a.lo(), b.hi()),
                                      div_up(a.hi(), b.lo()), div_up(a.hi(), b.hi())};
    return Interval(*std::min_element(lows.begin(), lows.end()),
                    *std::max_element(highs.begin(), highs.end()));
}

Interval hull(const Interval& a, const Interval& b)
{
    return Interval(std::min(a.lo(), b.lo()), std::max(a.hi(), b.hi()));
}

std::optional<Interval> intersect(const Interval& a, const Interval& b)
{
    if (!a.intersects(b)) return std::nullopt;
    return Interval(std::max(a.lo(), b.lo()), std::min(a.hi(), b.hi()));
}

Interval widen(const Interval& a, double radius)
{
    return Interval(add_down(a.lo(), -radius), add_up(a.hi(), radius));
}

Interval sqr(const Interval& a)
{
    const double lo = a.mig();
    const double hi = a.mag();
    return Interval(mul_down(lo, lo), mul_up(hi, hi));
}

Interval abs(const Interval& a) { return Interval(a.mig(), a.mag()); }

Interval sqrt(const Interval& a)
{
    if (a.lo() < 0.0) throw DomainError("sqrt of an interval with negative part");
    return Interval(sqrt_down(a.lo()), sqrt_up(a.hi()));
}

Interval log(const Interval& a)
{
    if (a.lo() <= 0.0) throw DomainError("log of an interval not strictly positive");
    if (a.is_point() && a.lo() == 1.0) return Interval(0.0);
    const double lo = std::isinf(a.lo()) ? kInf : std::log(a.lo());
    const double hi = std::isinf(a.hi()) ? kInf : std::log(a.hi());
    return kernel(lo, hi);
}

Interval exp(const Interval& a)
{
    const Interval r = kernel(std::exp(a.lo()), std::exp(a.hi()));
    return Interval(std::max(r.lo(), 0.0), r.hi());
}

Interval cos(const Interval& a) { return trig(a, false); }

Interval sin(const Interval& a) { return trig(a, true); }

Interval pown(const Interval& x, int n)
{
    if (n == 0) return Interval(1.0);
    if (n < 0) return Interval(1.0) / pown(x, -n);
    auto power_nonneg = [n](double v, bool up) {
        double r = 1.0;
        for (int i = 0; i < n; ++i) r = up ? mul_up(r, v) : mul_down(r, v);
        return r;
    };
    if (n % 2 == 0) {
        return Interval(power_nonneg(x.mig(), false), power_nonneg(x.mag(), true));
    }
    auto odd_lo = [&](double v) { return v >= 0 ? power_nonneg(v, false) : -power_nonneg(-v, true); };
    auto odd_hi = [&](double v) { return v >= 0 ? power_nonneg(v, true) : -power_nonneg(-v, false); };
    return Interval(odd_lo(x.lo()), odd_hi(x.hi()));
}

Interval pow(const Interval& x, const Interval& y)
{
    if (x.lo() <= 0.0) throw DomainError("real power of an interval not strictly positive");
    return exp(y * log(x));
}

namespace {

// base^k with overflow detection.
std::optional<__int128> checked_power(__int128 base, std::int64_t k)
{
    __int128 out = 1;
    for (std::int64_t i = 0; i < k; ++i)
        if (__builtin_mul_overflow(out, base, &out)) return std::nullopt;
    return out;
}

// When x^p is an exact integer inside the enclosure r, return it. Keeps
// floor/ceil decidable for perfect powers such as (10^12)^{1/3}.
std::optional<double> exact_integer_power(double x, Rational p, const Interval& r)
{
    if (x != std::floor(x) || x > 0x1p53 || r.hi() > 0x1p53) return std::nullopt;
    const double k = std::nearbyint(r.mid());
    if (!r.contains(k) || p.num() > 64 || p.den() > 64) return std::nullopt;
    const auto lhs = checked_power(static_cast<__int128>(x), p.num());
    const auto rhs = checked_power(static_cast<__int128>(k), p.den());
    if (lhs && rhs && *lhs == *rhs) return k;
    return std::nullopt;
}

}  // namespace

Interval pow(const Interval& x, Rational p)
{
    if (p.is_integer()) {
        if (std::abs(p.num()) > 1 << 20) throw DomainError("integer exponent too large");
        return pown(x, static_cast<int>(p.num()));
    }
    if (x.lo() < 0.0) throw DomainError("fractional power of an interval with negative part");
    if (p == Rational(1, 2)) return sqrt(x);
    if (x.lo() == 0.0) {
        if (p < Rational(0)) throw DomainError("negative power of an interval touching zero");
        if (x.hi() == 0.0) return Interval(0.0);
        return Interval(0.0, exp(Interval::from(p) * log(Interval(x.hi()))).hi());
    }
    const Interval r = exp(Interval::from(p) * log(x));
    if (x.is_point() && p > Rational(0)) {
        if (const auto k = exact_integer_power(x.lo(), p, r)) return Interval(*k);
    }
    return r;
}

Interval asinh_sqrt(const Interval& x)
{
    if (x.lo() < 0.0) throw DomainError("asinh_sqrt of an interval with negative part");
    return log(sqrt(x) + sqrt(x + Interval(1.0)));
}

std::pair<Interval, Interval> bisect(const Interval& a)
{
    if (a.is_point()) throw DomainError("cannot split a point interval");
    const double m = a.mid();
    if (m <= a.lo() || m >= a.hi()) return {Interval(a.lo()), Interval(a.lo(), a.hi())};
    return {Interval(a.lo(), m), Interval(m, a.hi())};
}

std::optional<std::int64_t> floor_exact(const Interval& a)
{
    if (!std::isfinite(a.lo()) || !std::isfinite(a.hi())) return std::nullopt;
    const double fl = std::floor(a.lo());
    const double fh = std::floor(a.hi());
    if (fl != fh || std::abs(fl) > 9.0e18) return std::nullopt;
    return static_cast<std::int64_t>(fl);
}

std::optional<std::int64_t> ceil_exact(const Interval& a)
{
    if (!std::isfinite(a.lo()) || !std::isfinite(a.hi())) return std::nullopt;
    const double cl = std::ceil(a.lo());
    const double ch = std::ceil(a.hi());
    if (cl != ch || std::abs(cl) > 9.0e18) return std::nullopt;
    return static_cast<std::int64_t>(cl);
}

std::ostream& operator<<(std::ostream& os, const Interval& a)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "[%.17g, %.17g]", a.lo(), a.hi());
    return os << buf;
}

// ---------------------------------------------------------------- constants

namespace constants {

Interval pi()
{
    constexpr double lo = 0x1.921fb54442d18p+1;
    return Interval(lo, std::nextafter(lo, kInf));
}

Interval two_pi() { return Interval(2.0) * pi(); }

Interval inv_pi() { return Interval(1.0) / pi(); }

Interval sqrt_pi() { return sqrt(pi()); }

Interval sqrt_two_pi() { return sqrt(two_pi()); }

Interval fourth_root_two_pi() { return sqrt(sqrt(two_pi())); }

Interval gabcke_lead() { return cos(pi() / Interval(8.0)) * fourth_root_two_pi(); }

}  // namespace constants

// ---------------------------------------------------------- CompensatedSum

void CompensatedSum::Accumulator::add(double x)
{
    double s, e;
    two_sum(head, x, s, e);
    head = s;
    tail += e;
    abs_err += std::abs(e);
}

void CompensatedSum::add(const Interval& x)
{
    ++count_;
    if (std::isinf(x.lo()))
        unbounded_lo_ = true;
    else
        lo_.add(x.lo());
    if (std::isinf(x.hi()))
        unbounded_hi_ = true;
    else
        hi_.add(x.hi());
}

Interval CompensatedSum::value() const
{
    // Floating accumulation of the residuals: |err| <= gamma_n * sum|e_i|.
    const double n = static_cast<double>(count_) + 2.0;
    const double gamma = n * 0x1p-53 * (1.0 + 1e-6);
    auto enclose = [gamma](const Accumulator& acc) {
        const double radius = mul_up(mul_up(acc.abs_err, gamma), 1.0 + 0x1p-40);
        return widen(Interval(acc.head) + Interval(acc.tail), radius);
    };
    const double lo = unbounded_lo_ ? -kInf : enclose(lo_).lo();
    const double hi = unbounded_hi_ ? kInf : enclose(hi_).hi();
    return make_unchecked(lo, hi);
}

}  // namespace zetabound
