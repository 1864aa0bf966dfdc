#pragma once

#include "zetabound/interval.hpp"

namespace zetabound {

/// Rectangular complex interval re + i·im.
struct ComplexInterval {
    Interval re;
    Interval im;

    ComplexInterval() = default;
    ComplexInterval(Interval r, Interval i = Interval(0.0)) : re(r), im(i) {}  // NOLINT

    ComplexInterval& operator+=(const ComplexInterval& o)
    {
        re += o.re;
        im += o.im;
        return *this;
    }
};

inline ComplexInterval operator+(const ComplexInterval& a, const ComplexInterval& b)
{
    return {a.re + b.re, a.im + b.im};
}

inline ComplexInterval operator-(const ComplexInterval& a, const ComplexInterval& b)
{
    return {a.re - b.re, a.im - b.im};
}

inline ComplexInterval operator*(const ComplexInterval& a, const ComplexInterval& b)
{
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

inline ComplexInterval operator*(const Interval& s, const ComplexInterval& z) { return {s * z.re, s * z.im}; }

inline ComplexInterval conj(const ComplexInterval& z) { return {z.re, -z.im}; }

inline Interval norm(const ComplexInterval& z) { return sqr(z.re) + sqr(z.im); }

inline Interval abs(const ComplexInterval& z) { return sqrt(norm(z)); }

inline ComplexInterval operator/(const ComplexInterval& a, const ComplexInterval& b)
{
    const Interval d = norm(b);
    const ComplexInterval n = a * conj(b);
    return {n.re / d, n.im / d};
}

/// e^{i·phase}
inline ComplexInterval expi(const Interval& phase) { return {cos(phase), sin(phase)}; }

}  // namespace zetabound
