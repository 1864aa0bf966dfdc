#pragma once

// High-precision reference values for tests. Independent of the interval
// kernels: everything here goes through MPFR at 256 bits.

#include <gmp.h>
#include <mpfr.h>

#include <functional>

namespace oracle {

class Real {
public:
    Real() { mpfr_init2(v_, 256); mpfr_set_zero(v_, 1); }
    Real(double x) { mpfr_init2(v_, 256); mpfr_set_d(v_, x, MPFR_RNDN); }  // NOLINT
    Real(const Real& o) { mpfr_init2(v_, 256); mpfr_set(v_, o.v_, MPFR_RNDN); }
    Real& operator=(const Real& o) { mpfr_set(v_, o.v_, MPFR_RNDN); return *this; }
    ~Real() { mpfr_clear(v_); }

    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    static Real apply(const Real& a, int (*fn)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t))
    {
        Real r;
        fn(r.get(), a.get(), MPFR_RNDN);
        return r;
    }
    static Real apply(const Real& a, const Real& b, int (*fn)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t))
    {
        Real r;
        fn(r.get(), a.get(), b.get(), MPFR_RNDN);
        return r;
    }

    friend Real operator+(const Real& a, const Real& b) { return apply(a, b, mpfr_add); }
    friend Real operator-(const Real& a, const Real& b) { return apply(a, b, mpfr_sub); }
    friend Real operator*(const Real& a, const Real& b) { return apply(a, b, mpfr_mul); }
    friend Real operator/(const Real& a, const Real& b) { return apply(a, b, mpfr_div); }
    friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.get(), b.get()) != 0; }
    friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.get(), b.get()) != 0; }

private:
    mpfr_t v_;
};

inline Real sqrt(const Real& a) { return Real::apply(a, mpfr_sqrt); }
inline Real log(const Real& a) { return Real::apply(a, mpfr_log); }
inline Real exp(const Real& a) { return Real::apply(a, mpfr_exp); }
inline Real cos(const Real& a) { return Real::apply(a, mpfr_cos); }
inline Real sin(const Real& a) { return Real::apply(a, mpfr_sin); }
inline Real pow(const Real& a, const Real& b) { return Real::apply(a, b, mpfr_pow); }
inline Real pi()
{
    Real r;
    mpfr_const_pi(r.get(), MPFR_RNDN);
    return r;
}
inline Real zeta(const Real& a) { return Real::apply(a, mpfr_zeta); }

/// True when the exact value lies in [lo, hi] (doubles compared exactly).
inline bool inside(const Real& x, double lo, double hi) { return Real(lo) <= x && x <= Real(hi); }

}  // namespace oracle
