#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "zetabound/complex_interval.hpp"
#include "zetabound/interval.hpp"
#include "zetabound/report.hpp"

namespace zetabound {

/// Certified enclosure of ζ(1/2 + it), possibly over a whole t-interval.
struct ZetaValue {
    Interval t;
    Interval re;
    Interval im;
    Interval abs;
    std::int64_t cutoff = 0;
    int em_order = 0;
    /// Upper bound on the Euler-Maclaurin remainder modulus, already folded
    /// into re, im and abs.
    Interval remainder;
};

/// Default cutoff ⌈3 + t/2⌉ for an ordinate (or the upper end of a cell).
std::int64_t default_cutoff(double t);

/// Euler-Maclaurin evaluation of ζ(1/2 + it) with cutoff N and v correction
/// terms. `t` may be a proper interval; every n^{-it} phase is then enclosed
/// over the interval. Backlund's remainder bound
///   |R_v| <= |s + 2v + 1| / (σ + 2v + 1) · |T_{v+1}|
/// is added symmetrically. Throws ParameterError when N < 2, N < |s|/(2π)
/// or v is outside [1, 14].
ZetaValue zeta_em(const Interval& t, std::int64_t cutoff, int order);
ZetaValue zeta_em(double t, std::int64_t cutoff, int order);
/// Same with the default cutoff and order 6.
ZetaValue zeta_em(double t);

/// t^{1/6} log t as an enclosure (t >= 3).
Interval ratio_denominator(const Interval& t);

/// Enclosure of |ζ(1/2+it)| / (t^{1/6} log t).
Interval zeta_ratio(double t);

struct MainSumBoundParts {
    double t = 0.0;
    std::int64_t n1 = 0;
    /// 2|Σ_{n<=n1} n^{-1/2+it}|
    Interval twice_main_sum;
    /// cos(π/8)(2π)^{1/4} t^{-1/4} + 0.127 t^{-3/4}
    Interval gabcke_terms;
    /// 1.463 t^{-1/4} + 0.127 t^{-3/4} (the rounded-up form used downstream)
    Interval gabcke_upper;

    Interval total() const { return twice_main_sum + gabcke_terms; }
};

/// Riemann-Siegel main-sum majorant at t >= 200.
MainSumBoundParts main_sum_bound(double t);

struct SmallTOptions {
    double initial_width = 1e-2;
    int max_depth = 40;
    int order = 6;
    unsigned workers = 1;
};

/// Certifies |ζ(1/2+it)| <= C t^{1/6} log t on [t_lo, t_hi] by adaptive
/// bisection of t-cells evaluated with interval arguments.
VerificationReport verify_small_t(const Interval& C, double t_lo, double t_hi, const SmallTOptions& options = {});
VerificationReport verify_small_t(double C, double t_lo, double t_hi, const SmallTOptions& options = {});

}  // namespace zetabound
