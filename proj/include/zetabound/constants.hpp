#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zetabound/interval.hpp"

namespace zetabound {

/// A verification region [t0, t1] (t1 empty = open-ended).
struct RegionParams {
    std::string id;
    Rational t0;
    std::optional<Rational> t1;
    Rational c;
    Rational phi;
    std::int64_t r0 = 4;
    Rational C{611, 1000};

    bool open_ended() const { return !t1.has_value(); }
    /// Throws ParameterError on t1 <= t0, c outside (0,3), φ outside
    /// [1/3, 0.35], r0 < 2, or φ != 1/3 for an open-ended region.
    void validate() const;
};

struct RegionConstants {
    std::int64_t R0 = 0;
    std::optional<std::int64_t> R1;
    /// (√(t0/2π) - 1)/(t0^φ + 1) - 1 before the ceiling
    Interval R0_raw;
    /// the same with √(t0/√(2π)), for comparison only
    Interval R0_raw_alt;
    Interval mu0;
    Interval M1, M2, M5, M6, M7;
    std::optional<Interval> M3, M4;  // finite regions
    std::optional<Interval> M8;      // open-ended regions
    /// ⌈t0^φ r0⌉, the length bound of M7's partial sum
    std::int64_t M7_terms = 0;
};

enum class CoefficientKind { corput1, corput2, riemann_siegel };
std::string to_string(CoefficientKind kind);

struct BoundCoefficients {
    CoefficientKind kind = CoefficientKind::corput1;
    std::vector<std::pair<std::string, Interval>> values;
    const Interval& at(const std::string& name) const;
};

struct RsConstants {
    Interval offset200;
    Interval offset33e7;
    std::int64_t n1_200 = 0;
    std::int64_t n1_33e7 = 0;
    /// √(3.3e7/2π)
    Interval sqrt_ratio_33e7;
};

RsConstants rs_bound_constants();

/// 1.463 t^{-1/4} + 0.127 t^{-3/4}
Interval gabcke_upper(const Interval& t);

RegionConstants region_constants(const RegionParams& p);
/// a1..a4; requires a finite region with t0 >= 3.8e7.
BoundCoefficients corput1_coefficients(const RegionParams& p, const RegionConstants& rc);
/// b1..b3; requires an open-ended region with φ = 1/3.
BoundCoefficients corput2_coefficients(const RegionParams& p, const RegionConstants& rc);

/// μ of the phase lemma for a given r and K0.
Interval mu_for(std::int64_t r, const Interval& K0);

/// True when the interval meets [p - u, p + u], u the unit of the sixth
/// significant digit of the decimal `printed`.
bool matches_printed(const Interval& value, const std::string& printed);

/// A region with the coefficient values it is expected to reproduce.
struct LadderEntry {
    RegionParams params;
    std::vector<std::string> expected;
};

/// The ten bottleneck regions covering [3.8e7, 8.97e17].
const std::vector<LadderEntry>& bottleneck_ladder();
/// Open-ended regions from 8.97e17 and from 7.00e11 (c = 1.34, φ = 1/3).
const std::vector<LadderEntry>& tail_variants();

}  // namespace zetabound
