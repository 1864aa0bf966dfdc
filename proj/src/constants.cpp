#include "zetabound/constants.hpp"

#include <cmath>
#include <cstdlib>

#include "zetabound/complex_interval.hpp"

namespace zetabound {

namespace {

Interval I(std::int64_t n) { return Interval(static_cast<double>(n)); }
Interval Q(Rational r) { return Interval::from(r); }

const Rational kThird(1, 3);
const Rational kSixth(1, 6);

Interval partial_inv_sqrt_sum(std::int64_t last)
{
    CompensatedSum s;
    for (std::int64_t n = 1; n <= last; ++n) s.add(Interval(1.0) / sqrt(I(n)));
    return s.value();
}

std::int64_t decided(const std::optional<std::int64_t>& v, const char* what)
{
    if (!v) throw ParameterError(std::string(what) + " is undecidable at binary64 precision");
    return *v;
}

}  // namespace

void RegionParams::validate() const
{
    if (t0 <= Rational(3)) throw ParameterError("region needs t0 > 3");
    if (t1 && *t1 <= t0) throw ParameterError("region needs t1 > t0");
    if (c <= Rational(0) || c >= Rational(3)) throw ParameterError("region needs 0 < c < 3");
    if (phi < kThird || phi > Rational(35, 100)) throw ParameterError("region needs 1/3 <= phi <= 0.35");
    if (r0 < 2) throw ParameterError("region needs r0 >= 2");
    if (!t1 && phi != kThird) throw ParameterError("open-ended region needs phi = 1/3");
    if (C <= Rational(0)) throw ParameterError("region needs C > 0");
}

std::string to_string(CoefficientKind kind)
{
    switch (kind) {
    case CoefficientKind::corput1: return "corput1";
    case CoefficientKind::corput2: return "corput2";
    case CoefficientKind::riemann_siegel: return "riemann_siegel";
    }
    return "?";
}

const Interval& BoundCoefficients::at(const std::string& name) const
{
    for (const auto& [k, v] : values)
        if (k == name) return v;
    throw ParameterError("no coefficient named " + name);
}

Interval gabcke_upper(const Interval& t)
{
    return Interval::decimal("1.463") * pow(t, Rational(-1, 4)) + Interval::decimal("0.127") * pow(t, Rational(-3, 4));
}

RsConstants rs_bound_constants()
{
    auto gabcke = [](const Interval& t) {
        return constants::gabcke_lead() * pow(t, Rational(-1, 4)) +
               Interval::decimal("0.127") * pow(t, Rational(-3, 4));
    };
    RsConstants out;
    const Interval t200(200.0);
    out.n1_200 = decided(floor_exact(sqrt(t200 / constants::two_pi())), "n1 at t = 200");
    out.offset200 = Interval(2.0) * partial_inv_sqrt_sum(out.n1_200) - Interval(4.0) * sqrt(I(out.n1_200)) +
                    gabcke(t200);

    const Interval t(3.3e7);
    out.sqrt_ratio_33e7 = sqrt(t / constants::two_pi());
    out.n1_33e7 = decided(floor_exact(out.sqrt_ratio_33e7), "n1 at t = 3.3e7");
    const std::int64_t n = out.n1_33e7;
    out.offset33e7 = Interval(2.0) * partial_inv_sqrt_sum(n) - Interval(4.0) * sqrt(I(n) + Interval(0.5)) +
                     Interval(1.0) / sqrt(I(n)) + gabcke(t);
    return out;
}

Interval mu_for(std::int64_t r, const Interval& K0)
{
    const Interval l13 = pow(Q(Rational((r + 1) * (r + 1) * (r + 1), r * r * r)), kThird);
    return Interval(0.5) * sqr(l13) * (Interval(1.0) + Interval(1.0) / ((Interval(1.0) - Interval(1.0) / K0) * l13));
}

RegionConstants region_constants(const RegionParams& p)
{
    p.validate();
    const Interval t0 = Q(p.t0);
    const Interval c = Q(p.c);
    const Interval pi = constants::pi();
    const Interval pi13 = pow(pi, kThird);
    const Interval pi16 = pow(pi, kSixth);
    const Interval pi23 = sqr(pi13);
    const Interval sqrt2 = sqrt(Interval(2.0));
    const Interval six_pi = Interval(6.0) * constants::inv_pi();
    const Interval r0 = I(p.r0);
    const Interval t0phi = pow(t0, p.phi);

    RegionConstants rc;
    rc.R0_raw = (sqrt(t0 / constants::two_pi()) - Interval(1.0)) / (t0phi + Interval(1.0)) - Interval(1.0);
    rc.R0_raw_alt = (sqrt(t0 / constants::sqrt_two_pi()) - Interval(1.0)) / (t0phi + Interval(1.0)) - Interval(1.0);
    rc.R0 = decided(ceil_exact(rc.R0_raw), "R0");
    if (rc.R0 < 4) throw ParameterError("R0 = " + std::to_string(rc.R0) + " is below the method's floor of 4");
    if (p.t1) {
        const Interval t1 = Q(*p.t1);
        rc.R1 = decided(floor_exact(pow(t1, Rational(1, 2) - p.phi) / constants::sqrt_two_pi()), "R1");
        if (*rc.R1 < rc.R0) throw ParameterError("region needs R0 <= R1");
    }
    const Interval R0 = I(rc.R0);
    const Interval inv_R0 = Interval(1.0) + Interval(1.0) / R0;

    rc.mu0 = Interval(0.5) * (Interval(1.0) + Interval(1.0) / r0) *
             (Interval(2.0) + Interval(1.0) / r0 + Interval(1.0) / (t0phi - Interval(1.0)));

    const Interval e = pow(t0, p.phi - kThird);
    const Interval sq = sqrt(c + Interval(1.0) / (Interval(5.0) * pi13 * e));
    const Interval t0_phi_sixth = pow(t0, p.phi - kSixth);

    rc.M1 = Interval(1.0) / c +
            rc.mu0 * (Interval(32.0) / (Interval(15.0) * constants::sqrt_pi()) * sq +
                      c / (Interval(15.0) * pi13 * e) + Interval(1.0) / (Interval(75.0) * pi23 * sqr(e)));

    rc.M2 = Interval(1.0) / t0_phi_sixth / (sqrt2 * pi16) * inv_R0 +
            rc.mu0 * c *
                (Interval(16.0) * sqrt2 / (Interval(15.0) * pi23) / t0_phi_sixth * inv_R0 * sq +
                 c / (Interval(3.0) * t0phi) +
                 Interval(1.0) / (Interval(15.0) * pi13 * pow(t0, Rational(2) * p.phi - kThird)));

    if (p.t1) {
        const Interval t1 = Q(*p.t1);
        const Interval inv_R1 = Interval(1.0) + Interval(1.0) / I(*rc.R1);
        const Interval tail_phi = Interval(1.0) + Interval(1.0) / t0phi;
        rc.M3 = Interval(1.0) / t0phi / c * (six_pi - Interval(1.0)) +
                Interval(16.0) / (Interval(3.0) * pow(pi, Rational(5, 6)) * sqrt(c)) / e * sqr(inv_R0) * tail_phi +
                (Interval(1.0) - six_pi) * Interval(5.0) * pi13 / pow(t1, kThird);
        rc.M4 = Interval(1.0) / pow(t0, Rational(2) * p.phi - kSixth) / (sqrt2 * pi16) * (six_pi - Interval(1.0)) *
                    inv_R0 +
                Interval(1.0) / pow(t0, Rational(2) * p.phi - Rational(1, 2)) * Interval(8.0) *
                    sqrt(Interval(2.0) * c) / (Interval(3.0) * pi) * pown(inv_R0, 3) * tail_phi +
                (Interval(1.0) - six_pi) / pow(t1, p.phi + kSixth) * Interval(5.0) * pi16 * c / sqrt2 * inv_R1;
    }

    rc.M5 = log(Interval(1.0) + Interval(1.0) / (Interval(2.0) * R0)) +
            Interval(2.0) * log(Interval(1.0) + sqrt(Interval(1.0) + Interval(1.0) / (R0 + Interval(0.5)))) +
            Interval(1.0) / sqrt(r0 * (r0 + Interval(1.0))) - log(constants::sqrt_two_pi()) -
            Interval(2.0) * asinh_sqrt(r0 + Interval(0.5));

    rc.M6 = Interval(4.0) * sqrt(r0 * (Interval(1.0) + Interval(1.0) / t0phi));

    rc.M7_terms = decided(ceil_exact(t0phi * r0), "ceil(t0^phi r0)");
    rc.M7 = Interval(2.0) * partial_inv_sqrt_sum(rc.M7_terms - 1) - Interval(4.0) * sqrt(I(rc.M7_terms - 1));

    if (!p.t1) {
        const Interval inner =
            (Interval(32.0) / (Interval(3.0) * sqrt(pi * c)) +
             Interval(1.0) / c * (six_pi - Interval(1.0)) / (Interval(25.0) * pi23)) *
            (Interval(1.0) + Interval(1.0) / pow(t0, kThird) +
             Interval(5.0) * c / (Interval(4.0) * sqrt2 * pi16 * pow(t0, kSixth)));
        rc.M8 = sqrt(Interval(5.0)) * pi16 * sqrt(inner);
    }
    return rc;
}

BoundCoefficients corput1_coefficients(const RegionParams& p, const RegionConstants& rc)
{
    if (p.open_ended()) throw ParameterError("corput1 coefficients need a finite region");
    if (p.t0 < Rational(38'000'000)) throw ParameterError("corput1 coefficients need t0 >= 3.8e7");
    if (!rc.M3 || !rc.M4) throw ParameterError("region constants lack M3/M4");
    const Interval sum = rc.M1 + rc.M2 + *rc.M3 + *rc.M4;
    if (!sum.positive()) throw ParameterError("inconsistent constants: M1+M2+M3+M4 is not positive");
    const Interval S = sqrt(Interval(4.0) / pow(constants::pi(), kThird) * sum);
    BoundCoefficients out;
    out.kind = CoefficientKind::corput1;
    out.values = {{"a1", Q(Rational(1, 2) - p.phi) * S},
                  {"a2", rc.M5 * S},
                  {"a3", rc.M6},
                  {"a4", rc.M7 + gabcke_upper(Q(p.t0))}};
    return out;
}

BoundCoefficients corput2_coefficients(const RegionParams& p, const RegionConstants& rc)
{
    if (!p.open_ended() || p.phi != kThird) throw ParameterError("corput2 coefficients need t1 = inf and phi = 1/3");
    if (!rc.M8) throw ParameterError("region constants lack M8");
    const Interval sum = rc.M1 + rc.M2;
    if (!sum.positive()) throw ParameterError("inconsistent constants: M1+M2 is not positive");
    const Interval root = sqrt(sum);
    const Interval pi16 = pow(constants::pi(), kSixth);
    BoundCoefficients out;
    out.kind = CoefficientKind::corput2;
    out.values = {{"b1", root / (Interval(3.0) * pi16)},
                  {"b2", rc.M6 + Interval(2.0) * rc.M5 / pi16 * root + *rc.M8 / constants::sqrt_two_pi()},
                  {"b3", rc.M7 - Interval(3.0) * *rc.M8 + gabcke_upper(Q(p.t0))}};
    return out;
}

bool matches_printed(const Interval& value, const std::string& printed)
{
    const Rational p = Rational::parse(printed);
    const double mag = std::abs(p.to_double());
    if (mag == 0.0) return value.contains(0.0);
    const int e = static_cast<int>(std::floor(std::log10(mag))) - 5;
    const Rational unit = e >= 0 ? Rational(static_cast<std::int64_t>(std::llround(std::pow(10.0, e))))
                                 : Rational(1, static_cast<std::int64_t>(std::llround(std::pow(10.0, -e))));
    return value.intersects(Interval::hull(Interval::from(p - unit).lo(), Interval::from(p + unit).hi()));
}

namespace {

LadderEntry finite(const char* id, const char* t0, const char* t1, const char* c, const char* phi,
                   std::vector<std::string> expected)
{
    LadderEntry e;
    e.params.id = id;
    e.params.t0 = Rational::parse(t0);
    e.params.t1 = Rational::parse(t1);
    e.params.c = Rational::parse(c);
    e.params.phi = Rational::parse(phi);
    e.expected = std::move(expected);
    return e;
}

LadderEntry open(const char* id, const char* t0, std::vector<std::string> expected)
{
    LadderEntry e;
    e.params.id = id;
    e.params.t0 = Rational::parse(t0);
    e.params.c = Rational::parse("1.34");
    e.params.phi = kThird;
    e.expected = std::move(expected);
    return e;
}

}  // namespace

const std::vector<LadderEntry>& bottleneck_ladder()
{
    static const std::vector<LadderEntry> ladder{
        finite("bottleneck-01", "3.80e7", "3.85e7", "1.82", "0.33559", {"0.622447", "-8.21438", "8.01143", "-2.87533"}),
        finite("bottleneck-02", "3.85e7", "3.96e7", "1.82", "0.33576", {"0.621314", "-8.20793", "8.01135", "-2.8755"}),
        finite("bottleneck-03", "3.96e7", "4.12e7", "1.82", "0.33599", {"0.619747", "-8.19871", "8.01119", "-2.8758"}),
        finite("bottleneck-04", "4.12e7", "4.43e7", "1.82", "0.33643", {"0.61681", "-8.1818", "8.01096", "-2.87626"}),
        finite("bottleneck-05", "4.43e7", "4.96e7", "1.82", "0.33711", {"0.612254", "-8.15526", "8.01057", "-2.87706"}),
        finite("bottleneck-06", "4.96e7", "5.82e7", "1.81", "0.33816", {"0.605265", "-8.11448", "8.00999", "-2.87828"}),
        finite("bottleneck-07", "5.82e7", "7.06e7", "1.81", "0.33962", {"0.595642", "-8.05816", "8.00922", "-2.87995"}),
        finite("bottleneck-08", "7.06e7", "8.24e7", "1.80", "0.34098", {"0.58663", "-8.00412", "8.00842", "-2.8818"}),
        finite("bottleneck-09", "8.24e7", "3.92e8", "1.83", "0.33536", {"0.617933", "-8.20176", "8.00885", "-2.88182"}),
        finite("bottleneck-10", "3.92e8", "8.97e17", "1.83", "0.33711", {"0.597618", "-8.09885", "8.00507", "-2.89251"}),
    };
    return ladder;
}

const std::vector<LadderEntry>& tail_variants()
{
    static const std::vector<LadderEntry> tails{
        open("tail-8.97e17", "8.97e17", {"0.469028", "3.99399", "-21.4623"}),
        open("tail-7.00e11", "7.00e11", {"0.470795", "4.04972", "-21.5437"}),
    };
    return tails;
}

}  // namespace zetabound
