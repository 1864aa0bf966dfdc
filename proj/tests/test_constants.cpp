#include <cmath>

#include "doctest.h"
#include "zetabound/constants.hpp"

using namespace zetabound;

namespace {

RegionParams region(const char* t0, const char* t1, const char* c, const char* phi)
{
    RegionParams p;
    p.t0 = Rational::parse(t0);
    if (t1) p.t1 = Rational::parse(t1);
    p.c = Rational::parse(c);
    p.phi = Rational::parse(phi);
    return p;
}

double rel_width(const Interval& x) { return x.width() / std::abs(x.mid()); }

}  // namespace

TEST_CASE("Riemann-Siegel offsets")
{
    const RsConstants rs = rs_bound_constants();
    CHECK(rs.n1_200 == 5);
    CHECK(rs.n1_33e7 == 2291);
    CHECK(rs.sqrt_ratio_33e7.lo() > 2291.74);
    CHECK(rs.sqrt_ratio_33e7.hi() < 2291.76);

    CHECK(rs.offset200.lo() > -2.08959);
    CHECK(rs.offset200.hi() < -2.08958);
    CHECK(rs.offset200.hi() <= -2.0895);
    CHECK(rs.offset200.contains(-2.089584540610557));

    // -2.8805171..., which rounds to -2.88052 at five decimals
    CHECK(rs.offset33e7.lo() > -2.880525);
    CHECK(rs.offset33e7.hi() < -2.880515);
    CHECK(std::round(rs.offset33e7.mid() * 1e5) == -288052.0);
    CHECK(std::round(rs.offset200.mid() * 1e5) == -208958.0);
    CHECK(rs.offset33e7.hi() <= -2.8805);
    CHECK(rel_width(rs.offset33e7) < 1e-12);
}

TEST_CASE("region constants for the first bottleneck region")
{
    const RegionConstants rc = region_constants(region("3.80e7", "3.85e7", "1.82", "0.33559"));
    CHECK(rc.R0 == 7);
    CHECK(rc.R1 == 7);
    CHECK(std::abs(rc.R0_raw.mid() - 6.01) < 0.01);
    CHECK(std::abs(rc.mu0.mid() - 1.4080424) < 1e-7);
    CHECK(std::abs(rc.mu0.mid() - 1.40805) < 1e-5);
    for (const Interval* m : {&rc.M1, &rc.M2, &rc.M5, &rc.M6}) CHECK(std::isfinite(m->mid()));
    CHECK(rc.M1.positive());
    CHECK(rc.M2.positive());
    CHECK(rc.M6.positive());
    REQUIRE(rc.M3.has_value());
    REQUIRE(rc.M4.has_value());
    CHECK_FALSE(rc.M8.has_value());
    CHECK(rc.M7.negative());
    CHECK(rc.M7_terms == static_cast<std::int64_t>(std::ceil(std::pow(3.8e7, 0.33559) * 4)));
}

TEST_CASE("R0 at the lemma floor")
{
    const RegionConstants rc = region_constants(region("5e6", "6e6", "1.82", "0.35"));
    CHECK(rc.R0_raw.contains(3.0115) == false);
    CHECK(std::abs(rc.R0_raw.mid() - 3.0115) < 1e-4);
    CHECK(rc.R0 == 4);
    // the alternative display √(t0/√(2π)) does not give the stated value
    CHECK(std::abs(rc.R0_raw_alt.mid() - 5.3538) < 1e-4);

    CHECK_THROWS_AS(region_constants(region("1e6", "2e6", "1.82", "0.35")), ParameterError);
}

TEST_CASE("parameter validation")
{
    CHECK_THROWS_AS(region_constants(region("3.85e7", "3.80e7", "1.82", "0.33559")), ParameterError);
    CHECK_THROWS_AS(region_constants(region("3.80e7", "3.85e7", "3", "0.33559")), ParameterError);
    CHECK_THROWS_AS(region_constants(region("3.80e7", "3.85e7", "1.82", "0.3")), ParameterError);
    CHECK_THROWS_AS(region_constants(region("3.80e7", "3.85e7", "1.82", "0.36")), ParameterError);
    CHECK_THROWS_AS(region_constants(region("8.97e17", nullptr, "1.34", "0.34")), ParameterError);

    const RegionParams small = region("2e7", "3e7", "1.82", "0.34");
    CHECK_THROWS_AS(corput1_coefficients(small, region_constants(small)), ParameterError);
    const RegionParams fin = region("3.80e7", "3.85e7", "1.82", "0.33559");
    CHECK_THROWS_AS(corput2_coefficients(fin, region_constants(fin)), ParameterError);
    const RegionParams tail = region("8.97e17", nullptr, "1.34", "1/3");
    CHECK_THROWS_AS(corput1_coefficients(tail, region_constants(tail)), ParameterError);
}

TEST_CASE("every bottleneck coefficient reproduces to six digits")
{
    for (const auto& entry : bottleneck_ladder()) {
        CAPTURE(entry.params.id);
        const RegionConstants rc = region_constants(entry.params);
        const BoundCoefficients a = corput1_coefficients(entry.params, rc);
        REQUIRE(a.values.size() == 4);
        for (std::size_t k = 0; k < 4; ++k) {
            CAPTURE(k);
            CHECK(matches_printed(a.values[k].second, entry.expected[k]));
            CHECK(rel_width(a.values[k].second) < 1e-7);
        }
        REQUIRE(rc.R1.has_value());
        CHECK(rc.R0 <= *rc.R1);
    }
    const auto& ladder = bottleneck_ladder();
    const BoundCoefficients r9 = corput1_coefficients(ladder[8].params, region_constants(ladder[8].params));
    CHECK(std::abs(r9.at("a1").mid() - 0.617933) < 5e-7);
}

TEST_CASE("tail coefficients")
{
    for (const auto& entry : tail_variants()) {
        CAPTURE(entry.params.id);
        const RegionConstants rc = region_constants(entry.params);
        REQUIRE(rc.M8.has_value());
        CHECK_FALSE(rc.R1.has_value());
        const BoundCoefficients b = corput2_coefficients(entry.params, rc);
        REQUIRE(b.values.size() == 3);
        for (std::size_t k = 0; k < 3; ++k) {
            CAPTURE(k);
            CHECK(matches_printed(b.values[k].second, entry.expected[k]));
            CHECK(rel_width(b.values[k].second) < 1e-7);
        }
        CHECK(b.at("b1").hi() < 0.5);
    }
}

TEST_CASE("six-digit matching")
{
    CHECK(matches_printed(Interval(0.6224465, 0.6224466), "0.622447"));
    CHECK(matches_printed(Interval(-2.875504), "-2.8755"));
    CHECK_FALSE(matches_printed(Interval(0.622449), "0.622447"));
    CHECK_FALSE(matches_printed(Interval(-2.87552), "-2.8755"));
    CHECK(matches_printed(Interval(-21.46229), "-21.4623"));
}

TEST_CASE("M1 decreases along the ladder with (c, phi) held fixed")
{
    const auto& ladder = bottleneck_ladder();
    for (std::size_t i = 0; i + 1 < ladder.size(); ++i) {
        CAPTURE(ladder[i].params.id);
        RegionParams here = ladder[i].params;
        RegionParams later = here;
        later.t0 = ladder[i + 1].params.t0;
        later.t1 = ladder[i + 1].params.t1;
        if (later.t1 && *later.t1 <= later.t0) continue;
        CHECK(region_constants(later).M1.hi() < region_constants(here).M1.lo());
    }
}

TEST_CASE("mu never exceeds mu0")
{
    for (const auto& entry : bottleneck_ladder()) {
        const RegionConstants rc = region_constants(entry.params);
        const Interval K0 = pow(Interval::from(entry.params.t0), entry.params.phi);
        for (std::int64_t r = 4; r <= 100; ++r) CHECK(mu_for(r, K0).lo() <= rc.mu0.hi());
        CHECK(mu_for(4, K0).intersects(rc.mu0));
        CHECK(mu_for(5, K0).hi() < rc.mu0.lo());
    }
}
