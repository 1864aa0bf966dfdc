// One PASS/FAIL line per acceptance criterion; exit status = number of failures.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "zetabound/constants.hpp"
#include "zetabound/expsum.hpp"
#include "zetabound/verifier.hpp"
#include "zetabound/zeta.hpp"

using namespace zetabound;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string format(const char* f, auto... args)
{
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

Outcome coefficient_reproduction()
{
    int matched = 0, total = 0;
    std::string misses;
    for (const auto& e : bottleneck_ladder()) {
        const BoundCoefficients a = corput1_coefficients(e.params, region_constants(e.params));
        for (std::size_t i = 0; i < e.expected.size(); ++i) {
            ++total;
            if (matches_printed(a.values[i].second, e.expected[i])) ++matched;
            else misses += " " + e.params.id + "/" + a.values[i].first;
        }
    }
    return {matched == total && total == 40, format("%d/%d coefficients at 6 digits%s", matched, total, misses.c_str())};
}

Outcome tail_coefficients()
{
    int matched = 0, total = 0;
    for (const auto& e : tail_variants()) {
        const BoundCoefficients b = corput2_coefficients(e.params, region_constants(e.params));
        for (std::size_t i = 0; i < e.expected.size(); ++i) {
            ++total;
            if (matches_printed(b.values[i].second, e.expected[i])) ++matched;
        }
    }
    return {matched == total && total == 6, format("%d/%d tail coefficients at 6 digits", matched, total)};
}

Outcome rs_constants()
{
    const RsConstants rs = rs_bound_constants();
    auto five = [](const Interval& x, double want) {
        return std::round(x.lo() * 1e5) == want && std::round(x.hi() * 1e5) == want;
    };
    const bool ok = five(rs.offset200, -208958.0) && five(rs.offset33e7, -288052.0);
    return {ok, format("offsets [%.10f, %.10f] and [%.10f, %.10f]", rs.offset200.lo(), rs.offset200.hi(),
                       rs.offset33e7.lo(), rs.offset33e7.hi())};
}

PipelineResult g_pipeline;

Outcome full_certification()
{
    PipelineOptions o;
    o.prover.workers = 4;
    o.small_t.workers = 4;
    g_pipeline = reproduce_pipeline(o);
    int proved = 0;
    for (const auto& r : g_pipeline.core) proved += r.proved();
    bool bonus = true;
    for (const auto& r : g_pipeline.supplementary) bonus = bonus && r.proved();
    const bool ok = proved == 15 && g_pipeline.core.size() == 15 && g_pipeline.adjacent && bonus &&
                    g_pipeline.overall() == Status::proved;
    return {ok, format("%d/15 sub-certificates proved, C = 0.595 bonus %s, chain %s", proved,
                       bonus ? "proved" : "NOT proved", g_pipeline.adjacent ? "gap-free" : "has gaps")};
}

Outcome empirical_maximum()
{
    std::string detail;
    bool ok = true;
    for (double t : {45.62, 63.06, 108.99}) {
        const Interval r = zeta_ratio(t);
        ok = ok && r.lo() > 0.5075;
        detail += format("%s%.2f: [%.7f, %.7f]", detail.empty() ? "" : ", ", t, r.lo(), r.hi());
    }
    return {ok, detail + " vs 0.5075"};
}

Outcome oracle_dominance()
{
    SweepOptions o;
    o.t_values = {5e6};
    o.workers = 4;
    const SweepReport r = lemma_sweep(o);
    std::int64_t violations = 0, cases = 0;
    for (const auto& t : r.tallies) {
        violations += t.violations;
        cases += t.cases;
    }
    return {r.passed() && violations == 0, format("%lld checks, %lld violations", static_cast<long long>(cases),
                                                  static_cast<long long>(violations))};
}

Outcome classical_suites()
{
    const BoundTally kl = kusmin_landau_suite(0, 1000);
    const BoundTally w = weyl_suite(0, 1000);
    return {kl.violations == 0 && w.violations == 0 && kl.cases == 1000 && w.cases == 1000,
            format("kusmin-landau %lld/%lld, weyl %lld/%lld violations", static_cast<long long>(kl.violations),
                   static_cast<long long>(kl.cases), static_cast<long long>(w.violations),
                   static_cast<long long>(w.cases))};
}

Outcome structural()
{
    const StructuralReport r = structural_checks(0, 200, 1000);
    return {r.passed(), format("%lld parameter sets, max delta %.6f, min beta W^(1/3) %.4f, %lld P checks",
                               static_cast<long long>(r.parameter_sets), r.max_delta, r.min_beta_w,
                               static_cast<long long>(r.P_checks))};
}

Outcome soundness()
{
    const int samples = 10000;
    std::int64_t bad = 0;
    int regions = 0;
    const Rational C(611, 1000);

    // small t: plain evaluation of |zeta| at log-uniform samples
    {
        std::mt19937_64 rng(1);
        std::uniform_real_distribution<double> u(std::log(3.0), std::log(200.0));
        for (int i = 0; i < samples; ++i) {
            const double t = std::exp(u(rng));
            if (zeta_em(t).abs.mid() > 0.611 * std::pow(t, 1.0 / 6) * std::log(t)) ++bad;
        }
        ++regions;
    }
    const RsConstants rs = rs_bound_constants();
    bad += soundness_violations(rs_difference(Interval::from(C), rs.offset200), 200, 3.3e7, samples, 2);
    bad += soundness_violations(rs_difference(Interval::from(C), rs.offset33e7), 3.3e7, 3.8e7, samples, 3);
    regions += 2;
    for (const auto& e : bottleneck_ladder()) {
        const RegionParams& p = e.params;
        const auto a = corput1_coefficients(p, region_constants(p));
        bad += soundness_violations(corput1_difference(Interval::from(p.C), a, p.phi), p.t0.to_double(),
                                    p.t1->to_double(), samples, 4 + regions);
        ++regions;
    }
    const RegionParams& tp = tail_variants().at(0).params;
    const auto b = corput2_coefficients(tp, region_constants(tp));
    for (Rational tc : {C, Rational(566, 1000)}) {
        bad += soundness_violations(corput2_normalized(Interval::from(tc), b), tp.t0.to_double(), 1e40, samples,
                                    20 + regions);
        ++regions;
    }

    // corrupted coefficients in region 1
    const RegionParams& p1 = bottleneck_ladder().at(0).params;
    const auto a1 = corput1_coefficients(p1, region_constants(p1));
    int flipped = 0, tampered = 0;
    auto corrupt = [&](const std::string& name, const std::function<Interval(const Interval&)>& f) {
        BoundCoefficients x = a1;
        for (auto& [n, v] : x.values)
            if (n == name) v = f(v);
        ++tampered;
        if (!certify_corput1(p1, x).proved()) ++flipped;
    };
    corrupt("a1", [](const Interval& v) { return v + Interval(0.01); });
    corrupt("a2", [](const Interval& v) { return -v; });
    corrupt("a4", [](const Interval& v) { return -v; });
    const bool ok = bad == 0 && flipped == tampered && certify_corput1(p1, a1).proved();
    return {ok, format("%d regions x %d samples, %lld violations; %d/%d corruptions of region 1 rejected", regions,
                       samples, static_cast<long long>(bad), flipped, tampered)};
}

}  // namespace

int main()
{
    struct Criterion {
        const char* name;
        double budget_s;  // runtime target, 0 = none
        std::function<Outcome()> fn;
    };
    const std::vector<Criterion> criteria = {
        {"coefficient reproduction", 60, coefficient_reproduction},
        {"tail coefficients", 0, tail_coefficients},
        {"Riemann-Siegel constants", 0, rs_constants},
        {"full certification", 600, full_certification},
        {"empirical maximum above 0.5075", 0, empirical_maximum},
        {"oracle dominance sweep", 60, oracle_dominance},
        {"Kusmin-Landau and Weyl suites", 0, classical_suites},
        {"structural invariants", 0, structural},
        {"soundness spot-checks", 0, soundness},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto& c = criteria[i];
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.fn();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.budget_s > 0 && secs > c.budget_s) {
            o.pass = false;
            o.detail += format(" (over the %.0f s budget)", c.budget_s);
        }
        failures += o.pass ? 0 : 1;
        std::printf("%s %zu %s: %s [%.1f s]\n", o.pass ? "PASS" : "FAIL", i + 1, c.name, o.detail.c_str(), secs);
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures;
}
