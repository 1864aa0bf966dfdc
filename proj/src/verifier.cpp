#include "zetabound/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>

#include "zetabound/parallel.hpp"

namespace zetabound {

namespace {

std::string fmt17(double x)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

struct CellOutcome {
    Status status = Status::proved;
    std::int64_t cells = 0;
    int depth = 0;
    std::optional<Interval> witness;
};

enum class CellVerdict { pass, fail, split };

// One cell: naive enclosure, then monotone endpoint, then centered form.
CellVerdict judge(const BoundExpr& g, const BoundExpr& dg, double lo, double hi, std::optional<Interval>& witness)
{
    const Interval cell(lo, hi);
    if (expr_eval(g, cell).lo() >= 0.0) return CellVerdict::pass;
    const Interval d = expr_eval(dg, cell);
    if (d.lo() >= 0.0 && expr_eval(g, Interval(lo)).lo() >= 0.0) return CellVerdict::pass;
    if (d.hi() <= 0.0 && expr_eval(g, Interval(hi)).lo() >= 0.0) return CellVerdict::pass;
    const double m = lo + (hi - lo) / 2;
    const Interval centered = expr_eval(g, Interval(m)) + d * (cell - Interval(m));
    if (centered.lo() >= 0.0) return CellVerdict::pass;
    for (double p : {lo, m, hi}) {
        if (expr_eval(g, Interval(p)).hi() < 0.0) {
            witness = Interval(p);
            return CellVerdict::fail;
        }
    }
    return CellVerdict::split;
}

CellOutcome prove_seed(const BoundExpr& g, const BoundExpr& dg, double lo, double hi, int max_depth)
{
    CellOutcome out;
    struct Pending {
        double lo, hi;
        int depth;
    };
    std::vector<Pending> stack{{lo, hi, 0}};
    while (!stack.empty()) {
        const Pending c = stack.back();
        stack.pop_back();
        ++out.cells;
        out.depth = std::max(out.depth, c.depth);
        std::optional<Interval> w;
        switch (judge(g, dg, c.lo, c.hi, w)) {
        case CellVerdict::pass: break;
        case CellVerdict::fail:
            out.status = Status::refuted;
            out.witness = w;
            return out;
        case CellVerdict::split: {
            const double m = c.lo + (c.hi - c.lo) / 2;
            if (c.depth >= max_depth || !(m > c.lo && m < c.hi)) {
                if (out.status == Status::proved) {
                    out.status = Status::inconclusive;
                    out.witness = Interval(c.lo, c.hi);
                }
                break;
            }
            // right half first so the left half is examined first
            stack.push_back({m, c.hi, c.depth + 1});
            stack.push_back({c.lo, m, c.depth + 1});
            break;
        }
        }
    }
    return out;
}

// sup of t^a log^b t over [T, ∞), with (a, b) < (0, 0) and T > 1
Interval relative_sup(Rational a, int b, const Interval& T)
{
    auto h = [&](const Interval& t) {
        Interval v = pow(t, a);
        if (b != 0) v *= pown(log(t), b);
        return v;
    };
    if (a < Rational(0) && b > 0) {
        // maximum at t* = exp(b/|a|)
        const Interval log_star = Interval(static_cast<double>(b)) / Interval::from(-a);
        if (log(T).lo() >= log_star.hi()) return Interval(0.0, h(T).hi());
        const Interval star = exp(log_star);
        if (log(T).hi() <= log_star.lo()) return Interval(0.0, h(star).hi());
        return Interval(0.0, std::max(h(star).hi(), h(T).hi()));
    }
    return Interval(0.0, h(T).hi());
}

// g' > 0 on [T, ∞), proven by factoring out the leading term of g'
bool derivative_positive_beyond(const BoundExpr& dg, const Interval& T)
{
    if (dg.empty()) return false;
    const Term& lead = dg.leading();
    if (!(lead.coef.lo() > 0.0)) return false;
    Interval rel = lead.coef;
    for (const auto& term : dg.terms()) {
        if (&term == &lead) continue;
        rel += term.coef * relative_sup(term.p - lead.p, term.q - lead.q, T);
    }
    return rel.lo() > 0.0;
}

std::vector<std::pair<std::string, std::string>> region_params(const RegionParams& p)
{
    return {{"t0", p.t0.decimal_str()},
            {"t1", p.t1 ? p.t1->decimal_str() : "inf"},
            {"c", p.c.decimal_str()},
            {"phi", p.phi.decimal_str()},
            {"r0", std::to_string(p.r0)},
            {"C", p.C.decimal_str()}};
}

}  // namespace

VerificationReport verify_on_interval(const BoundExpr& diff, const Interval& t0, const Interval& t1,
                                      const ProverOptions& options)
{
    const double a = t0.lo();
    const double b = t1.hi();
    if (!(a > 0.0) || !(b > a)) throw ParameterError("verification needs 0 < t0 < t1");
    if (options.max_depth < 0 || options.seed_cells < 1) throw ParameterError("bad prover options");
    const BoundExpr dg = expr_derivative(diff);
    const int n = options.seed_cells;
    const double ratio = std::log(b / a);
    auto edge = [&](int k) {
        if (k == 0) return a;
        if (k == n) return b;
        return std::clamp(a * std::exp(ratio * k / n), a, b);
    };
    const auto outcomes = parallel_map(static_cast<std::size_t>(n), options.workers, [&](std::size_t k) {
        const double lo = edge(static_cast<int>(k));
        const double hi = edge(static_cast<int>(k) + 1);
        if (!(hi > lo)) return CellOutcome{};
        return prove_seed(diff, dg, lo, hi, options.max_depth);
    });

    VerificationReport report;
    report.status = Status::proved;
    for (const auto& o : outcomes) {
        report.cells += o.cells;
        report.depth = std::max(report.depth, o.depth);
        report.status = worst(report.status, o.status);
    }
    for (Status want : {Status::refuted, Status::inconclusive}) {
        if (report.status != want) continue;
        for (const auto& o : outcomes)
            if (o.status == want) {
                report.witness = o.witness;
                break;
            }
    }
    report.params = {{"t0", fmt17(a)}, {"t1", fmt17(b)}};
    return report;
}

VerificationReport verify_tail(const BoundExpr& diff, const Interval& t0, const ProverOptions& options)
{
    if (!(t0.lo() > 1.0)) throw ParameterError("tail verification needs t0 > 1");
    const Term& lead = diff.leading();
    if (!(lead.p >= Rational(0))) throw StructuralError("difference decays; no tail bound possible");
    if (!(lead.coef.lo() > 0.0)) {
        char buf[160];
        std::snprintf(buf, sizeof buf, "leading coefficient [%.9g, %.9g] of t^(%s) log^%d t is not positive",
                      lead.coef.lo(), lead.coef.hi(), lead.p.str().c_str(), lead.q);
        throw StructuralError(buf);
    }
    const BoundExpr dg = expr_derivative(diff);

    VerificationReport report;
    report.params = {{"t0", fmt17(t0.lo())}, {"t1", "inf"}};
    const Interval start(t0.lo());
    const Interval g0 = expr_eval(diff, start);
    report.cells = 1;
    if (g0.hi() < 0.0) {
        report.status = Status::refuted;
        report.witness = start;
        return report;
    }
    // smallest T = t0 2^k beyond which g is increasing
    Interval T = start;
    int k = 0;
    for (; k <= 200; ++k, T = T * Interval(2.0))
        if (derivative_positive_beyond(dg, T)) break;
    if (k > 200) {
        report.status = Status::inconclusive;
        report.note = "derivative sign not established";
        return report;
    }
    if (k == 0) {
        report.status = g0.lo() >= 0.0 ? Status::proved : Status::inconclusive;
        if (!report.proved()) report.witness = start;
        report.note = "increasing from t0";
        return report;
    }
    VerificationReport head = verify_on_interval(diff, start, Interval(T.hi()), options);
    head.params = report.params;
    head.cells += 1;
    head.note = "bisection on [t0, " + fmt17(T.hi()) + "], increasing beyond";
    return head;
}

BoundExpr corput1_difference(const Interval& C, const BoundCoefficients& a, Rational phi)
{
    BoundExpr e;
    e.add(C - a.at("a1"), Rational(1, 6), 1);
    e.add(-a.at("a2"), Rational(1, 6), 0);
    e.add(-a.at("a3"), phi / Rational(2), 0);
    e.add(-a.at("a4"), Rational(0), 0);
    return e;
}

BoundExpr corput2_normalized(const Interval& C, const BoundCoefficients& b)
{
    BoundExpr e;
    e.add(C - b.at("b1"), Rational(0), 1);
    e.add(-b.at("b2"), Rational(0), 0);
    e.add(-b.at("b3"), Rational(-1, 6), 0);
    return e;
}

BoundExpr rs_difference(const Interval& C, const Interval& offset)
{
    BoundExpr e;
    e.add(C, Rational(1, 6), 1);
    e.add(-(Interval(4.0) / constants::fourth_root_two_pi()), Rational(1, 4), 0);
    e.add(-offset, Rational(0), 0);
    return e;
}

VerificationReport certify_corput1(const RegionParams& p, const BoundCoefficients& a, const ProverOptions& options)
{
    if (!p.t1) throw ParameterError("finite region needs t1");
    VerificationReport r = verify_on_interval(corput1_difference(Interval::from(p.C), a, p.phi),
                                              Interval::from(p.t0), Interval::from(*p.t1), options);
    r.region = p.id;
    r.params = region_params(p);
    r.coefficients = a.values;
    return r;
}

VerificationReport certify_corput2(const RegionParams& p, const BoundCoefficients& b, const ProverOptions& options)
{
    VerificationReport r = verify_tail(corput2_normalized(Interval::from(p.C), b), Interval::from(p.t0), options);
    r.region = p.id;
    r.params = region_params(p);
    r.coefficients = b.values;
    return r;
}

std::int64_t soundness_violations(const BoundExpr& diff, double t0, double t1, int samples, std::uint64_t seed)
{
    if (!(t0 > 0.0) || !(t1 > t0)) throw ParameterError("sampling needs 0 < t0 < t1");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(std::log(t0), std::log(t1));
    std::int64_t bad = 0;
    for (int i = 0; i < samples; ++i)
        if (expr_eval_scalar(diff, std::exp(u(rng))) < 0.0) ++bad;
    return bad;
}

Status PipelineResult::overall() const
{
    return worst(main_bound, tail_bound);
}

namespace {

void set_param(VerificationReport& r, const std::string& key, const std::string& value)
{
    for (auto& [k, v] : r.params)
        if (k == key) v = value;
}

struct Span {
    Rational lo;
    std::optional<Rational> hi;
};

VerificationReport rs_report(const std::string& id, Rational t0, Rational t1, Rational C, const Interval& offset,
                             const ProverOptions& options)
{
    VerificationReport r =
        verify_on_interval(rs_difference(Interval::from(C), offset), Interval::from(t0), Interval::from(t1), options);
    r.region = id;
    r.params = {{"t0", t0.decimal_str()}, {"t1", t1.decimal_str()}, {"C", C.decimal_str()}, {"method", "riemann-siegel"}};
    r.coefficients = {{"offset", offset}};
    return r;
}

VerificationReport tail_report(RegionParams p, Rational C, const std::string& id, const ProverOptions& options)
{
    p.C = C;
    p.id = id;
    const RegionConstants rc = region_constants(p);
    return certify_corput2(p, corput2_coefficients(p, rc), options);
}

}  // namespace

PipelineResult reproduce_pipeline(const PipelineOptions& options)
{
    const Rational C(611, 1000);
    const ProverOptions& po = options.prover;
    PipelineResult out;
    std::vector<Span> spans;

    VerificationReport small = verify_small_t(Interval::from(C), 3.0, 200.0, options.small_t);
    small.region = "small-t";
    set_param(small, "C", C.decimal_str());
    out.core.push_back(small);
    spans.push_back({Rational(3), Rational(200)});

    const RsConstants rs = rs_bound_constants();
    const Rational t33(33'000'000), t38(38'000'000);
    out.core.push_back(rs_report("riemann-siegel-200", Rational(200), t33, C, rs.offset200, po));
    spans.push_back({Rational(200), t33});
    out.core.push_back(rs_report("riemann-siegel-3.3e7", t33, t38, C, rs.offset33e7, po));
    spans.push_back({t33, t38});

    const auto& ladder = bottleneck_ladder();
    const auto ladder_reports = parallel_map(ladder.size(), po.workers, [&](std::size_t i) {
        const RegionParams& p = ladder[i].params;
        ProverOptions inner = po;
        inner.workers = 1;
        return certify_corput1(p, corput1_coefficients(p, region_constants(p)), inner);
    });
    for (std::size_t i = 0; i < ladder.size(); ++i) {
        out.core.push_back(ladder_reports[i]);
        spans.push_back({ladder[i].params.t0, ladder[i].params.t1});
    }

    const RegionParams& tail = tail_variants().at(0).params;
    out.core.push_back(tail_report(tail, C, "tail-0.611", po));
    spans.push_back({tail.t0, std::nullopt});
    out.core.push_back(tail_report(tail, Rational(566, 1000), "tail-0.566", po));

    // chain [3, 200], [200, 3.3e7], ..., [8.97e17, ∞) must have no gaps
    out.adjacent = true;
    for (std::size_t i = 0; i + 1 < spans.size(); ++i) {
        if (!spans[i].hi || !(*spans[i].hi == spans[i + 1].lo)) {
            out.adjacent = false;
            out.adjacency_note = "gap after " + out.core[i].region;
            break;
        }
    }
    if (out.adjacent) out.adjacency_note = "regions cover [3, inf) with shared endpoints";

    out.main_bound = out.adjacent ? Status::proved : Status::inconclusive;
    for (std::size_t i = 0; i + 1 < out.core.size(); ++i) out.main_bound = worst(out.main_bound, out.core[i].status);
    out.tail_bound = out.core.back().status;

    if (options.supplementary) {
        VerificationReport s = verify_small_t(Interval::from(Rational(595, 1000)), 3.0, 200.0, options.small_t);
        s.region = "small-t-0.595";
        set_param(s, "C", "0.595");
        out.supplementary.push_back(s);
        out.supplementary.push_back(tail_report(tail_variants().at(1).params, C, "tail-7.00e11", po));
    }
    return out;
}

std::vector<Rational> GridRange::points() const
{
    if (steps < 1) throw ParameterError("grid needs at least one step");
    if (hi < lo) throw ParameterError("grid range is reversed");
    std::vector<Rational> out;
    const Rational step = (hi - lo) / Rational(steps);
    for (int i = 0; i <= steps; ++i) out.push_back(lo + step * Rational(i));
    return out;
}

namespace {

struct Trial {
    bool proved = false;
    VerificationReport report;
    std::string error;
};

// Coefficients do not depend on C, so the last (c, φ, t1) is remembered.
struct CoefficientCache {
    bool valid = false;
    Rational c, phi;
    std::optional<Rational> t1;
    RegionParams params;
    std::optional<BoundCoefficients> coefficients;
    std::string error;
};

Trial try_region(const OptimizeRequest& req, CoefficientCache& cache, Rational c, Rational phi,
                 std::optional<Rational> t1, Rational C)
{
    Trial out;
    if (!cache.valid || cache.c != c || cache.phi != phi || cache.t1 != t1) {
        cache = {};
        cache.valid = true;
        cache.c = c;
        cache.phi = phi;
        cache.t1 = t1;
        RegionParams& p = cache.params;
        p.id = "optimized";
        p.t0 = req.t0;
        p.t1 = t1;
        p.c = c;
        p.phi = t1 ? phi : Rational(1, 3);
        try {
            p.validate();
            const RegionConstants rc = region_constants(p);
            cache.coefficients = t1 ? corput1_coefficients(p, rc) : corput2_coefficients(p, rc);
        } catch (const ParameterError& e) {
            cache.error = e.what();
        } catch (const DomainError& e) {
            cache.error = e.what();
        }
    }
    if (!cache.coefficients) {
        out.error = cache.error;
        return out;
    }
    RegionParams p = cache.params;
    p.C = C;
    try {
        out.report = t1 ? certify_corput1(p, *cache.coefficients, req.prover)
                        : certify_corput2(p, *cache.coefficients, req.prover);
        out.proved = out.report.proved();
    } catch (const StructuralError& e) {
        out.error = e.what();
    }
    return out;
}

struct Candidate {
    bool feasible = false;
    Rational c, phi;
    std::optional<Rational> t1;
    Rational C;
    VerificationReport report;
};

}  // namespace

OptimizeResult optimize_region(const OptimizeRequest& req)
{
    if (!(req.t0 > Rational(0))) throw ParameterError("t0 must be positive");
    if (req.objective == Objective::max_t1 && !(req.t1_cap > req.t0)) throw ParameterError("t1 cap must exceed t0");
    if (req.objective == Objective::min_C && req.t1 && !(*req.t1 > req.t0)) throw ParameterError("t1 must exceed t0");
    const bool tail = req.objective == Objective::min_C && !req.t1;

    std::int64_t evaluations = 0;
    CoefficientCache cache;
    auto attempt = [&](Rational c, Rational phi, std::optional<Rational> t1, Rational C) {
        ++evaluations;
        return try_region(req, cache, c, phi, t1, C);
    };

    // best value for one (c, φ); infeasible when even the easiest case fails
    auto solve = [&](Rational c, Rational phi) {
        Candidate cand;
        cand.c = c;
        cand.phi = tail ? Rational(1, 3) : phi;
        if (req.objective == Objective::max_t1) {
            const double t0d = req.t0.to_double();
            std::int64_t lo = static_cast<std::int64_t>(std::ceil(t0d + std::max(1.0, t0d * 1e-6)));
            std::int64_t hi = req.t1_cap.to_double() >= 9e18 ? static_cast<std::int64_t>(9e18)
                                                              : static_cast<std::int64_t>(req.t1_cap.to_double());
            Trial best = attempt(c, phi, Rational(lo), req.C);
            if (!best.proved) return cand;
            Trial top = attempt(c, phi, Rational(hi), req.C);
            if (top.proved) {
                lo = hi;
                best = top;
            } else {
                while (static_cast<double>(hi) > static_cast<double>(lo) * (1 + 1e-4) && hi - lo > 1) {
                    auto mid = static_cast<std::int64_t>(std::sqrt(static_cast<double>(lo)) *
                                                         std::sqrt(static_cast<double>(hi)));
                    mid = std::clamp(mid, lo + 1, hi - 1);
                    Trial t = attempt(c, phi, Rational(mid), req.C);
                    if (t.proved) {
                        lo = mid;
                        best = t;
                    } else {
                        hi = mid;
                    }
                }
            }
            cand.feasible = true;
            cand.t1 = Rational(lo);
            cand.C = req.C;
            cand.report = best.report;
        } else {
            const std::int64_t scale = 100000;
            std::int64_t lo = 0, hi = scale;  // C = k / scale; C = 1 must be feasible
            Trial best = attempt(c, phi, req.t1, Rational(hi, scale));
            if (!best.proved) return cand;
            while (hi - lo > 1) {
                const std::int64_t mid = lo + (hi - lo) / 2;
                Trial t = attempt(c, phi, req.t1, Rational(mid, scale));
                if (t.proved) {
                    hi = mid;
                    best = t;
                } else {
                    lo = mid;
                }
            }
            cand.feasible = true;
            cand.t1 = req.t1;
            cand.C = Rational(hi, scale);
            cand.report = best.report;
        }
        return cand;
    };

    auto better = [&](const Candidate& x, const Candidate& y) {
        if (!x.feasible) return false;
        if (!y.feasible) return true;
        if (req.objective == Objective::max_t1) {
            if (*x.t1 != *y.t1) return *y.t1 < *x.t1;
        } else if (x.C != y.C) {
            return x.C < y.C;
        }
        if (x.c != y.c) return x.c < y.c;
        return x.phi < y.phi;
    };

    const std::vector<Rational> cs = req.c.points();
    const std::vector<Rational> phis = tail ? std::vector<Rational>{Rational(1, 3)} : req.phi.points();
    Candidate best;
    for (const Rational& c : cs)
        for (const Rational& phi : phis) {
            Candidate cand = solve(c, phi);
            if (better(cand, best)) best = cand;
        }

    if (best.feasible) {
        Rational dc = (req.c.hi - req.c.lo) / Rational(req.c.steps);
        Rational dphi = (req.phi.hi - req.phi.lo) / Rational(req.phi.steps);
        for (int r = 0; r < req.refinements; ++r) {
            dc = dc / Rational(2);
            dphi = dphi / Rational(2);
            const Candidate centre = best;
            for (int i = -1; i <= 1; ++i)
                for (int j = -1; j <= 1; ++j) {
                    if (i == 0 && j == 0) continue;
                    if (tail && j != 0) continue;
                    const Rational c = centre.c + dc * Rational(i);
                    const Rational phi = centre.phi + dphi * Rational(j);
                    if (c < req.c.lo || req.c.hi < c) continue;
                    if (!tail && (phi < req.phi.lo || req.phi.hi < phi)) continue;
                    Candidate cand = solve(c, phi);
                    if (better(cand, best)) best = cand;
                }
        }
    }

    OptimizeResult out;
    out.evaluations = evaluations;
    out.feasible = best.feasible;
    if (!best.feasible) {
        out.C = req.C;
        out.t1 = req.t1;
        out.note = req.objective == Objective::max_t1
                       ? "no grid point proves the bound just above t0 at C = " + req.C.decimal_str()
                       : "no grid point proves the bound with C <= 1";
        return out;
    }
    out.c = best.c;
    out.phi = best.phi;
    out.t1 = best.t1;
    out.C = best.C;
    out.report = best.report;
    out.note = req.objective == Objective::max_t1 ? "largest t1 within relative 1e-4" : "smallest C on a 1e-5 grid";
    return out;
}

}  // namespace zetabound
