#include "zetabound/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>

#include "json.hpp"
#include "zetabound/constants.hpp"
#include "zetabound/expsum.hpp"
#include "zetabound/parallel.hpp"
#include "zetabound/verifier.hpp"
#include "zetabound/zeta.hpp"

namespace zetabound::cli {

using Json = nlohmann::ordered_json;

namespace {

const std::vector<std::pair<Command, std::string_view>> kCommands = {
    {Command::reproduce_paper, "reproduce-paper"}, {Command::verify_region, "verify-region"},
    {Command::verify_tail, "verify-tail"},         {Command::scan_zeta, "scan-zeta"},
    {Command::oracle_suite, "oracle-suite"},       {Command::compute_constants, "compute-constants"},
    {Command::optimize, "optimize"},
};

const std::vector<std::string> kCommon = {"out", "format", "workers", "depth", "cells"};

std::vector<std::string> keys_for(Command c)
{
    std::vector<std::string> k = kCommon;
    auto add = [&](std::initializer_list<const char*> more) { k.insert(k.end(), more.begin(), more.end()); };
    switch (c) {
    case Command::reproduce_paper: add({"supplementary"}); break;
    case Command::verify_region: add({"t0", "t1", "c", "phi", "C", "r0"}); break;
    case Command::verify_tail: add({"t0", "c", "phi", "C", "r0"}); break;
    case Command::scan_zeta: add({"t0", "t1", "step", "C"}); break;
    case Command::oracle_suite: add({"suite", "samples"}); break;
    case Command::compute_constants: add({"region", "t0", "t1", "c", "phi", "r0"}); break;
    case Command::optimize:
        add({"t0", "t1", "C", "objective", "c_lo", "c_hi", "c_steps", "phi_lo", "phi_hi", "phi_steps", "t1_cap",
             "refinements"});
        break;
    }
    return k;
}

std::string g17(double x)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

Json interval_json(const Interval& x) { return Json::array({g17(x.lo()), g17(x.hi())}); }

Json certificate_json(const VerificationReport& r)
{
    Json j;
    j["region"] = r.region;
    Json params = Json::object();
    for (const auto& [k, v] : r.params) params[k] = v;
    j["params"] = params;
    Json coefs = Json::object();
    for (const auto& [k, v] : r.coefficients) coefs[k] = interval_json(v);
    j["coefficients"] = coefs;
    j["status"] = std::string(to_string(r.status));
    j["cells"] = r.cells;
    j["depth"] = r.depth;
    j["witness"] = r.witness ? interval_json(*r.witness) : Json(nullptr);
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

std::string param(const VerificationReport& r, const std::string& key)
{
    for (const auto& [k, v] : r.params)
        if (k == key) return v;
    return "";
}

std::string csv_quote(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

std::string certificates_csv(const std::vector<VerificationReport>& reports)
{
    std::string out = "region,t0,t1,c,phi,C,status,cells,depth";
    for (int i = 1; i <= 4; ++i) {
        const std::string k = "k" + std::to_string(i);
        out += "," + k + "_name," + k + "_lo," + k + "_hi";
    }
    out += "\n";
    for (const auto& r : reports) {
        std::vector<std::string> cols = {r.region,      param(r, "t0"),  param(r, "t1"),
                                         param(r, "c"), param(r, "phi"), param(r, "C"),
                                         std::string(to_string(r.status)), std::to_string(r.cells),
                                         std::to_string(r.depth)};
        for (std::size_t i = 0; i < 4; ++i) {
            if (i < r.coefficients.size()) {
                cols.push_back(r.coefficients[i].first);
                cols.push_back(g17(r.coefficients[i].second.lo()));
                cols.push_back(g17(r.coefficients[i].second.hi()));
            } else {
                cols.insert(cols.end(), 3, "");
            }
        }
        for (std::size_t i = 0; i < cols.size(); ++i) out += (i ? "," : "") + csv_quote(cols[i]);
        out += "\n";
    }
    return out;
}

int exit_for(Status s)
{
    switch (s) {
    case Status::proved: return exit_ok;
    case Status::refuted: return exit_refuted;
    case Status::inconclusive: return exit_inconclusive;
    }
    return exit_inconclusive;
}

// typed access to the parameter map
class Params {
public:
    explicit Params(const RunConfig& c) : map_(c.params) {}

    bool has(const std::string& k) const { return map_.count(k) != 0; }

    const std::string& str(const std::string& k) const
    {
        auto it = map_.find(k);
        if (it == map_.end()) throw UsageError("missing required key '" + k + "'");
        return it->second;
    }
    std::string str(const std::string& k, const std::string& fallback) const { return has(k) ? str(k) : fallback; }

    Rational rational(const std::string& k) const
    {
        try {
            return Rational::parse(str(k));
        } catch (const DomainError&) {
            throw UsageError("key '" + k + "' expects a decimal number, got '" + str(k) + "'");
        }
    }
    Rational rational(const std::string& k, Rational fallback) const { return has(k) ? rational(k) : fallback; }

    double real(const std::string& k, double fallback) const
    {
        if (!has(k)) return fallback;
        const std::string& v = str(k);
        std::size_t used = 0;
        double x = 0;
        try {
            x = std::stod(v, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != v.size() || !std::isfinite(x)) throw UsageError("key '" + k + "' expects a number, got '" + v + "'");
        return x;
    }

    std::int64_t integer(const std::string& k, std::int64_t fallback, std::int64_t lo, std::int64_t hi) const
    {
        if (!has(k)) return fallback;
        const std::string& v = str(k);
        std::size_t used = 0;
        long long x = 0;
        try {
            x = std::stoll(v, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != v.size() || v.empty()) throw UsageError("key '" + k + "' expects an integer, got '" + v + "'");
        if (x < lo || x > hi)
            throw UsageError("key '" + k + "' must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
        return x;
    }

    bool boolean(const std::string& k, bool fallback) const
    {
        if (!has(k)) return fallback;
        const std::string& v = str(k);
        if (v == "true" || v == "1" || v == "yes") return true;
        if (v == "false" || v == "0" || v == "no") return false;
        throw UsageError("key '" + k + "' expects true or false");
    }

private:
    const std::map<std::string, std::string>& map_;
};

struct Output {
    Json doc;
    std::string csv;  // empty: no CSV form
    Status status = Status::proved;
    std::string summary;
};

ProverOptions prover_options(const Params& p)
{
    ProverOptions o;
    o.max_depth = static_cast<int>(p.integer("depth", o.max_depth, 0, 200));
    o.seed_cells = static_cast<int>(p.integer("cells", o.seed_cells, 1, 1 << 20));
    o.workers = static_cast<unsigned>(p.integer("workers", 1, 1, 1024));
    return o;
}

// ParameterError and DomainError from the engine are configuration problems
template <typename Fn>
auto guarded(Fn&& fn) -> decltype(fn())
{
    try {
        return fn();
    } catch (const ParameterError& e) {
        throw UsageError(e.what());
    } catch (const DomainError& e) {
        throw UsageError(e.what());
    }
}

Output reproduce(const Params& p)
{
    PipelineOptions o;
    o.prover = prover_options(p);
    o.small_t.workers = o.prover.workers;
    o.supplementary = p.boolean("supplementary", true);
    const PipelineResult r = reproduce_pipeline(o);

    Output out;
    Json& d = out.doc;
    d["main_bound"] = std::string(to_string(r.main_bound));
    d["tail_bound"] = std::string(to_string(r.tail_bound));
    d["adjacent"] = r.adjacent;
    d["adjacency_note"] = r.adjacency_note;
    Json core = Json::array();
    for (const auto& c : r.core) core.push_back(certificate_json(c));
    d["certificates"] = core;
    Json sup = Json::array();
    for (const auto& c : r.supplementary) sup.push_back(certificate_json(c));
    d["supplementary"] = sup;
    out.csv = certificates_csv(r.core);
    out.status = r.overall();
    int proved = 0;
    for (const auto& c : r.core) proved += c.proved() ? 1 : 0;
    out.summary = std::to_string(proved) + "/" + std::to_string(r.core.size()) + " sub-certificates proved";
    return out;
}

RegionParams region_from(const Params& p, bool finite)
{
    RegionParams r;
    r.id = finite ? "custom-region" : "custom-tail";
    r.t0 = p.rational("t0");
    if (finite) r.t1 = p.rational("t1");
    r.c = p.rational("c");
    r.phi = finite ? p.rational("phi") : p.rational("phi", Rational(1, 3));
    r.C = p.rational("C");
    r.r0 = p.integer("r0", 4, 2, 1000000);
    guarded([&] {
        r.validate();
        return 0;
    });
    return r;
}

Output single(const VerificationReport& r)
{
    Output out;
    out.doc["certificate"] = certificate_json(r);
    out.csv = certificates_csv({r});
    out.status = r.status;
    out.summary = r.region + ": " + std::string(to_string(r.status));
    return out;
}

Output verify_region(const Params& p)
{
    const RegionParams r = region_from(p, true);
    const ProverOptions o = prover_options(p);
    return single(guarded([&] { return certify_corput1(r, corput1_coefficients(r, region_constants(r)), o); }));
}

Output verify_tail_cmd(const Params& p)
{
    const RegionParams r = region_from(p, false);
    const ProverOptions o = prover_options(p);
    const BoundCoefficients b = guarded([&] { return corput2_coefficients(r, region_constants(r)); });
    try {
        return single(guarded([&] { return certify_corput2(r, b, o); }));
    } catch (const StructuralError& e) {
        VerificationReport rep;
        rep.region = r.id;
        rep.status = Status::refuted;
        rep.coefficients = b.values;
        rep.note = std::string("structural: ") + e.what();
        rep.params = {{"t0", r.t0.decimal_str()}, {"t1", "inf"}, {"c", r.c.decimal_str()},
                      {"phi", r.phi.decimal_str()}, {"r0", std::to_string(r.r0)}, {"C", r.C.decimal_str()}};
        return single(rep);
    }
}

Output scan(const Params& p)
{
    const double t0 = p.real("t0", 3.0);
    const double t1 = p.real("t1", 200.0);
    const double step = p.real("step", 0.01);
    if (!(t0 >= 3.0) || !(t1 >= t0) || !(step > 0.0)) throw UsageError("scan-zeta needs 3 <= t0 <= t1 and step > 0");
    const double count = std::floor((t1 - t0) / step + 1e-9) + 1;
    if (count > 2e6) throw UsageError("scan-zeta limited to 2e6 points");
    if (t1 > 1e6) throw UsageError("scan-zeta limited to t <= 1e6");
    const auto n = static_cast<std::size_t>(count);
    const auto workers = static_cast<unsigned>(p.integer("workers", 1, 1, 1024));
    struct Row {
        double t;
        Interval abs, ratio;
    };
    const auto rows = parallel_map(n, workers, [&](std::size_t i) {
        const double t = std::min(t1, t0 + static_cast<double>(i) * step);
        const ZetaValue z = zeta_em(t);
        return Row{t, z.abs, z.abs / ratio_denominator(Interval(t))};
    });

    Output out;
    std::size_t best = 0;
    for (std::size_t i = 1; i < rows.size(); ++i)
        if (rows[i].ratio.lo() > rows[best].ratio.lo()) best = i;
    out.doc["points"] = rows.size();
    out.doc["max_ratio"] = {{"t", g17(rows[best].t)}, {"ratio", interval_json(rows[best].ratio)}};
    out.csv = "t,abs_lo,abs_hi,ratio_lo,ratio_hi\n";
    Json arr = Json::array();
    for (const auto& r : rows) {
        out.csv += g17(r.t) + "," + g17(r.abs.lo()) + "," + g17(r.abs.hi()) + "," + g17(r.ratio.lo()) + "," +
                   g17(r.ratio.hi()) + "\n";
        arr.push_back({{"t", g17(r.t)}, {"abs", interval_json(r.abs)}, {"ratio", interval_json(r.ratio)}});
    }
    out.status = Status::proved;
    if (p.has("C")) {
        // with C given: refuted if some ratio certainly exceeds it
        const Interval C = Interval::from(p.rational("C"));
        for (const auto& r : rows) {
            if (r.ratio.lo() > C.hi()) {
                out.status = Status::refuted;
                break;
            }
            if (r.ratio.hi() > C.lo()) out.status = Status::inconclusive;
        }
        out.doc["C"] = p.str("C");
        out.doc["status"] = std::string(to_string(out.status));
    }
    out.doc["rows"] = arr;
    char buf[160];
    std::snprintf(buf, sizeof buf, "%zu points, max ratio >= %.9g at t = %.17g", rows.size(), rows[best].ratio.lo(),
                  rows[best].t);
    out.summary = buf;
    return out;
}

Json tally_json(const BoundTally& t)
{
    Json j;
    j["name"] = t.name;
    j["cases"] = t.cases;
    j["violations"] = t.violations;
    j["min_margin"] = t.min_margin < 1e299 ? Json(g17(t.min_margin)) : Json(nullptr);
    return j;
}

Output oracle(const Params& p, std::uint64_t seed)
{
    const std::string suite = p.str("suite", "all");
    static const std::set<std::string> suites = {"all", "sweep", "kusmin-landau", "weyl", "structural"};
    if (!suites.count(suite)) throw UsageError("unknown suite '" + suite + "'");
    const int samples = static_cast<int>(p.integer("samples", 1000, 1, 10000000));
    const auto workers = static_cast<unsigned>(p.integer("workers", 1, 1, 1024));
    auto want = [&](const char* s) { return suite == "all" || suite == s; };

    Output out;
    bool passed = true;
    std::vector<BoundTally> tallies;
    out.doc["suite"] = suite;
    out.doc["samples"] = samples;
    if (want("sweep")) {
        SweepOptions o;
        o.workers = workers;
        const SweepReport r = lemma_sweep(o);
        Json s;
        Json ts = Json::array();
        for (const auto& t : r.tallies) {
            ts.push_back(tally_json(t));
            tallies.push_back(t);
        }
        s["tallies"] = ts;
        s["monotonicity_flags"] = r.monotonicity_flags;
        s["passed"] = r.passed();
        out.doc["sweep"] = s;
        passed = passed && r.passed();
    }
    if (want("kusmin-landau")) {
        const BoundTally t = kusmin_landau_suite(seed, samples);
        out.doc["kusmin_landau"] = tally_json(t);
        tallies.push_back(t);
        passed = passed && t.violations == 0;
    }
    if (want("weyl")) {
        const BoundTally t = weyl_suite(seed, samples);
        out.doc["weyl"] = tally_json(t);
        tallies.push_back(t);
        passed = passed && t.violations == 0;
    }
    if (want("structural")) {
        const StructuralReport r = structural_checks(seed, std::min(samples, 10000), 1000);
        Json s;
        s["parameter_sets"] = r.parameter_sets;
        s["max_delta"] = g17(r.max_delta);
        s["delta_below_sixth"] = r.delta_below_sixth;
        s["delta_below_sharp"] = r.delta_below_sharp;
        s["M_below_K"] = r.M_below_K;
        s["alpha_beta_positive"] = r.alpha_beta_positive;
        s["min_beta_w"] = g17(r.min_beta_w);
        s["P_sup_holds"] = r.P_sup_holds;
        s["P_checks"] = r.P_checks;
        s["easy_sums_hold"] = r.easy_sums_hold;
        s["passed"] = r.passed();
        out.doc["structural"] = s;
        passed = passed && r.passed();
    }
    out.doc["passed"] = passed;
    out.status = passed ? Status::proved : Status::refuted;
    out.csv = "suite,cases,violations,min_margin\n";
    std::int64_t violations = 0;
    for (const auto& t : tallies) {
        out.csv += t.name + "," + std::to_string(t.cases) + "," + std::to_string(t.violations) + "," +
                   (t.min_margin < 1e299 ? g17(t.min_margin) : "") + "\n";
        violations += t.violations;
    }
    out.summary = std::string(passed ? "passed" : "FAILED") + ", " + std::to_string(violations) + " violations";
    return out;
}

Json constants_json(const RegionParams& p, const RegionConstants& rc, const BoundCoefficients& coef,
                    const std::vector<std::string>* printed, bool& all_match, std::string& csv)
{
    Json j;
    j["region"] = p.id;
    j["params"] = {{"t0", p.t0.decimal_str()},
                   {"t1", p.t1 ? p.t1->decimal_str() : "inf"},
                   {"c", p.c.decimal_str()},
                   {"phi", p.phi.decimal_str()},
                   {"r0", std::to_string(p.r0)}};
    j["R0"] = rc.R0;
    j["R0_raw"] = interval_json(rc.R0_raw);
    // the other reading of R0, reported for comparison
    j["R0_raw_alt"] = interval_json(rc.R0_raw_alt);
    j["R0_alt"] = static_cast<std::int64_t>(std::ceil(rc.R0_raw_alt.hi()));
    j["R1"] = rc.R1 ? Json(*rc.R1) : Json(nullptr);
    j["M7_terms"] = rc.M7_terms;
    Json m;
    m["mu0"] = interval_json(rc.mu0);
    const std::vector<std::pair<std::string, std::optional<Interval>>> ms = {
        {"M1", rc.M1}, {"M2", rc.M2}, {"M3", rc.M3}, {"M4", rc.M4},
        {"M5", rc.M5}, {"M6", rc.M6}, {"M7", rc.M7}, {"M8", rc.M8}};
    for (const auto& [name, v] : ms)
        if (v) m[name] = interval_json(*v);
    j["intermediate"] = m;
    Json c;
    for (std::size_t i = 0; i < coef.values.size(); ++i) {
        const auto& [name, v] = coef.values[i];
        c[name] = interval_json(v);
        csv += p.id + "," + name + "," + g17(v.lo()) + "," + g17(v.hi());
        if (printed && i < printed->size()) {
            const bool ok = matches_printed(v, (*printed)[i]);
            all_match = all_match && ok;
            csv += "," + (*printed)[i] + "," + (ok ? "true" : "false");
        } else {
            csv += ",,";
        }
        csv += "\n";
    }
    j["coefficients"] = c;
    if (printed) {
        Json e;
        for (std::size_t i = 0; i < coef.values.size() && i < printed->size(); ++i)
            e[coef.values[i].first] = {{"expected", (*printed)[i]},
                                       {"matches", matches_printed(coef.values[i].second, (*printed)[i])}};
        j["expected"] = e;
    }
    return j;
}

Output compute_constants(const Params& p)
{
    Output out;
    out.csv = "region,name,lo,hi,expected,matches\n";
    bool all_match = true;
    Json regions = Json::array();
    auto emit = [&](const RegionParams& rp, const std::vector<std::string>* printed) {
        const RegionConstants rc = guarded([&] { return region_constants(rp); });
        BoundCoefficients coef;
        std::string note;
        try {
            coef = rp.t1 ? corput1_coefficients(rp, rc) : corput2_coefficients(rp, rc);
        } catch (const ParameterError& e) {
            // intermediate constants are still meaningful, e.g. below 3.8e7
            note = std::string("no coefficients: ") + e.what();
        }
        Json j = constants_json(rp, rc, coef, printed, all_match, out.csv);
        if (!note.empty()) j["note"] = note;
        regions.push_back(j);
    };

    const bool explicit_region = p.has("t0");
    if (explicit_region) {
        if (p.has("region")) throw UsageError("give either region or t0/t1/c/phi");
        RegionParams rp;
        rp.id = "custom";
        rp.t0 = p.rational("t0");
        if (p.has("t1")) rp.t1 = p.rational("t1");
        rp.c = p.rational("c");
        rp.phi = p.rational("phi", Rational(1, 3));
        rp.r0 = p.integer("r0", 4, 2, 1000000);
        guarded([&] {
            rp.validate();
            return 0;
        });
        emit(rp, nullptr);
    } else {
        for (const char* k : {"t1", "c", "phi", "r0"})
            if (p.has(k)) throw UsageError(std::string("key '") + k + "' needs t0");
        const std::string which = p.str("region", "all");
        bool found = false;
        for (const auto* list : {&bottleneck_ladder(), &tail_variants()})
            for (const auto& e : *list)
                if (which == "all" || which == e.params.id) {
                    emit(e.params, &e.expected);
                    found = true;
                }
        if (which == "all" || which == "riemann-siegel") {
            const RsConstants rs = rs_bound_constants();
            out.doc["riemann_siegel"] = {{"offset200", interval_json(rs.offset200)},
                                         {"offset33e7", interval_json(rs.offset33e7)},
                                         {"n1_200", rs.n1_200},
                                         {"n1_33e7", rs.n1_33e7},
                                         {"sqrt_ratio_33e7", interval_json(rs.sqrt_ratio_33e7)}};
            out.csv += "riemann-siegel,offset200," + g17(rs.offset200.lo()) + "," + g17(rs.offset200.hi()) + ",,\n";
            out.csv += "riemann-siegel,offset33e7," + g17(rs.offset33e7.lo()) + "," + g17(rs.offset33e7.hi()) + ",,\n";
            found = true;
        }
        if (!found) throw UsageError("unknown region '" + which + "'");
    }
    out.doc["regions"] = regions;
    out.doc["all_match"] = all_match;
    out.status = all_match ? Status::proved : Status::refuted;
    out.summary = std::to_string(regions.size()) + " regions, printed values " + (all_match ? "matched" : "NOT matched");
    return out;
}

Output optimize(const Params& p)
{
    OptimizeRequest req;
    req.t0 = p.rational("t0");
    if (req.t0 < Rational(38'000'000)) throw UsageError("optimize needs t0 >= 3.8e7");
    req.C = p.rational("C", req.C);
    const std::string obj = p.str("objective", "max_t1");
    if (obj == "max_t1") {
        req.objective = Objective::max_t1;
        if (p.has("t1")) throw UsageError("max_t1 searches t1; do not give it");
    } else if (obj == "min_C") {
        req.objective = Objective::min_C;
        if (p.has("t1")) req.t1 = p.rational("t1");
    } else {
        throw UsageError("objective must be max_t1 or min_C");
    }
    req.c.lo = p.rational("c_lo", req.c.lo);
    req.c.hi = p.rational("c_hi", req.c.hi);
    req.c.steps = static_cast<int>(p.integer("c_steps", req.c.steps, 1, 1000));
    req.phi.lo = p.rational("phi_lo", req.phi.lo);
    req.phi.hi = p.rational("phi_hi", req.phi.hi);
    req.phi.steps = static_cast<int>(p.integer("phi_steps", req.phi.steps, 1, 1000));
    req.t1_cap = p.rational("t1_cap", req.t1_cap);
    req.refinements = static_cast<int>(p.integer("refinements", req.refinements, 0, 20));
    req.prover = prover_options(p);
    const OptimizeResult r = guarded([&] { return optimize_region(req); });

    Output out;
    Json& d = out.doc;
    d["objective"] = obj;
    d["feasible"] = r.feasible;
    d["c"] = r.feasible ? Json(r.c.decimal_str()) : Json(nullptr);
    d["phi"] = r.feasible ? Json(r.phi.decimal_str()) : Json(nullptr);
    d["t1"] = r.t1 ? Json(r.t1->decimal_str()) : Json("inf");
    d["C"] = r.C.decimal_str();
    d["evaluations"] = r.evaluations;
    d["note"] = r.note;
    d["certificate"] = r.feasible ? certificate_json(r.report) : Json(nullptr);
    out.csv = certificates_csv(r.feasible ? std::vector<VerificationReport>{r.report} : std::vector<VerificationReport>{});
    out.status = r.feasible ? r.report.status : Status::inconclusive;
    out.summary = r.feasible ? "c = " + r.c.decimal_str() + ", phi = " + r.phi.decimal_str() +
                                   (obj == "max_t1" ? ", t1 = " + r.t1->decimal_str() : ", C = " + r.C.decimal_str())
                             : "infeasible: " + r.note;
    return out;
}

void write_file(const std::string& path, const std::string& content)
{
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw UsageError("cannot open output file '" + path + "'");
    f << content;
    f.close();
    if (!f) throw UsageError("cannot write output file '" + path + "'");
}

}  // namespace

const std::vector<std::string_view>& command_names()
{
    static const std::vector<std::string_view> names = [] {
        std::vector<std::string_view> v;
        for (const auto& [c, n] : kCommands) v.push_back(n);
        return v;
    }();
    return names;
}

Command parse_command(std::string_view name)
{
    for (const auto& [c, n] : kCommands)
        if (n == name) return c;
    throw UsageError("unknown command '" + std::string(name) + "'");
}

std::string_view to_string(Command c)
{
    for (const auto& [k, n] : kCommands)
        if (k == c) return n;
    return "?";
}

std::vector<std::string> command_keys(Command c) { return keys_for(c); }

const std::vector<std::string>& known_keys()
{
    static const std::vector<std::string> keys = [] {
        std::set<std::string> all{"seed"};
        for (const auto& [c, n] : kCommands)
            for (const auto& k : keys_for(c)) all.insert(k);
        return std::vector<std::string>(all.begin(), all.end());
    }();
    return keys;
}

std::map<std::string, std::string> read_config_file(const std::string& path)
{
    std::ifstream f(path);
    if (!f) throw UsageError("cannot read config file '" + path + "'");
    std::map<std::string, std::string> out;
    std::string line;
    int lineno = 0;
    auto trim = [](std::string s) {
        const auto b = s.find_first_not_of(" \t\r");
        if (b == std::string::npos) return std::string();
        const auto e = s.find_last_not_of(" \t\r");
        return s.substr(b, e - b + 1);
    };
    while (std::getline(f, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw UsageError(path + ":" + std::to_string(lineno) + ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        const auto& known = known_keys();
        if (std::find(known.begin(), known.end(), key) == known.end())
            throw UsageError(path + ":" + std::to_string(lineno) + ": unknown key '" + key + "'");
        out[key] = value;
    }
    return out;
}

RunResult run(const RunConfig& config)
{
    const std::vector<std::string> allowed = keys_for(config.command);
    for (const auto& [k, v] : config.params)
        if (std::find(allowed.begin(), allowed.end(), k) == allowed.end())
            throw UsageError("key '" + k + "' is not valid for " + std::string(to_string(config.command)));
    const Params p(config);
    const std::string format = p.str("format", "json");
    if (format != "json" && format != "csv") throw UsageError("format must be json or csv");
    if (p.has("out") && p.str("out").empty()) throw UsageError("empty output path");

    Output out;
    switch (config.command) {
    case Command::reproduce_paper: out = reproduce(p); break;
    case Command::verify_region: out = verify_region(p); break;
    case Command::verify_tail: out = verify_tail_cmd(p); break;
    case Command::scan_zeta: out = scan(p); break;
    case Command::oracle_suite: out = oracle(p, config.seed); break;
    case Command::compute_constants: out = compute_constants(p); break;
    case Command::optimize: out = optimize(p); break;
    }

    Json doc;
    doc["tool"] = "zetabound";
    doc["command"] = std::string(to_string(config.command));
    doc["command_line"] = config.command_line;
    doc["seed"] = config.seed;
    doc["status"] = std::string(to_string(out.status));
    for (auto& [k, v] : out.doc.items())
        if (k != "status") doc[k] = v;

    RunResult result;
    result.exit_code = exit_for(out.status);
    result.summary = out.summary;
    if (format == "csv") {
        if (out.csv.empty()) throw UsageError("no CSV form for this result");
        result.output = out.csv;
    } else {
        result.output = doc.dump(2) + "\n";
    }
    if (p.has("out")) write_file(p.str("out"), result.output);
    return result;
}

}  // namespace zetabound::cli
