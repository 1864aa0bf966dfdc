#include "zetabound/expsum.hpp"

#include <cmath>
#include <cstdio>
#include <random>

#include "zetabound/complex_interval.hpp"
#include "zetabound/parallel.hpp"

namespace zetabound {

namespace {

// e(x) = exp(2πi x). The integer part is removed first (exactly) so the
// trigonometric argument stays small.
ComplexInterval unit_phase(const Interval& x)
{
    const double k = std::floor(x.lo());
    const Interval frac = std::abs(k) < 0x1p52 ? x - Interval(k) : x;
    return expi(constants::two_pi() * frac);
}

BruteSum to_brute(const Interval& magnitude)
{
    const double v = magnitude.mid();
    const double e = std::max(magnitude.hi() - v, v - magnitude.lo());
    return {v, std::nextafter(e, INFINITY)};
}

Interval k_of(std::int64_t n) { return Interval(static_cast<double>(n)); }

}  // namespace

BruteSum brute_sum(const Phase& phase, std::int64_t a, std::int64_t b)
{
    if (b < a) return {};
    if (b - a >= kBruteSumLimit) throw ParameterError("brute_sum range exceeds the oracle limit");
    CompensatedSum re;
    CompensatedSum im;
    for (std::int64_t n = a; n <= b; ++n) {
        const ComplexInterval z = unit_phase(phase(n));
        re.add(z.re);
        im.add(z.im);
    }
    return to_brute(abs(ComplexInterval(re.value(), im.value())));
}

std::vector<BruteSum> brute_prefix_sums(const Phase& phase, std::int64_t a, std::int64_t count)
{
    if (count < 0) throw ParameterError("negative prefix count");
    if (count > kBruteSumLimit) throw ParameterError("brute_sum range exceeds the oracle limit");
    std::vector<BruteSum> out;
    out.reserve(static_cast<std::size_t>(count) + 1);
    out.push_back({});
    CompensatedSum re;
    CompensatedSum im;
    for (std::int64_t k = 0; k < count; ++k) {
        const ComplexInterval z = unit_phase(phase(a + k));
        re.add(z.re);
        im.add(z.im);
        out.push_back(to_brute(abs(ComplexInterval(re.value(), im.value()))));
    }
    return out;
}

Interval kusmin_landau_bound(const Interval& U, const Interval& V)
{
    if (!(U.lo() > 0.0) || !(V.hi() < 1.0) || U.lo() > V.hi())
        throw ParameterError("Kusmin-Landau needs 0 < U <= V < 1");
    return constants::inv_pi() * (Interval(1.0) / U + Interval(1.0) / (Interval(1.0) - V));
}

Interval kusmin_landau_bound(double U, double V) { return kusmin_landau_bound(Interval(U), Interval(V)); }

Interval weyl_rhs(const Phase& phase, std::int64_t L, std::int64_t M, std::int64_t N)
{
    if (L < 1 || M < 1) throw ParameterError("Weyl differencing needs L, M >= 1");
    CompensatedSum inner;
    const Interval Mi = k_of(M);
    for (std::int64_t m = 1; m <= M && m < L; ++m) {
        const Phase diff = [&phase, m](std::int64_t r) { return phase(m + r) - phase(r); };
        const BruteSum s = brute_sum(diff, N + 1, N + L - m);
        inner.add((Interval(1.0) - k_of(m) / Mi) * s.enclosure());
    }
    return (k_of(L + M - 1) / Mi) * (k_of(L) + Interval(2.0) * inner.value());
}

// ---- f and g ----

Interval LogPhase::f(const Interval& x) const
{
    return Interval(t) / constants::two_pi() * log(k_of(K * r) + x);
}

Interval LogPhase::g(const Interval& x) const { return f(k_of(m) + x) - f(x); }

Interval LogPhase::g_prime(const Interval& x) const
{
    const Interval a = k_of(K * r) + x;
    return -(Interval(t) / constants::two_pi() * k_of(m) / (a * (a + k_of(m))));
}

Interval LogPhase::g_second(const Interval& x) const
{
    const Interval a = k_of(K * r) + x;
    const Interval b = a + k_of(m);
    return Interval(t) / constants::two_pi() * k_of(m) * (Interval(2.0) * a + k_of(m)) / (sqr(a) * sqr(b));
}

PhaseQuantities phase_quantities(const LogPhase& phase, const Interval& K0, const Interval& c)
{
    if (phase.K < 2 || phase.r < 2 || phase.m < 1) throw ParameterError("phase needs K, r >= 2 and m >= 1");
    if (!(phase.t > 0.0)) throw ParameterError("phase needs t > 0");
    if (!(K0.lo() > 1.0) || K0.lo() > static_cast<double>(phase.K))
        throw ParameterError("phase needs K >= K0 > 1");
    if (!(c.lo() > 0.0) || !(c.hi() < 3.0)) throw ParameterError("phase needs 0 < c < 3");
    PhaseQuantities q;
    q.K = phase.K;
    q.K0 = K0;
    q.c = c;
    const Interval K = k_of(phase.K);
    const Interval r1 = k_of(phase.r + 1);
    q.W = constants::pi() * pown(r1, 3) * pown(K, 3) / Interval(phase.t);
    q.lambda = Interval::from(Rational((phase.r + 1) * (phase.r + 1) * (phase.r + 1), phase.r * phase.r * phase.r));
    const Interval l13 = pow(q.lambda, Rational(1, 3));
    q.mu = Interval(0.5) * sqr(l13) * (Interval(1.0) + Interval(1.0) / ((Interval(1.0) - Interval(1.0) / K0) * l13));
    q.Delta = sqrt(k_of(phase.m) / (constants::pi() * q.W));
    const auto M = ceil_exact(c * pow(q.W, Rational(1, 3)));
    if (!M) throw ParameterError("M = ceil(c W^{1/3}) undecidable");
    q.M = *M;
    return q;
}

SpanCheck gprime_span_bound(const LogPhase& phase, const PhaseQuantities& q)
{
    if (phase.m >= phase.K) throw ParameterError("span bound needs m < K");
    SpanCheck out;
    out.span = phase.g_prime(k_of(phase.K - 1 - phase.m)) - phase.g_prime(Interval(0.0));
    out.bound = k_of(phase.m) * k_of(phase.K) * q.mu / q.W;
    out.holds = out.span.hi() <= out.bound.lo();
    return out;
}

bool second_derivative_sandwich(const LogPhase& phase, const PhaseQuantities& q, const Interval& x)
{
    const Interval g2 = phase.g_second(x);
    const Interval lower = k_of(phase.m) / q.W;
    return lower.hi() <= g2.lo() && g2.hi() <= (lower * q.lambda).lo();
}

Interval p_eps(const Interval& eps_in, const Interval& Delta, const Interval& W, std::int64_t m)
{
    if (!(Delta.lo() > 0.0) || !(Delta.hi() < 0.5)) throw ParameterError("p(ε) needs 0 < Δ < 1/2");
    const auto clipped = intersect(eps_in, Interval(0.0, 1.0));
    if (!clipped) throw ParameterError("p(ε) needs 0 <= ε <= 1");
    const Interval eps = *clipped;
    const Interval one_minus = Interval(1.0) - Delta;
    std::optional<Interval> out;
    auto join = [&](const Interval& v) { out = out ? hull(*out, v) : v; };

    if (eps.lo() < Delta.hi()) {
        const Interval e(eps.lo(), std::min(eps.hi(), Delta.hi()));
        join(Interval(1.0) + Interval(2.0) / (constants::pi() * Delta) + W / k_of(m) * (Delta - e));
    }
    const double b_lo = std::max(eps.lo(), Delta.lo());
    const double b_hi = std::min(eps.hi(), one_minus.hi());
    if (b_lo <= b_hi) join(constants::inv_pi() * (Interval(1.0) / Delta + Interval(1.0) / Interval(b_lo, b_hi)));
    if (eps.hi() > one_minus.lo()) join(Interval(0.0));
    return *out;
}

namespace {

Interval slope(const Interval& Delta, const Interval& W, std::int64_t m)
{
    return Interval(1.0) + Interval(2.0) * W * Delta / k_of(m) + Interval(2.0) / (constants::pi() * Delta);
}

// Fractional-part candidates of v. Within 1e-12 of an integer both floors
// are returned.
std::vector<Interval> fractional_candidates(const Interval& v)
{
    const double fl = std::floor(v.mid());
    std::vector<Interval> out;
    auto add = [&](double k) {
        if (const auto e = intersect(v - Interval(k), Interval(0.0, 1.0))) out.push_back(*e);
    };
    add(fl);
    const Interval e = v - Interval(fl);
    if (e.lo() < 1e-12) add(fl - 1.0);
    if (e.hi() > 1.0 - 1e-12) add(fl + 1.0);
    return out;
}

}  // namespace

Interval P_eps(const Interval& eps, const Interval& Delta, const Interval& W, std::int64_t m)
{
    return slope(Delta, W, m) * eps + p_eps(eps, Delta, W, m);
}

Interval sdt_part1_bound(const LogPhase& phase, const PhaseQuantities& q, std::int64_t L, const Interval& Delta)
{
    if (!(phase.m < L && L <= phase.K)) throw ParameterError("Part 1 needs m < L <= K");
    const Interval s = slope(Delta, q.W, phase.m);
    const Interval head = (k_of(phase.m) * k_of(phase.K) * q.mu / q.W - Interval(1.0)) * s -
                          Interval(2.0) / (constants::pi() * Delta);
    std::optional<Interval> best;
    for (const Interval& e1 : fractional_candidates(phase.g_prime(Interval(0.0))))
        for (const Interval& e2 : fractional_candidates(phase.g_prime(k_of(L - 1 - phase.m)))) {
            const Interval b = head + P_eps(e1, Delta, q.W, phase.m) + P_eps(Interval(1.0) - e2, Delta, q.W, phase.m);
            if (!best || b.hi() < best->hi()) best = b;
        }
    if (!best) throw ParameterError("fractional part of g' could not be enclosed");
    return *best;
}

Interval sdt_part2_bound(const PhaseQuantities& q, std::int64_t m)
{
    if (m < 1 || m > q.M) throw ParameterError("Part 2 needs 1 <= m <= M");
    const Interval K = k_of(q.K);
    const Interval mi = k_of(m);
    const Interval sm = sqrt(mi);
    return Interval(4.0) * q.mu * K / sqrt(constants::pi() * q.W) * sm + q.mu * K * mi / q.W +
           Interval(4.0) * sqrt(q.W / constants::pi()) / sm + Interval(1.0) - Interval(6.0) * constants::inv_pi();
}

bool EasySums::holds() const
{
    return sum_inv_sqrt.hi() <= bound_inv_sqrt.lo() && sum_one.intersects(bound_one) &&
           sum_sqrt.hi() <= bound_sqrt.lo() && sum_lin.hi() <= bound_lin.lo();
}

EasySums easy_sums(std::int64_t M)
{
    if (M < 1) throw ParameterError("EasySums needs M >= 1");
    CompensatedSum a, b, c, d;
    const Interval Mi = k_of(M);
    for (std::int64_t m = 1; m <= M; ++m) {
        const Interval w = Interval(1.0) - k_of(m) / Mi;
        const Interval sm = sqrt(k_of(m));
        a.add(w / sm);
        b.add(w);
        c.add(w * sm);
        d.add(w * k_of(m));
    }
    EasySums out;
    out.M = M;
    out.sum_inv_sqrt = a.value();
    out.sum_one = b.value();
    out.sum_sqrt = c.value();
    out.sum_lin = d.value();
    const Interval sM = sqrt(Mi);
    out.bound_inv_sqrt = Interval::from(Rational(4, 3)) * sM;
    out.bound_one = Interval(0.5) * (Mi - Interval(1.0));
    out.bound_sqrt = Interval::from(Rational(4, 15)) * Mi * sM;
    out.bound_lin = sqr(Mi) / Interval(6.0);
    return out;
}

AlphaBeta alpha_beta(const PhaseQuantities& q)
{
    const Interval w13 = pow(q.W, Rational(1, 3));
    const Interval w23 = sqr(w13);
    const Interval& mu = q.mu;
    const Interval& c = q.c;
    AlphaBeta out;
    out.alpha = Interval(1.0) / c +
                Interval(32.0) * mu / (Interval(15.0) * constants::sqrt_pi()) * sqrt(c + Interval(1.0) / w13) +
                mu * c / (Interval(3.0) * w13) + mu / (Interval(3.0) * w23);
    const Interval six_pi = Interval(6.0) * constants::inv_pi();
    out.beta = Interval(32.0) / (Interval(3.0) * sqrt(constants::pi() * c)) +
               (six_pi - Interval(1.0)) / (c * w23) + (Interval(1.0) - six_pi) / w13;
    return out;
}

Interval block_bound(const PhaseQuantities& q, const AlphaBeta& ab)
{
    const Interval w13 = pow(q.W, Rational(1, 3));
    const Interval K = k_of(q.K);
    return (K / w13 + q.c) * (ab.alpha * K + ab.beta * sqr(w13));
}

// ---- tallies ----

void BoundTally::record(const Interval& bound, const Interval& oracle)
{
    ++cases;
    if (oracle.lo() > bound.hi()) ++violations;
    min_margin = std::min(min_margin, bound.lo() - oracle.hi());
}

void BoundTally::record(bool holds)
{
    ++cases;
    if (!holds) ++violations;
}

void BoundTally::merge(const BoundTally& o)
{
    cases += o.cases;
    violations += o.violations;
    min_margin = std::min(min_margin, o.min_margin);
}

std::string SweepReport::summary() const
{
    std::string out;
    char buf[160];
    for (const auto& t : tallies) {
        if (t.min_margin < 1e299)
            std::snprintf(buf, sizeof buf, "%s: %lld cases, %lld violations, min margin %.6g\n", t.name.c_str(),
                          static_cast<long long>(t.cases), static_cast<long long>(t.violations), t.min_margin);
        else
            std::snprintf(buf, sizeof buf, "%s: %lld cases, %lld violations\n", t.name.c_str(),
                          static_cast<long long>(t.cases), static_cast<long long>(t.violations));
        out += buf;
    }
    std::snprintf(buf, sizeof buf, "g' monotonicity flags: %lld\n", static_cast<long long>(monotonicity_flags));
    out += buf;
    return out;
}

bool SweepReport::passed() const
{
    for (const auto& t : tallies)
        if (t.violations != 0 || t.cases == 0) return false;
    return true;
}

namespace {

struct SweepTask {
    double t;
    std::int64_t K;
    std::int64_t r;
    std::int64_t m;  // 0: block bound on f
    Interval K0;
};

struct TaskResult {
    BoundTally part1{"part1"}, part2{"part2"}, block{"block"}, span{"span"}, sandwich{"sandwich"};
    std::int64_t flags = 0;
};

TaskResult run_task(const SweepTask& task, const SweepOptions& options)
{
    TaskResult out;
    LogPhase phase{task.t, task.K, task.r, std::max<std::int64_t>(task.m, 1)};
    const PhaseQuantities q = phase_quantities(phase, task.K0, options.c);

    if (task.m == 0) {
        const AlphaBeta ab = alpha_beta(q);
        const Interval bound = block_bound(q, ab);
        const auto sums = brute_prefix_sums([&](std::int64_t n) { return phase.f(k_of(n)); }, 0, task.K);
        for (std::int64_t L = 1; L <= task.K; ++L) out.block.record(bound, sqr(sums[L].enclosure()));
        return out;
    }

    const std::int64_t m = task.m;
    const auto sums = brute_prefix_sums([&](std::int64_t n) { return phase.g(k_of(n)); }, 0, task.K - m);

    Interval prev = phase.g_prime(Interval(0.0));
    for (std::int64_t n = 1; n <= task.K - m; ++n) {
        const Interval cur = phase.g_prime(k_of(n));
        if (!(cur.lo() > prev.hi())) ++out.flags;
        prev = cur;
    }

    const Interval part2 = sdt_part2_bound(q, m);
    for (std::int64_t L = 1; L <= task.K; ++L) {
        const Interval oracle = L > m ? sums[L - m].enclosure() : Interval(0.0);
        out.part2.record(part2, oracle);
        if (L > m) {
            out.part1.record(sdt_part1_bound(phase, q, L, q.Delta), oracle);
            out.part1.record(sdt_part1_bound(phase, q, L, options.fixed_delta), oracle);
        }
    }

    out.span.record(gprime_span_bound(phase, q).holds);
    const std::int64_t span = task.K - m;
    for (int k = 0; k <= 16; ++k) {
        const Interval x = k_of(span) * Interval(k) / Interval(16.0);
        out.sandwich.record(second_derivative_sandwich(phase, q, x));
    }
    return out;
}

}  // namespace

SweepReport lemma_sweep(const SweepOptions& options)
{
    std::vector<SweepTask> tasks;
    for (double t : options.t_values) {
        const Interval ti(t);
        const Interval K0 = pow(ti, options.phi);
        const auto K = ceil_exact(K0);
        const auto n1 = floor_exact(sqrt(ti / constants::two_pi()));
        if (!K || !n1) throw ParameterError("K or n1 undecidable for the sweep");
        const std::int64_t R = *n1 / *K;
        for (std::int64_t r = 4; r <= R; ++r) {
            const PhaseQuantities q = phase_quantities(LogPhase{t, *K, r, 1}, K0, options.c);
            tasks.push_back({t, *K, r, 0, K0});
            for (std::int64_t m = 1; m <= q.M; ++m) tasks.push_back({t, *K, r, m, K0});
        }
    }
    const auto results = parallel_map(tasks.size(), options.workers,
                                      [&](std::size_t i) { return run_task(tasks[i], options); });
    TaskResult total;
    for (const auto& r : results) {
        total.part1.merge(r.part1);
        total.part2.merge(r.part2);
        total.block.merge(r.block);
        total.span.merge(r.span);
        total.sandwich.merge(r.sandwich);
        total.flags += r.flags;
    }
    SweepReport report;
    report.tallies = {total.part1, total.part2, total.block, total.span, total.sandwich};
    report.monotonicity_flags = total.flags;
    return report;
}

BoundTally kusmin_landau_suite(std::uint64_t seed, int instances)
{
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> frac(0.02, 0.98);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_int_distribution<int> shift(-5, 5);
    std::uniform_int_distribution<std::int64_t> start(-1000, 1000);
    std::uniform_int_distribution<std::int64_t> length(1, 2000);
    BoundTally tally{"kusmin-landau"};
    for (int i = 0; i < instances; ++i) {
        const double alpha = frac(rng);
        const double z = shift(rng);
        const double beta = unit(rng);
        const std::int64_t a = start(rng);
        const std::int64_t b = a + length(rng) - 1;
        // Odd instances get a small curvature keeping f' inside (z+U, z+V).
        double gamma = 0.0;
        if (i % 2 == 1) gamma = unit(rng) * (0.99 - alpha) / (2.0 * static_cast<double>(b - a + 1));
        const Interval slope = Interval(z) + Interval(alpha);
        const Phase phase = [=](std::int64_t n) {
            const Interval d = k_of(n - a);
            return slope * k_of(n) + Interval(beta) + Interval(gamma) * sqr(d);
        };
        // f' = z + α + 2γ(x - a) on [a, b]
        const Interval U = slope - Interval(z);
        const Interval V = U + Interval(2.0) * Interval(gamma) * k_of(b - a);
        tally.record(kusmin_landau_bound(U, V), brute_sum(phase, a, b).enclosure());
    }
    return tally;
}

BoundTally weyl_suite(std::uint64_t seed, int instances)
{
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coef(-1.0, 1.0);
    std::uniform_real_distribution<double> small(-0.01, 0.01);
    std::uniform_int_distribution<std::int64_t> size(1, 64);
    std::uniform_int_distribution<std::int64_t> offset(-50, 50);
    BoundTally tally{"weyl"};
    for (int i = 0; i < instances; ++i) {
        const double a = coef(rng);
        const double b = small(rng);
        const double c = coef(rng) * 20.0;
        const std::int64_t L = size(rng);
        const std::int64_t M = size(rng);
        const std::int64_t N = offset(rng);
        const Phase phase = [=](std::int64_t n) {
            const Interval x = k_of(n);
            return Interval(a) * x + Interval(b) * sqr(x) + Interval(c) * log(x + Interval(100.0));
        };
        const BruteSum lhs = brute_sum(phase, N + 1, N + L);
        tally.record(weyl_rhs(phase, L, M, N), sqr(lhs.enclosure()));
    }
    return tally;
}

bool StructuralReport::passed() const
{
    return parameter_sets > 0 && delta_below_sixth && delta_below_sharp && M_below_K && alpha_beta_positive &&
           P_sup_holds && P_checks > 0 && easy_sums_hold && min_beta_w >= 24.53;
}

StructuralReport structural_checks(std::uint64_t seed, int samples, std::int64_t easy_limit)
{
    StructuralReport out;
    const Interval sharp = Interval(2.0) / (Interval(5.0) * pow(constants::pi(), Rational(5, 6)));
    struct Sample {
        Interval Delta, W;
        std::int64_t m;
    };
    std::vector<Sample> pool;
    const double ts[] = {5e6, 1e7, 3.8e7, 1e8, 1e9, 1e10, 1e12};
    const Rational phis[] = {Rational(1, 3), Rational(34, 100), Rational(35, 100)};
    const Interval cs[] = {Interval::decimal("0.5"), Interval::decimal("1.82"), Interval::decimal("2.9")};
    for (double t : ts)
        for (const Rational& phi : phis)
            for (const Interval& c : cs) {
                const Interval ti(t);
                const Interval K0 = pow(ti, phi);
                const auto K = ceil_exact(K0);
                const auto n1 = floor_exact(sqrt(ti / constants::two_pi()));
                if (!K || !n1) throw ParameterError("K or n1 undecidable");
                const std::int64_t R = *n1 / *K;
                for (std::int64_t r = 4; r <= R; ++r) {
                    const PhaseQuantities q1 = phase_quantities(LogPhase{t, *K, r, 1}, K0, c);
                    const AlphaBeta ab = alpha_beta(q1);
                    if (!ab.positive()) out.alpha_beta_positive = false;
                    out.min_beta_w = std::min(out.min_beta_w, (ab.beta * pow(q1.W, Rational(1, 3))).lo());
                    if (q1.M > *K - 1) out.M_below_K = false;
                    for (std::int64_t m = 1; m <= q1.M; ++m) {
                        const Interval Delta = sqrt(k_of(m) / (constants::pi() * q1.W));
                        ++out.parameter_sets;
                        out.max_delta = std::max(out.max_delta, Delta.hi());
                        if (!(Delta.lo() > 0.0 && Delta.hi() < 1.0 / 6.0)) out.delta_below_sixth = false;
                        if (!(Delta.hi() < sharp.lo())) out.delta_below_sharp = false;
                        pool.push_back({Delta, q1.W, m});
                    }
                }
            }

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    for (int s = 0; s < samples && !pool.empty(); ++s) {
        const Sample& smp = pool[pick(rng)];
        const Interval cap = Interval(1.0) + Interval(5.0) / (constants::pi() * smp.Delta) -
                             Interval(3.0) * constants::inv_pi();
        for (int k = 0; k <= 1000; ++k) {
            const Interval eps = Interval(static_cast<double>(k)) / Interval(1000.0);
            ++out.P_checks;
            if (!(P_eps(eps, smp.Delta, smp.W, smp.m).hi() <= cap.lo())) out.P_sup_holds = false;
        }
    }

    for (std::int64_t M = 1; M <= easy_limit; ++M)
        if (!easy_sums(M).holds()) out.easy_sums_hold = false;
    return out;
}

}  // namespace zetabound
