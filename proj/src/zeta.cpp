#include "zetabound/zeta.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

#include "zetabound/parallel.hpp"

namespace zetabound {

namespace {

// Bernoulli numbers B_2, B_4, ..., B_30 as exact rationals.
constexpr std::array<std::pair<std::int64_t, std::int64_t>, 15> kBernoulli{{
    {1, 6},
    {-1, 30},
    {1, 42},
    {-1, 30},
    {5, 66},
    {-691, 2730},
    {7, 6},
    {-3617, 510},
    {43867, 798},
    {-174611, 330},
    {854513, 138},
    {-236364091, 2730},
    {8553103, 6},
    {-23749461029, 870},
    {8615841276005, 14322},
}};

constexpr int kMaxOrder = 14;

// B_{2k} / (2k)! for k = 1..15.
const std::array<Interval, 15>& bernoulli_coefficients()
{
    static const std::array<Interval, 15> table = [] {
        std::array<Interval, 15> out{};
        Interval factorial(1.0);
        int f = 1;
        for (std::size_t k = 1; k <= out.size(); ++k) {
            while (f < static_cast<int>(2 * k)) {
                ++f;
                factorial *= Interval(static_cast<double>(f));
            }
            const auto [num, den] = kBernoulli[k - 1];
            out[k - 1] = Interval::from(Rational(num, den)) / factorial;
        }
        return out;
    }();
    return table;
}

Interval log_of(std::int64_t n) { return log(Interval(static_cast<double>(n))); }

Interval inv_sqrt(std::int64_t n) { return Interval(1.0) / sqrt(Interval(static_cast<double>(n))); }

// Upper bound of |1/2 + j + i t| over the t-interval.
double modulus_hi(double re, const Interval& t)
{
    return sqrt(Interval(re) * Interval(re) + sqr(t)).hi();
}

}  // namespace

std::int64_t default_cutoff(double t)
{
    return static_cast<std::int64_t>(std::ceil(3.0 + std::abs(t) / 2.0));
}

ZetaValue zeta_em(const Interval& t, std::int64_t cutoff, int order)
{
    if (cutoff < 2) throw ParameterError("Euler-Maclaurin cutoff must be at least 2");
    if (order < 1 || order > kMaxOrder) throw ParameterError("Euler-Maclaurin order must lie in [1, 14]");
    const Interval N(static_cast<double>(cutoff));
    const ComplexInterval s(Interval(0.5), t);
    if ((constants::two_pi() * N).lo() < abs(s).hi())
        throw ParameterError("Euler-Maclaurin cutoff too small for the ordinate (need 2πN >= |s|)");

    // Dirichlet part sum_{n<N} n^{-s}.
    CompensatedSum re_sum;
    CompensatedSum im_sum;
    re_sum.add(Interval(1.0));
    for (std::int64_t n = 2; n < cutoff; ++n) {
        const Interval amp = inv_sqrt(n);
        const Interval phase = t * log_of(n);
        re_sum.add(amp * cos(phase));
        im_sum.add(-(amp * sin(phase)));
    }
    ComplexInterval total(re_sum.value(), im_sum.value());

    // N^{-s} = N^{-1/2} e^{-it log N}
    const Interval phase_n = t * log(N);
    const ComplexInterval n_pow_minus_s = inv_sqrt(cutoff) * ComplexInterval(cos(phase_n), -sin(phase_n));
    const ComplexInterval s_minus_one(Interval(-0.5), t);
    total += (N * n_pow_minus_s) / s_minus_one;
    total += Interval(0.5) * n_pow_minus_s;

    // Bernoulli corrections B_{2k}/(2k)! s(s+1)...(s+2k-2) N^{-s-2k+1}.
    const auto& coef = bernoulli_coefficients();
    ComplexInterval rising = s;
    Interval n_power = N;  // N^{2k-1}
    const Interval n_sq = N * N;
    for (int k = 1; k <= order; ++k) {
        if (k > 1) {
            rising = rising * (s + ComplexInterval(Interval(2.0 * k - 3.0))) *
                     (s + ComplexInterval(Interval(2.0 * k - 2.0)));
            n_power *= n_sq;
        }
        total += (coef[k - 1] / n_power) * (rising * n_pow_minus_s);
    }

    // Backlund: |R_v| <= |s+2v+1|/(σ+2v+1) |T_{v+1}|.
    Interval rising_mod(1.0);
    for (int j = 0; j <= 2 * order; ++j) rising_mod *= Interval(modulus_hi(0.5 + j, t));
    const Interval first_omitted = abs(coef[order]) * rising_mod * inv_sqrt(cutoff) / (n_power * n_sq);
    const Interval ratio = Interval(modulus_hi(0.5 + 2 * order + 1, t)) / Interval(0.5 + 2 * order + 1);
    const double radius = (ratio * first_omitted).hi();

    ZetaValue out;
    out.t = t;
    out.cutoff = cutoff;
    out.em_order = order;
    out.remainder = Interval(0.0, radius);
    out.re = widen(total.re, radius);
    out.im = widen(total.im, radius);
    const Interval modulus = abs(total);
    out.abs = Interval(std::max(0.0, (modulus - Interval(radius)).lo()), (modulus + Interval(radius)).hi());
    return out;
}

ZetaValue zeta_em(double t, std::int64_t cutoff, int order) { return zeta_em(Interval(t), cutoff, order); }

ZetaValue zeta_em(double t) { return zeta_em(Interval(t), default_cutoff(t), 6); }

Interval ratio_denominator(const Interval& t) { return pow(t, Rational(1, 6)) * log(t); }

Interval zeta_ratio(double t)
{
    if (!(t >= 3.0)) throw ParameterError("zeta_ratio requires t >= 3");
    return zeta_em(t).abs / ratio_denominator(Interval(t));
}

MainSumBoundParts main_sum_bound(double t)
{
    if (!(t >= 200.0)) throw ParameterError("main_sum_bound requires t >= 200");
    const Interval ti(t);
    const auto n1 = floor_exact(sqrt(ti / constants::two_pi()));
    if (!n1) throw ParameterError("floor of sqrt(t/2π) undecidable at this t");
    CompensatedSum re_sum;
    CompensatedSum im_sum;
    for (std::int64_t n = 1; n <= *n1; ++n) {
        const Interval amp = inv_sqrt(n);
        const Interval phase = ti * log_of(n);
        re_sum.add(amp * cos(phase));
        im_sum.add(amp * sin(phase));
    }
    MainSumBoundParts out;
    out.t = t;
    out.n1 = *n1;
    out.twice_main_sum = Interval(2.0) * abs(ComplexInterval(re_sum.value(), im_sum.value()));
    const Interval quarter = pow(ti, Rational(-1, 4));
    const Interval three_quarter = pow(ti, Rational(-3, 4));
    const Interval tail = Interval::decimal("0.127") * three_quarter;
    out.gabcke_terms = constants::gabcke_lead() * quarter + tail;
    out.gabcke_upper = Interval::decimal("1.463") * quarter + tail;
    return out;
}

namespace {

struct CellOutcome {
    Status status = Status::proved;
    std::int64_t cells = 0;
    int depth = 0;
    std::optional<Interval> witness;
};

CellOutcome verify_cell(const Interval& C, const Interval& seed, const SmallTOptions& options)
{
    CellOutcome out;
    struct Item {
        Interval cell;
        int depth;
    };
    std::vector<Item> stack{{seed, 0}};
    while (!stack.empty()) {
        const Item item = stack.back();
        stack.pop_back();
        ++out.cells;
        out.depth = std::max(out.depth, item.depth);
        const Interval& cell = item.cell;
        const ZetaValue z = zeta_em(cell, default_cutoff(cell.hi()), options.order);
        // t^{1/6} log t is increasing, so its minimum over the cell is at lo.
        const double allowed = (C * ratio_denominator(Interval(cell.lo()))).lo();
        if (z.abs.hi() <= allowed) continue;

        const double mid = cell.mid();
        const ZetaValue zm = zeta_em(Interval(mid), default_cutoff(mid), options.order);
        if (zm.abs.lo() > (C * ratio_denominator(Interval(mid))).hi()) {
            out.status = Status::refuted;
            out.witness = Interval(mid);
            return out;
        }
        if (item.depth >= options.max_depth || cell.is_point()) {
            if (out.status == Status::proved) {
                out.status = Status::inconclusive;
                out.witness = cell;
            }
            continue;
        }
        const auto [left, right] = bisect(cell);
        stack.push_back({right, item.depth + 1});
        stack.push_back({left, item.depth + 1});
    }
    return out;
}

std::string fmt(double x)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

}  // namespace

VerificationReport verify_small_t(const Interval& C, double t_lo, double t_hi, const SmallTOptions& options)
{
    if (!(t_lo >= 3.0) || !(t_hi > t_lo)) throw ParameterError("verify_small_t requires 3 <= t_lo < t_hi");
    if (!(C.lo() > 0.0)) throw ParameterError("verify_small_t requires C > 0");
    if (!(options.initial_width > 0.0)) throw ParameterError("initial cell width must be positive");

    const auto seeds = static_cast<std::size_t>(std::ceil((t_hi - t_lo) / options.initial_width));
    auto edge = [&](std::size_t k) {
        if (k >= seeds) return t_hi;
        return std::min(t_hi, t_lo + static_cast<double>(k) * options.initial_width);
    };
    const auto outcomes = parallel_map(seeds, options.workers, [&](std::size_t k) {
        return verify_cell(C, Interval(edge(k), edge(k + 1)), options);
    });

    VerificationReport report;
    report.status = Status::proved;
    for (const auto& o : outcomes) {
        report.cells += o.cells;
        report.depth = std::max(report.depth, o.depth);
        if (o.status != Status::proved && !report.witness) report.witness = o.witness;
        report.status = worst(report.status, o.status);
    }
    if (report.status == Status::refuted) {
        for (const auto& o : outcomes)
            if (o.status == Status::refuted) {
                report.witness = o.witness;
                break;
            }
    }
    report.params = {{"t0", fmt(t_lo)}, {"t1", fmt(t_hi)}, {"C", fmt(C.hi())},
                     {"method", "euler-maclaurin"}, {"order", std::to_string(options.order)}};
    return report;
}

VerificationReport verify_small_t(double C, double t_lo, double t_hi, const SmallTOptions& options)
{
    return verify_small_t(Interval(C), t_lo, t_hi, options);
}

}  // namespace zetabound
