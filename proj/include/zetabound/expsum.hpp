#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "zetabound/interval.hpp"

namespace zetabound {

/// Phase n -> f(n) as an enclosure; the summand is e(f(n)) = exp(2πi f(n)).
using Phase = std::function<Interval(std::int64_t)>;

/// |Σ e(f(n))| as value ± error (error covers every rounding step).
struct BruteSum {
    double value = 0.0;
    double error = 0.0;
    Interval enclosure() const { return Interval(std::max(0.0, value - error), value + error); }
};

/// Largest range brute_sum accepts.
constexpr std::int64_t kBruteSumLimit = 10'000'000;

BruteSum brute_sum(const Phase& phase, std::int64_t a, std::int64_t b);
/// out[k] = |Σ_{n=a}^{a+k-1} e(f(n))| for k = 0..count.
std::vector<BruteSum> brute_prefix_sums(const Phase& phase, std::int64_t a, std::int64_t count);

/// (1/π)(1/U + 1/(1-V)), 0 < U <= V < 1.
Interval kusmin_landau_bound(const Interval& U, const Interval& V);
Interval kusmin_landau_bound(double U, double V);

/// Right side of Weyl differencing for Σ_{n=N+1}^{N+L} e(f(n)) with shifts up
/// to M; every s'_m is brute-forced.
Interval weyl_rhs(const Phase& phase, std::int64_t L, std::int64_t M, std::int64_t N);

/// f(x) = (t/2π) log(Kr + x), g(x) = f(m + x) - f(x).
struct LogPhase {
    double t = 0.0;
    std::int64_t K = 0;
    std::int64_t r = 0;
    std::int64_t m = 1;

    Interval f(const Interval& x) const;
    Interval g(const Interval& x) const;
    Interval g_prime(const Interval& x) const;
    Interval g_second(const Interval& x) const;
};

struct PhaseQuantities {
    Interval W;
    Interval lambda;
    Interval mu;
    /// √(m/(πW)) for the phase's m
    Interval Delta;
    std::int64_t M = 0;
    std::int64_t K = 0;
    Interval K0;
    Interval c;
};

/// Checks K >= 2, r >= 2, m >= 1, K >= K0 > 1 and 0 < c < 3.
PhaseQuantities phase_quantities(const LogPhase& phase, const Interval& K0, const Interval& c);

struct SpanCheck {
    Interval span;   // g'(K-1-m) - g'(0)
    Interval bound;  // mKμ/W
    bool holds = false;
};
SpanCheck gprime_span_bound(const LogPhase& phase, const PhaseQuantities& q);

/// m/W <= g''(x) <= mλ/W, certified at x.
bool second_derivative_sandwich(const LogPhase& phase, const PhaseQuantities& q, const Interval& x);

/// p(ε) and P(ε); ε may be an interval, the result encloses every branch it meets.
Interval p_eps(const Interval& eps, const Interval& Delta, const Interval& W, std::int64_t m);
Interval P_eps(const Interval& eps, const Interval& Delta, const Interval& W, std::int64_t m);

/// Part-1 bound for |Σ_{n=0}^{L-1-m} e(g(n))|. Fractional parts within 1e-12
/// of an integer are evaluated with both floors and the smaller bound kept.
Interval sdt_part1_bound(const LogPhase& phase, const PhaseQuantities& q, std::int64_t L, const Interval& Delta);

/// Part-2 bound 4μK/√(πW) m^{1/2} + μK m/W + 4√(W/π) m^{-1/2} + 1 - 6/π.
Interval sdt_part2_bound(const PhaseQuantities& q, std::int64_t m);

struct EasySums {
    std::int64_t M = 0;
    Interval sum_inv_sqrt, sum_one, sum_sqrt, sum_lin;
    Interval bound_inv_sqrt, bound_one, bound_sqrt, bound_lin;
    bool holds() const;
};
EasySums easy_sums(std::int64_t M);

struct AlphaBeta {
    Interval alpha;
    Interval beta;
    bool positive() const { return alpha.positive() && beta.positive(); }
};
AlphaBeta alpha_beta(const PhaseQuantities& q);
/// (K/W^{1/3} + c)(αK + βW^{2/3})
Interval block_bound(const PhaseQuantities& q, const AlphaBeta& ab);

// ---- lemma sweep ----

struct SweepOptions {
    std::vector<double> t_values{5e6, 1e7};
    Rational phi{1, 3};
    Interval c = Interval::decimal("1.82");
    /// Extra fixed Δ used in Part 1 besides √(m/πW).
    Interval fixed_delta = Interval::decimal("0.1");
    unsigned workers = 1;
};

struct BoundTally {
    std::string name;
    std::int64_t cases = 0;
    std::int64_t violations = 0;
    /// min over cases of (bound.lo - oracle.hi); negative only via violations
    double min_margin = 1e300;
    /// Violation when the oracle is certainly above the bound.
    void record(const Interval& bound, const Interval& oracle);
    /// Pass/fail record for checks without a numeric margin.
    void record(bool holds);
    void merge(const BoundTally& o);
};

struct SweepReport {
    std::vector<BoundTally> tallies;  // part1, part2, block, span, sandwich
    std::int64_t monotonicity_flags = 0;
    std::string summary() const;
    bool passed() const;
};

SweepReport lemma_sweep(const SweepOptions& options = {});

/// Kusmin-Landau on random phases αn + β (and slightly curved variants).
BoundTally kusmin_landau_suite(std::uint64_t seed, int instances);
/// Weyl differencing on random smooth phases with L, M <= 64.
BoundTally weyl_suite(std::uint64_t seed, int instances);

struct StructuralReport {
    std::int64_t parameter_sets = 0;
    double max_delta = 0.0;           // upper endpoint
    bool delta_below_sixth = true;
    bool delta_below_sharp = true;    // Δ < 2/(5π^{5/6})
    bool M_below_K = true;
    bool alpha_beta_positive = true;
    double min_beta_w = 1e300;        // lower endpoint of β W^{1/3}
    bool P_sup_holds = true;          // P(ε) <= 1 + 5/(πΔ) - 3/π on the ε-grid
    std::int64_t P_checks = 0;
    bool easy_sums_hold = true;
    bool passed() const;
};

/// Checks over admissible (t, φ, r, m) samples; `samples` random sets for
/// the P bound, EasySums up to `easy_limit`.
StructuralReport structural_checks(std::uint64_t seed, int samples, std::int64_t easy_limit);

}  // namespace zetabound
