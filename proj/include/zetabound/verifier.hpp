#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "zetabound/bound_expr.hpp"
#include "zetabound/constants.hpp"
#include "zetabound/report.hpp"
#include "zetabound/zeta.hpp"

namespace zetabound {

/// The inequality cannot hold for structural reasons (e.g. the leading
/// coefficient of a tail difference is not positive).
class StructuralError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct ProverOptions {
    int max_depth = 60;
    int seed_cells = 64;
    unsigned workers = 1;
};

/// Proves diff(t) >= 0 on [t0, t1] by bisection of a log-t grid.
VerificationReport verify_on_interval(const BoundExpr& diff, const Interval& t0, const Interval& t1,
                                      const ProverOptions& options = {});

/// Proves diff(t) >= 0 on [t0, ∞) for a (t^{1/6}-normalized) difference.
/// Throws StructuralError when the leading coefficient is not positive.
VerificationReport verify_tail(const BoundExpr& diff, const Interval& t0, const ProverOptions& options = {});

/// C t^{1/6} log t - (a1 t^{1/6} log t + a2 t^{1/6} + a3 t^{φ/2} + a4)
BoundExpr corput1_difference(const Interval& C, const BoundCoefficients& a, Rational phi);
/// (C - b1) log t - b2 - b3 t^{-1/6}
BoundExpr corput2_normalized(const Interval& C, const BoundCoefficients& b);
/// C t^{1/6} log t - 4 t^{1/4}/(2π)^{1/4} - offset
BoundExpr rs_difference(const Interval& C, const Interval& offset);

/// Certificates for one region given explicit coefficients.
VerificationReport certify_corput1(const RegionParams& p, const BoundCoefficients& a, const ProverOptions& options = {});
VerificationReport certify_corput2(const RegionParams& p, const BoundCoefficients& b, const ProverOptions& options = {});

/// Scalar midpoint checks: number of log-uniform samples in [t0, t1] where
/// the difference evaluates negative.
std::int64_t soundness_violations(const BoundExpr& diff, double t0, double t1, int samples, std::uint64_t seed);

struct PipelineOptions {
    ProverOptions prover;
    SmallTOptions small_t;
    /// Also run the supplementary checks (C = 0.595 on [3, 200], tail from 7.00e11).
    bool supplementary = true;
};

struct PipelineResult {
    std::vector<VerificationReport> core;          // the fifteen sub-certificates
    std::vector<VerificationReport> supplementary;
    bool adjacent = false;                         // region chain has no gaps
    std::string adjacency_note;
    Status main_bound = Status::inconclusive;       // C = 0.611 on [3, ∞)
    Status tail_bound = Status::inconclusive;       // C = 0.566 on [8.97e17, ∞)
    Status overall() const;
};

PipelineResult reproduce_pipeline(const PipelineOptions& options = {});

enum class Objective { max_t1, min_C };

struct GridRange {
    Rational lo;
    Rational hi;
    int steps = 1;  // number of intervals; steps + 1 grid points
    std::vector<Rational> points() const;
};

struct OptimizeRequest {
    Rational t0;
    std::optional<Rational> t1;  // min_C: fixed t1, empty = tail mode
    Rational C{611, 1000};
    GridRange c{Rational(180, 100), Rational(184, 100), 4};
    GridRange phi{Rational(3355, 10000), Rational(3360, 10000), 5};
    Objective objective = Objective::max_t1;
    /// upper end for the max_t1 search
    Rational t1_cap{897'000'000'000'000'000LL};
    int refinements = 2;
    ProverOptions prover;
};

struct OptimizeResult {
    bool feasible = false;
    Rational c;
    Rational phi;
    std::optional<Rational> t1;  // max_t1 result or the fixed t1
    Rational C;                  // min_C result or the given C
    std::int64_t evaluations = 0;
    VerificationReport report;   // certificate for the returned parameters
    std::string note;
};

OptimizeResult optimize_region(const OptimizeRequest& request);

}  // namespace zetabound
