#pragma once

#include <string>
#include <vector>

#include "zetabound/interval.hpp"

namespace zetabound {

/// coef · t^p · (log t)^q
struct Term {
    Interval coef;
    Rational p;
    int q = 0;
};

/// Finite sum of terms; terms with the same (p, q) are merged on insertion.
class BoundExpr {
public:
    BoundExpr() = default;
    BoundExpr& add(const Interval& coef, Rational p, int q);
    const std::vector<Term>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    /// Term with the fastest growth, ordered by (p, q) lexicographically.
    const Term& leading() const;
    std::string str() const;

private:
    std::vector<Term> terms_;
};

/// Enclosure over a t-interval; requires t.lo > 0.
Interval expr_eval(const BoundExpr& e, const Interval& t);
/// Same in plain double arithmetic with coefficient midpoints.
double expr_eval_scalar(const BoundExpr& e, double t);
BoundExpr expr_derivative(const BoundExpr& e);

}  // namespace zetabound
