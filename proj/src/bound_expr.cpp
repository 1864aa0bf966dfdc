#include "zetabound/bound_expr.hpp"

#include <cmath>
#include <cstdio>

namespace zetabound {

BoundExpr& BoundExpr::add(const Interval& coef, Rational p, int q)
{
    if (q < 0) throw ParameterError("log exponent must be non-negative");
    for (auto& t : terms_)
        if (t.p == p && t.q == q) {
            t.coef += coef;
            return *this;
        }
    terms_.push_back({coef, p, q});
    return *this;
}

const Term& BoundExpr::leading() const
{
    if (terms_.empty()) throw ParameterError("empty expression has no leading term");
    const Term* best = &terms_.front();
    for (const auto& t : terms_)
        if (t.p > best->p || (t.p == best->p && t.q > best->q)) best = &t;
    return *best;
}

std::string BoundExpr::str() const
{
    std::string out;
    char buf[128];
    for (const auto& t : terms_) {
        std::snprintf(buf, sizeof buf, "%s[%.9g, %.9g] t^(%s) log^%d t", out.empty() ? "" : " + ", t.coef.lo(),
                      t.coef.hi(), t.p.str().c_str(), t.q);
        out += buf;
    }
    return out.empty() ? "0" : out;
}

Interval expr_eval(const BoundExpr& e, const Interval& t)
{
    if (!(t.lo() > 0.0)) throw DomainError("expression evaluation needs t > 0");
    Interval sum(0.0);
    const Interval L = log(t);
    for (const auto& term : e.terms()) {
        Interval v = term.coef;
        if (term.p != Rational(0)) v *= pow(t, term.p);
        if (term.q != 0) v *= pown(L, term.q);
        sum += v;
    }
    return sum;
}

double expr_eval_scalar(const BoundExpr& e, double t)
{
    double sum = 0.0;
    const double L = std::log(t);
    for (const auto& term : e.terms())
        sum += term.coef.mid() * std::pow(t, term.p.to_double()) * std::pow(L, term.q);
    return sum;
}

BoundExpr expr_derivative(const BoundExpr& e)
{
    BoundExpr out;
    for (const auto& term : e.terms()) {
        const Rational p1 = term.p - Rational(1);
        if (term.p != Rational(0)) out.add(term.coef * Interval::from(term.p), p1, term.q);
        if (term.q != 0) out.add(term.coef * Interval(static_cast<double>(term.q)), p1, term.q - 1);
    }
    return out;
}

}  // namespace zetabound
