// Exact exponent calculus for the admissibility regions, regularity
// exponents, TT* feasibility, and the Sobolev embedding relation.

#include "hyperdirac/strichartz.hpp"

#include <stdexcept>

namespace hyperdirac {

namespace {

const Rational kZero(0);
const Rational kHalf(1, 2);

bool is_corner_point(const ExponentPair& e) {
    return e.inv_p == kZero && e.inv_q == kHalf;
}

} // namespace

bool is_admissible_triangle(const Geometry& g, const ExponentPair& e) {
    if (is_corner_point(e))
        return true;
    const bool open_box = e.inv_p > kZero && e.inv_p < kHalf && e.inv_q > kZero
        && e.inv_q < kHalf;
    if (!open_box)
        return false;
    const Rational rhs = Rational(g.n - 1, 2) * (kHalf - e.inv_q);
    return e.inv_p >= rhs;
}

bool is_admissible_square(const Geometry& g, const ExponentPair& e) {
    (void)g;
    if (is_corner_point(e))
        return true;
    return e.inv_p >= kZero && e.inv_p < kHalf && e.inv_q > kZero && e.inv_q < kHalf;
}

Rational regularity_exponent(const Geometry& g, const ExponentPair& e) {
    if (!is_admissible_square(g, e))
        throw invalid_argument_error("regularity_exponent: pair is not square-admissible");

    const Rational gap = kHalf - e.inv_q;
    const Rational excess = Rational(g.n - 1, 2) * gap - e.inv_p;
    const Rational max_form = Rational(g.n + 1, 2) * gap
        + (excess > kZero ? excess : kZero);

    // two-branch form printed alongside the max form
    const Rational branch_form = (e.inv_p >= Rational(g.n - 1, 2) * gap)
        ? Rational(g.n + 1, 2) * gap
        : Rational(g.n) * gap - e.inv_p;
    if (max_form != branch_form)
        throw std::logic_error("regularity_exponent: branch forms disagree");
    return max_form;
}

TTStarFeasibility ttstar_feasible(const Geometry& g, const ExponentPair& e) {
    TTStarFeasibility out;
    out.long_time_ok = e.inv_p < kHalf; // p > 2; endpoint p = 2 excluded
    // 1/p' - 1/p = 1 - 2/p
    const Rational gap = Rational(1) - Rational(2) * e.inv_p;
    const Rational rhs = Rational(1) - Rational(g.n - 1) * (kHalf - e.inv_q);
    out.short_time_ok = kZero <= gap && gap <= rhs;
    return out;
}

bool sobolev_embedding_ok(const Geometry& g, const Rational& s1, const Rational& inv_q1,
                          const Rational& s2, const Rational& inv_q2) {
    // 1 < q1 <= q2 < inf  <=>  0 < 1/q2 <= 1/q1 < 1
    if (!(kZero < inv_q2 && inv_q2 <= inv_q1 && inv_q1 < Rational(1)))
        return false;
    if (!(s1 >= s2 && s2 >= kZero))
        return false;
    return s1 - s2 == Rational(g.n) * (inv_q1 - inv_q2);
}

} // namespace hyperdirac
