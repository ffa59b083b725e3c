#ifndef EQUIMULT_DEFO_HPP
#define EQUIMULT_DEFO_HPP

#include <array>

#include "equimult/jets.hpp"
#include "equimult/poly.hpp"
#include "equimult/singular.hpp"

namespace equimult {

/// Algebraic criterion: f + eps*g is equimultiple along (x + eps*a, y + eps*b)
/// iff g - a*f_x - b*f_y lies in <x,y>^m.
inline bool is_equimultiple_along(const BiPoly& f, const BiPoly& g, const SectionGerm& s) {
    const CurveGerm germ(f);
    const BiPoly residual = g - s.a * partial(f, Var::x) - s.b * partial(f, Var::y);
    return has_order_at_least(residual, germ.m());
}

/// Same question answered from the definition. In the moving coordinates
/// u = x + eps*a, v = y + eps*b we have x = u - eps*a(u,v) to first order, so
/// the family written in (u, v) is f + eps*g composed with the inverse shift.
/// It is equimultiple iff both eps-components vanish to order m at u = v = 0.
inline bool is_equimultiple_along_direct(const BiPoly& f, const BiPoly& g, const SectionGerm& s) {
    const CurveGerm germ(f);
    const FirstOrderDef moved = dual_substitute({f, g}, {-s.a, -s.b});
    return has_order_at_least(moved.base, germ.m()) && has_order_at_least(moved.direction, germ.m());
}

/// g in <f_x, f_y> + <x,y>^m, tested in the jet space.
inline bool admits_section(const BiPoly& f, const BiPoly& g) {
    const CurveGerm germ(f);
    return equimult_ideal_jet(germ).contains(to_jet_vector(g, germ.m()));
}

/// Admissible constant terms (a0, b0) of sections. Higher-order terms of a and
/// b are unconstrained: (a - a0)*f_x already has order >= m.
struct SectionSolution {
    AffineSolutionSet solutions;

    bool empty() const { return solutions.empty; }
    std::size_t dimension() const { return solutions.dimension(); }

    /// The section with constant components (particular point).
    SectionGerm representative() const {
        if (solutions.empty) throw std::logic_error("no admissible section");
        return {BiPoly(solutions.particular[0]), BiPoly(solutions.particular[1])};
    }

    bool admits(const Rational& a0, const Rational& b0) const {
        const std::array point{a0, b0};
        return solutions.contains(point);
    }
};

inline SectionSolution solve_sections(const BiPoly& f, const BiPoly& g) {
    const CurveGerm germ(f);
    const unsigned m = germ.m();
    const std::array columns{to_jet_vector(partial(f, Var::x), m), to_jet_vector(partial(f, Var::y), m)};
    return {solve_affine(columns, to_jet_vector(g, m))};
}

} // namespace equimult

#endif
