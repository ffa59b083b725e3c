#ifndef EQUIMULT_SINGULAR_HPP
#define EQUIMULT_SINGULAR_HPP

#include <array>
#include <stdexcept>

#include "equimult/jets.hpp"
#include "equimult/poly.hpp"

namespace equimult {

/// Raised when a polynomial cannot serve as a curve germ at the origin.
class InvalidGerm : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A plane curve germ f at the origin together with its multiplicity.
class CurveGerm {
public:
    explicit CurveGerm(BiPoly f) : f_(std::move(f)) {
        if (f_.is_zero()) throw InvalidGerm("zero polynomial has undefined multiplicity");
        if (f_.constant_term() != 0) throw InvalidGerm("origin not on curve: nonzero constant term");
        m_ = order(f_);
    }

    const BiPoly& f() const { return f_; }
    unsigned m() const { return m_; }

private:
    BiPoly f_;
    unsigned m_ = 0;
};

inline unsigned multiplicity(const BiPoly& f) { return CurveGerm(f).m(); }

/// The degree-m form f_m.
inline BiPoly tangent_cone(const BiPoly& f) {
    const CurveGerm germ(f);
    return homogeneous_part(f, static_cast<int>(germ.m()));
}

/// Image of <f_x, f_y> + <x,y>^m in the jet space Q[x,y]/<x,y>^m.
///
/// Both partials have order >= m-1, so any multiple u*f_x with u(0) = 0 lies in
/// <x,y>^m. Hence the jets of f_x and f_y alone span the whole image, and they
/// only see the degree-(m-1) part, i.e. the partials of the tangent cone.
inline JetSubspace equimult_ideal_jet(const CurveGerm& germ) {
    const unsigned m = germ.m();
    const std::array gens{to_jet_vector(partial(germ.f(), Var::x), m),
                          to_jet_vector(partial(germ.f(), Var::y), m)};
    return JetSubspace(MonoBasis(m), gens);
}

inline JetSubspace equimult_ideal_jet(const BiPoly& f) { return equimult_ideal_jet(CurveGerm(f)); }

/// Unitangentiality by rank: f_m = c * l^m for a linear form l exactly when the
/// partials of f_m are proportional, i.e. the ideal image has rank 1.
///
/// Deciding this over Q is the same as over C. If f_m = c*(alpha*x + beta*y)^m
/// with complex alpha, beta and rational coefficients, then either alpha = 0
/// (f_m is a multiple of y^m) or the ratio t = beta/alpha equals
/// coeff(x^{m-1}y) / (m * coeff(x^m)), which is rational; in both cases the
/// partials are rationally proportional. Conversely proportional partials over
/// Q are proportional over C. For m = 1 the germ is smooth with one tangent
/// line and counts as unitangential.
inline bool is_unitangential(const CurveGerm& germ) { return equimult_ideal_jet(germ).rank() == 1; }
inline bool is_unitangential(const BiPoly& f) { return is_unitangential(CurveGerm(f)); }

/// True iff the nonzero binary form h of degree m equals c*(alpha*x + beta*y)^m,
/// decided by matching coefficients against the binomial expansion.
inline bool is_linear_power(const BiPoly& h, unsigned m) {
    auto coeff = [&](unsigned k) { return h.coeff({m - k, k}); }; // coefficient of x^{m-k} y^k
    const Rational lead = coeff(0);
    if (lead == 0) {
        for (unsigned k = 0; k < m; ++k) {
            if (coeff(k) != 0) return false;
        }
        return coeff(m) != 0;
    }
    const Rational t = coeff(1) / (lead * m);
    Rational t_pow = 1;
    for (unsigned k = 0; k <= m; ++k) {
        if (coeff(k) != lead * Rational(binomial(m, k)) * t_pow) return false;
        t_pow *= t;
    }
    return true;
}

/// Cross-check of is_unitangential that never looks at a rank.
inline bool is_unitangential_by_binomial(const CurveGerm& germ) {
    return is_linear_power(homogeneous_part(germ.f(), static_cast<int>(germ.m())), germ.m());
}

/// Colength of the equimultiplicity ideal at the origin.
inline unsigned deg_Z(const CurveGerm& germ) {
    return static_cast<unsigned>(equimult_ideal_jet(germ).codimension());
}
inline unsigned deg_Z(const BiPoly& f) { return deg_Z(CurveGerm(f)); }

/// Dimension of {(a0, b0) : a0*f_x + b0*f_y = 0 mod <x,y>^m}.
inline unsigned section_ambiguity(const CurveGerm& germ) {
    return 2 - static_cast<unsigned>(equimult_ideal_jet(germ).rank());
}
inline unsigned section_ambiguity(const BiPoly& f) { return section_ambiguity(CurveGerm(f)); }

struct SingularityReport {
    unsigned m = 0;
    BiPoly tangent_cone;
    bool unitangential = false;
    unsigned degZ = 0;
    unsigned ambiguity = 0;

    friend bool operator==(const SingularityReport&, const SingularityReport&) = default;
};

/// All local invariants at once. Throws std::logic_error if the rank test and
/// the binomial cross-check disagree, which would be an internal fault.
inline SingularityReport analyze(const BiPoly& f) {
    const CurveGerm germ(f);
    const JetSubspace ideal = equimult_ideal_jet(germ);
    const std::size_t rank = ideal.rank();
    if (rank < 1 || rank > 2) throw std::logic_error("equimultiplicity ideal rank outside {1, 2}");

    SingularityReport r;
    r.m = germ.m();
    r.tangent_cone = homogeneous_part(f, static_cast<int>(r.m));
    r.unitangential = rank == 1;
    r.degZ = static_cast<unsigned>(ideal.codimension());
    r.ambiguity = static_cast<unsigned>(2 - rank);
    if (r.unitangential != is_unitangential_by_binomial(germ)) {
        throw std::logic_error("unitangentiality: rank test and binomial pattern disagree");
    }
    return r;
}

} // namespace equimult

#endif
