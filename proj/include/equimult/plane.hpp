#ifndef EQUIMULT_PLANE_HPP
#define EQUIMULT_PLANE_HPP

#include <optional>
#include <stdexcept>
#include <string>

#include "equimult/jets.hpp"
#include "equimult/poly.hpp"
#include "equimult/singular.hpp"

namespace equimult {

/// A plane curve of degree <= d in P^2, in an affine chart with the marked
/// point p at the origin. Sections of O(d) are the polynomials of total
/// degree <= d in this chart.
class PlaneCurve {
public:
    /// If declared_m is given it must equal the order of f at the origin.
    PlaneCurve(BiPoly f, unsigned d, std::optional<unsigned> declared_m = std::nullopt)
        : germ_(std::move(f)), d_(d) {
        if (d_ < 1) throw std::invalid_argument("degree bound must be >= 1");
        if (*germ_.f().total_degree() > d_) {
            throw std::invalid_argument("degree bound violated: deg f = " +
                                        std::to_string(*germ_.f().total_degree()) + " > d = " +
                                        std::to_string(d_));
        }
        if (declared_m && *declared_m != germ_.m()) {
            throw std::invalid_argument("declared multiplicity " + std::to_string(*declared_m) +
                                        " differs from order " + std::to_string(germ_.m()));
        }
    }

    const CurveGerm& germ() const { return germ_; }
    const BiPoly& f() const { return germ_.f(); }
    unsigned d() const { return d_; }
    unsigned m() const { return germ_.m(); }

private:
    CurveGerm germ_;
    unsigned d_;
};

/// Number of monomials of total degree <= d.
inline unsigned sections_count(unsigned d) { return (d + 2) * (d + 1) / 2; }

inline unsigned dim_linear_system(int d) {
    if (d < 1) throw std::invalid_argument("dim_linear_system: d must be >= 1");
    return sections_count(static_cast<unsigned>(d)) - 1;
}

/// dim { G : deg G <= d, jet(G, m-1) in <f_x, f_y> mod <x,y>^m }, as the kernel
/// dimension of the linear conditions on the coefficients of G. The rows are
/// the annihilator of the ideal image pulled back along G -> jet(G).
inline unsigned h0_JZ(const PlaneCurve& c) {
    const JetSubspace ideal = equimult_ideal_jet(c.germ());
    const MonoBasis jets = ideal.basis();
    const MonoBasis sections(c.d() + 1);

    RationalMatrix constraints;
    for (const auto& functional : ideal.annihilator()) {
        RationalVector row(sections.size(), Rational(0));
        for (std::size_t col = 0; col < sections.size(); ++col) {
            if (auto idx = jets.index_of(sections.monomial(col))) row[col] = functional[*idx];
        }
        constraints.push_back(std::move(row));
    }
    return static_cast<unsigned>(sections.size() - matrix_rank(constraints, sections.size()));
}

inline int tangent_dim_Lm(const PlaneCurve& c) {
    const int h0 = static_cast<int>(h0_JZ(c));
    return is_unitangential(c.germ()) ? h0 - 2 : h0 - 1;
}

/// dim|L| - m(m+1)/2 + 2. Negative when the stratum is expected to be empty.
inline int expected_dim_Lm(int d, int m) {
    if (d < 1 || m < 1) throw std::invalid_argument("expected_dim_Lm: d and m must be >= 1");
    return static_cast<int>(dim_linear_system(d)) - m * (m + 1) / 2 + 2;
}

/// Jacobian of the conditions d^{i+j}F_a / dx^i dy^j = 0 (i + j <= m-1), where
/// F_a = f + sum a_kl x^k y^l, with respect to (x, y, a_kl) at x = y = 0, a = 0.
/// Columns are x, y, then a_kl in GrlexOrder for k + l <= d.
struct JacobianBlock {
    RationalMatrix matrix;
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::size_t rank = 0;
};

inline JacobianBlock jacobian_block(const PlaneCurve& c) {
    if (c.d() + 1 < c.m()) throw std::invalid_argument("jacobian_block: need d >= m - 1");
    const MonoBasis conditions(c.m());
    const MonoBasis coefficients(c.d() + 1);

    JacobianBlock jb;
    jb.rows = conditions.size();
    jb.cols = 2 + coefficients.size();
    for (std::size_t r = 0; r < jb.rows; ++r) {
        const Monomial ij = conditions.monomial(r);
        RationalVector row(jb.cols, Rational(0));
        // d/dx of d^{i+j}f/dx^i dy^j at 0 is (i+1)! j! * coeff(x^{i+1} y^j).
        row[0] = Rational(factorial(ij.x + 1) * factorial(ij.y)) * c.f().coeff({ij.x + 1, ij.y});
        row[1] = Rational(factorial(ij.x) * factorial(ij.y + 1)) * c.f().coeff({ij.x, ij.y + 1});
        // d/da_kl picks out x^k y^l, whose (i,j)-derivative at 0 is i! j! iff (k,l) = (i,j).
        row[2 + *coefficients.index_of(ij)] = Rational(factorial(ij.x) * factorial(ij.y));
        jb.matrix.push_back(std::move(row));
    }
    jb.rank = matrix_rank(jb.matrix, jb.cols);
    return jb;
}

struct DimensionReport {
    unsigned d = 0;
    unsigned m = 0;
    unsigned dim_L = 0;
    unsigned h0_JZ = 0;
    unsigned deg_Z = 0;
    bool unitangential = false;
    int tangent_dim = 0;
    int expected_dim = 0;
    std::size_t jacobian_rank = 0;
    bool smooth_of_expected = false;
};

/// Computes every dimension for (C, p). The Jacobian rank must be m(m+1)/2;
/// anything else is an internal fault. Disagreement of tangent and expected
/// dimension is reported through smooth_of_expected, not thrown.
inline DimensionReport verify_smooth_expected(const PlaneCurve& c) {
    if (c.d() < c.m()) {
        throw std::invalid_argument("degree bound violated: d = " + std::to_string(c.d()) +
                                    " < m = " + std::to_string(c.m()));
    }
    DimensionReport r;
    r.d = c.d();
    r.m = c.m();
    r.dim_L = dim_linear_system(static_cast<int>(c.d()));
    r.h0_JZ = h0_JZ(c);
    r.deg_Z = deg_Z(c.germ());
    r.unitangential = is_unitangential(c.germ());
    r.tangent_dim = tangent_dim_Lm(c);
    r.expected_dim = expected_dim_Lm(static_cast<int>(r.d), static_cast<int>(r.m));
    r.jacobian_rank = jacobian_block(c).rank;
    if (r.jacobian_rank != MonoBasis(r.m).size()) {
        throw std::logic_error("Jacobian block rank differs from m(m+1)/2");
    }
    r.smooth_of_expected = r.tangent_dim == r.expected_dim;
    return r;
}

} // namespace equimult

#endif
