#ifndef EQUIMULT_JETS_HPP
#define EQUIMULT_JETS_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "equimult/poly.hpp"
#include "equimult/rational.hpp"

namespace equimult {

using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVector>;

/// Reduced row echelon form of a row-major matrix. Zero rows are dropped,
/// so rows.size() is the rank and pivots[r] is the leading column of rows[r].
struct RowEchelon {
    RationalMatrix rows;
    std::vector<std::size_t> pivots;

    std::size_t rank() const { return rows.size(); }
};

/// Fraction-exact Gauss-Jordan elimination. The pivot is the first row with a
/// nonzero entry in the current column; no numerical pivoting is needed.
inline RowEchelon row_reduce(RationalMatrix rows, std::size_t ncols) {
    for (const auto& row : rows) {
        if (row.size() != ncols) throw std::invalid_argument("row_reduce: ragged matrix");
    }
    RowEchelon out;
    std::size_t next = 0;
    for (std::size_t col = 0; col < ncols && next < rows.size(); ++col) {
        std::size_t pivot = next;
        while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[next], rows[pivot]);

        const Rational inv = 1 / rows[next][col];
        for (auto& entry : rows[next]) entry *= inv;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == next || rows[r][col] == 0) continue;
            const Rational factor = rows[r][col];
            for (std::size_t c = col; c < ncols; ++c) rows[r][c] -= factor * rows[next][c];
        }
        out.pivots.push_back(col);
        ++next;
    }
    rows.resize(next);
    out.rows = std::move(rows);
    return out;
}

inline std::size_t matrix_rank(const RationalMatrix& rows, std::size_t ncols) {
    return row_reduce(rows, ncols).rank();
}

/// Monomials of total degree <= m-1, in GrlexOrder. These index coordinates
/// of Q[x,y] / <x,y>^m, a space of dimension m(m+1)/2.
class MonoBasis {
public:
    explicit MonoBasis(unsigned m) : m_(m) {
        if (m == 0) throw std::invalid_argument("MonoBasis: m must be >= 1");
    }

    unsigned m() const { return m_; }
    std::size_t size() const { return std::size_t{m_} * (m_ + 1) / 2; }

    /// Monomials of degree k occupy a contiguous block, x^k first.
    std::optional<std::size_t> index_of(Monomial mono) const {
        if (mono.degree() >= m_) return std::nullopt;
        const std::size_t k = mono.degree();
        return k * (k + 1) / 2 + mono.y;
    }

    Monomial monomial(std::size_t index) const {
        unsigned k = 0;
        while ((std::size_t{k} + 1) * (k + 2) / 2 <= index) ++k;
        const auto y = static_cast<unsigned>(index - std::size_t{k} * (k + 1) / 2);
        return {k - y, y};
    }

    std::vector<Monomial> monomials() const {
        std::vector<Monomial> out;
        out.reserve(size());
        for (unsigned k = 0; k < m_; ++k) {
            for (unsigned y = 0; y <= k; ++y) out.push_back({k - y, y});
        }
        return out;
    }

    friend bool operator==(const MonoBasis&, const MonoBasis&) = default;

private:
    unsigned m_;
};

struct JetVector {
    MonoBasis basis;
    RationalVector coords;

    bool is_zero() const {
        for (const auto& c : coords) {
            if (c != 0) return false;
        }
        return true;
    }

    /// The polynomial with these coordinates (degree < m).
    BiPoly to_poly() const {
        BiPoly p;
        for (std::size_t i = 0; i < coords.size(); ++i) p.add_term(basis.monomial(i), coords[i]);
        return p;
    }

    friend bool operator==(const JetVector&, const JetVector&) = default;
};

/// Coordinates of jet(p, m-1) in MonoBasis(m).
inline JetVector to_jet_vector(const BiPoly& p, unsigned m) {
    JetVector v{MonoBasis(m), {}};
    v.coords.assign(v.basis.size(), Rational(0));
    for (const auto& [mono, c] : p.terms()) {
        if (auto idx = v.basis.index_of(mono)) {
            v.coords[*idx] = c;
        } else {
            break;
        }
    }
    return v;
}

namespace detail {

inline const MonoBasis& common_basis(std::span<const JetVector> vectors, const MonoBasis& fallback) {
    for (const auto& v : vectors) {
        if (!(v.basis == fallback)) throw std::invalid_argument("jet vectors live in different jet spaces");
    }
    return fallback;
}

} // namespace detail

/// A subspace of the jet space, stored as canonical reduced row-echelon rows.
/// Equal subspaces have identical representations.
class JetSubspace {
public:
    explicit JetSubspace(MonoBasis basis) : basis_(basis) {}

    JetSubspace(MonoBasis basis, std::span<const JetVector> generators) : basis_(basis) {
        detail::common_basis(generators, basis_);
        RationalMatrix rows;
        rows.reserve(generators.size());
        for (const auto& g : generators) rows.push_back(g.coords);
        echelon_ = row_reduce(std::move(rows), basis_.size());
    }

    const MonoBasis& basis() const { return basis_; }
    std::size_t rank() const { return echelon_.rank(); }
    std::size_t codimension() const { return basis_.size() - rank(); }
    const std::vector<std::size_t>& pivots() const { return echelon_.pivots; }

    std::vector<JetVector> rows() const {
        std::vector<JetVector> out;
        for (const auto& r : echelon_.rows) out.push_back({basis_, r});
        return out;
    }

    /// Normal form of v modulo the subspace: pivot coordinates are cleared.
    JetVector reduce(const JetVector& v) const {
        check_basis(v);
        JetVector r = v;
        for (std::size_t i = 0; i < echelon_.rows.size(); ++i) {
            const Rational factor = r.coords[echelon_.pivots[i]];
            if (factor == 0) continue;
            for (std::size_t c = 0; c < r.coords.size(); ++c) {
                r.coords[c] -= factor * echelon_.rows[i][c];
            }
        }
        return r;
    }

    bool contains(const JetVector& v) const { return reduce(v).is_zero(); }

    /// One linear functional per non-pivot coordinate; together they vanish
    /// exactly on the subspace (the coordinates of the normal form).
    RationalMatrix annihilator() const {
        RationalMatrix out;
        std::size_t next_pivot = 0;
        for (std::size_t col = 0; col < basis_.size(); ++col) {
            if (next_pivot < pivots().size() && pivots()[next_pivot] == col) {
                ++next_pivot;
                continue;
            }
            RationalVector functional(basis_.size(), Rational(0));
            functional[col] = 1;
            for (std::size_t i = 0; i < echelon_.rows.size(); ++i) {
                functional[echelon_.pivots[i]] = -echelon_.rows[i][col];
            }
            out.push_back(std::move(functional));
        }
        return out;
    }

    friend bool operator==(const JetSubspace& a, const JetSubspace& b) {
        return a.basis_ == b.basis_ && a.echelon_.rows == b.echelon_.rows;
    }

private:
    void check_basis(const JetVector& v) const {
        if (!(v.basis == basis_)) throw std::invalid_argument("jet vector lives in a different jet space");
    }

    MonoBasis basis_;
    RowEchelon echelon_;
};

/// Throws std::invalid_argument for an empty list, since no basis is known.
inline JetSubspace span(std::span<const JetVector> vectors) {
    if (vectors.empty()) throw std::invalid_argument("span: basis unknown for an empty list");
    return JetSubspace(vectors.front().basis, vectors);
}

inline JetSubspace span(const MonoBasis& basis, std::span<const JetVector> vectors) {
    return JetSubspace(basis, vectors);
}

inline bool contains(const JetSubspace& s, const JetVector& v) { return s.contains(v); }

/// Solutions of sum_i c_i * columns[i] = target as particular + span(directions).
struct AffineSolutionSet {
    bool empty = true;
    RationalVector particular;
    std::vector<RationalVector> directions;

    std::size_t dimension() const { return directions.size(); }

    /// Membership for a concrete coefficient vector.
    bool contains(std::span<const Rational> point) const {
        if (empty || point.size() != particular.size()) return false;
        RationalMatrix rows = directions;
        RationalVector offset(point.begin(), point.end());
        for (std::size_t i = 0; i < offset.size(); ++i) offset[i] -= particular[i];
        const std::size_t before = matrix_rank(rows, offset.size());
        rows.push_back(std::move(offset));
        return matrix_rank(rows, particular.size()) == before;
    }
};

inline AffineSolutionSet solve_affine(std::span<const JetVector> columns, const JetVector& target) {
    detail::common_basis(columns, target.basis);
    const std::size_t nvars = columns.size();
    const std::size_t neqs = target.basis.size();

    RationalMatrix augmented(neqs, RationalVector(nvars + 1, Rational(0)));
    for (std::size_t r = 0; r < neqs; ++r) {
        for (std::size_t c = 0; c < nvars; ++c) augmented[r][c] = columns[c].coords[r];
        augmented[r][nvars] = target.coords[r];
    }
    const RowEchelon ech = row_reduce(std::move(augmented), nvars + 1);

    AffineSolutionSet out;
    if (!ech.pivots.empty() && ech.pivots.back() == nvars) return out;

    out.empty = false;
    out.particular.assign(nvars, Rational(0));
    std::vector<bool> is_pivot(nvars, false);
    for (std::size_t i = 0; i < ech.rank(); ++i) {
        is_pivot[ech.pivots[i]] = true;
        out.particular[ech.pivots[i]] = ech.rows[i][nvars];
    }
    for (std::size_t free = 0; free < nvars; ++free) {
        if (is_pivot[free]) continue;
        RationalVector dir(nvars, Rational(0));
        dir[free] = 1;
        for (std::size_t i = 0; i < ech.rank(); ++i) dir[ech.pivots[i]] = -ech.rows[i][free];
        out.directions.push_back(std::move(dir));
    }
    return out;
}

} // namespace equimult

#endif
