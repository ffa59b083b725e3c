#ifndef EQUIMULT_POLY_HPP
#define EQUIMULT_POLY_HPP

#include <algorithm>
#include <initializer_list>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "equimult/rational.hpp"

namespace equimult {

enum class Var { x, y };

/// Exponent pair of the monomial x^x * y^y.
struct Monomial {
    unsigned x = 0;
    unsigned y = 0;

    constexpr unsigned degree() const { return x + y; }
    friend constexpr bool operator==(const Monomial&, const Monomial&) = default;
};

/// Graded lexicographic order with x > y, ascending: 1, x, y, x^2, xy, y^2, ...
struct GrlexOrder {
    constexpr bool operator()(const Monomial& a, const Monomial& b) const {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return a.x > b.x;
    }
};

/// Raised by order() on the zero polynomial, whose order is undefined.
class UndefinedOrder : public std::domain_error {
public:
    UndefinedOrder() : std::domain_error("undefined order: zero polynomial") {}
};

/// Sparse bivariate polynomial over the rationals in canonical form: no zero
/// coefficients are stored and terms iterate in GrlexOrder.
class BiPoly {
public:
    using TermMap = std::map<Monomial, Rational, GrlexOrder>;

    BiPoly() = default;
    BiPoly(const Rational& c) { add_term({0, 0}, c); }
    BiPoly(std::int64_t c) : BiPoly(Rational(c)) {}
    BiPoly(std::initializer_list<std::pair<Monomial, Rational>> terms) {
        for (const auto& [mono, c] : terms) add_term(mono, c);
    }

    static BiPoly monomial(Monomial mono, const Rational& c = 1) {
        BiPoly p;
        p.add_term(mono, c);
        return p;
    }
    static BiPoly x() { return monomial({1, 0}); }
    static BiPoly y() { return monomial({0, 1}); }
    static BiPoly variable(Var v) { return v == Var::x ? x() : y(); }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    Rational coeff(Monomial mono) const {
        auto it = terms_.find(mono);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    Rational constant_term() const { return coeff({0, 0}); }

    /// Highest total degree, or nullopt for the zero polynomial.
    std::optional<unsigned> total_degree() const {
        if (terms_.empty()) return std::nullopt;
        return std::prev(terms_.end())->first.degree();
    }

    /// Adds c*mono in place, dropping the term if it cancels.
    void add_term(Monomial mono, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(mono, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    BiPoly& operator+=(const BiPoly& q) {
        for (const auto& [mono, c] : q.terms_) add_term(mono, c);
        return *this;
    }
    BiPoly& operator-=(const BiPoly& q) {
        for (const auto& [mono, c] : q.terms_) add_term(mono, -c);
        return *this;
    }
    BiPoly& operator*=(const Rational& s) {
        if (s == 0) {
            terms_.clear();
        } else {
            for (auto& [mono, c] : terms_) c *= s;
        }
        return *this;
    }

    friend BiPoly operator+(BiPoly p, const BiPoly& q) { return p += q; }
    friend BiPoly operator-(BiPoly p, const BiPoly& q) { return p -= q; }
    friend BiPoly operator-(BiPoly p) { return p *= Rational(-1); }

    friend BiPoly operator*(const BiPoly& p, const BiPoly& q) {
        BiPoly r;
        for (const auto& [mp, cp] : p.terms_) {
            for (const auto& [mq, cq] : q.terms_) {
                r.add_term({mp.x + mq.x, mp.y + mq.y}, cp * cq);
            }
        }
        return r;
    }
    BiPoly& operator*=(const BiPoly& q) { return *this = *this * q; }

    friend bool operator==(const BiPoly&, const BiPoly&) = default;

private:
    TermMap terms_;
};

inline BiPoly pow(const BiPoly& p, unsigned e) {
    BiPoly result(1);
    BiPoly base = p;
    while (e != 0) {
        if (e & 1u) result *= base;
        e >>= 1;
        if (e != 0) base *= base;
    }
    return result;
}

inline BiPoly partial(const BiPoly& p, Var v) {
    BiPoly r;
    for (const auto& [mono, c] : p.terms()) {
        if (v == Var::x && mono.x > 0) {
            r.add_term({mono.x - 1, mono.y}, c * mono.x);
        } else if (v == Var::y && mono.y > 0) {
            r.add_term({mono.x, mono.y - 1}, c * mono.y);
        }
    }
    return r;
}

/// Lowest total degree of a stored term. Throws UndefinedOrder for zero.
inline unsigned order(const BiPoly& p) {
    if (p.is_zero()) throw UndefinedOrder();
    return p.terms().begin()->first.degree();
}

/// Order with the zero polynomial counted as infinitely divisible.
inline bool has_order_at_least(const BiPoly& p, unsigned k) {
    return p.is_zero() || order(p) >= k;
}

/// Terms of total degree <= k; k = -1 gives the zero polynomial.
inline BiPoly jet(const BiPoly& p, int k) {
    if (k < -1) throw std::invalid_argument("jet: degree bound must be >= -1");
    BiPoly r;
    for (const auto& [mono, c] : p.terms()) {
        if (static_cast<int>(mono.degree()) > k) break;
        r.add_term(mono, c);
    }
    return r;
}

inline BiPoly homogeneous_part(const BiPoly& p, int k) {
    if (k < 0) throw std::invalid_argument("homogeneous_part: degree must be >= 0");
    BiPoly r;
    for (const auto& [mono, c] : p.terms()) {
        if (static_cast<int>(mono.degree()) == k) r.add_term(mono, c);
    }
    return r;
}

namespace detail {

/// Lazily extended table base^0, base^1, ... for repeated substitution.
template <class T>
class PowerTable {
public:
    PowerTable(T base, T one) : base_(std::move(base)) { powers_.push_back(std::move(one)); }

    const T& operator[](unsigned e) {
        while (powers_.size() <= e) powers_.push_back(powers_.back() * base_);
        return powers_[e];
    }

private:
    T base_;
    std::vector<T> powers_;
};

} // namespace detail

/// p(sx, sy), expanded exactly.
inline BiPoly substitute(const BiPoly& p, const BiPoly& sx, const BiPoly& sy) {
    detail::PowerTable<BiPoly> px(sx, BiPoly(1));
    detail::PowerTable<BiPoly> py(sy, BiPoly(1));
    BiPoly r;
    for (const auto& [mono, c] : p.terms()) {
        r += c * (px[mono.x] * py[mono.y]);
    }
    return r;
}

/// f + eps*g over Q[eps]/(eps^2).
struct FirstOrderDef {
    BiPoly base;
    BiPoly direction;

    friend FirstOrderDef operator+(const FirstOrderDef& p, const FirstOrderDef& q) {
        return {p.base + q.base, p.direction + q.direction};
    }
    friend FirstOrderDef operator*(const FirstOrderDef& p, const FirstOrderDef& q) {
        return {p.base * q.base, p.base * q.direction + p.direction * q.base};
    }
    friend FirstOrderDef operator*(const Rational& s, const FirstOrderDef& p) {
        return {s * p.base, s * p.direction};
    }
    friend bool operator==(const FirstOrderDef&, const FirstOrderDef&) = default;
};

/// The first-order section (x, y) -> (x + eps*a, y + eps*b).
struct SectionGerm {
    BiPoly a;
    BiPoly b;

    friend bool operator==(const SectionGerm&, const SectionGerm&) = default;
};

/// Composes f + eps*g with x -> x + eps*a, y -> y + eps*b in dual-number
/// arithmetic, so every eps^2 contribution is dropped term by term.
inline FirstOrderDef dual_substitute(const FirstOrderDef& F, const SectionGerm& s) {
    const FirstOrderDef one{BiPoly(1), BiPoly()};
    detail::PowerTable<FirstOrderDef> px(FirstOrderDef{BiPoly::x(), s.a}, one);
    detail::PowerTable<FirstOrderDef> py(FirstOrderDef{BiPoly::y(), s.b}, one);

    FirstOrderDef r;
    for (const auto& [mono, c] : F.base.terms()) {
        r = r + c * (px[mono.x] * py[mono.y]);
    }
    // eps * (u + eps*v) = eps*u, so only the base part of each power survives.
    for (const auto& [mono, c] : F.direction.terms()) {
        r.direction += c * (px[mono.x] * py[mono.y]).base;
    }
    return r;
}

/// Renders in the CLI grammar, e.g. "y^2 - x^3", "3/2*x^2*y - y", "0".
inline std::string to_string(const BiPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [mono, c] : p.terms()) {
        const bool negative = c < 0;
        const Rational magnitude = negative ? Rational(-c) : c;
        if (first) {
            if (negative) out << '-';
        } else {
            out << (negative ? " - " : " + ");
        }
        first = false;

        bool need_star = false;
        if (mono.degree() == 0 || magnitude != 1) {
            out << to_string(magnitude);
            need_star = true;
        }
        for (auto [var, e] : {std::pair{'x', mono.x}, std::pair{'y', mono.y}}) {
            if (e == 0) continue;
            if (need_star) out << '*';
            out << var;
            if (e > 1) out << '^' << e;
            need_star = true;
        }
    }
    return out.str();
}

inline std::ostream& operator<<(std::ostream& os, const BiPoly& p) { return os << to_string(p); }

inline std::ostream& operator<<(std::ostream& os, const FirstOrderDef& F) {
    return os << "(" << to_string(F.base) << ") + eps*(" << to_string(F.direction) << ")";
}

} // namespace equimult

#endif
