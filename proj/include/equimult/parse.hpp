#ifndef EQUIMULT_PARSE_HPP
#define EQUIMULT_PARSE_HPP

#include <cctype>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "equimult/poly.hpp"
#include "equimult/rational.hpp"

namespace equimult {

/// Syntax error with the 0-based offset of the offending character.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t position, const std::string& what)
        : std::runtime_error("parse error at column " + std::to_string(position + 1) + ": " + what),
          position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

namespace detail {

// Grammar (whitespace insignificant, no parentheses):
//   poly   := ['-'] term (('+' | '-') term)*
//   term   := [coef '*'] factor ('*' factor)* | coef
//   factor := ('x' | 'y') ['^' nat]
//   coef   := int ['/' nat]
class PolyParser {
public:
    explicit PolyParser(std::string_view src) : src_(src) {}

    BiPoly parse() {
        Accumulator result;
        skip_ws();
        bool negative = false;
        if (peek() == '-') {
            negative = true;
            ++pos_;
        }
        result.add_term_from(parse_term(), negative);
        while (true) {
            skip_ws();
            if (at_end()) break;
            const char op = peek();
            if (op != '+' && op != '-') fail("expected '+' or '-'");
            ++pos_;
            result.add_term_from(parse_term(), op == '-');
        }
        return result.poly;
    }

private:
    struct Term {
        Rational coef = 1;
        Monomial mono;
    };

    struct Accumulator {
        BiPoly poly;
        void add_term_from(const Term& t, bool negative) {
            poly.add_term(t.mono, negative ? Rational(-t.coef) : t.coef);
        }
    };

    Term parse_term() {
        skip_ws();
        Term t;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            t.coef = parse_coef();
            skip_ws();
            if (peek() != '*') return t;
            ++pos_;
        }
        parse_factor(t.mono);
        while (true) {
            skip_ws();
            if (peek() != '*') break;
            ++pos_;
            parse_factor(t.mono);
        }
        return t;
    }

    void parse_factor(Monomial& mono) {
        skip_ws();
        const char c = peek();
        if (c == '(' || c == ')') fail("parentheses are not supported");
        if (at_end()) fail("expected 'x' or 'y', found end of input");
        if (c != 'x' && c != 'y') {
            if (std::isalpha(static_cast<unsigned char>(c))) fail(std::string("unknown variable '") + c + "'");
            fail(std::string("expected 'x' or 'y', found '") + c + "'");
        }
        ++pos_;
        unsigned e = 1;
        skip_ws();
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            if (peek() == '-') fail("negative exponent");
            e = parse_exponent();
        }
        (c == 'x' ? mono.x : mono.y) += e;
    }

    Rational parse_coef() {
        const Integer num = parse_nat();
        skip_ws();
        if (peek() != '/') return Rational(num);
        ++pos_;
        skip_ws();
        const std::size_t at = pos_;
        const Integer den = parse_nat();
        if (den == 0) fail_at(at, "zero denominator");
        return Rational(num, den);
    }

    Integer parse_nat() {
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a natural number");
        Integer n = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            n = n * 10 + (src_[pos_] - '0');
            ++pos_;
        }
        return n;
    }

    unsigned parse_exponent() {
        const std::size_t at = pos_;
        const Integer n = parse_nat();
        if (n > kMaxExponent) fail_at(at, "exponent too large");
        return static_cast<unsigned>(n);
    }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }
    bool at_end() const { return pos_ >= src_.size(); }
    char peek() const { return at_end() ? '\0' : src_[pos_]; }

    [[noreturn]] void fail(const std::string& what) const { fail_at(pos_, what); }
    [[noreturn]] void fail_at(std::size_t at, const std::string& what) const { throw ParseError(at, what); }

    static constexpr unsigned kMaxExponent = 4096;

    std::string_view src_;
    std::size_t pos_ = 0;
};

} // namespace detail

inline BiPoly parse_poly(std::string_view expr) { return detail::PolyParser(expr).parse(); }

} // namespace equimult

#endif
