#pragma once

// Text form of polynomials:
//
//   expr     := term (('+'|'-') term)*
//   term     := factor ('*' factor)*
//   factor   := '-' factor | base ('^' natural)?
//   base     := rational | 'i' | identifier | '(' expr ')'
//   rational := integer ('/' positive-integer)?
//
// 'i' is the imaginary unit and never a variable. format_poly emits text that
// parse_poly maps back to the identical canonical polynomial.

#include <gmpxx.h>

#include <cctype>
#include <cstddef>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "zlocus/algebra/poly.hpp"
#include "zlocus/error.hpp"

namespace zlocus {

namespace detail {

class PolyParser {
public:
    PolyParser(std::string_view text, RingPtr ring) : text_(text), ring_(std::move(ring)) {}

    Poly parse() {
        skip_ws();
        if (pos_ == text_.size()) throw parse_error("empty polynomial expression", pos_);
        Poly p = expr();
        skip_ws();
        if (pos_ != text_.size()) throw parse_error(std::string("unexpected '") + text_[pos_] + "'", pos_);
        return p;
    }

private:
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    Poly expr() {
        Poly acc = term();
        while (true) {
            if (accept('+')) {
                acc += term();
            } else if (accept('-')) {
                acc -= term();
            } else {
                return acc;
            }
        }
    }

    Poly term() {
        Poly acc = factor();
        while (accept('*')) acc *= factor();
        return acc;
    }

    Poly factor() {
        if (accept('-')) return -factor();
        Poly b = base();
        if (accept('^')) {
            skip_ws();
            std::size_t at = pos_;
            mpz_class e = integer("exponent");
            if (e > mpz_class(static_cast<unsigned long>(max_total_degree)))
                throw parse_error("exponent exceeds 2^31", at);
            b = b.pow(e.get_ui());
        }
        return b;
    }

    Poly base() {
        skip_ws();
        if (pos_ == text_.size()) throw parse_error("unexpected end of input", pos_);
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Poly inner = expr();
            if (!accept(')')) throw parse_error("expected ')'", pos_);
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            mpz_class num = integer("integer");
            mpz_class den = 1;
            if (peek() == '/') {
                ++pos_;
                skip_ws();
                std::size_t at = pos_;
                den = integer("denominator");
                if (den == 0) throw parse_error("zero denominator", at);
            }
            return Poly::constant(ring_, GaussianRational(mpq_class(num, den)));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            std::string_view name = text_.substr(start, pos_ - start);
            if (name == "i") return Poly::constant(ring_, GaussianRational::i());
            auto idx = ring_->index_of(name);
            if (!idx) throw parse_error("unknown identifier '" + std::string(name) + "'", start);
            return Poly::variable(ring_, *idx);
        }
        throw parse_error(std::string("unexpected '") + c + "'", pos_);
    }

    mpz_class integer(const char* what) {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) throw parse_error(std::string("expected ") + what, start);
        return mpz_class(std::string(text_.substr(start, pos_ - start)), 10);
    }

    std::string_view text_;
    RingPtr ring_;
    std::size_t pos_ = 0;
};

inline std::string format_monomial(const Monomial& m, const PolyRing& ring) {
    std::string out;
    for (std::size_t k = 0; k < m.size(); ++k) {
        if (m[k] == 0) continue;
        if (!out.empty()) out += '*';
        out += ring.name(k);
        if (m[k] > 1) out += '^' + std::to_string(m[k]);
    }
    return out;
}

// Magnitude of a nonzero real or purely imaginary coefficient, e.g. "3/2",
// "i", "2*i". Omits a unit factor when a monomial follows.
inline std::string format_magnitude(const mpq_class& v, bool imaginary, bool has_monomial) {
    mpq_class a = abs(v);
    if (imaginary) return a == 1 ? std::string("i") : a.get_str() + "*i";
    if (a == 1 && has_monomial) return {};
    return a.get_str();
}

}  // namespace detail

/// Parses `text` into a canonical polynomial of `ring`. Throws parse_error
/// with the byte offset of the problem.
inline Poly parse_poly(std::string_view text, const RingPtr& ring) { return detail::PolyParser(text, ring).parse(); }

inline std::string format_poly(const Poly& p) {
    if (p.is_zero()) return "0";
    const PolyRing& R = *p.ring();
    std::string out;
    auto emit = [&](bool negative, const std::string& body) {
        if (out.empty()) {
            out = negative ? "-" + body : body;
        } else {
            out += negative ? " - " : " + ";
            out += body;
        }
    };
    for (const auto& t : p.terms()) {
        const std::string mono = detail::format_monomial(t.mono, R);
        const auto& re = t.coef.re();
        const auto& im = t.coef.im();
        auto join = [&](std::string coef) {
            if (mono.empty()) return coef;
            return coef.empty() ? mono : coef + "*" + mono;
        };
        if (sgn(im) == 0) {
            emit(sgn(re) < 0, join(detail::format_magnitude(re, false, !mono.empty())));
        } else if (sgn(re) == 0) {
            emit(sgn(im) < 0, join(detail::format_magnitude(im, true, true)));
        } else if (mono.empty()) {
            emit(sgn(re) < 0, detail::format_magnitude(re, false, false));
            emit(sgn(im) < 0, detail::format_magnitude(im, true, false));
        } else {
            emit(false, "(" + t.coef.to_string() + ")*" + mono);
        }
    }
    return out;
}

/// Parses a constant such as "3", "-1/2", "2 - 3*i".
inline GaussianRational parse_scalar(std::string_view text) {
    static const RingPtr empty = PolyRing::make({});
    return parse_poly(text, empty).constant_value();
}

}  // namespace zlocus
