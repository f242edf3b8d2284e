#pragma once

#include "weyl/algebra.hpp"

#include <cctype>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace weyl {

/// Malformed expression text; position() is a 0-based offset into the input.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t pos)
        : std::runtime_error(what + " at position " + std::to_string(pos)), pos_(pos) {}
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

/// Free noncommutative expression in X, Y, H and rational literals.
struct FreeExpr {
    enum class Kind { sum, product, power, neg, x, y, h, literal };

    Kind kind = Kind::literal;
    std::vector<FreeExpr> args;
    unsigned exponent = 0;  // power only
    Rat value;              // literal only

    static FreeExpr atom(Kind k) { return FreeExpr{k, {}, 0, Rat(0)}; }
    static FreeExpr literal(Rat v) { return FreeExpr{Kind::literal, {}, 0, std::move(v)}; }
    static FreeExpr sum(std::vector<FreeExpr> terms) { return FreeExpr{Kind::sum, std::move(terms), 0, Rat(0)}; }
    static FreeExpr product(std::vector<FreeExpr> factors) {
        return FreeExpr{Kind::product, std::move(factors), 0, Rat(0)};
    }
    static FreeExpr power(FreeExpr base, unsigned e) { return FreeExpr{Kind::power, {std::move(base)}, e, Rat(0)}; }
    static FreeExpr neg(FreeExpr e) { return FreeExpr{Kind::neg, {std::move(e)}, 0, Rat(0)}; }

    friend bool operator==(const FreeExpr&, const FreeExpr&) = default;
};

inline constexpr unsigned kMaxExponent = 65535;

namespace detail {

class Parser {
public:
    explicit Parser(std::string_view text) : s_(text) {}

    FreeExpr run() {
        FreeExpr e = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool accept(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    // expr := ['-'] term (('+'|'-') term)*
    FreeExpr expr() {
        std::vector<FreeExpr> terms;
        terms.push_back(accept('-') ? FreeExpr::neg(term()) : term());
        for (;;) {
            if (accept('+'))
                terms.push_back(term());
            else if (accept('-'))
                terms.push_back(FreeExpr::neg(term()));
            else
                break;
        }
        return terms.size() == 1 ? std::move(terms.front()) : FreeExpr::sum(std::move(terms));
    }

    // term := factor ('*' factor)*
    FreeExpr term() {
        std::vector<FreeExpr> factors;
        factors.push_back(factor());
        while (accept('*')) factors.push_back(factor());
        return factors.size() == 1 ? std::move(factors.front()) : FreeExpr::product(std::move(factors));
    }

    // factor := base ('^' nat)?
    FreeExpr factor() {
        FreeExpr b = base();
        if (!accept('^')) return b;
        skip();
        const std::size_t start = pos_;
        const std::string digits = number();
        if (digits.empty()) fail("expected exponent");
        if (digits.size() > 9 || std::stoul(digits) > kMaxExponent) {
            pos_ = start;
            fail("exponent overflow (limit " + std::to_string(kMaxExponent) + ")");
        }
        return FreeExpr::power(std::move(b), static_cast<unsigned>(std::stoul(digits)));
    }

    // base := 'X' | 'Y' | 'H' | rational | '(' expr ')'
    FreeExpr base() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        const char c = s_[pos_];
        if (c == 'X' || c == 'Y' || c == 'H') {
            ++pos_;
            return FreeExpr::atom(c == 'X' ? FreeExpr::Kind::x : (c == 'Y' ? FreeExpr::Kind::y : FreeExpr::Kind::h));
        }
        if (c == '(') {
            ++pos_;
            FreeExpr e = expr();
            if (!accept(')')) fail("expected ')'");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return rational();
        fail("unexpected '" + std::string(1, c) + "'");
    }

    // rational := int ('/' posint)?
    FreeExpr rational() {
        const std::string num = number();
        skip();
        if (pos_ < s_.size() && s_[pos_] == '/') {
            ++pos_;
            skip();
            const std::size_t at = pos_;
            const std::string den = number();
            if (den.empty()) fail("expected denominator");
            if (Integer(den) == 0) {
                pos_ = at;
                fail("zero denominator");
            }
            return FreeExpr::literal(Rat(Integer(num), Integer(den)));
        }
        return FreeExpr::literal(Rat(Integer(num)));
    }

    std::string number() {
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        return std::string(s_.substr(start, pos_ - start));
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses the expression grammar; products keep their factor order.
inline FreeExpr parse(std::string_view text) { return detail::Parser(text).run(); }

/// Normal form by recursive evaluation in the algebra (GWA multiplication).
inline WeylElement normalize(const FreeExpr& e) {
    using K = FreeExpr::Kind;
    switch (e.kind) {
        case K::x: return WeylElement::X();
        case K::y: return WeylElement::Y();
        case K::h: return WeylElement::H();
        case K::literal: return WeylElement(PolyH(e.value));
        case K::neg: return -normalize(e.args.front());
        case K::power: return pow(normalize(e.args.front()), e.exponent);
        case K::sum: {
            WeylElement r;
            for (const auto& t : e.args) r += normalize(t);
            return r;
        }
        case K::product: {
            WeylElement r(1);
            for (const auto& t : e.args) r *= normalize(t);
            return r;
        }
    }
    throw std::logic_error("unreachable expression kind");
}

namespace detail {

enum class Letter { x, y, h };

struct Word {
    Rat coeff;
    std::vector<Letter> letters;
};

inline std::vector<Word> expand(const FreeExpr& e) {
    using K = FreeExpr::Kind;
    switch (e.kind) {
        case K::x: return {{Rat(1), {Letter::x}}};
        case K::y: return {{Rat(1), {Letter::y}}};
        case K::h: return {{Rat(1), {Letter::h}}};
        case K::literal: return {{e.value, {}}};
        case K::neg: {
            auto ws = expand(e.args.front());
            for (auto& w : ws) w.coeff = -w.coeff;
            return ws;
        }
        case K::sum: {
            std::vector<Word> out;
            for (const auto& t : e.args) {
                auto ws = expand(t);
                out.insert(out.end(), ws.begin(), ws.end());
            }
            return out;
        }
        case K::product:
        case K::power: {
            const std::size_t n = e.kind == K::power ? e.exponent : e.args.size();
            std::vector<Word> acc{{Rat(1), {}}};
            for (std::size_t i = 0; i < n; ++i) {
                const auto rhs = expand(e.kind == K::power ? e.args.front() : e.args[i]);
                std::vector<Word> next;
                for (const auto& l : acc) {
                    for (const auto& r : rhs) {
                        Word w{l.coeff * r.coeff, l.letters};
                        w.letters.insert(w.letters.end(), r.letters.begin(), r.letters.end());
                        next.push_back(std::move(w));
                    }
                }
                acc = std::move(next);
            }
            return acc;
        }
    }
    throw std::logic_error("unreachable expression kind");
}

/// v_k g = g' v_k, moving g left one letter at a time with X g = sigma(g) X, Y g = sigma^{-1}(g) Y.
inline PolyH move_left(PolyH g, long k) {
    for (long i = 0; i < std::labs(k); ++i) g = sigma_pow(g, k > 0 ? 1 : -1);
    return g;
}

/// Rewrites a single word into f(H) v_k using only YX = H, XY = H - 1 and the letter rules.
inline WeylElement rewrite_word(const Word& w) {
    PolyH f(w.coeff);
    long k = 0;
    for (Letter l : w.letters) {
        switch (l) {
            case Letter::x:
                // Y^j X = Y^{j-1} H
                if (k < 0) f *= move_left(PolyH::H(), k + 1);
                ++k;
                break;
            case Letter::y:
                // X^j Y = X^{j-1} (H - 1)
                if (k > 0) f *= move_left(PolyH::H() - PolyH(1), k - 1);
                --k;
                break;
            case Letter::h: f *= move_left(PolyH::H(), k); break;
        }
    }
    return WeylElement::homogeneous(k, std::move(f));
}

}  // namespace detail

/// Normal form by full expansion into free words, each rewritten left to right.
/// Exponential in the expression size; used as an independent check of normalize().
inline WeylElement normalize_by_rewriting(const FreeExpr& e) {
    WeylElement r;
    for (const auto& w : detail::expand(e)) r += detail::rewrite_word(w);
    return r;
}

inline WeylElement parse_element(std::string_view text) { return normalize(parse(text)); }

namespace detail {

inline std::string coeff_text(const PolyH& p) { return p.str(); }
inline std::string coeff_text(const RatFuncH& h) { return h.str(); }

}  // namespace detail

/// Degrees ascending; each component "(f)", "(f)*X^i" or "(f)*Y^i".
template <class Coeff>
std::string print_canonical(const Graded<Coeff>& a) {
    if (a.is_zero()) return "0";
    std::string out;
    for (const auto& [d, c] : a.components()) {
        if (!out.empty()) out += " + ";
        out += "(" + detail::coeff_text(c) + ")";
        if (d > 0) out += "*X^" + std::to_string(d);
        if (d < 0) out += "*Y^" + std::to_string(-d);
    }
    return out;
}

}  // namespace weyl
