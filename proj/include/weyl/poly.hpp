#pragma once

#include "weyl/rat.hpp"

#include <algorithm>
#include <compare>
#include <cstddef>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace weyl {

/// Degree of a polynomial or rational function; the zero element has degree -infinity.
class Degree {
public:
    constexpr Degree() = default;  // -infinity
    constexpr Degree(long v) : value_(v), finite_(true) {}  // NOLINT(google-explicit-constructor)

    static constexpr Degree minus_infinity() { return Degree(); }

    constexpr bool is_finite() const { return finite_; }
    constexpr long value() const {
        if (!finite_) throw std::domain_error("degree of zero is -infinity");
        return value_;
    }

    /// -infinity absorbs.
    friend constexpr Degree operator+(Degree a, Degree b) {
        return a.finite_ && b.finite_ ? Degree(a.value_ + b.value_) : Degree();
    }
    friend constexpr Degree operator-(Degree a, long b) { return a.finite_ ? Degree(a.value_ - b) : Degree(); }
    friend constexpr bool operator==(Degree a, Degree b) {
        return a.finite_ == b.finite_ && (!a.finite_ || a.value_ == b.value_);
    }
    friend constexpr std::strong_ordering operator<=>(Degree a, Degree b) {
        if (!a.finite_ || !b.finite_) return a.finite_ <=> b.finite_;
        return a.value_ <=> b.value_;
    }
    friend std::ostream& operator<<(std::ostream& os, Degree d) {
        return d.finite_ ? (os << d.value_) : (os << "-inf");
    }

private:
    long value_ = 0;
    bool finite_ = false;
};

/// Univariate polynomial in H over the rationals. Stored densely, ascending, with no
/// trailing zero coefficients; the zero polynomial has no coefficients.
class PolyH {
public:
    PolyH() = default;
    PolyH(Rat c) {  // NOLINT(google-explicit-constructor)
        if (!c.is_zero()) c_.push_back(std::move(c));
    }
    PolyH(long c) : PolyH(Rat(c)) {}  // NOLINT(google-explicit-constructor)
    explicit PolyH(std::vector<Rat> ascending) : c_(std::move(ascending)) { trim(); }

    static PolyH H() { return PolyH(std::vector<Rat>{Rat(0), Rat(1)}); }
    static PolyH monomial(Rat c, std::size_t e) {
        std::vector<Rat> v(e + 1);
        v[e] = std::move(c);
        return PolyH(std::move(v));
    }
    /// H - r
    static PolyH linear(const Rat& r) { return PolyH(std::vector<Rat>{-r, Rat(1)}); }

    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    Degree degree() const { return c_.empty() ? Degree() : Degree(static_cast<long>(c_.size()) - 1); }
    /// Number of stored coefficients (degree + 1, zero for the zero polynomial).
    std::size_t size() const { return c_.size(); }

    Rat coeff(std::size_t e) const { return e < c_.size() ? c_[e] : Rat(0); }
    Rat lead() const { return c_.empty() ? Rat(0) : c_.back(); }
    bool is_monic() const { return !c_.empty() && c_.back().is_one(); }
    const std::vector<Rat>& coefficients() const { return c_; }

    /// Sparse (exponent, coefficient) view, ascending, nonzero coefficients only.
    std::vector<std::pair<std::size_t, Rat>> terms() const {
        std::vector<std::pair<std::size_t, Rat>> out;
        for (std::size_t e = 0; e < c_.size(); ++e)
            if (!c_[e].is_zero()) out.emplace_back(e, c_[e]);
        return out;
    }

    PolyH monic() const {
        if (is_zero()) throw std::domain_error("monic part of zero polynomial");
        return *this * lead().inverse();
    }

    Rat eval(const Rat& x) const {
        Rat r(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
        return r;
    }

    PolyH derivative() const {
        std::vector<Rat> d;
        for (std::size_t e = 1; e < c_.size(); ++e) d.push_back(c_[e] * Rat(static_cast<long>(e)));
        return PolyH(std::move(d));
    }

    PolyH operator-() const {
        PolyH r = *this;
        for (auto& c : r.c_) c = -c;
        return r;
    }
    PolyH& operator+=(const PolyH& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    PolyH& operator-=(const PolyH& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    PolyH& operator*=(const Rat& s) {
        if (s.is_zero()) {
            c_.clear();
            return *this;
        }
        for (auto& c : c_) c *= s;
        return *this;
    }
    friend PolyH operator+(PolyH a, const PolyH& b) { return a += b; }
    friend PolyH operator-(PolyH a, const PolyH& b) { return a -= b; }
    friend PolyH operator*(PolyH a, const Rat& s) { return a *= s; }
    friend PolyH operator*(const Rat& s, PolyH a) { return a *= s; }
    friend PolyH operator*(const PolyH& a, const PolyH& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rat> r(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        }
        return PolyH(std::move(r));
    }
    PolyH& operator*=(const PolyH& o) { return *this = *this * o; }

    /// Euclidean division; throws on a zero divisor.
    static std::pair<PolyH, PolyH> divmod(const PolyH& a, const PolyH& b) {
        if (b.is_zero()) throw std::domain_error("polynomial division by zero");
        if (a.c_.size() < b.c_.size()) return {PolyH(), a};
        std::vector<Rat> rem = a.c_;
        std::vector<Rat> quo(a.c_.size() - b.c_.size() + 1);
        const Rat inv = b.lead().inverse();
        for (std::size_t k = quo.size(); k-- > 0;) {
            Rat q = rem[k + b.c_.size() - 1] * inv;
            if (q.is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) rem[k + j] -= q * b.c_[j];
            quo[k] = std::move(q);
        }
        return {PolyH(std::move(quo)), PolyH(std::move(rem))};
    }
    friend PolyH operator/(const PolyH& a, const PolyH& b) { return divmod(a, b).first; }
    friend PolyH operator%(const PolyH& a, const PolyH& b) { return divmod(a, b).second; }

    friend bool operator==(const PolyH&, const PolyH&) = default;

    /// Canonical descending text, e.g. "H^2 - 3/2*H + 1".
    std::string str() const {
        if (is_zero()) return "0";
        std::string out;
        for (std::size_t k = c_.size(); k-- > 0;) {
            const Rat& c = c_[k];
            if (c.is_zero()) continue;
            const bool first = out.empty();
            Rat mag = c.sign() < 0 ? -c : c;
            if (first) {
                if (c.sign() < 0) out += "-";
            } else {
                out += c.sign() < 0 ? " - " : " + ";
            }
            if (k == 0) {
                out += mag.str();
                continue;
            }
            if (!mag.is_one()) out += mag.str() + "*";
            out += "H";
            if (k > 1) out += "^" + std::to_string(k);
        }
        return out;
    }
    friend std::ostream& operator<<(std::ostream& os, const PolyH& p) { return os << p.str(); }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<Rat> c_;
};

inline PolyH pow(const PolyH& base, unsigned e) {
    PolyH r(1), b = base;
    while (e) {
        if (e & 1U) r *= b;
        e >>= 1U;
        if (e) b *= b;
    }
    return r;
}

/// Monic gcd; gcd(0, 0) = 0.
inline PolyH gcd(PolyH a, PolyH b) {
    while (!b.is_zero()) {
        PolyH r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.is_zero() ? a : a.monic();
}

/// sigma^i: H -> H - i. Ring automorphism of K[H] preserving degree.
inline PolyH sigma_pow(const PolyH& f, long i) {
    if (i == 0 || f.is_constant()) return f;
    const PolyH shifted = PolyH::linear(Rat(i));
    const auto& c = f.coefficients();
    PolyH r;
    for (std::size_t k = c.size(); k-- > 0;) r = r * shifted + PolyH(c[k]);
    return r;
}

/// (1 - sigma^i)(f) = f(H) - f(H - i).
inline PolyH delta_op(const PolyH& f, long i) {
    if (i == 0) throw std::invalid_argument("delta_op requires a nonzero shift");
    return f - sigma_pow(f, i);
}

}  // namespace weyl
