#pragma once

#include "weyl/poly.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace weyl {

/// Element of K(H) kept as num/den with gcd(num, den) = 1 and den monic.
class RatFuncH {
public:
    RatFuncH() : den_(1) {}
    RatFuncH(PolyH p) : num_(std::move(p)), den_(1) {}  // NOLINT(google-explicit-constructor)
    RatFuncH(Rat c) : RatFuncH(PolyH(std::move(c))) {}  // NOLINT(google-explicit-constructor)
    RatFuncH(long c) : RatFuncH(PolyH(c)) {}           // NOLINT(google-explicit-constructor)
    RatFuncH(PolyH num, PolyH den) : num_(std::move(num)), den_(std::move(den)) { reduce(); }

    const PolyH& num() const { return num_; }
    const PolyH& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    /// Both numerator and denominator monic (zero is not monic).
    bool is_monic() const { return num_.is_monic(); }

    /// deg num - deg den, -infinity for zero.
    Degree degree() const {
        if (is_zero()) return Degree();
        return Degree(num_.degree().value() - den_.degree().value());
    }

    PolyH as_polynomial() const {
        if (!is_polynomial()) throw std::domain_error("rational function is not a polynomial");
        return num_;
    }

    RatFuncH inverse() const {
        if (is_zero()) throw std::domain_error("inverse of zero rational function");
        return RatFuncH(den_, num_);
    }

    RatFuncH operator-() const {
        RatFuncH r = *this;
        r.num_ = -r.num_;
        return r;
    }
    friend RatFuncH operator+(const RatFuncH& a, const RatFuncH& b) {
        if (a.den_ == b.den_) return RatFuncH(a.num_ + b.num_, a.den_);
        return RatFuncH(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFuncH operator-(const RatFuncH& a, const RatFuncH& b) { return a + (-b); }
    friend RatFuncH operator*(const RatFuncH& a, const RatFuncH& b) {
        if (a.is_polynomial() && b.is_polynomial()) return RatFuncH(a.num_ * b.num_);
        return RatFuncH(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFuncH operator/(const RatFuncH& a, const RatFuncH& b) { return a * b.inverse(); }
    RatFuncH& operator+=(const RatFuncH& o) { return *this = *this + o; }
    RatFuncH& operator-=(const RatFuncH& o) { return *this = *this - o; }
    RatFuncH& operator*=(const RatFuncH& o) { return *this = *this * o; }

    friend bool operator==(const RatFuncH&, const RatFuncH&) = default;

    /// "num" for polynomials, "(num)/(den)" otherwise.
    std::string str() const {
        if (is_polynomial()) return num_.str();
        return "(" + num_.str() + ")/(" + den_.str() + ")";
    }
    friend std::ostream& operator<<(std::ostream& os, const RatFuncH& h) { return os << h.str(); }

private:
    void reduce() {
        if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
        if (num_.is_zero()) {
            den_ = PolyH(1);
            return;
        }
        if (!den_.is_constant()) {
            PolyH g = gcd(num_, den_);
            if (!g.is_constant()) {
                num_ = num_ / g;
                den_ = den_ / g;
            }
        }
        const Rat lc = den_.lead();
        if (!lc.is_one()) {
            num_ *= lc.inverse();
            den_ *= lc.inverse();
        }
    }

    PolyH num_;
    PolyH den_;
};

inline RatFuncH sigma_pow(const RatFuncH& f, long i) {
    if (f.is_polynomial()) return RatFuncH(sigma_pow(f.num(), i));
    return RatFuncH(sigma_pow(f.num(), i), sigma_pow(f.den(), i));
}

inline Degree rat_deg(const RatFuncH& h) { return h.degree(); }

struct MonicSplit {
    Rat lead;
    RatFuncH monic;
};

/// h = lead * monic with monic numerator and denominator.
inline MonicSplit monic_split(const RatFuncH& h) {
    if (h.is_zero()) throw std::invalid_argument("monic_split of zero");
    const Rat lc = h.num().lead();
    return {lc, RatFuncH(h.num() * lc.inverse(), h.den())};
}

}  // namespace weyl
