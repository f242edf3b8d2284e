#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace weyl {

using Integer = mpz_class;

/// Exact rational number in lowest terms with a positive denominator.
class Rat {
public:
    Rat() = default;
    Rat(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
    explicit Rat(const Integer& v) : q_(v) {}
    Rat(const Integer& num, const Integer& den) {
        if (den == 0) throw std::domain_error("rational with zero denominator");
        q_ = mpq_class(num, den);
        q_.canonicalize();
    }
    Rat(long num, long den) : Rat(Integer(num), Integer(den)) {}

    /// Parses "n" or "n/d" (optional leading '-').
    static Rat parse(std::string_view text) {
        const auto slash = text.find('/');
        try {
            if (slash == std::string_view::npos) return Rat(Integer(std::string(text)));
            return Rat(Integer(std::string(text.substr(0, slash))),
                       Integer(std::string(text.substr(slash + 1))));
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
        }
    }

    Integer num() const { return q_.get_num(); }
    Integer den() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_one() const { return q_ == 1; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    /// max(|num|, den)
    Integer height() const {
        Integer n = abs(q_.get_num());
        return n > q_.get_den() ? n : Integer(q_.get_den());
    }

    Rat inverse() const {
        if (is_zero()) throw std::domain_error("inverse of zero");
        Rat r;
        r.q_ = 1 / q_;
        return r;
    }

    /// Canonical "num/den" form; the denominator is always written.
    std::string fraction() const { return q_.get_num().get_str() + "/" + q_.get_den().get_str(); }
    /// Short form: "num" when integral, otherwise "num/den".
    std::string str() const { return is_integer() ? q_.get_num().get_str() : fraction(); }

    Rat operator-() const { Rat r; r.q_ = -q_; return r; }
    Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
    Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
    Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
    Rat& operator/=(const Rat& o) {
        if (o.is_zero()) throw std::domain_error("division by zero");
        q_ /= o.q_;
        return *this;
    }
    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

    const mpq_class& raw() const { return q_; }

private:
    mpq_class q_{0};
};

inline Rat pow(Rat base, unsigned e) {
    Rat r(1);
    while (e) {
        if (e & 1U) r *= base;
        base *= base;
        e >>= 1U;
    }
    return r;
}

}  // namespace weyl
