#pragma once

#include "weyl/poly.hpp"
#include "weyl/ratfunc.hpp"

#include <cstdlib>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace weyl {

/// (n, m) in K[H] with v_n v_m = (n, m) v_{n+m}, where v_n = X^n (n > 0), Y^{-n} (n < 0), v_0 = 1.
inline PolyH structure_constant(long n, long m) {
    PolyH r(1);
    if (n > 0 && m < 0) {
        const long a = n, k = std::min(n, -m);
        for (long j = 0; j < k; ++j) r *= PolyH::linear(Rat(a - j));  // H - a + j
    } else if (n < 0 && m > 0) {
        const long a = -n, k = std::min(-n, m);
        for (long j = 0; j < k; ++j) r *= PolyH::linear(Rat(j + 1 - a));  // H + a - 1 - j
    }
    return r;
}

/// <n, m> with v_n v_m = v_{n+m} <n, m>, i.e. sigma^{-(n+m)}((n, m)).
inline PolyH right_structure_constant(long n, long m) { return sigma_pow(structure_constant(n, m), -(n + m)); }

/// Sum over i of f_i(H) v_i with coefficients in K[H] (the Weyl algebra) or K(H) (its
/// localization). Only nonzero components are stored.
template <class Coeff>
class Graded {
public:
    using coeff_type = Coeff;
    using Components = std::map<long, Coeff>;

    Graded() = default;
    Graded(Coeff c) { add_component(0, std::move(c)); }  // NOLINT(google-explicit-constructor)
    Graded(long c) : Graded(Coeff(c)) {}                  // NOLINT(google-explicit-constructor)

    static Graded homogeneous(long degree, Coeff c) {
        Graded g;
        g.add_component(degree, std::move(c));
        return g;
    }
    static Graded X() { return homogeneous(1, Coeff(1)); }
    static Graded Y() { return homogeneous(-1, Coeff(1)); }
    static Graded H() { return Graded(Coeff(PolyH::H())); }
    /// v_n
    static Graded v(long n) { return homogeneous(n, Coeff(1)); }

    bool is_zero() const { return comps_.empty(); }
    bool is_homogeneous() const { return comps_.size() == 1; }
    const Components& components() const { return comps_; }
    /// Number of nonzero graded components; mass(0) = 0.
    std::size_t mass() const { return comps_.size(); }

    Coeff component(long degree) const {
        auto it = comps_.find(degree);
        return it == comps_.end() ? Coeff() : it->second;
    }
    Graded part(long degree) const {
        auto it = comps_.find(degree);
        return it == comps_.end() ? Graded() : homogeneous(degree, it->second);
    }
    long top_degree() const { return nonempty().rbegin()->first; }
    long bottom_degree() const { return nonempty().begin()->first; }

    void add_component(long degree, Coeff c) {
        if (c.is_zero()) return;
        auto [it, inserted] = comps_.try_emplace(degree, std::move(c));
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) comps_.erase(it);
        }
    }

    Graded operator-() const {
        Graded r = *this;
        for (auto& [d, c] : r.comps_) c = -c;
        return r;
    }
    Graded& operator+=(const Graded& o) {
        for (const auto& [d, c] : o.comps_) add_component(d, c);
        return *this;
    }
    Graded& operator-=(const Graded& o) {
        for (const auto& [d, c] : o.comps_) add_component(d, -c);
        return *this;
    }
    friend Graded operator+(Graded a, const Graded& b) { return a += b; }
    friend Graded operator-(Graded a, const Graded& b) { return a -= b; }

    /// Left scalar multiplication by an element of the coefficient ring.
    friend Graded operator*(const Coeff& s, const Graded& a) {
        Graded r;
        if (s.is_zero()) return r;
        for (const auto& [d, c] : a.comps_) r.add_component(d, s * c);
        return r;
    }
    friend Graded operator*(const Rat& s, const Graded& a) { return Coeff(s) * a; }

    /// (f v_n)(g v_m) = f sigma^n(g) (n, m) v_{n+m}
    friend Graded operator*(const Graded& a, const Graded& b) {
        Graded r;
        for (const auto& [n, f] : a.comps_) {
            for (const auto& [m, g] : b.comps_) {
                Coeff c = f * sigma_pow(g, n);
                if ((n > 0 && m < 0) || (n < 0 && m > 0)) c = c * Coeff(structure_constant(n, m));
                r.add_component(n + m, std::move(c));
            }
        }
        return r;
    }
    Graded& operator*=(const Graded& o) { return *this = *this * o; }

    friend bool operator==(const Graded&, const Graded&) = default;

private:
    const Components& nonempty() const {
        if (comps_.empty()) throw std::domain_error("degree of the zero element");
        return comps_;
    }

    Components comps_;
};

using WeylElement = Graded<PolyH>;
using BElement = Graded<RatFuncH>;

template <class Coeff>
Graded<Coeff> pow(const Graded<Coeff>& a, unsigned e) {
    Graded<Coeff> r(1), b = a;
    while (e) {
        if (e & 1U) r *= b;
        e >>= 1U;
        if (e) b *= b;
    }
    return r;
}

template <class Coeff>
Graded<Coeff> commutator(const Graded<Coeff>& a, const Graded<Coeff>& b) {
    return a * b - b * a;
}

template <class Coeff>
std::size_t mass(const Graded<Coeff>& a) {
    return a.mass();
}

/// Components ascending by degree.
template <class Coeff>
std::vector<std::pair<long, Coeff>> components(const Graded<Coeff>& a) {
    return {a.components().begin(), a.components().end()};
}

/// Embedding A_1 -> B with identical components.
inline BElement to_b(const WeylElement& a) {
    BElement r;
    for (const auto& [d, c] : a.components()) r.add_component(d, RatFuncH(c));
    return r;
}

/// Inverse of to_b; nullopt when some coefficient is not a polynomial.
inline std::optional<WeylElement> to_weyl(const BElement& b) {
    WeylElement r;
    for (const auto& [d, c] : b.components()) {
        if (!c.is_polynomial()) return std::nullopt;
        r.add_component(d, c.num());
    }
    return r;
}

/// Total degree in the generators X, Y, counting deg H = 2.
inline Degree total_degree(const WeylElement& a) {
    Degree best;
    for (const auto& [d, c] : a.components()) {
        const Degree t = Degree(2 * c.degree().value() + std::labs(d));
        if (t > best) best = t;
    }
    return best;
}

/// f(1 - H)
inline PolyH reflect(const PolyH& f) {
    const PolyH image = PolyH(1) - PolyH::H();
    const auto& c = f.coefficients();
    PolyH r;
    for (std::size_t k = c.size(); k-- > 0;) r = r * image + PolyH(c[k]);
    return r;
}

/// The automorphism X -> Y, Y -> -X. It sends H to 1 - H and degree i to degree -i.
inline WeylElement xi_apply(const WeylElement& a) {
    WeylElement r;
    for (const auto& [d, c] : a.components()) {
        PolyH f = reflect(c);
        if (d < 0 && (-d) % 2 == 1) f = -f;
        r.add_component(-d, std::move(f));
    }
    return r;
}

enum class Side { plus, minus };

/// Membership in A_{1,+} = K[H][X; sigma] or A_{1,-} = K[H][Y; sigma^{-1}].
inline bool in_skew_subalgebra(const WeylElement& a, Side side) {
    if (a.is_zero()) return true;
    return side == Side::plus ? a.bottom_degree() >= 0 : a.top_degree() <= 0;
}

}  // namespace weyl
