#pragma once

// Test-only generators and oracles. The oracles here do not use the GWA multiplication,
// the factorizer, or the orbit solver they are used to check.

#include "weyl/weyl.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <vector>

namespace weyl::testing {

class Gen {
public:
    explicit Gen(std::uint64_t seed) : eng_(seed) {}

    long range(long lo, long hi) { return lo + static_cast<long>(eng_() % static_cast<std::uint64_t>(hi - lo + 1)); }
    bool coin() { return range(0, 1) == 1; }

    Rat rational(long height) { return Rat(range(-height, height), range(1, height)); }
    Rat nonzero(long height) { return Rat(range(1, height) * (coin() ? 1 : -1), range(1, height)); }
    Rat integer(long height) { return Rat(range(-height, height)); }

    PolyH poly(long max_deg, long height) {
        std::vector<Rat> c;
        const long d = range(0, max_deg);
        for (long i = 0; i <= d; ++i) c.push_back(rational(height));
        return PolyH(std::move(c));
    }
    PolyH nonconstant_poly(long max_deg, long height) {
        for (;;) {
            PolyH p = poly(max_deg, height);
            if (!p.is_constant()) return p;
        }
    }
    PolyH monic_integer_poly(long deg, long height) {
        std::vector<Rat> c;
        for (long i = 0; i < deg; ++i) c.push_back(integer(height));
        c.emplace_back(1);
        return PolyH(std::move(c));
    }

    /// At most `comps` components with degrees in [-max_abs, max_abs].
    WeylElement weyl(long comps, long max_deg, long height, long max_abs = 4) {
        WeylElement a;
        const long n = range(1, comps);
        for (long i = 0; i < n; ++i) a.add_component(range(-max_abs, max_abs), poly(max_deg, height));
        return a;
    }

    std::mt19937_64& engine() { return eng_; }

private:
    std::mt19937_64 eng_;
};

using XPoly = std::map<long, Rat>;  // polynomial in x, exponent -> coefficient

/// Action on x^k of A_1 realized as differential operators: X = x, Y = d/dx, so H = YX acts
/// on x^m by m + 1.
inline XPoly act(const WeylElement& a, long k) {
    XPoly out;
    for (const auto& [d, f] : a.components()) {
        Rat c(1);
        long m = k;
        if (d >= 0) {
            m = k + d;
        } else {
            for (long j = 0; j < -d; ++j) c *= Rat(k - j);
            m = k + d;
        }
        if (c.is_zero()) continue;
        c *= f.eval(Rat(m + 1));
        if (c.is_zero()) continue;
        out[m] += c;
        if (out[m].is_zero()) out.erase(m);
    }
    return out;
}

inline XPoly act(const WeylElement& a, const XPoly& p) {
    XPoly out;
    for (const auto& [k, c] : p)
        for (const auto& [m, v] : act(a, k)) {
            out[m] += c * v;
            if (out[m].is_zero()) out.erase(m);
        }
    return out;
}

/// Whether a*b and c act identically on x^0 .. x^n.
inline bool same_action_of_product(const WeylElement& a, const WeylElement& b, const WeylElement& c, long n) {
    for (long k = 0; k <= n; ++k)
        if (act(a, act(b, XPoly{{k, Rat(1)}})) != act(c, k)) return false;
    return true;
}

/// Rational roots of an integer-coefficient polynomial by the rational root theorem.
inline bool has_rational_root(const PolyH& f) {
    if (f.coeff(0).is_zero()) return true;
    const auto z = detail::primitive_integer(f);
    const Integer a0 = abs(z.front()), an = abs(z.back());
    std::vector<Integer> dn, dd;
    for (Integer d = 1; d <= a0; ++d)
        if (a0 % d == 0) dn.push_back(d);
    for (Integer d = 1; d <= an; ++d)
        if (an % d == 0) dd.push_back(d);
    for (const auto& p : dn)
        for (const auto& q : dd)
            for (int sgn : {1, -1})
                if (f.eval(Rat(p * sgn, q)).is_zero()) return true;
    return false;
}

/// Degree <= 3: irreducible over Q iff no rational root.
inline bool irreducible_small(const PolyH& f) {
    const long d = f.degree().value();
    if (d == 1) return true;
    if (d > 3) throw std::invalid_argument("oracle handles degree <= 3");
    return !has_rational_root(f);
}

/// Exhaustive bounded search for monic beta = f/g (integer coefficients in [-height, height],
/// deg g <= max_den_deg) with prod_{m<k} sigma^{m*step}(beta) = alpha. Coefficients are chosen
/// top-down and a branch is cut as soon as a leading coefficient of the cross-multiplied
/// identity disagrees (those coefficients depend only on the already chosen ones).
inline std::optional<RatFuncH> brute_force_twisted_root(const RatFuncH& alpha, long k, long step, long height,
                                                        long max_den_deg) {
    const long da = alpha.degree().value();
    if (da % k != 0) return std::nullopt;
    const long target = da / k;
    for (long dg = 0; dg <= max_den_deg; ++dg) {
        const long df = target + dg;
        if (df < 0) continue;
        std::vector<Rat> f(static_cast<std::size_t>(df + 1), Rat(0)), g(static_cast<std::size_t>(dg + 1), Rat(0));
        f.back() = Rat(1);
        g.back() = Rat(1);
        const long levels = std::max(df, dg);
        auto lhs_rhs = [&]() {
            PolyH pf(1), pg(1);
            const PolyH F(f), G(g);
            for (long m = 0; m < k; ++m) {
                pf *= sigma_pow(F, m * step);
                pg *= sigma_pow(G, m * step);
            }
            return std::make_pair(pf * alpha.den(), pg * alpha.num());
        };
        std::optional<RatFuncH> found;
        auto dfs = [&](auto&& self, long level) -> void {
            if (found) return;
            const auto [l, r] = lhs_rhs();
            const long top = l.degree().value();
            for (long i = 0; i < level && top - i >= 0; ++i)
                if (l.coeff(static_cast<std::size_t>(top - i)) != r.coeff(static_cast<std::size_t>(top - i))) return;
            if (level > levels) {
                if (l == r) found = RatFuncH(PolyH(f), PolyH(g));
                return;
            }
            const long fi = df - level, gi = dg - level;
            for (long a = (fi >= 0 ? -height : 0); a <= (fi >= 0 ? height : 0); ++a) {
                if (fi >= 0) f[static_cast<std::size_t>(fi)] = Rat(a);
                for (long b = (gi >= 0 ? -height : 0); b <= (gi >= 0 ? height : 0); ++b) {
                    if (gi >= 0) g[static_cast<std::size_t>(gi)] = Rat(b);
                    self(self, level + 1);
                    if (found) return;
                }
            }
            if (fi >= 0) f[static_cast<std::size_t>(fi)] = Rat(0);
            if (gi >= 0) g[static_cast<std::size_t>(gi)] = Rat(0);
        };
        dfs(dfs, 1);
        if (found) return found;
    }
    return std::nullopt;
}

}  // namespace weyl::testing
