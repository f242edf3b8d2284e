#pragma once

// Centralizers of monic homogeneous elements u = alpha v_n (n != 0) in the localization B.
// C_B(u) = K[v, v^{-1}] with v = beta v_{sign(n) s}, where s is the least divisor of |n| for
// which the twisted product beta sigma^{t}(beta) ... sigma^{(k-1)t}(beta) = alpha has a
// solution (k = |n|/s, t = s for n > 0 and t = -s for n < 0).
//
// The twisted product is solved factor by factor: the irreducible factors of alpha are
// grouped into orbits under H -> H - t, and inside an orbit the exponent sequence e(j) must be
// the convolution of beta's exponent sequence d(j) with a window of k ones.

#include "weyl/algebra.hpp"
#include "weyl/errors.hpp"
#include "weyl/factor.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace weyl {

/// alpha v_n with alpha in K(H).
struct Homogeneous {
    long degree = 0;
    RatFuncH coeff;

    bool is_monic() const { return coeff.is_monic(); }
    BElement element() const { return BElement::homogeneous(degree, coeff); }

    static Homogeneous from(const BElement& b) {
        if (!b.is_homogeneous()) throw std::invalid_argument("element is not homogeneous");
        const auto& [d, c] = *b.components().begin();
        return {d, c};
    }
    static Homogeneous from(const WeylElement& a) { return from(to_b(a)); }
    friend bool operator==(const Homogeneous&, const Homogeneous&) = default;
};

enum class Direction { plus, minus };

/// Irreducible factors related by H -> H - j*step. base sits at position 0, the minimum.
struct ShiftOrbit {
    PolyH base;
    std::map<long, long> exponents;  // position j -> exponent of base(H - j*step)
};

/// j with q = sigma^{j*step}(p), if any.
inline std::optional<long> shift_position(const PolyH& p, const PolyH& q, long step) {
    if (p.size() != q.size() || p.size() < 2) return std::nullopt;
    const std::size_t d = p.size() - 1;
    // coeff_{d-1}(p(H - c)) = coeff_{d-1}(p) - d*c
    const Rat c = (p.coeff(d - 1) - q.coeff(d - 1)) / Rat(static_cast<long>(d));
    const Rat j = c / Rat(step);
    if (!j.is_integer() || !j.num().fits_slong_p()) return std::nullopt;
    const long pos = j.num().get_si();
    if (sigma_pow(p, pos * step) != q) return std::nullopt;
    return pos;
}

inline std::vector<ShiftOrbit> shift_orbit_partition(const FactoredPoly& factors, long step) {
    if (step == 0) throw std::invalid_argument("shift step must be nonzero");
    struct Member {
        PolyH base;
        long pos;
        long exp;
    };
    std::vector<std::vector<Member>> groups;
    for (const auto& f : factors.factors) {
        bool placed = false;
        for (auto& g : groups) {
            if (auto pos = shift_position(g.front().base, f.base, step)) {
                g.push_back({f.base, *pos, f.exponent});
                placed = true;
                break;
            }
        }
        if (!placed) groups.push_back({{f.base, 0, f.exponent}});
    }
    std::vector<ShiftOrbit> out;
    for (const auto& g : groups) {
        const auto lowest = std::min_element(g.begin(), g.end(), [](const Member& a, const Member& b) {
            return a.pos < b.pos;
        });
        ShiftOrbit orbit{lowest->base, {}};
        for (const auto& m : g) orbit.exponents[m.pos - lowest->pos] = m.exp;
        out.push_back(std::move(orbit));
    }
    // Orbit order follows the canonical order of the base factors.
    std::sort(out.begin(), out.end(), [](const ShiftOrbit& a, const ShiftOrbit& b) {
        return detail::poly_less(a.base, b.base);
    });
    return out;
}

inline std::vector<ShiftOrbit> shift_orbit_partition(const FactoredPoly& factors, long s, Direction dir) {
    return shift_orbit_partition(factors, dir == Direction::plus ? s : -s);
}

/// Why a divisor admits no twisted root.
struct Infeasibility {
    enum class Reason { degree, orbit };
    long s = 0;
    Reason reason = Reason::degree;
    PolyH orbit_base;   // orbit only
    long position = 0;  // first position where the deconvolution leaves a nonzero residue
    long residue = 0;
    friend bool operator==(const Infeasibility&, const Infeasibility&) = default;
};

struct TwistedRoot {
    std::optional<RatFuncH> beta;
    std::optional<Infeasibility> failure;
    explicit operator bool() const { return beta.has_value(); }
};

/// prod_{m=0}^{k-1} sigma^{m*step}(beta)
inline RatFuncH twisted_product(const RatFuncH& beta, long k, long step) {
    RatFuncH r(1);
    for (long m = 0; m < k; ++m) r *= sigma_pow(beta, m * step);
    return r;
}

/// Same as below, from a factorization of alpha (unit 1). The factor order does not matter.
inline TwistedRoot solve_twisted_root(const FactoredPoly& alpha, long k, long s, Direction dir) {
    if (alpha.unit != Rat(1)) throw std::invalid_argument("twisted root needs a monic alpha");
    if (k < 1 || s < 1) throw std::invalid_argument("twisted root needs k, s >= 1");
    const long step = dir == Direction::plus ? s : -s;
    long degree = 0;
    for (const auto& f : alpha.factors) degree += f.exponent * f.base.degree().value();
    if (degree % k != 0) return {std::nullopt, Infeasibility{s, Infeasibility::Reason::degree, PolyH(), 0, 0}};

    RatFuncH beta(1);
    for (const auto& orbit : shift_orbit_partition(alpha, step)) {
        const long last = orbit.exponents.rbegin()->first;
        std::map<long, long> d;
        for (long j = 0; j <= last; ++j) {
            long v = orbit.exponents.count(j) ? orbit.exponents.at(j) : 0;
            for (long m = 1; m < k; ++m) {
                auto it = d.find(j - m);
                if (it != d.end()) v -= it->second;
            }
            if (v == 0) continue;
            if (j > last - k + 1)
                return {std::nullopt, Infeasibility{s, Infeasibility::Reason::orbit, orbit.base, j, v}};
            d[j] = v;
        }
        for (const auto& [j, e] : d) {
            const PolyH f = pow(sigma_pow(orbit.base, j * step), static_cast<unsigned>(std::labs(e)));
            beta *= e > 0 ? RatFuncH(f) : RatFuncH(PolyH(1), f);
        }
    }
    return {beta, std::nullopt};
}

/// Unique monic beta with twisted_product(beta, k, +-s) = alpha, or the reason none exists.
inline TwistedRoot solve_twisted_root(const RatFuncH& alpha, long k, long s, Direction dir) {
    if (!alpha.is_monic()) throw std::invalid_argument("twisted root needs a monic alpha");
    return solve_twisted_root(factor_ratfunc(alpha), k, s, dir);
}

inline std::vector<long> positive_divisors(long n) {
    n = std::labs(n);
    std::vector<long> out;
    for (long d = 1; d <= n; ++d)
        if (n % d == 0) out.push_back(d);
    return out;
}

struct CentralizerResult {
    long n = 0;
    long s = 0;
    RatFuncH beta;
    Homogeneous v;
    std::vector<Infeasibility> infeasible;  // every divisor below s, ascending
};

/// Generator v of C_B(u) for monic u = alpha v_n, n != 0.
inline CentralizerResult centralizer_generator(const Homogeneous& u) {
    if (u.degree == 0) throw std::invalid_argument("centralizer_generator needs nonzero degree");
    if (!u.is_monic()) throw std::invalid_argument("centralizer_generator needs a monic element");
    const Direction dir = u.degree > 0 ? Direction::plus : Direction::minus;
    CentralizerResult res;
    res.n = u.degree;
    for (long s : positive_divisors(u.degree)) {
        TwistedRoot root = solve_twisted_root(u.coeff, std::labs(u.degree) / s, s, dir);
        if (!root) {
            res.infeasible.push_back(*root.failure);
            continue;
        }
        res.s = s;
        res.beta = *root.beta;
        res.v = {u.degree > 0 ? s : -s, res.beta};
        return res;
    }
    throw std::logic_error("no feasible divisor (s = |n| always is)");
}

struct PowerDecomposition {
    Rat scalar;
    long exponent = 0;
    friend bool operator==(const PowerDecomposition&, const PowerDecomposition&) = default;
};

/// w = scalar * v^exponent with exponent >= 1, or nullopt.
inline std::optional<PowerDecomposition> power_decompose(const Homogeneous& w, const Homogeneous& v) {
    if (w.coeff.is_zero() || v.coeff.is_zero() || v.degree == 0) return std::nullopt;
    if (w.degree % v.degree != 0 || w.degree / v.degree < 1) return std::nullopt;
    const long j = w.degree / v.degree;
    const BElement vj = pow(v.element(), static_cast<unsigned>(j));
    const RatFuncH ratio = w.coeff / vj.component(w.degree);
    if (!ratio.is_constant()) return std::nullopt;
    return PowerDecomposition{ratio.num().coeff(0), j};
}

/// C_B(u) = K(H) for u in K(H) \ K. Returns the marker of that subalgebra.
inline std::string centralizer_rational(const RatFuncH& u) {
    if (u.is_constant()) throw DomainError("constants are central; centralizer is all of B");
    return "K(H)";
}

/// Membership in C_B(u) for u in K(H) \ K: b must be concentrated in degree 0.
inline bool centralizes_rational(const BElement& b) {
    return b.is_zero() || (b.is_homogeneous() && b.top_degree() == 0);
}

}  // namespace weyl
