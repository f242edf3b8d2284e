#pragma once

// Factorization of univariate polynomials over Q into monic irreducibles:
// squarefree decomposition, Cantor-Zassenhaus modulo a small prime, multifactor
// Hensel lifting past the Mignotte bound, then recombination of lifted factors.

#include "weyl/poly.hpp"
#include "weyl/ratfunc.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

namespace weyl {

struct Factor {
    PolyH base;       // monic irreducible, degree >= 1
    long exponent;    // nonzero; negative for denominator factors
    friend bool operator==(const Factor&, const Factor&) = default;
    friend std::ostream& operator<<(std::ostream& os, const Factor& f) {
        return os << "(" << f.base << ")^" << f.exponent;
    }
};

struct FactoredPoly {
    Rat unit{1};
    std::vector<Factor> factors;

    /// unit * prod base^exponent
    RatFuncH expand() const {
        PolyH num(unit), den(1);
        for (const auto& f : factors) {
            if (f.exponent > 0)
                num *= pow(f.base, static_cast<unsigned>(f.exponent));
            else
                den *= pow(f.base, static_cast<unsigned>(-f.exponent));
        }
        return RatFuncH(num, den);
    }
    friend bool operator==(const FactoredPoly&, const FactoredPoly&) = default;
};

namespace detail {

/// Lexicographic order on polynomials: by degree, then coefficients from the top.
inline bool poly_less(const PolyH& a, const PolyH& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t k = a.size(); k-- > 0;) {
        if (a.coeff(k) != b.coeff(k)) return a.coeff(k) < b.coeff(k);
    }
    return false;
}

// ---- polynomials over F_p, p < 2^31 -------------------------------------------------

using Fp = std::vector<std::int64_t>;

inline void fp_trim(Fp& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline std::int64_t fp_inv(std::int64_t a, std::int64_t p) {
    std::int64_t t = 0, nt = 1, r = p, nr = ((a % p) + p) % p;
    while (nr) {
        const std::int64_t q = r / nr;
        t = std::exchange(nt, t - q * nt);
        r = std::exchange(nr, r - q * nr);
    }
    if (r != 1) throw std::logic_error("not invertible mod p");
    return (t % p + p) % p;
}

inline Fp fp_sub(Fp a, const Fp& b, std::int64_t p) {
    if (b.size() > a.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] - b[i] + p) % p;
    fp_trim(a);
    return a;
}

inline Fp fp_mul(const Fp& a, const Fp& b, std::int64_t p) {
    if (a.empty() || b.empty()) return {};
    Fp r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    fp_trim(r);
    return r;
}

inline std::pair<Fp, Fp> fp_divmod(Fp a, const Fp& b, std::int64_t p) {
    if (b.empty()) throw std::domain_error("division by zero polynomial mod p");
    if (a.size() < b.size()) return {Fp{}, a};
    Fp q(a.size() - b.size() + 1, 0);
    const std::int64_t inv = fp_inv(b.back(), p);
    for (std::size_t k = q.size(); k-- > 0;) {
        const std::int64_t c = a[k + b.size() - 1] * inv % p;
        if (!c) continue;
        q[k] = c;
        for (std::size_t j = 0; j < b.size(); ++j) a[k + j] = ((a[k + j] - c * b[j]) % p + p) % p;
    }
    fp_trim(a);
    fp_trim(q);
    return {q, a};
}

inline Fp fp_monic(Fp a, std::int64_t p) {
    if (a.empty()) return a;
    const std::int64_t inv = fp_inv(a.back(), p);
    for (auto& c : a) c = c * inv % p;
    return a;
}

inline Fp fp_gcd(Fp a, Fp b, std::int64_t p) {
    while (!b.empty()) {
        Fp r = fp_divmod(a, b, p).second;
        a = std::move(b);
        b = std::move(r);
    }
    return fp_monic(std::move(a), p);
}

/// Returns (g, s, t) with s*a + t*b = g monic.
inline std::tuple<Fp, Fp, Fp> fp_xgcd(Fp a, Fp b, std::int64_t p) {
    Fp s0{1}, s1{}, t0{}, t1{1};
    while (!b.empty()) {
        auto [q, r] = fp_divmod(a, b, p);
        a = std::exchange(b, r);
        s0 = fp_sub(s0, fp_mul(q, s1, p), p);
        std::swap(s0, s1);
        t0 = fp_sub(t0, fp_mul(q, t1, p), p);
        std::swap(t0, t1);
    }
    const std::int64_t inv = fp_inv(a.back(), p);
    for (auto* v : {&a, &s0, &t0})
        for (auto& c : *v) c = c * inv % p;
    return {a, s0, t0};
}

inline Fp fp_powmod(Fp base, const Integer& e, const Fp& mod, std::int64_t p) {
    Fp r{1};
    base = fp_divmod(base, mod, p).second;
    const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        r = fp_divmod(fp_mul(r, r, p), mod, p).second;
        if (mpz_tstbit(e.get_mpz_t(), i)) r = fp_divmod(fp_mul(r, base, p), mod, p).second;
    }
    return r;
}

inline Fp fp_derivative(const Fp& a, std::int64_t p) {
    Fp d;
    for (std::size_t i = 1; i < a.size(); ++i) d.push_back(a[i] * static_cast<std::int64_t>(i % p) % p);
    fp_trim(d);
    return d;
}

/// Splits a monic squarefree f whose irreducible factors all have degree d.
inline void fp_equal_degree(const Fp& f, long d, std::int64_t p, std::mt19937_64& rng, std::vector<Fp>& out) {
    const long n = static_cast<long>(f.size()) - 1;
    if (n == d) {
        out.push_back(f);
        return;
    }
    Integer e;
    mpz_ui_pow_ui(e.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(d));
    e = (e - 1) / 2;
    for (;;) {
        Fp a(static_cast<std::size_t>(n));
        for (auto& c : a) c = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(p));
        fp_trim(a);
        if (a.size() < 2) continue;
        Fp g = fp_gcd(a, f, p);
        if (g.size() == 1) {
            Fp b = fp_powmod(a, e, f, p);
            b = fp_sub(b, Fp{1}, p);
            g = fp_gcd(b, f, p);
        }
        if (g.size() > 1 && g.size() < f.size()) {
            fp_equal_degree(g, d, p, rng, out);
            fp_equal_degree(fp_divmod(f, g, p).first, d, p, rng, out);
            return;
        }
    }
}

/// Complete factorization of a monic squarefree polynomial over F_p (p odd).
inline std::vector<Fp> fp_factor_squarefree(Fp f, std::int64_t p) {
    std::vector<Fp> out;
    std::mt19937_64 rng(0x9e3779b97f4a7c15ULL ^ static_cast<std::uint64_t>(p));
    const Fp x{0, 1};
    Fp h = x;
    const Integer pz(static_cast<long>(p));
    for (long d = 1; 2 * d <= static_cast<long>(f.size()) - 1; ++d) {
        h = fp_powmod(h, pz, f, p);
        Fp g = fp_gcd(fp_sub(h, x, p), f, p);
        if (g.size() > 1) {
            fp_equal_degree(g, d, p, rng, out);
            f = fp_divmod(f, g, p).first;
            h = fp_divmod(h, f, p).second;
        }
    }
    if (f.size() > 1) out.push_back(fp_monic(f, p));
    return out;
}

// ---- polynomials over Z ----------------------------------------------------------------

using Zp = std::vector<Integer>;

inline void z_trim(Zp& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline Zp z_mul(const Zp& a, const Zp& b) {
    if (a.empty() || b.empty()) return {};
    Zp r(a.size() + b.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    z_trim(r);
    return r;
}

inline Zp z_mod(Zp a, const Integer& m) {
    for (auto& c : a) {
        c %= m;
        if (c < 0) c += m;
    }
    z_trim(a);
    return a;
}

inline Fp z_to_fp(const Zp& a, std::int64_t p) {
    Fp r;
    const Integer pz(static_cast<long>(p));
    for (const auto& c : a) {
        Integer m = c % pz;
        if (m < 0) m += pz;
        r.push_back(m.get_si());
    }
    fp_trim(r);
    return r;
}

inline Zp fp_to_z(const Fp& a) {
    Zp r;
    for (auto c : a) r.emplace_back(static_cast<long>(c));
    return r;
}

/// Primitive integer polynomial with positive leading coefficient, proportional to f.
inline Zp primitive_integer(const PolyH& f) {
    Integer l = 1;
    for (const auto& c : f.coefficients()) l = lcm(l, c.den());
    Zp r;
    for (const auto& c : f.coefficients()) r.push_back(c.num() * (l / c.den()));
    Integer g = 0;
    for (const auto& c : r) g = gcd(g, c);
    if (r.back() < 0) g = -g;
    for (auto& c : r) c /= g;
    return r;
}

inline PolyH z_to_poly(const Zp& a) {
    std::vector<Rat> c;
    for (const auto& v : a) c.emplace_back(v);
    return PolyH(std::move(c));
}

/// Lift g == a*b (mod p) with a monic, lc(b) = lc(g), to modulus p^k. Returns (a, b).
inline std::pair<Zp, Zp> hensel_pair(const Zp& g, Zp a, Zp b, std::int64_t p, unsigned k) {
    const auto [one, s, t] = fp_xgcd(z_to_fp(a, p), z_to_fp(b, p), p);
    if (one.size() != 1) throw std::logic_error("Hensel lifting of non-coprime factors");
    Integer q(static_cast<long>(p));
    const Integer pz(static_cast<long>(p));
    for (unsigned j = 1; j < k; ++j) {
        Zp diff = g;
        const Zp ab = z_mul(a, b);
        diff.resize(std::max(diff.size(), ab.size()), Integer(0));
        for (std::size_t i = 0; i < ab.size(); ++i) diff[i] -= ab[i];
        for (auto& c : diff) c /= q;  // exact
        z_trim(diff);
        const Fp e = z_to_fp(diff, p);
        const Fp af = z_to_fp(a, p), bf = z_to_fp(b, p);
        const Fp sigma = fp_divmod(fp_mul(t, e, p), af, p).second;
        const auto [tau, rem] = fp_divmod(fp_sub(e, fp_mul(sigma, bf, p), p), af, p);
        if (!rem.empty()) throw std::logic_error("Hensel step left a remainder");
        for (std::size_t i = 0; i < sigma.size(); ++i) a[i] += q * sigma[i];
        if (b.size() < tau.size()) b.resize(tau.size(), Integer(0));
        for (std::size_t i = 0; i < tau.size(); ++i) b[i] += q * tau[i];
        q *= pz;
    }
    return {z_mod(std::move(a), q), std::move(b)};
}

/// Lifts monic modular factors of g (lc(g) = l) to monic factors modulo p^k.
inline std::vector<Zp> hensel_lift(const Zp& g, const std::vector<Fp>& factors, std::int64_t p, unsigned k) {
    Integer modulus;
    mpz_ui_pow_ui(modulus.get_mpz_t(), static_cast<unsigned long>(p), k);
    const Integer l = g.back();
    std::vector<Zp> lifted;
    Zp target = g;
    for (std::size_t i = 0; i + 1 < factors.size(); ++i) {
        Fp rest = z_to_fp(Zp{l}, p);
        for (std::size_t j = i + 1; j < factors.size(); ++j) rest = fp_mul(rest, factors[j], p);
        Zp b = fp_to_z(rest);
        b.back() = l;
        auto [a_lift, b_lift] = hensel_pair(target, fp_to_z(factors[i]), b, p, k);
        lifted.push_back(std::move(a_lift));
        b_lift = z_mod(std::move(b_lift), modulus);
        b_lift.back() = l;
        target = std::move(b_lift);
    }
    Integer inv;
    mpz_invert(inv.get_mpz_t(), l.get_mpz_t(), modulus.get_mpz_t());
    for (auto& c : target) c *= inv;
    lifted.push_back(z_mod(std::move(target), modulus));
    return lifted;
}

inline Zp symmetric(Zp a, const Integer& m) {
    const Integer half = m / 2;
    for (auto& c : a) {
        c %= m;
        if (c < 0) c += m;
        if (c > half) c -= m;
    }
    z_trim(a);
    return a;
}

constexpr std::int64_t kSmallPrimes[] = {3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59,
                                         61, 67, 71, 73, 79, 83, 89, 97, 101, 103, 107, 109, 113, 127,
                                         131, 137, 139, 149, 151, 157, 163, 167, 173, 179, 181, 191, 193,
                                         197, 199, 211, 223, 227, 229, 233, 239, 241, 251, 257, 263, 269};

/// Irreducible factors over Z of a primitive squarefree g with positive leading coefficient.
inline std::vector<Zp> factor_squarefree_z(Zp g) {
    const std::size_t n = g.size() - 1;
    if (n <= 1) return {g};

    // Pick the admissible prime (among the first few) giving the fewest modular factors.
    std::int64_t best_p = 0;
    std::vector<Fp> best;
    int admissible = 0;
    for (std::int64_t p : kSmallPrimes) {
        if (g.back() % Integer(static_cast<long>(p)) == 0) continue;
        const Fp gp = z_to_fp(g, p);
        if (fp_gcd(gp, fp_derivative(gp, p), p).size() != 1) continue;
        auto fs = fp_factor_squarefree(fp_monic(gp, p), p);
        if (best.empty() || fs.size() < best.size()) {
            best = std::move(fs);
            best_p = p;
        }
        if (++admissible == 5 || best.size() == 1) break;
    }
    if (best_p == 0) throw std::logic_error("no admissible prime for factorization");
    if (best.size() == 1) return {g};

    // Mignotte-style bound: coefficients of lc(g)*h/lc(h) for h | g stay below l * 2^n * ||g||_2.
    Integer norm2 = 0;
    for (const auto& c : g) norm2 += c * c;
    Integer bound = sqrt(norm2) + 1;
    bound <<= static_cast<mp_bitcnt_t>(n);
    bound *= abs(g.back());
    bound *= 2;
    unsigned k = 1;
    Integer modulus(static_cast<long>(best_p));
    while (modulus <= bound) {
        modulus *= best_p;
        ++k;
    }
    std::vector<Zp> lifted = hensel_lift(g, best, best_p, k);

    std::vector<Zp> found;
    std::size_t size = 1;
    while (2 * size <= lifted.size()) {
        bool progressed = false;
        std::vector<std::size_t> idx(size);
        std::iota(idx.begin(), idx.end(), 0);
        for (;;) {
            Zp cand{g.back()};
            for (auto i : idx) cand = z_mod(z_mul(cand, lifted[i]), modulus);
            cand = symmetric(std::move(cand), modulus);
            const PolyH candq = z_to_poly(primitive_integer(z_to_poly(cand)));
            const auto [quo, rem] = PolyH::divmod(z_to_poly(g), candq);
            if (rem.is_zero()) {
                found.push_back(primitive_integer(candq));
                g = primitive_integer(quo);
                for (std::size_t j = idx.size(); j-- > 0;) lifted.erase(lifted.begin() + static_cast<long>(idx[j]));
                progressed = true;
                break;
            }
            // next combination
            std::size_t pos = size;
            while (pos-- > 0) {
                if (idx[pos] != pos + lifted.size() - size) break;
            }
            if (pos == static_cast<std::size_t>(-1)) break;
            ++idx[pos];
            for (std::size_t j = pos + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
        }
        if (!progressed) ++size;
    }
    if (g.size() > 1) found.push_back(g);
    return found;
}

/// Squarefree decomposition of a monic polynomial: f = prod a_i^i.
inline std::vector<std::pair<PolyH, long>> squarefree_decompose(const PolyH& f) {
    std::vector<std::pair<PolyH, long>> out;
    PolyH c = gcd(f, f.derivative());
    PolyH w = f / c;
    long i = 1;
    while (!w.is_constant()) {
        PolyH y = gcd(w, c);
        PolyH z = w / y;
        if (!z.is_constant()) out.emplace_back(z.monic(), i);
        w = std::move(y);
        c = c / w;
        ++i;
    }
    return out;
}

inline void sort_factors(std::vector<Factor>& fs) {
    std::sort(fs.begin(), fs.end(), [](const Factor& a, const Factor& b) {
        if (a.base != b.base) return poly_less(a.base, b.base);
        return a.exponent < b.exponent;
    });
}

}  // namespace detail

/// Complete factorization over Q into monic irreducibles.
inline FactoredPoly factor_poly(const PolyH& f) {
    if (f.is_zero()) throw std::invalid_argument("factor_poly of zero");
    FactoredPoly out;
    out.unit = f.lead();
    if (f.is_constant()) return out;
    for (const auto& [part, mult] : detail::squarefree_decompose(f.monic())) {
        for (const auto& z : detail::factor_squarefree_z(detail::primitive_integer(part)))
            out.factors.push_back({detail::z_to_poly(z).monic(), mult});
    }
    detail::sort_factors(out.factors);
    return out;
}

/// Factorization of a nonzero rational function; denominator factors get negative exponents.
inline FactoredPoly factor_ratfunc(const RatFuncH& h) {
    if (h.is_zero()) throw std::invalid_argument("factor of zero rational function");
    FactoredPoly out = factor_poly(h.num());
    if (!h.den().is_constant()) {
        FactoredPoly d = factor_poly(h.den());
        out.unit /= d.unit;
        for (auto& f : d.factors) out.factors.push_back({f.base, -f.exponent});
        detail::sort_factors(out.factors);
    }
    return out;
}

}  // namespace weyl
