#pragma once

#include "weyl/algebra.hpp"

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

namespace weyl {

/// (X, Y) -> (X, Y + lambda X^n)
struct PhiX {
    unsigned n;
    Rat lambda;
    friend bool operator==(const PhiX&, const PhiX&) = default;
};
/// (X, Y) -> (X + lambda Y^n, Y)
struct PhiY {
    unsigned n;
    Rat lambda;
    friend bool operator==(const PhiY&, const PhiY&) = default;
};
/// (X, Y) -> (mu X, mu^{-1} Y)
struct Torus {
    Rat mu;
    friend bool operator==(const Torus&, const Torus&) = default;
};
/// (X, Y) -> (X + c, Y + d)
struct Translate {
    Rat c;
    Rat d;
    friend bool operator==(const Translate&, const Translate&) = default;
};
/// (X, Y) -> (Y, -X)
struct Xi {
    friend bool operator==(const Xi&, const Xi&) = default;
};

using AutoGen = std::variant<PhiX, PhiY, Torus, Translate, Xi>;

/// Composition of generators; generators[0] is applied first, so the word
/// [g1, g2] denotes the automorphism g2 o g1.
struct AutoWord {
    std::vector<AutoGen> generators;

    AutoWord& then(AutoGen g) {
        generators.push_back(std::move(g));
        return *this;
    }
    AutoWord& then(const AutoWord& w) {
        generators.insert(generators.end(), w.generators.begin(), w.generators.end());
        return *this;
    }
    bool empty() const { return generators.empty(); }
    std::size_t size() const { return generators.size(); }
    friend bool operator==(const AutoWord&, const AutoWord&) = default;
};

inline void validate(const AutoGen& g) {
    std::visit(
        [](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, PhiX> || std::is_same_v<T, PhiY>) {
                if (v.n < 1) throw std::invalid_argument("triangular generator needs n >= 1");
            } else if constexpr (std::is_same_v<T, Torus>) {
                if (v.mu.is_zero()) throw std::invalid_argument("torus generator needs mu != 0");
            }
        },
        g);
}

inline std::string to_string(const AutoGen& g) {
    return std::visit(
        [](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, PhiX>)
                return "PhiX(" + std::to_string(v.n) + ", " + v.lambda.str() + ")";
            else if constexpr (std::is_same_v<T, PhiY>)
                return "PhiY(" + std::to_string(v.n) + ", " + v.lambda.str() + ")";
            else if constexpr (std::is_same_v<T, Torus>)
                return "Torus(" + v.mu.str() + ")";
            else if constexpr (std::is_same_v<T, Translate>)
                return "Translate(" + v.c.str() + ", " + v.d.str() + ")";
            else
                return "Xi";
        },
        g);
}

inline std::string to_string(const AutoWord& w) {
    if (w.empty()) return "id";
    std::string out;
    for (const auto& g : w.generators) out += (out.empty() ? "" : " ") + to_string(g);
    return out;
}

/// a(x, y): the image of a under the endomorphism X -> x, Y -> y.
inline WeylElement substitute(const WeylElement& a, const WeylElement& x, const WeylElement& y) {
    if (a.is_zero()) return a;
    const WeylElement h = y * x;
    std::vector<WeylElement> xpow{WeylElement(1)}, ypow{WeylElement(1)};
    WeylElement r;
    for (const auto& [d, f] : a.components()) {
        auto& powers = d >= 0 ? xpow : ypow;
        const auto& base = d >= 0 ? x : y;
        const auto k = static_cast<std::size_t>(d >= 0 ? d : -d);
        while (powers.size() <= k) powers.push_back(powers.back() * base);
        WeylElement fh;
        const auto& c = f.coefficients();
        for (std::size_t i = c.size(); i-- > 0;) fh = fh * h + WeylElement(PolyH(c[i]));
        r += fh * powers[k];
    }
    return r;
}

/// Images (g(X), g(Y)) of a single generator.
inline std::pair<WeylElement, WeylElement> generator_images(const AutoGen& g) {
    const WeylElement X = WeylElement::X(), Y = WeylElement::Y();
    return std::visit(
        [&](const auto& v) -> std::pair<WeylElement, WeylElement> {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, PhiX>)
                return {X, Y + WeylElement::homogeneous(v.n, PolyH(v.lambda))};
            else if constexpr (std::is_same_v<T, PhiY>)
                return {X + WeylElement::homogeneous(-static_cast<long>(v.n), PolyH(v.lambda)), Y};
            else if constexpr (std::is_same_v<T, Torus>)
                return {v.mu * X, v.mu.inverse() * Y};
            else if constexpr (std::is_same_v<T, Translate>)
                return {X + WeylElement(PolyH(v.c)), Y + WeylElement(PolyH(v.d))};
            else
                return {Y, -X};
        },
        g);
}

/// (tau(X), tau(Y)) for the composed word.
inline std::pair<WeylElement, WeylElement> images(const AutoWord& w) {
    WeylElement x = WeylElement::X(), y = WeylElement::Y();
    for (const auto& g : w.generators) {
        const auto [gx, gy] = generator_images(g);
        WeylElement nx = substitute(x, gx, gy);
        y = substitute(y, gx, gy);
        x = std::move(nx);
    }
    return {x, y};
}

inline WeylElement apply_auto(const AutoWord& w, const WeylElement& a) {
    const auto [x, y] = images(w);
    return substitute(a, x, y);
}

inline AutoWord invert_auto(const AutoWord& w) {
    AutoWord inv;
    for (auto it = w.generators.rbegin(); it != w.generators.rend(); ++it) {
        std::visit(
            [&](const auto& v) {
                using T = std::decay_t<decltype(v)>;
                if constexpr (std::is_same_v<T, PhiX>)
                    inv.then(PhiX{v.n, -v.lambda});
                else if constexpr (std::is_same_v<T, PhiY>)
                    inv.then(PhiY{v.n, -v.lambda});
                else if constexpr (std::is_same_v<T, Torus>)
                    inv.then(Torus{v.mu.inverse()});
                else if constexpr (std::is_same_v<T, Translate>)
                    inv.then(Translate{-v.c, -v.d});
                else
                    inv.then(Torus{Rat(-1)}).then(Xi{});
            },
            *it);
    }
    return inv;
}

struct TameLimits {
    unsigned word_len = 4;
    unsigned max_n = 3;
    long coeff_height = 5;
};

namespace detail {

// Draws straight from mt19937_64 (whose output sequence is fixed by the standard) so
// words are identical across standard library implementations.
class TameRng {
public:
    explicit TameRng(std::uint64_t seed) : eng_(seed) {}
    long range(long lo, long hi) { return lo + static_cast<long>(eng_() % static_cast<std::uint64_t>(hi - lo + 1)); }
    Rat rational(long height) { return Rat(range(-height, height), range(1, height)); }
    Rat nonzero_rational(long height) {
        const long num = range(1, height) * (range(0, 1) ? 1 : -1);
        return Rat(num, range(1, height));
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace detail

/// Deterministic pseudorandom tame word of length 1..word_len.
inline AutoWord random_tame(std::uint64_t seed, const TameLimits& limits) {
    if (limits.word_len < 1 || limits.max_n < 1 || limits.coeff_height < 1)
        throw std::invalid_argument("random_tame limits must be positive");
    detail::TameRng rng(seed);
    AutoWord w;
    const long len = rng.range(1, limits.word_len);
    for (long i = 0; i < len; ++i) {
        switch (rng.range(0, 4)) {
            case 0: {
                const auto n = static_cast<unsigned>(rng.range(1, limits.max_n));
                w.then(PhiX{n, rng.nonzero_rational(limits.coeff_height)});
                break;
            }
            case 1: {
                const auto n = static_cast<unsigned>(rng.range(1, limits.max_n));
                w.then(PhiY{n, rng.nonzero_rational(limits.coeff_height)});
                break;
            }
            case 2: w.then(Torus{rng.nonzero_rational(limits.coeff_height)}); break;
            case 3: {
                Rat c = rng.rational(limits.coeff_height);
                w.then(Translate{c, rng.rational(limits.coeff_height)});
                break;
            }
            default: w.then(Xi{}); break;
        }
    }
    return w;
}

/// Word tau with tau(Y) = aY + bX + lambda and tau(X) = cY + dX + mu, for ad - bc = 1.
///
/// The linear part is reduced to the identity by applying, in order: Xi when a = 0,
/// PhiX(1, .) to clear b, Torus(a) to normalize a, PhiY(1, .) to clear c. The inverse of
/// that reduction is the linear part; a leading Translate carries the constants.
inline AutoWord affine_decompose(Rat a, Rat b, Rat c, Rat d, const Rat& lambda, const Rat& mu) {
    if (a * d - b * c != Rat(1)) throw std::invalid_argument("affine_decompose needs ad - bc = 1");
    const WeylElement X = WeylElement::X(), Y = WeylElement::Y();
    const WeylElement want_y = a * Y + b * X + WeylElement(PolyH(lambda));
    const WeylElement want_x = c * Y + d * X + WeylElement(PolyH(mu));
    AutoWord reduce;
    if (a.is_zero()) {
        reduce.then(Xi{});
        a = std::exchange(b, -a);
        c = std::exchange(d, -c);
    }
    if (!b.is_zero()) {
        const Rat t = -b / a;
        reduce.then(PhiX{1, t});
        b += a * t;
        d += c * t;
    }
    if (!a.is_one()) {
        const Rat m = a;
        reduce.then(Torus{m});
        a /= m;
        c /= m;
        b *= m;
        d *= m;
    }
    if (!c.is_zero()) reduce.then(PhiY{1, -c});

    AutoWord tau;
    if (!lambda.is_zero() || !mu.is_zero()) tau.then(Translate{mu, lambda});
    tau.then(invert_auto(reduce));

    const auto [tx, ty] = images(tau);
    if (tx != want_x || ty != want_y) throw std::logic_error("affine decomposition failed verification");
    return tau;
}

}  // namespace weyl
