#pragma once

#include "weyl/automorphism.hpp"
#include "weyl/errors.hpp"
#include "weyl/expr.hpp"

#include <optional>
#include <stdexcept>
#include <string>

namespace weyl {

namespace detail {

inline std::optional<Rat> constant_of(const PolyH& f) {
    if (!f.is_constant()) return std::nullopt;
    return f.coeff(0);
}

/// A pair whose second entry is homogeneous. Reduces to Q = lambda X, P = lambda^{-1} Y + C(X)
/// (applying Xi first when Q has negative degree) and emits the triangular word directly.
inline AutoWord certify_homogeneous_q(const WeylElement& P, const WeylElement& Q) {
    const long q = Q.top_degree();
    if (q == 0) throw std::logic_error("homogeneous partner of degree 0 cannot have commutator 1");
    if (q < 0) {
        AutoWord w = certify_homogeneous_q(xi_apply(P), xi_apply(Q));
        return w.then(invert_auto(AutoWord{{Xi{}}}));
    }
    const auto lambda = constant_of(Q.component(q));
    if (q != 1 || !lambda) throw std::logic_error("homogeneous partner is not lambda X");
    const auto y_coeff = constant_of(P.component(-1));
    if (!y_coeff || *y_coeff != lambda->inverse()) throw std::logic_error("partner's Y component is not lambda^{-1} Y");

    AutoWord w;
    for (const auto& [d, f] : P.components()) {
        if (d == -1) continue;
        const auto c = constant_of(f);
        if (d < 0 || !c) throw std::logic_error("P - lambda^{-1} Y is not in K[X]");
        if (d == 0)
            w.then(Translate{Rat(0), *c});
        else
            w.then(PhiX{static_cast<unsigned>(d), *c / pow(*lambda, static_cast<unsigned>(d))});
    }
    if (!lambda->is_one()) w.then(Torus{*lambda});
    return w;
}

struct AffineParts {
    Rat y, x, constant;
};

inline AffineParts affine_parts(const WeylElement& a) {
    return {a.component(-1).coeff(0), a.component(1).coeff(0), a.component(0).coeff(0)};
}

inline AutoWord certify_reduce(const WeylElement& P, const WeylElement& Q) {
    const Degree one(1);
    if (total_degree(P) <= one && total_degree(Q) <= one) {
        const auto p = affine_parts(P), q = affine_parts(Q);
        return affine_decompose(p.y, p.x, q.y, q.x, p.constant, q.constant);
    }
    // Constant terms: tau = tau' o Translate(c_Q, c_P).
    const auto cp = constant_of(P.component(0)), cq = constant_of(Q.component(0));
    if ((cp && !cp->is_zero()) || (cq && !cq->is_zero())) {
        const Rat dp = cp.value_or(Rat(0)), dq = cq.value_or(Rat(0));
        AutoWord w{{Translate{dq, dp}}};
        return w.then(certify_reduce(P - WeylElement(PolyH(dp)), Q - WeylElement(PolyH(dq))));
    }
    if (Q.mass() == 1) return certify_homogeneous_q(P, Q);
    if (P.mass() == 1) {
        // [P, Q] = [-Q, P]; tau = tau' o xi^{-1}
        AutoWord w = invert_auto(AutoWord{{Xi{}}});
        return w.then(certify_reduce(-Q, P));
    }
    // Both of mass 2: a proportional shared component lets one side drop to mass 1.
    for (const auto& [d, pc] : P.components()) {
        const PolyH qc = Q.component(d);
        if (qc.is_zero()) continue;
        const auto [quo, rem] = PolyH::divmod(qc, pc);
        const auto lambda = constant_of(quo);
        if (!rem.is_zero() || !lambda) continue;
        const WeylElement reduced_q = Q - *lambda * P;
        if (reduced_q.mass() == 1) {
            // tau(X) = tau'(X + lambda Y)
            AutoWord w{{PhiY{1, *lambda}}};
            return w.then(certify_reduce(P, reduced_q));
        }
        const WeylElement reduced_p = P - lambda->inverse() * Q;
        if (reduced_p.mass() == 1) {
            // tau(Y) = tau'(Y + lambda^{-1} X)
            AutoWord w{{PhiX{1, lambda->inverse()}}};
            return w.then(certify_reduce(reduced_p, Q));
        }
    }
    throw std::logic_error("no reduction applies to a mass-2 pair");
}

}  // namespace detail

/// Word tau with tau(Y) = P and tau(X) = Q, for [P, Q] = 1 with both masses at most 2 or
/// either mass equal to 1. The result is checked by application before it is returned.
inline AutoWord certify_pair(const WeylElement& P, const WeylElement& Q) {
    const WeylElement c = commutator(P, Q);
    if (c != WeylElement(1)) {
        const std::string text = c.is_zero() ? "0"
                                 : (c.is_homogeneous() && c.top_degree() == 0) ? c.component(0).str()
                                                                               : print_canonical(c);
        throw DomainError("commutator is " + text + ", not 1");
    }
    const std::size_t mp = P.mass(), mq = Q.mass();
    if (!((mp <= 2 && mq <= 2) || mp == 1 || mq == 1))
        throw OutOfScopeError("masses (" + std::to_string(mp) + ", " + std::to_string(mq) +
                              ") outside the certified range");
    AutoWord tau = detail::certify_reduce(P, Q);
    const auto [tx, ty] = images(tau);
    if (ty != P || tx != Q) throw std::logic_error("certified word failed verification");
    return tau;
}

}  // namespace weyl
