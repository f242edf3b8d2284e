#pragma once

// Exhaustive exact checks that certain homogeneous shapes of Dixmier pairs cannot occur.
//
//   case-ii   [alpha X^p, beta Y^q] = 1 with deg alpha <= da, deg beta <= db. Bilinear in the
//             unknown coefficients; each product alpha_i beta_j becomes one linear unknown, so
//             an inconsistent linear system rules out every (alpha, beta).
//   case-iii  [alpha X^p, beta v_s + gamma v_t] = 1 (s < t), linearized the same way.
//   case-v    (1 - sigma^{-p})(a) + (1 - sigma^{-q})(b) = 1 where a = (p, -p) a', b = (q, -q) b',
//             deg a, deg b exact and ordered like p, q. p = q cells are reported as "reduction": there Q - lambda P
//             drops to mass 1 instead of being contradictory.

#include "weyl/algebra.hpp"
#include "weyl/errors.hpp"
#include "weyl/linalg.hpp"

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

namespace weyl {

enum class SweepPattern { case_ii, case_iii, case_v };

inline std::string to_string(SweepPattern p) {
    switch (p) {
        case SweepPattern::case_ii: return "case-ii";
        case SweepPattern::case_iii: return "case-iii";
        case SweepPattern::case_v: return "case-v";
    }
    return "?";
}

inline SweepPattern parse_pattern(const std::string& s) {
    if (s == "case-ii") return SweepPattern::case_ii;
    if (s == "case-iii") return SweepPattern::case_iii;
    if (s == "case-v") return SweepPattern::case_v;
    throw DomainError("unknown sweep pattern '" + s + "'");
}

struct SweepBounds {
    long p = 4;
    long q = 4;
    long max_coeff_deg = 4;
};

/// Largest bounds accepted by impossibility_sweep.
struct SweepCaps {
    long p = 8;
    long q = 8;
    long max_coeff_deg = 6;
};

/// (1 - sigma^{-p})(a) + (1 - sigma^{-q})(b)
inline PolyH delta_balance_check(const PolyH& a, const PolyH& b, long p, long q) {
    return delta_op(a, -p) + delta_op(b, -q);
}

struct SweepCell {
    enum class Status { empty, solutions, reduction };

    std::size_t index = 0;
    long p = 0;
    long q = 0;          // case-iii: unused
    long s = 0, t = 0;   // case-iii: degrees of the two components of Q
    long deg_a = 0;      // degree bound of alpha (ii, iii) or exact degree of a (v)
    long deg_b = 0;
    Status status = Status::empty;
    std::size_t unknowns = 0;
    std::size_t rank = 0;
    std::size_t nullity = 0;
    std::vector<Rat> witness;  // a linearized solution, when one exists
    std::optional<std::pair<PolyH, PolyH>> factored;  // actual (alpha, beta) / (a, b) witness
    bool witness_verified = false;
};

inline std::string to_string(SweepCell::Status s) {
    switch (s) {
        case SweepCell::Status::empty: return "empty";
        case SweepCell::Status::solutions: return "solutions";
        case SweepCell::Status::reduction: return "reduction";
    }
    return "?";
}

struct SweepReport {
    SweepPattern pattern = SweepPattern::case_ii;
    SweepBounds bounds;
    std::vector<SweepCell> cells;
};

namespace detail {

/// Equations "sum_k x_k terms_k = target", one per (degree, exponent) coordinate.
inline LinearSystem coordinate_system(const std::vector<WeylElement>& terms, const WeylElement& target) {
    std::map<std::pair<long, std::size_t>, std::vector<Rat>> rows;
    std::map<std::pair<long, std::size_t>, Rat> rhs;
    auto row = [&](long d, std::size_t e) -> std::vector<Rat>& {
        auto [it, fresh] = rows.try_emplace({d, e});
        if (fresh) it->second.assign(terms.size(), Rat(0));
        return it->second;
    };
    for (std::size_t k = 0; k < terms.size(); ++k)
        for (const auto& [d, f] : terms[k].components())
            for (const auto& [e, c] : f.terms()) row(d, e)[k] = c;
    for (const auto& [d, f] : target.components())
        for (const auto& [e, c] : f.terms()) {
            row(d, e);
            rhs[{d, e}] = c;
        }
    LinearSystem sys{terms.size(), {}, {}};
    for (auto& [key, r] : rows) {
        auto it = rhs.find(key);
        sys.add_equation(std::move(r), it == rhs.end() ? Rat(0) : it->second);
    }
    return sys;
}

inline WeylElement monomial(long degree, std::size_t h_exp) {
    return WeylElement::homogeneous(degree, PolyH::monomial(Rat(1), h_exp));
}

inline WeylElement combine(const std::vector<WeylElement>& terms, const std::vector<Rat>& x) {
    WeylElement r;
    for (std::size_t k = 0; k < terms.size(); ++k)
        if (!x[k].is_zero()) r += x[k] * terms[k];
    return r;
}

/// z = a (x) b for a (da+1) x (db+1) matrix z stored row-major, if it has rank one.
inline std::optional<std::pair<PolyH, PolyH>> rank_one(const std::vector<Rat>& z, long da, long db) {
    const auto cols = static_cast<std::size_t>(db + 1);
    auto at = [&](std::size_t i, std::size_t j) -> const Rat& { return z[i * cols + j]; };
    const auto pivot = std::find_if(z.begin(), z.end(), [](const Rat& r) { return !r.is_zero(); });
    if (pivot == z.end()) return std::nullopt;
    const auto idx = static_cast<std::size_t>(pivot - z.begin());
    const std::size_t i0 = idx / cols, j0 = idx % cols;
    std::vector<Rat> a, b;
    for (std::size_t i = 0; i <= static_cast<std::size_t>(da); ++i) a.push_back(at(i, j0));
    for (std::size_t j = 0; j < cols; ++j) b.push_back(at(i0, j) / at(i0, j0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            if (a[i] * b[j] != at(i, j)) return std::nullopt;
    return std::make_pair(PolyH(a), PolyH(b));
}

inline void record(SweepCell& cell, const LinearSolution& sol) {
    cell.rank = sol.rank;
    cell.status = sol.consistent ? SweepCell::Status::solutions : SweepCell::Status::empty;
    if (sol.consistent) {
        cell.nullity = sol.nullspace.size();
        cell.witness = sol.particular;
    }
}

inline void run_case_ii(SweepCell& cell) {
    std::vector<WeylElement> terms;
    for (long i = 0; i <= cell.deg_a; ++i)
        for (long j = 0; j <= cell.deg_b; ++j)
            terms.push_back(commutator(monomial(cell.p, static_cast<std::size_t>(i)),
                                       monomial(-cell.q, static_cast<std::size_t>(j))));
    cell.unknowns = terms.size();
    const LinearSolution sol = solve(coordinate_system(terms, WeylElement(1)));
    record(cell, sol);
    if (!sol.consistent) return;
    // The linearized identity is rechecked in the algebra, independently of the matrix.
    bool ok = combine(terms, sol.particular) == WeylElement(1);
    if (auto ab = rank_one(sol.particular, cell.deg_a, cell.deg_b)) {
        ok = ok && commutator(WeylElement::homogeneous(cell.p, ab->first),
                              WeylElement::homogeneous(-cell.q, ab->second)) == WeylElement(1);
        cell.factored = std::move(ab);
    }
    cell.witness_verified = ok;
}

inline void run_case_iii(SweepCell& cell) {
    std::vector<WeylElement> terms;
    for (long qdeg : {cell.s, cell.t})
        for (long i = 0; i <= cell.deg_a; ++i)
            for (long j = 0; j <= cell.deg_b; ++j)
                terms.push_back(commutator(monomial(cell.p, static_cast<std::size_t>(i)),
                                           monomial(qdeg, static_cast<std::size_t>(j))));
    cell.unknowns = terms.size();
    const LinearSolution sol = solve(coordinate_system(terms, WeylElement(1)));
    record(cell, sol);
    if (sol.consistent) cell.witness_verified = combine(terms, sol.particular) == WeylElement(1);
}

inline void run_case_v(SweepCell& cell) {
    if (cell.p == cell.q) {
        cell.status = SweepCell::Status::reduction;
        return;
    }
    // a = (p, -p) a', b = (q, -q) b' with a', b' of exact degree; unknowns are their coefficients.
    const PolyH cp = structure_constant(cell.p, -cell.p), cq = structure_constant(cell.q, -cell.q);
    const auto na = static_cast<std::size_t>(cell.deg_a - cell.p + 1);
    const auto nb = static_cast<std::size_t>(cell.deg_b - cell.q + 1);
    std::vector<WeylElement> terms;
    for (std::size_t i = 0; i < na; ++i)
        terms.emplace_back(delta_op(cp * PolyH::monomial(Rat(1), i), -cell.p));
    for (std::size_t j = 0; j < nb; ++j)
        terms.emplace_back(delta_op(cq * PolyH::monomial(Rat(1), j), -cell.q));
    cell.unknowns = terms.size();
    const LinearSolution sol = solve(coordinate_system(terms, WeylElement(1)));
    record(cell, sol);
    if (!sol.consistent) return;
    // Exact degrees: the leading unknowns must be allowed to be nonzero.
    if (sol.forced_zero(na - 1) || sol.forced_zero(na + nb - 1)) {
        cell.status = SweepCell::Status::empty;
        cell.nullity = 0;
        cell.witness.clear();
        return;
    }
    // Some solution has both leading coefficients nonzero; find one on a small lattice.
    std::vector<Rat> x = sol.particular;
    for (long shift = 0; shift < 64 && (x[na - 1].is_zero() || x[na + nb - 1].is_zero()); ++shift) {
        x = sol.particular;
        long rest = shift;
        for (const auto& v : sol.nullspace) {
            const Rat c(rest % 4);
            rest /= 4;
            for (std::size_t k = 0; k < x.size(); ++k) x[k] += c * v[k];
        }
    }
    cell.witness = x;
    const PolyH a = cp * PolyH(std::vector<Rat>(x.begin(), x.begin() + static_cast<long>(na)));
    const PolyH b = cq * PolyH(std::vector<Rat>(x.begin() + static_cast<long>(na), x.end()));
    cell.factored = std::make_pair(a, b);
    cell.witness_verified = delta_balance_check(a, b, cell.p, cell.q) == PolyH(1);
}

inline std::vector<SweepCell> enumerate_cells(SweepPattern pattern, const SweepBounds& b) {
    std::vector<SweepCell> cells;
    auto push = [&](SweepCell c) {
        c.index = cells.size();
        cells.push_back(std::move(c));
    };
    switch (pattern) {
        case SweepPattern::case_ii:
            for (long p = 1; p <= b.p; ++p)
                for (long q = 1; q <= b.q; ++q)
                    for (long da = 0; da <= b.max_coeff_deg; ++da)
                        for (long db = 0; db <= b.max_coeff_deg; ++db) {
                            SweepCell c;
                            c.p = p, c.q = q, c.deg_a = da, c.deg_b = db;
                            push(c);
                        }
            break;
        case SweepPattern::case_iii:
            for (long p = 2; p <= b.p; ++p)
                for (long s = -b.q; s <= b.q; ++s)
                    for (long t = s + 1; t <= b.q; ++t) {
                        SweepCell c;
                        c.p = p, c.s = s, c.t = t, c.deg_a = b.max_coeff_deg, c.deg_b = b.max_coeff_deg;
                        push(c);
                    }
            break;
        case SweepPattern::case_v:
            for (long p = 2; p <= b.p; ++p)
                for (long q = 1; q <= b.q; ++q) {
                    if (p == q) {
                        SweepCell c;
                        c.p = p, c.q = q;
                        push(c);
                        continue;
                    }
                    // exact degrees of a and b; the cofactors of (p, -p), (q, -q) have degree <= max_coeff_deg
                    for (long da = p; da <= p + b.max_coeff_deg; ++da)
                        for (long db = q; db <= q + b.max_coeff_deg; ++db) {
                            if ((p < q) != (da < db) || da == db) continue;
                            SweepCell c;
                            c.p = p, c.q = q, c.deg_a = da, c.deg_b = db;
                            push(c);
                        }
                }
            break;
    }
    return cells;
}

}  // namespace detail

/// Runs every cell of the pattern within bounds; cells are independent and are spread over
/// `workers` threads, but the report order is the cell index order.
inline SweepReport impossibility_sweep(SweepPattern pattern, const SweepBounds& bounds, unsigned workers = 1,
                                       const SweepCaps& caps = {}) {
    if (bounds.p < 1 || bounds.q < 1 || bounds.max_coeff_deg < 0)
        throw DomainError("sweep bounds must be positive");
    if (bounds.p > caps.p || bounds.q > caps.q || bounds.max_coeff_deg > caps.max_coeff_deg)
        throw DomainError("sweep bounds too large (caps: p <= " + std::to_string(caps.p) + ", q <= " +
                          std::to_string(caps.q) + ", max_coeff_deg <= " + std::to_string(caps.max_coeff_deg) +
                          ")");
    SweepReport report{pattern, bounds, detail::enumerate_cells(pattern, bounds)};
    auto run = [&](SweepCell& c) {
        switch (pattern) {
            case SweepPattern::case_ii: detail::run_case_ii(c); break;
            case SweepPattern::case_iii: detail::run_case_iii(c); break;
            case SweepPattern::case_v: detail::run_case_v(c); break;
        }
    };
    workers = std::max(1U, std::min<unsigned>(workers, static_cast<unsigned>(report.cells.size())));
    if (workers == 1) {
        for (auto& c : report.cells) run(c);
        return report;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (std::size_t i; (i = next.fetch_add(1)) < report.cells.size();) run(report.cells[i]);
        });
    for (auto& t : pool) t.join();
    return report;
}

}  // namespace weyl
