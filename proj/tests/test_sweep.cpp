#include "support.hpp"

#include <gtest/gtest.h>

using namespace weyl;
using weyl::testing::Gen;

namespace {

const PolyH Hp = PolyH::H();

LinearSystem system(std::vector<std::vector<long>> rows, std::vector<long> rhs) {
    LinearSystem s{rows.front().size(), {}, {}};
    for (std::size_t i = 0; i < rows.size(); ++i) {
        std::vector<Rat> r;
        for (long v : rows[i]) r.emplace_back(v);
        s.add_equation(r, Rat(rhs[i]));
    }
    return s;
}

}  // namespace

TEST(LinearSolve, SmallSystems) {
    const auto a = solve(system({{1, 1}, {1, -1}}, {3, 1}));
    ASSERT_TRUE(a.consistent);
    EXPECT_EQ(a.rank, 2U);
    EXPECT_EQ(a.particular, (std::vector<Rat>{Rat(2), Rat(1)}));
    EXPECT_TRUE(a.nullspace.empty());

    const auto b = solve(system({{1, 2}, {2, 4}}, {1, 3}));
    EXPECT_FALSE(b.consistent);

    const auto c = solve(system({{2, 4, 0}, {0, 0, 3}}, {2, 0}));
    ASSERT_TRUE(c.consistent);
    EXPECT_EQ(c.rank, 2U);
    ASSERT_EQ(c.nullspace.size(), 1U);
    EXPECT_TRUE(c.forced_zero(2));
    EXPECT_FALSE(c.forced_zero(0));
}

TEST(LinearSolve, RandomSystemsCheckOut) {
    Gen g(81);
    for (int it = 0; it < 100; ++it) {
        const std::size_t n = static_cast<std::size_t>(g.range(1, 6)), m = static_cast<std::size_t>(g.range(1, 6));
        LinearSystem s{n, {}, {}};
        for (std::size_t r = 0; r < m; ++r) {
            std::vector<Rat> row;
            for (std::size_t k = 0; k < n; ++k) row.push_back(g.range(0, 2) ? g.rational(5) : Rat(0));
            s.add_equation(row, g.rational(5));
        }
        const auto sol = solve(s);
        if (!sol.consistent) continue;
        EXPECT_EQ(sol.rank + sol.nullspace.size(), n);
        for (std::size_t r = 0; r < m; ++r) {
            Rat lhs(0);
            for (std::size_t k = 0; k < n; ++k) lhs += s.rows[r][k] * sol.particular[k];
            EXPECT_EQ(lhs, s.rhs[r]);
            for (const auto& v : sol.nullspace) {
                Rat z(0);
                for (std::size_t k = 0; k < n; ++k) z += s.rows[r][k] * v[k];
                EXPECT_TRUE(z.is_zero());
            }
        }
    }
}

TEST(DeltaBalance, Examples) {
    EXPECT_EQ(delta_balance_check(PolyH(), PolyH(), 2, 3), PolyH());
    // (1 - sigma^{-1})(H) = H - (H + 1)
    EXPECT_EQ(delta_balance_check(Hp, PolyH(), 1, 1), PolyH(-1));
    // deg a != deg b: the degree of the result is max(deg a, deg b) - 1 > 0
    const PolyH a = pow(Hp, 3), b = Hp * Hp;
    EXPECT_EQ(delta_balance_check(a, b, 2, 3).degree(), Degree(2));
}

TEST(DeltaBalance, DegreeObstruction) {
    Gen g(82);
    for (int it = 0; it < 200; ++it) {
        const PolyH a = g.nonconstant_poly(6, 9), b = g.nonconstant_poly(6, 9);
        if (a.degree() == b.degree()) continue;
        const long p = g.range(1, 5), q = g.range(1, 5);
        const PolyH r = delta_balance_check(a, b, p, q);
        EXPECT_EQ(r.degree(), std::max(a.degree(), b.degree()) - 1);
        if (std::max(a.degree(), b.degree()) > Degree(1)) {
            EXPECT_NE(r, PolyH(1));
        }
    }
}

TEST(Sweep, CaseIiOppositePowersAreEmpty) {
    const SweepReport rep = impossibility_sweep(SweepPattern::case_ii, SweepBounds{4, 4, 4});
    std::size_t checked = 0;
    for (const auto& c : rep.cells) {
        if (c.p >= 2 || c.p != c.q) {
            EXPECT_EQ(c.status, SweepCell::Status::empty) << c.p << " " << c.q << " " << c.deg_a << " " << c.deg_b;
            ++checked;
        }
    }
    EXPECT_EQ(checked, rep.cells.size() - 25);  // all but p = q = 1
    EXPECT_EQ(rep.cells.size(), 16U * 25U);
}

TEST(Sweep, CaseIiControlHasTheScalarFamily) {
    const SweepReport rep = impossibility_sweep(SweepPattern::case_ii, SweepBounds{1, 1, 0});
    ASSERT_EQ(rep.cells.size(), 1U);
    const auto& c = rep.cells[0];
    EXPECT_EQ(c.status, SweepCell::Status::solutions);
    EXPECT_EQ(c.unknowns, 1U);
    EXPECT_EQ(c.nullity, 0U);
    EXPECT_EQ(c.witness, std::vector<Rat>{Rat(-1)});
    EXPECT_TRUE(c.witness_verified);
    ASSERT_TRUE(c.factored.has_value());
    // alpha = -1, beta = 1 in the normalization beta monic at the pivot
    EXPECT_EQ(commutator(WeylElement::homogeneous(1, c.factored->first), WeylElement::homogeneous(-1, c.factored->second)),
              WeylElement(1));
    // every alpha with beta = -1/alpha
    for (long k = 1; k <= 5; ++k)
        EXPECT_EQ(commutator(Rat(k) * WeylElement::X(), Rat(-1, k) * WeylElement::Y()), WeylElement(1));
}

TEST(Sweep, CaseIiSolutionsAreVerified) {
    const SweepReport rep = impossibility_sweep(SweepPattern::case_ii, SweepBounds{1, 1, 3});
    for (const auto& c : rep.cells) {
        ASSERT_EQ(c.status, SweepCell::Status::solutions);
        EXPECT_TRUE(c.witness_verified);
    }
}

TEST(Sweep, CaseIii) {
    const SweepReport rep = impossibility_sweep(SweepPattern::case_iii, SweepBounds{3, 2, 2});
    ASSERT_FALSE(rep.cells.empty());
    for (const auto& c : rep.cells) {
        EXPECT_GE(c.p, 2);
        EXPECT_LT(c.s, c.t);
        // the commutator lands in degrees p + s and p + t, so s = -p or t = -p is the only real test
        EXPECT_EQ(c.status, SweepCell::Status::empty) << c.p << " " << c.s << " " << c.t;
    }
}

TEST(Sweep, CaseV) {
    const SweepReport rep = impossibility_sweep(SweepPattern::case_v, SweepBounds{4, 4, 4});
    bool saw_reduction = false;
    for (const auto& c : rep.cells) {
        if (c.p == c.q) {
            EXPECT_EQ(c.status, SweepCell::Status::reduction);
            saw_reduction = true;
            continue;
        }
        EXPECT_EQ(c.status, SweepCell::Status::empty) << c.p << " " << c.q << " " << c.deg_a << " " << c.deg_b;
    }
    EXPECT_TRUE(saw_reduction);
}

TEST(Sweep, CaseVCellsRespectTheShape) {
    const SweepReport rep = impossibility_sweep(SweepPattern::case_v, SweepBounds{3, 3, 2});
    for (const auto& c : rep.cells) {
        if (c.p == c.q) continue;
        EXPECT_GE(c.deg_a, c.p);
        EXPECT_GE(c.deg_b, c.q);
        EXPECT_EQ(c.p < c.q, c.deg_a < c.deg_b);
        EXPECT_EQ(c.unknowns, static_cast<std::size_t>(c.deg_a - c.p + 1 + c.deg_b - c.q + 1));
    }
}

TEST(Sweep, CaseVEncodingFindsSolutionsThatExist) {
    // With deg a = deg b = 2 (excluded from the sweep by the degree ordering) solutions exist,
    // and the same encoding finds them.
    const PolyH c2 = structure_constant(2, -2), c1 = structure_constant(1, -1);
    std::vector<WeylElement> terms{WeylElement(delta_op(c2, -2)), WeylElement(delta_op(c1, -1)),
                                   WeylElement(delta_op(c1 * Hp, -1))};
    const auto sol = solve(detail::coordinate_system(terms, WeylElement(1)));
    ASSERT_TRUE(sol.consistent);
    const PolyH a = c2 * PolyH(sol.particular[0]);
    const PolyH b = c1 * PolyH(std::vector<Rat>{sol.particular[1], sol.particular[2]});
    EXPECT_EQ(delta_balance_check(a, b, 2, 1), PolyH(1));
}

TEST(Sweep, WorkersDoNotChangeTheReport) {
    const SweepReport one = impossibility_sweep(SweepPattern::case_ii, SweepBounds{3, 3, 3}, 1);
    const SweepReport four = impossibility_sweep(SweepPattern::case_ii, SweepBounds{3, 3, 3}, 4);
    ASSERT_EQ(one.cells.size(), four.cells.size());
    for (std::size_t i = 0; i < one.cells.size(); ++i) {
        EXPECT_EQ(four.cells[i].index, i);
        EXPECT_EQ(one.cells[i].status, four.cells[i].status);
        EXPECT_EQ(one.cells[i].rank, four.cells[i].rank);
        EXPECT_EQ(one.cells[i].witness, four.cells[i].witness);
    }
}

TEST(Sweep, Bounds) {
    EXPECT_THROW(impossibility_sweep(SweepPattern::case_ii, SweepBounds{9, 2, 2}), DomainError);
    EXPECT_THROW(impossibility_sweep(SweepPattern::case_ii, SweepBounds{2, 2, 7}), DomainError);
    EXPECT_THROW(impossibility_sweep(SweepPattern::case_ii, SweepBounds{0, 2, 2}), DomainError);
    EXPECT_THROW(parse_pattern("case-iv"), DomainError);
    EXPECT_EQ(parse_pattern("case-iii"), SweepPattern::case_iii);
}
