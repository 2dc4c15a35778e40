#include "mdim/construction.hpp"
#include "mdim/forbidden.hpp"
#include "mdim/verify.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace mdim;

namespace {

void expect_golden(const oracle::GoldenExample& ex)
{
    const auto p = Params::make(ex.n1, ex.n2, ex.n3);
    const auto w = construct_middle(p).landmarks;
    const auto left = w.side(Side::Left);
    const auto right = w.side(Side::Right);
    EXPECT_EQ(matrix_rows(left), ex.left) << p.to_string();
    EXPECT_EQ(matrix_rows(right), ex.right) << p.to_string();
    EXPECT_EQ(w.size(), static_cast<std::size_t>(2 * ex.n3));
}

} // namespace

TEST(Multiplicities, Examples)
{
    const auto a = compute_multiplicities(5, 11);
    EXPECT_EQ(a.q, 2);
    EXPECT_EQ(a.r, 1);
    EXPECT_EQ(a.schedule, (std::vector<int>{3, 2, 2, 2, 2}));
    const auto b = compute_multiplicities(5, 17);
    EXPECT_EQ(b.q, 3);
    EXPECT_EQ(b.r, 2);
    EXPECT_EQ(b.schedule, (std::vector<int>{4, 3, 4, 3, 3}));
    const auto c = compute_multiplicities(3, 6);
    EXPECT_EQ(c.schedule, (std::vector<int>{2, 2, 2}));
    // r > n1 - r: alternate n1 - r times, then a tail of long blocks.
    EXPECT_EQ(compute_multiplicities(5, 14).schedule, (std::vector<int>{3, 2, 3, 3, 3}));
    EXPECT_THROW(compute_multiplicities(2, 5), ParamError);
}

TEST(Multiplicities, Invariants)
{
    for (int n1 = 3; n1 <= 12; ++n1) {
        for (int n3 = n1; n3 <= 60; ++n3) {
            const auto m = compute_multiplicities(n1, n3);
            ASSERT_EQ(static_cast<int>(m.schedule.size()), n1);
            ASSERT_EQ(m.q * n1 + m.r, n3);
            ASSERT_LT(m.r, n1);
            int sum = 0;
            int longs = 0;
            for (int len : m.schedule) {
                ASSERT_TRUE(len == m.q || len == m.q + 1);
                sum += len;
                longs += len == m.q + 1;
            }
            ASSERT_EQ(sum, n3);
            ASSERT_EQ(longs, m.r);
            // Alternating prefix of (q+1, q) pairs.
            const int pairs = std::min(m.r, n1 - m.r);
            for (int i = 0; i < pairs; ++i) {
                ASSERT_EQ(m.schedule[static_cast<std::size_t>(2 * i)], m.q + 1);
                ASSERT_EQ(m.schedule[static_cast<std::size_t>(2 * i + 1)], m.q);
            }
        }
    }
}

TEST(Construction, GoldenEven)
{
    expect_golden(oracle::golden_5_6_11);
    const oracle::GoldenExample small{3, 4, 6,
                                       {{{1, 1, 2, 2, 3, 3}, {1, 2, 1, 2, 1, 2}, {1, 2, 3, 4, 5, 6}}},
                                       {{{2, 2, 3, 3, 1, 1}, {3, 4, 3, 4, 3, 4}, {1, 2, 3, 4, 5, 6}}}};
    expect_golden(small);
}

TEST(Construction, GoldenOddInsertAndReplace)
{
    expect_golden(oracle::golden_5_7_11);
    const auto built = construct_middle(Params::make(5, 7, 11));
    const auto& t = built.trace;
    EXPECT_FALSE(t.even);
    EXPECT_EQ(t.f, 3);
    EXPECT_EQ(t.k, 0);
    EXPECT_EQ(t.inserts, (std::vector<NeutralInsert>{{1, 2}}));
    ASSERT_TRUE(t.replacement.has_value());
    EXPECT_EQ(t.replacement->from, (Vertex{4, 1, 8}));
    EXPECT_EQ(t.replacement->to, (Vertex{4, 7, 8}));
}

TEST(Construction, GoldenOddMultipleInserts)
{
    expect_golden(oracle::golden_5_7_17);
    const auto& t = construct_middle(Params::make(5, 7, 17)).trace;
    EXPECT_EQ(t.k, 2);
    EXPECT_EQ(t.block_starts, (std::vector<int>{1, 5, 8, 12, 15}));
    EXPECT_EQ(t.inserts, (std::vector<NeutralInsert>{{1, 2}, {8, 9}}));
    EXPECT_FALSE(t.replacement.has_value());
}

TEST(Construction, RejectsOtherCones)
{
    try {
        construct_middle(Params::make(3, 3, 8));
        FAIL() << "expected InputError";
    } catch (const InputError& e) {
        EXPECT_NE(std::string(e.what()).find("upper cone"), std::string::npos);
    }
    try {
        construct_middle(Params::make(6, 7, 7));
        FAIL() << "expected InputError";
    } catch (const InputError& e) {
        EXPECT_NE(std::string(e.what()).find("lower cone"), std::string::npos);
    }
    EXPECT_THROW(construct_plus_one(Params::make(3, 3, 8)), InputError);
    EXPECT_THROW(construct_even(Params::make(5, 7, 11)), InputError);
    EXPECT_THROW(construct_odd(Params::make(5, 6, 11)), InputError);
}

TEST(Construction, SmallOutputsResolveUnderBreadthFirstOracle)
{
    const auto w = construct_middle(Params::make(3, 4, 6)).landmarks;
    ASSERT_EQ(w.size(), 12U);
    const std::vector<Vertex> base(w.landmarks().begin(), w.landmarks().end());
    EXPECT_FALSE(oracle::brute_force_unresolved(3, 4, 6, base).has_value());

    const auto x = construct_plus_one(Params::make(3, 4, 6));
    ASSERT_EQ(x.size(), 13U);
    EXPECT_EQ(x.params(), Params::make(4, 5, 7));
    const std::vector<Vertex> plus(x.landmarks().begin(), x.landmarks().end());
    EXPECT_FALSE(oracle::brute_force_unresolved(4, 5, 7, plus).has_value());
}

TEST(Construction, PlusOneResolves)
{
    const auto x = construct_plus_one(Params::make(5, 6, 11));
    EXPECT_EQ(x.size(), 23U);
    EXPECT_TRUE(is_resolving_distances(x).resolving);
}

TEST(MiddleCone, HasEnoughPoints)
{
    EXPECT_GE(middle_cone(12).size(), 46U);
    for (const auto& p : middle_cone(12))
        ASSERT_EQ(classify_cone(p), ConeClass::Middle);
}

TEST(MiddleCone, StructuralInvariants)
{
    for (const auto& p : middle_cone(12)) {
        SCOPED_TRACE(p.to_string());
        const auto built = construct_middle(p);
        const auto& w = built.landmarks;
        const auto& t = built.trace;
        const int n1 = p.n1();
        const int n2 = p.n2();
        ASSERT_EQ(w.size(), static_cast<std::size_t>(2 * p.n3()));
        ASSERT_EQ(construct_plus_one(p).size(), static_cast<std::size_t>(2 * p.n3() + 1));
        ASSERT_TRUE(is_basic(w));

        // Multiplicity bounds.
        const auto& l = t.multiplicities.schedule;
        const int f = n2 / 2;
        ASSERT_GE(l[0], 2);
        for (std::size_t i = 0; i < l.size(); ++i) {
            if (n2 % 2 == 0) {
                ASSERT_LE(l[i], f);
            } else {
                ASSERT_LE(l[i], f + 1);
                ASSERT_FALSE(l[i] == f + 1 && l[(i + 1) % l.size()] == f + 1);
            }
        }

        const auto g = build_landmark_graph(w);
        // Blue hyperedge sizes are sums of cyclically consecutive multiplicities.
        for (int i = 1; i <= n1; ++i) {
            const auto prev = static_cast<std::size_t>((i - 2 + n1) % n1);
            const auto cur = static_cast<std::size_t>(i - 1);
            ASSERT_EQ(g.members(Color::Blue, i).size(), static_cast<std::size_t>(l[prev] + l[cur]));
        }
        // Pink sticks only; blue and green poofy.
        for (const auto& e : g.edges()) {
            const auto kind = edge_kind(g.members(e).size());
            ASSERT_EQ(kind, e.color == Color::Pink ? EdgeKind::Stick : EdgeKind::Poofy);
        }
        // Pink sticks join the two sides, first coordinates one apart mod n1.
        const auto& sides = *w.sides();
        for (int z = 1; z <= p.n3(); ++z) {
            const auto& m = g.members(Color::Pink, z);
            ASSERT_EQ(sides[m[0]], Side::Left);
            ASSERT_EQ(sides[m[1]], Side::Right);
            ASSERT_EQ(w[m[1]].x1, w[m[0]].x1 % n1 + 1);
        }
        if (n2 % 2 == 0) {
            for (std::size_t i = 0; i < w.size(); ++i) {
                const bool low = w[i].x2 <= f;
                ASSERT_EQ(low, sides[i] == Side::Left);
            }
        } else {
            const auto neutrals = static_cast<int>(
                std::count_if(w.landmarks().begin(), w.landmarks().end(), [&](const Vertex& v) { return v.x2 == n2; }));
            ASSERT_EQ(neutrals, t.k >= 2 ? 2 * t.k : 3);
            if (t.k >= 2) {
                ASSERT_FALSE(t.replacement.has_value());
                ASSERT_EQ(static_cast<int>(t.inserts.size()), t.k);
                for (std::size_t i = 1; i < t.inserts.size(); ++i)
                    ASSERT_LT(t.inserts[i - 1].left, t.inserts[i].left);
                for (const auto& ins : t.inserts)
                    ASSERT_EQ(ins.right, ins.left + 1);
            } else {
                ASSERT_EQ(t.inserts, (std::vector<NeutralInsert>{{1, 2}}));
                ASSERT_TRUE(t.replacement.has_value());
                const auto& r = *t.replacement;
                ASSERT_EQ(r.from.x2, 1);
                ASSERT_TRUE(r.from.x1 != 1 && r.from.x1 != 2 && r.from.x1 != n1);
                ASSERT_EQ(r.to, (Vertex{r.from.x1, n2, r.from.x3}));
                const auto left = w.side(Side::Left);
                ASSERT_NE(std::find(left.begin(), left.end(), r.to), left.end());
            }
        }
        // Row 3 of both matrices is 1..n3.
        const auto left_rows = matrix_rows(w.side(Side::Left));
        const auto right_rows = matrix_rows(w.side(Side::Right));
        for (int z = 1; z <= p.n3(); ++z) {
            ASSERT_EQ(left_rows[2][static_cast<std::size_t>(z - 1)], z);
            ASSERT_EQ(right_rows[2][static_cast<std::size_t>(z - 1)], z);
        }
        for (auto k : all_forbidden_kinds)
            ASSERT_TRUE(find_forbidden(g, k).empty()) << kind_name(k);
    }
}

TEST(MiddleCone, OutputsAndExtensionsResolve)
{
    for (const auto& p : middle_cone(10)) {
        const auto w = construct_middle(p).landmarks;
        ASSERT_TRUE(is_resolving_distances(w).resolving) << p.to_string();
        ASSERT_TRUE(is_resolving_footprints(w).resolving) << p.to_string();
        ASSERT_TRUE(predict_resolving_basic(w)) << p.to_string();
        ASSERT_TRUE(predict_resolving_triple_looped(w)) << p.to_string();
        ASSERT_TRUE(is_resolving_distances(extend_triple_loop(w)).resolving) << p.to_string();
    }
}
