#include <gtest/gtest.h>

#include "balgraph/labelings.hpp"
#include "balgraph/oracle.hpp"
#include "fixtures.hpp"
#include "generators.hpp"

using namespace balgraph;
using fixtures::edges_of;
using fixtures::vertices_of;

namespace {

FullLabeling full_of(const FiniteAbelianGroup& A, const std::vector<std::int64_t>& v,
                     const std::vector<std::int64_t>& e) {
    return FullLabeling{vertices_of(A, v), edges_of(A, e)};
}

std::vector<GroupElement> elems(const FiniteAbelianGroup& A, const std::vector<std::int64_t>& values) {
    std::vector<GroupElement> out;
    for (auto v : values) out.push_back(A.element({v}));
    return out;
}

}  // namespace

TEST(Kinds, ParseAndPrint) {
    EXPECT_EQ(parse_labeling_kind("W"), LabelingKind::W);
    EXPECT_EQ(to_string(LabelingKind::B), "B");
    EXPECT_THROW(parse_labeling_kind("X"), std::invalid_argument);
}

TEST(TrailValue, ExcludesTerminal) {
    auto tri = fixtures::triangle();
    auto Z10 = parse_group("Z10");
    auto h = full_of(Z10, {1, 2, 3}, {4, 5, 6});
    EXPECT_EQ(trail_value(Z10, h, make_ttrail(tri, {"1", "2"}, {"a", "b"}, "3")), Z10.element({1 + 4 + 2 + 5}));
    EXPECT_EQ(trail_value(Z10, h.edges, make_ttrail(tri, {"1", "2"}, {"a", "b"}, "3")), Z10.element({9}));
}

TEST(BalancedEdges, Examples) {
    auto tri = fixtures::triangle();
    auto Z3 = parse_group("Z3");
    EXPECT_TRUE(is_balanced_edges(tri, Z3, edges_of(Z3, {1, 1, 1})));
    EXPECT_FALSE(is_balanced_edges(tri, Z3, edges_of(Z3, {1, 1, 0})));
    auto b3 = fixtures::b3();
    auto Z4 = parse_group("Z4");
    EXPECT_TRUE(is_balanced_edges(b3, Z4, edges_of(Z4, {2, 2, 2})));
    EXPECT_FALSE(is_balanced_edges(b3, Z4, edges_of(Z4, {1, 1, 1})));
}

TEST(BalancedEdges, Mismatch) {
    auto tri = fixtures::triangle();
    auto Z3 = parse_group("Z3");
    EXPECT_THROW(is_balanced_edges(tri, Z3, edges_of(Z3, {1, 1})), std::invalid_argument);
    EXPECT_THROW(is_balanced_edges(tri, Z3, edges_of(parse_group("Z5"), {4, 4, 4})), std::invalid_argument);
}

TEST(BalancedFull, Examples) {
    auto loop = fixtures::loop1();
    auto Z4 = parse_group("Z4");
    EXPECT_TRUE(is_balanced_full(loop, Z4, full_of(Z4, {1}, {3})));
    EXPECT_FALSE(is_balanced_full(loop, Z4, full_of(Z4, {1}, {1})));
    auto Z6 = parse_group("Z6");
    EXPECT_TRUE(is_balanced_full(fixtures::triangle(), Z6, full_of(Z6, {1, 2, 3}, {4, 5, 3})));
}

// The doubled-short condition in its correct orientation: for the short a from
// vertex 1 to vertex 2 of B3, 2 h(s) = h(1) - h(2).
TEST(BalancedFull, ShortRelationOrientation) {
    auto b3 = fixtures::b3();
    auto Z3 = parse_group("Z3");
    // h(1)=1, h(2)=0, edges e with 1 + 0 + 2e = 0, so e = 1; h(s) = 1 + 1 = 2 and 2*2 = 1 = h(1) - h(2).
    auto h = full_of(Z3, {1, 0}, {1, 1, 1});
    EXPECT_TRUE(oracle_is_balanced(b3, Z3, h));
    EXPECT_TRUE(is_balanced_full(b3, Z3, h));
}

TEST(Balanceable, Examples) {
    auto bow = fixtures::bowtie_on_edge();
    auto Z4 = parse_group("Z4");
    EXPECT_FALSE(is_balanceable(bow, Z4, vertices_of(Z4, {0, 3, 0, 0})));
    EXPECT_TRUE(is_balanceable(bow, Z4, vertices_of(Z4, {0, 2, 0, 0})));
    auto path = parse_graph("vertex 1\nvertex 2\nvertex 3\nedge a 1 2\nedge b 2 3\n");
    EXPECT_TRUE(is_balanceable(path, Z4, vertices_of(Z4, {1, 3, 2})));
}

TEST(Balance, Examples) {
    auto bow = fixtures::bowtie_on_edge();
    auto Z4 = parse_group("Z4");
    auto gv = vertices_of(Z4, {0, 2, 0, 0});
    auto f = balance(bow, Z4, gv);
    ASSERT_TRUE(f);
    EXPECT_TRUE(oracle_is_balanced(bow, Z4, FullLabeling{gv, *f}));
    EXPECT_TRUE(oracle_is_balanced(bow, Z4, full_of(Z4, {0, 2, 0, 0}, {1, 0, 1, 0, 1})));

    auto zero = balance(bow, Z4, vertices_of(Z4, {0, 0, 0, 0}));
    ASSERT_TRUE(zero);
    EXPECT_EQ(*zero, edges_of(Z4, {0, 0, 0, 0, 0}));
    EXPECT_FALSE(balance(bow, Z4, vertices_of(Z4, {0, 3, 0, 0})));
}

TEST(Structure, Examples) {
    auto tri = fixtures::triangle();
    EXPECT_EQ(group_structure(tri, LabelingKind::H), (GroupStructure{2, 0, 0}));
    EXPECT_EQ(group_structure(tri, LabelingKind::B), (GroupStructure{3, 0, 0}));
    EXPECT_EQ(group_structure(tri, LabelingKind::W), (GroupStructure{5, 0, 0}));
    auto b3 = fixtures::b3();
    EXPECT_EQ(group_structure(b3, LabelingKind::H), (GroupStructure{0, 1, 0}));
    EXPECT_EQ(group_structure(b3, LabelingKind::W), (GroupStructure{2, 0, 0}));
    auto k4 = fixtures::k4();
    EXPECT_EQ(group_structure(k4, LabelingKind::H), (GroupStructure{0, 3, 0}));
    EXPECT_EQ(group_structure(k4, LabelingKind::B), (GroupStructure{1, 0, 3}));
    EXPECT_EQ(group_structure(k4, LabelingKind::W), (GroupStructure{4, 0, 0}));
}

TEST(Count, Examples) {
    EXPECT_EQ(count_balanced(fixtures::triangle(), parse_group("Z2"), LabelingKind::W), 32);
    EXPECT_EQ(count_balanced(fixtures::b3(), parse_group("Z4"), LabelingKind::H), 2);
    EXPECT_EQ(count_balanced(fixtures::bowtie_on_edge(), parse_group("Z4"), LabelingKind::H), 32);
    // Large counts stay exact.
    EXPECT_EQ(count_balanced(fixtures::k4(), parse_group("Z1000000007"), LabelingKind::W),
              pow(BigInt(1000000007), 4));
}

TEST(Phi, Examples) {
    auto tri = fixtures::triangle();
    auto Z3 = parse_group("Z3");
    const BalanceFrame frame(tri);
    auto c = frame.phi(Z3, edges_of(Z3, {1, 1, 1}));
    EXPECT_EQ(c.forest, elems(Z3, {1, 1}));
    EXPECT_TRUE(c.shorts.empty());
    EXPECT_EQ(frame.phi_inv(Z3, c), edges_of(Z3, {1, 1, 1}));
    EXPECT_THROW(frame.phi(Z3, edges_of(Z3, {1, 1, 0})), std::invalid_argument);

    auto Z4 = parse_group("Z4");
    const BalanceFrame fb(fixtures::b3());
    auto cb = fb.phi(Z4, edges_of(Z4, {2, 2, 2}));
    EXPECT_EQ(cb.shorts, elems(Z4, {2}));
    EXPECT_THROW(fb.phi_inv(Z4, EdgeCoordinates{{}, elems(Z4, {1})}), std::invalid_argument);
}

TEST(Psi, Examples) {
    auto Z4 = parse_group("Z4");
    const BalanceFrame frame(fixtures::bowtie_on_edge());
    auto gv = vertices_of(Z4, {1, 3, 0, 2});
    auto c = frame.psi(Z4, gv);
    EXPECT_EQ(c.reps, elems(Z4, {1, 0, 2}));
    EXPECT_EQ(c.diffs, elems(Z4, {2}));
    EXPECT_EQ(frame.psi_inv(Z4, c), gv);
    EXPECT_EQ(frame.psi_inv(Z4, VertexCoordinates{elems(Z4, {0, 0, 0}), elems(Z4, {0})}),
              vertices_of(Z4, {0, 0, 0, 0}));
    EXPECT_THROW(frame.psi(Z4, vertices_of(Z4, {0, 3, 0, 0})), std::invalid_argument);
    EXPECT_THROW(frame.psi_inv(Z4, VertexCoordinates{elems(Z4, {0, 0, 0}), elems(Z4, {1})}), std::invalid_argument);
}

TEST(Xi, Examples) {
    auto Z6 = parse_group("Z6");
    const BalanceFrame tri(fixtures::triangle());
    auto h = tri.xi_inv(Z6, FullCoordinates{elems(Z6, {1, 2, 3}), elems(Z6, {4, 5}), {}});
    EXPECT_EQ(h, full_of(Z6, {1, 2, 3}, {4, 5, 3}));
    EXPECT_EQ(tri.xi(Z6, h), (FullCoordinates{elems(Z6, {1, 2, 3}), elems(Z6, {4, 5}), {}}));

    auto zero = tri.xi_inv(Z6, FullCoordinates{elems(Z6, {0, 0, 0}), elems(Z6, {0, 0}), {}});
    EXPECT_EQ(zero, full_of(Z6, {0, 0, 0}, {0, 0, 0}));

    auto Z4 = parse_group("Z4");
    const BalanceFrame b3(fixtures::b3());
    auto hb = b3.xi_inv(Z4, FullCoordinates{elems(Z4, {0}), {}, elems(Z4, {1})});
    EXPECT_EQ(hb.vertices.values[1], Z4.element({2}));
    EXPECT_THROW(tri.xi(Z6, full_of(Z6, {1, 2, 3}, {4, 5, 0})), std::invalid_argument);
    EXPECT_THROW(tri.xi_inv(Z6, FullCoordinates{elems(Z6, {1, 2}), elems(Z6, {4, 5}), {}}), std::invalid_argument);
}

// xi of a labeling with zero vertex part restricts to phi.
TEST(XiProperty, ZeroVertexPartMatchesPhi) {
    gen::Rng rng(41);
    for (int i = 0; i < 100; ++i) {
        auto g = gen::multigraph(rng);
        const BalanceFrame frame(g);
        for (const char* spec : {"Z4", "Z2xZ6"}) {
            auto A = parse_group(spec);
            auto f = frame.phi_inv(A, gen::edge_coordinates(rng, frame, A));
            FullLabeling h{VertexLabeling{std::vector<GroupElement>(g.vertex_count(), A.zero())}, f};
            auto x = frame.xi(A, h);
            auto p = frame.phi(A, f);
            EXPECT_EQ(x.forest, p.forest);
            EXPECT_EQ(x.shorts, p.shorts);
        }
    }
}

TEST(LabelingsProperty, RestrictionConsistency) {
    gen::Rng rng(42);
    for (int i = 0; i < 150; ++i) {
        auto g = gen::multigraph(rng);
        const BalanceFrame frame(g);
        const CycleOracle oracle(g);
        for (const char* spec : {"Z2", "Z4", "Z6"}) {
            auto A = parse_group(spec);
            for (int t = 0; t < 10; ++t) {
                auto f = t % 2 ? gen::edge_labeling(rng, g, A) : frame.phi_inv(A, gen::edge_coordinates(rng, frame, A));
                FullLabeling h{VertexLabeling{std::vector<GroupElement>(g.vertex_count(), A.zero())}, f};
                EXPECT_EQ(frame.is_balanced_full(A, h), frame.is_balanced_edges(A, f));
                EXPECT_EQ(oracle.is_balanced(A, h), oracle.is_balanced(A, f));
            }
        }
    }
}

TEST(PointBalancer, BalancesTwiceAtOneVertex) {
    gen::Rng rng(43);
    for (int i = 0; i < 150; ++i) {
        auto g = gen::multigraph(rng);
        const CycleOracle oracle(g);
        for (const char* spec : {"Z3", "Z4", "Z2xZ6"}) {
            auto A = parse_group(spec);
            auto v = std::uniform_int_distribution<VertexIndex>(0, g.vertex_count() - 1)(rng);
            auto a = gen::element(rng, A);
            VertexLabeling gv{std::vector<GroupElement>(g.vertex_count(), A.zero())};
            gv.values[v] = A.scale(2, a);
            auto f = point_balancer(g, A, v, a);
            EXPECT_TRUE(oracle.is_balanced(A, FullLabeling{gv, f})) << to_text(g);
        }
    }
}

TEST(LabelingsProperty, DecidersMatchOracleOnRandomGraphs) {
    gen::Rng rng(44);
    for (int i = 0; i < 80; ++i) {
        auto g = gen::multigraph(rng, {6, 9, 0.1, 0.3});
        const BalanceFrame frame(g);
        const CycleOracle oracle(g);
        for (const char* spec : {"Z2", "Z4", "Z2xZ2", "Z6", "Z8"}) {
            auto A = parse_group(spec);
            for (int t = 0; t < 30; ++t) {
                auto h = frame.xi_inv(A, gen::full_coordinates(rng, frame, A));
                if (t % 3 == 1 && g.edge_count() > 0) h.edges.values[rng() % g.edge_count()] = gen::element(rng, A);
                if (t % 3 == 2) h.vertices.values[rng() % g.vertex_count()] = gen::element(rng, A);
                EXPECT_EQ(frame.is_balanced_full(A, h), oracle.is_balanced(A, h)) << to_text(g);
                EXPECT_EQ(frame.is_balanced_edges(A, h.edges), oracle.is_balanced(A, h.edges)) << to_text(g);
            }
        }
    }
}
