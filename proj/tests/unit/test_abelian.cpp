#include <gtest/gtest.h>

#include <set>

#include "balgraph/abelian.hpp"

using namespace balgraph;

namespace {

GroupElement el(const FiniteAbelianGroup& A, std::vector<std::int64_t> r) { return A.element(std::move(r)); }

}  // namespace

TEST(Group, ParseAndCardinality) {
    auto A = parse_group("Z2xZ4");
    EXPECT_EQ(A.moduli(), (std::vector<std::int64_t>{2, 4}));
    EXPECT_EQ(A.cardinality(), 8);
    EXPECT_EQ(parse_group("z6").moduli(), (std::vector<std::int64_t>{6}));
    EXPECT_THROW(parse_group(""), std::invalid_argument);
    EXPECT_THROW(parse_group("Z0"), std::invalid_argument);
    EXPECT_THROW(parse_group("Z2x"), std::invalid_argument);
    EXPECT_THROW(parse_group("Z2 x Z3"), std::invalid_argument);
    EXPECT_THROW(parse_group("Q8"), std::invalid_argument);
}

TEST(Group, ElementLiterals) {
    auto A = parse_group("Z2xZ4");
    EXPECT_EQ(parse_element(A, "1,3"), el(A, {1, 3}));
    EXPECT_EQ(format_element(el(A, {1, 3})), "1,3");
    EXPECT_THROW(parse_element(A, "1"), std::invalid_argument);
    EXPECT_THROW(parse_element(A, "1,4"), std::invalid_argument);
    EXPECT_THROW(parse_element(A, "1,-1"), std::invalid_argument);
    EXPECT_THROW(parse_element(A, "1,x"), std::invalid_argument);
}

TEST(Group, Arithmetic) {
    auto A = parse_group("Z3xZ4");
    auto a = el(A, {2, 3}), b = el(A, {2, 2});
    EXPECT_EQ(A.add(a, b), el(A, {1, 1}));
    EXPECT_EQ(A.sub(a, b), el(A, {0, 1}));
    EXPECT_EQ(A.neg(a), el(A, {1, 1}));
    EXPECT_EQ(A.scale(-1, a), A.neg(a));
    EXPECT_EQ(A.scale(2, a), el(A, {1, 2}));
    EXPECT_EQ(el(A, {-1, 9}), el(A, {2, 1}));
    EXPECT_TRUE(A.is_zero(A.scale(12, a)));
}

TEST(Order, Examples) {
    EXPECT_EQ(element_order(parse_group("Z6"), parse_element(parse_group("Z6"), "3")), 2u);
    auto A = parse_group("Z2xZ4");
    EXPECT_EQ(element_order(A, el(A, {1, 2})), 2u);
    EXPECT_EQ(element_order(A, A.zero()), 1u);
    EXPECT_EQ(element_order(A, el(A, {1, 1})), 4u);
}

TEST(TwoTorsion, Examples) {
    EXPECT_EQ(two_torsion_count(parse_group("Z4")), 2u);
    auto Z6 = parse_group("Z6");
    EXPECT_TRUE(in_two_torsion(Z6, el(Z6, {3})));
    EXPECT_FALSE(in_two_torsion(Z6, el(Z6, {2})));
    EXPECT_EQ(two_torsion_count(parse_group("Z3")), 1u);
    EXPECT_EQ(two_torsion_count(parse_group("Z2xZ4xZ3")), 4u);
}

TEST(Half, Examples) {
    auto Z6 = parse_group("Z6");
    EXPECT_EQ(half(Z6, el(Z6, {4})), el(Z6, {2}));
    auto Z4 = parse_group("Z4");
    EXPECT_FALSE(half(Z4, el(Z4, {1})).has_value());
    EXPECT_FALSE(in_double_image(Z4, el(Z4, {1})));
    auto Z3 = parse_group("Z3");
    EXPECT_EQ(half(Z3, el(Z3, {1})), el(Z3, {2}));
}

TEST(StructureCardinality, Examples) {
    EXPECT_EQ(structure_cardinality({2, 1, 0}, parse_group("Z4")), 32);
    EXPECT_EQ(structure_cardinality({5, 0, 0}, parse_group("Z2")), 32);
    EXPECT_EQ(structure_cardinality({0, 0, 0}, parse_group("Z6")), 1);
    EXPECT_EQ(structure_cardinality({1, 0, 3}, parse_group("Z4")), 4 * 8);
    EXPECT_EQ(double_image_cardinality(parse_group("Z2xZ6")), 3);
    EXPECT_EQ(to_string(GroupStructure{1, 0, 3}), "A^1 x (2A)^3");
    EXPECT_EQ(to_string(GroupStructure{0, 3, 0}), "A2^3");
    EXPECT_EQ(to_string(GroupStructure{}), "1");
}

TEST(Enumerate, Examples) {
    auto A = parse_group("Z2xZ2");
    auto all = enumerate_elements(A);
    ASSERT_EQ(all.size(), 4u);
    EXPECT_EQ(all[1], el(A, {0, 1}));
    EXPECT_EQ(all[2], el(A, {1, 0}));
    EXPECT_EQ(enumerate_elements(parse_group("Z3")).size(), 3u);
    auto one = enumerate_elements(parse_group("Z1"));
    ASSERT_EQ(one.size(), 1u);
    EXPECT_TRUE(parse_group("Z1").is_zero(one[0]));
    EXPECT_THROW(enumerate_elements(parse_group("Z1000xZ1001")), BoundExceeded);
    for (std::uint64_t i = 0; i < all.size(); ++i) {
        EXPECT_EQ(A.index_of(all[i]), i);
        EXPECT_EQ(A.element_at(i), all[i]);
    }
}

TEST(GroupProperty, HalvesOrdersAndIndexFormula) {
    for (const char* spec : {"Z1", "Z2", "Z3", "Z4", "Z6", "Z8", "Z2xZ2", "Z2xZ4", "Z3xZ6", "Z4xZ4xZ2"}) {
        auto A = parse_group(spec);
        auto all = enumerate_elements(A);
        std::set<GroupElement> doubles;
        std::uint64_t torsion = 0;
        for (const auto& a : all) {
            auto twice = A.add(a, a);
            doubles.insert(twice);
            ASSERT_TRUE(in_double_image(A, twice));
            EXPECT_EQ(A.scale(2, *half(A, twice)), twice);
            EXPECT_EQ(static_cast<std::uint64_t>(all.size()) % element_order(A, a), 0u);
            if (A.is_zero(twice)) ++torsion;
        }
        EXPECT_EQ(torsion, two_torsion_count(A)) << spec;
        EXPECT_EQ(torsion * doubles.size(), all.size()) << spec;
        EXPECT_EQ(BigInt(doubles.size()), double_image_cardinality(A)) << spec;
    }
}
