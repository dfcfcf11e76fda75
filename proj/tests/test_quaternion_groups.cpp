#include "h4/quaternion_groups.hpp"

#include <gtest/gtest.h>

using namespace h4;

TEST(QuaternionGroups, Sizes) {
    EXPECT_EQ(build_set(QuaternionSetName::T).size(), 24u);
    EXPECT_EQ(build_set(QuaternionSetName::Tprime).size(), 24u);
    EXPECT_EQ(build_set(QuaternionSetName::O).size(), 48u);
    EXPECT_EQ(build_set(QuaternionSetName::I).size(), 120u);
    EXPECT_EQ(build_set(QuaternionSetName::S).size(), 96u);
    EXPECT_EQ(build_set(QuaternionSetName::Itilde).size(), 120u);
}

TEST(QuaternionGroups, AllUnit) {
    for (auto n : {QuaternionSetName::T, QuaternionSetName::Tprime, QuaternionSetName::S, QuaternionSetName::Itilde})
        for (const auto& q : build_set(n).elements) EXPECT_EQ(q_norm(q), GoldenScalar(1));
}

TEST(QuaternionGroups, IIsDisjointUnionOfTAndS) {
    const auto i = build_set(QuaternionSetName::I);
    const auto t = build_set(QuaternionSetName::T);
    const auto s = build_set(QuaternionSetName::S);
    for (const auto& q : t.elements) {
        EXPECT_TRUE(i.contains(q));
        EXPECT_FALSE(s.contains(q));
    }
    for (const auto& q : s.elements) EXPECT_TRUE(i.contains(q));
}

TEST(QuaternionGroups, NamedGroupsAreClosed) {
    EXPECT_TRUE(is_group(build_set(QuaternionSetName::T)));
    EXPECT_TRUE(is_group(build_set(QuaternionSetName::O)));
    EXPECT_TRUE(is_group(build_set(QuaternionSetName::I)));
    EXPECT_TRUE(is_group(build_set(QuaternionSetName::Itilde)));
    EXPECT_FALSE(is_group(build_set(QuaternionSetName::Tprime)));
    EXPECT_FALSE(is_group(build_set(QuaternionSetName::S)));
}

TEST(QuaternionGroups, ItildeDiffersFromI) {
    EXPECT_NE(build_set(QuaternionSetName::I).elements, build_set(QuaternionSetName::Itilde).elements);
}

TEST(QuaternionGroups, ClosureCapAborts) {
    const auto i = build_set(QuaternionSetName::I);
    EXPECT_THROW(close_under_product("x", {i.elements[3], i.elements[50]}, 10), std::logic_error);
}

TEST(ConjugacyClasses, BinaryIcosahedral) {
    const auto classes = conjugacy_classes(build_set(QuaternionSetName::I));
    ASSERT_EQ(classes.size(), 9u);
    const std::vector<std::size_t> sizes = {1, 1, 12, 12, 12, 12, 20, 20, 30};
    const std::vector<int> orders = {1, 2, 10, 5, 10, 5, 6, 3, 4};
    for (std::size_t k = 0; k < 9; ++k) {
        EXPECT_EQ(classes[k].members.size(), sizes[k]);
        EXPECT_EQ(classes[k].element_order, orders[k]);
    }
    EXPECT_EQ(classes[0].members, std::vector<Quaternion>{Quaternion::one()});
}

TEST(ConjugacyClasses, LargestClassIsImaginary) {
    const auto classes = conjugacy_classes(build_set(QuaternionSetName::I));
    const auto& big = classes.back();
    for (const auto& q : big.members) EXPECT_TRUE(q[0].is_zero());
    for (const auto& u : {Quaternion::e1(), Quaternion::e2(), Quaternion::e3()}) {
        EXPECT_NE(std::find(big.members.begin(), big.members.end(), u), big.members.end());
        EXPECT_NE(std::find(big.members.begin(), big.members.end(), -u), big.members.end());
    }
}
