#include "h4/coxeter.hpp"
#include "h4/group_element.hpp"
#include "h4/quaternion.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

using namespace h4;
using h4::testing::random_quaternion;

TEST(Quaternion, ImaginaryUnits) {
    EXPECT_EQ(Quaternion::e1() * Quaternion::e2(), Quaternion::e3());
    EXPECT_EQ(Quaternion::e2() * Quaternion::e3(), Quaternion::e1());
    EXPECT_EQ(Quaternion::e3() * Quaternion::e1(), Quaternion::e2());
    EXPECT_EQ(Quaternion::e2() * Quaternion::e1(), -Quaternion::e3());
    EXPECT_EQ(Quaternion::e1() * Quaternion::e1(), -Quaternion::one());
}

TEST(Quaternion, OneIsIdentity) {
    std::mt19937 rng(3);
    const Quaternion q = random_quaternion(rng);
    EXPECT_EQ(Quaternion::one() * q, q);
    EXPECT_EQ(q * Quaternion::one(), q);
}

TEST(Quaternion, ConjugateNormDot) {
    const GoldenScalar half = GoldenScalar::rational(1, 2);
    const Quaternion b = half * Quaternion(GoldenScalar::tau(), GoldenScalar::sigma(), 1, 0);
    EXPECT_EQ(q_norm(b), GoldenScalar(1));
    EXPECT_EQ(q_dot(Quaternion::e1(), Quaternion::e2()), GoldenScalar(0));
    std::mt19937 rng(5);
    const Quaternion q = random_quaternion(rng);
    EXPECT_EQ(q_conj(q_conj(q)), q);
}

TEST(Quaternion, DotIsScalarPartOfSymmetricProduct) {
    std::mt19937 rng(6);
    for (int i = 0; i < 20; ++i) {
        const Quaternion p = random_quaternion(rng), q = random_quaternion(rng);
        const Quaternion sym = p * q_conj(q) + q * q_conj(p);
        EXPECT_EQ(q_dot(p, q), sym[0] / GoldenScalar(2));
    }
}

TEST(Quaternion, NormIsMultiplicative) {
    std::mt19937 rng(9);
    for (int i = 0; i < 50; ++i) {
        const Quaternion p = random_quaternion(rng), q = random_quaternion(rng);
        EXPECT_EQ(q_norm(p * q), q_norm(p) * q_norm(q));
    }
}

TEST(Quaternion, ReflectExamples) {
    std::mt19937 rng(10);
    const Quaternion a = build_system(SystemName::H4).roots[1];
    EXPECT_EQ(reflect(a, a), -a);
    const Quaternion w = build_system(SystemName::H4).weights[0];
    EXPECT_EQ(reflect(a, w), w);
    for (int i = 0; i < 10; ++i) {
        const Quaternion n = random_quaternion(rng), r = random_quaternion(rng);
        if (n.is_zero()) continue;
        EXPECT_EQ(reflect(n, reflect(n, r)), r);
    }
    EXPECT_THROW(reflect(Quaternion(), Quaternion::one()), std::domain_error);
}

TEST(Quaternion, ReflectFixesAHyperplane) {
    // Three independent vectors orthogonal to n are fixed, n itself is negated.
    const Quaternion n(1, 2, 0, 0);
    const Quaternion f1(2, -1, 0, 0), f2 = Quaternion::e2(), f3 = Quaternion::e3();
    EXPECT_EQ(reflect(n, f1), f1);
    EXPECT_EQ(reflect(n, f2), f2);
    EXPECT_EQ(reflect(n, f3), f3);
    EXPECT_EQ(reflect(n, n), -n);
}

TEST(GroupElement, ApplyExamples) {
    std::mt19937 rng(12);
    const Quaternion r = random_quaternion(rng);
    EXPECT_EQ(GroupElement().apply(r), r);
    const GoldenScalar half = GoldenScalar::rational(1, 2);
    const Quaternion p = half * Quaternion(1, 1, 1, 1);
    EXPECT_EQ(GroupElement(GroupElement::Kind::star, p, -p).apply(p), -p);
    const auto& h4 = build_system(SystemName::H4);
    EXPECT_EQ(h4.generators[0].apply(h4.weights[1]), h4.weights[1]);
}

TEST(GroupElement, RejectsNonUnit) {
    EXPECT_THROW(GroupElement(GroupElement::Kind::plain, Quaternion(2, 0, 0, 0), Quaternion::one()),
                 std::invalid_argument);
}

TEST(GroupElement, ReflectionMatchesReflect) {
    const auto& h4 = build_system(SystemName::H4);
    std::mt19937 rng(14);
    for (const auto& a : h4.roots) {
        const Quaternion r = random_quaternion(rng);
        EXPECT_EQ(GroupElement::reflection(a).apply(r), reflect(a, r));
    }
}

TEST(GroupElement, ComposeMatchesApplication) {
    const auto& h4 = build_system(SystemName::H4);
    const auto& a4 = build_system(SystemName::A4);
    std::vector<GroupElement> pool = h4.generators;
    pool.insert(pool.end(), a4.generators.begin(), a4.generators.end());
    pool.push_back(compose(h4.generators[0], h4.generators[1]));
    pool.push_back(a4_diagram_automorphism());
    std::mt19937 rng(15);
    std::vector<Quaternion> basis;
    for (int i = 0; i < 4; ++i) basis.push_back(random_quaternion(rng));
    for (const auto& g : pool)
        for (const auto& h : pool) {
            const GroupElement gh = compose(g, h);
            for (const auto& r : basis) EXPECT_EQ(gh.apply(r), g.apply(h.apply(r)));
        }
}

TEST(GroupElement, StarTimesStarIsPlain) {
    const auto& h4 = build_system(SystemName::H4);
    EXPECT_FALSE(compose(h4.generators[0], h4.generators[2]).is_star());
    EXPECT_TRUE(compose(h4.generators[0], compose(h4.generators[1], h4.generators[2])).is_star());
}

TEST(GroupElement, ReflectionsAreInvolutions) {
    for (auto name : {SystemName::H4, SystemName::A4})
        for (const auto& r : build_system(name).generators) {
            EXPECT_TRUE(compose(r, r).is_identity());
            EXPECT_EQ(r.inverse(), r);
        }
}

TEST(GroupElement, InverseComposesToIdentity) {
    const auto& h4 = build_system(SystemName::H4);
    GroupElement g = compose(compose(h4.generators[0], h4.generators[1]), h4.generators[3]);
    EXPECT_TRUE(compose(g, g.inverse()).is_identity());
    GroupElement plain = compose(h4.generators[1], h4.generators[2]);
    EXPECT_TRUE(compose(plain.inverse(), plain).is_identity());
}

TEST(GroupElement, SignCanonicalization) {
    const GoldenScalar half = GoldenScalar::rational(1, 2);
    const Quaternion p = half * Quaternion(1, 1, 1, 1);
    const Quaternion q = Quaternion::e2();
    EXPECT_EQ(GroupElement(GroupElement::Kind::plain, p, q), GroupElement(GroupElement::Kind::plain, -p, -q));
}

TEST(GroupElementProperty, PreservesInnerProduct) {
    const FiniteGroup& w = weyl_group(SystemName::H3);
    std::mt19937 rng(16);
    const Quaternion x = random_quaternion(rng), y = random_quaternion(rng);
    for (const auto& g : w.elements()) EXPECT_EQ(q_dot(g.apply(x), g.apply(y)), q_dot(x, y));
}
