#include "h4/coxeter.hpp"
#include "h4/parallel.hpp"

#include <gtest/gtest.h>

using namespace h4;

namespace {
const GoldenScalar t = GoldenScalar::tau();
const GoldenScalar s = GoldenScalar::sigma();
const GoldenScalar r2 = GoldenScalar::sqrt2();
}  // namespace

TEST(CoxeterSystem, DualBasis) {
    for (auto name : {SystemName::H4, SystemName::H3, SystemName::A4, SystemName::A3, SystemName::A3inA4}) {
        const auto& sys = build_system(name);
        for (std::size_t i = 0; i < sys.rank(); ++i)
            for (std::size_t j = 0; j < sys.rank(); ++j)
                EXPECT_EQ(q_dot(sys.weights[i], sys.roots[j]), GoldenScalar(i == j ? 1 : 0)) << to_string(name);
        if (sys.complement)
            for (const auto& a : sys.roots) EXPECT_TRUE(q_dot(*sys.complement, a).is_zero());
    }
}

TEST(CoxeterSystem, InverseCartanIsWeightGram) {
    for (auto name : {SystemName::H4, SystemName::H3, SystemName::A4}) {
        const auto& sys = build_system(name);
        for (std::size_t i = 0; i < sys.rank(); ++i)
            for (std::size_t j = 0; j < sys.rank(); ++j)
                EXPECT_EQ(sys.cartan_inverse(i, j), q_dot(sys.weights[i], sys.weights[j]));
    }
    EXPECT_EQ(build_system(SystemName::H4).cartan_inverse(3, 3), GoldenScalar(2) * t * t);
}

TEST(CoxeterSystem, H4Examples) {
    const auto& h4 = build_system(SystemName::H4);
    EXPECT_EQ(h4.weights[3], Quaternion(-r2 * t, 0, 0, 0));
    EXPECT_EQ(h4.cartan(0, 1), -t);
    EXPECT_EQ(h4.cartan(0, 0), GoldenScalar(2));
    EXPECT_EQ(h4.cartan(1, 2), GoldenScalar(-1));
    EXPECT_EQ(h4.cartan(0, 3), GoldenScalar(0));
    // omega2 = -sqrt2 (tau^3 + tau e3)
    EXPECT_EQ(h4.weights[1], -r2 * Quaternion(t * t * t, 0, 0, t));
}

TEST(CoxeterSystem, A4Examples) {
    const auto& a4 = build_system(SystemName::A4);
    const GoldenScalar r10 = r2 * GoldenScalar::sqrt5();
    EXPECT_EQ(a4.weights[3], GoldenScalar(1) / r10 * Quaternion(0, 0, 2, -2));
    EXPECT_EQ(a4.cartan(0, 1), GoldenScalar(-1));
    EXPECT_EQ(a4.cartan_inverse(0, 0), GoldenScalar::rational(4, 5));
}

TEST(CoxeterSystem, WeightCoords) {
    const auto& h3 = build_system(SystemName::H3);
    const auto& h4 = build_system(SystemName::H4);
    const auto& a4 = build_system(SystemName::A4);
    EXPECT_EQ(weight_coords(h3, h4.weights[3]), (std::vector<GoldenScalar>{0, 0, 0, 1}));
    EXPECT_EQ(weight_coords(a4, h4.weights[0]), (std::vector<GoldenScalar>{t * t * t * t, -2 * t * t, 1, t}));
    EXPECT_EQ(weight_coords(h4, h4.roots[0]), (std::vector<GoldenScalar>{2, -t, 0, 0}));
    // omega1 = v1 + tau^3/2 omega4
    EXPECT_EQ(weight_coords(h3, h4.weights[0]), (std::vector<GoldenScalar>{1, 0, 0, t * t * t / GoldenScalar(2)}));
}

TEST(CoxeterSystem, FromWeightCoordsInvertsWeightCoords) {
    const auto& h3 = build_system(SystemName::H3);
    const Quaternion x(1, t, s, r2);
    EXPECT_EQ(from_weight_coords(h3, weight_coords(h3, x)), x);
    const auto& a4 = build_system(SystemName::A4);
    EXPECT_EQ(from_weight_coords(a4, weight_coords(a4, x)), x);
}

TEST(Generate, SmallOrders) {
    EXPECT_EQ(weyl_group(SystemName::H3).order(), 120u);
    EXPECT_EQ(weyl_group(SystemName::A4).order(), 120u);
    EXPECT_EQ(weyl_group(SystemName::A3).order(), 24u);
    EXPECT_EQ(weyl_group(SystemName::A3inA4).order(), 24u);
}

TEST(Generate, H4OrderAndClosedForm) {
    const FiniteGroup& w = weyl_group(SystemName::H4);
    EXPECT_EQ(w.order(), 14400u);
    EXPECT_EQ(w, h4_from_binary_icosahedral());
}

TEST(Generate, H3ClosedForm) { EXPECT_EQ(weyl_group(SystemName::H3), h3_from_binary_icosahedral()); }

TEST(Generate, CapAndExpectedOrderErrors) {
    const auto& gens = build_system(SystemName::H3).generators;
    EXPECT_THROW(generate(gens, "H3", std::nullopt, 50), GroupClosureError);
    EXPECT_THROW(generate(gens, "H3", 119), GroupClosureError);
}

TEST(Generate, IndependentOfWorkerCount) {
    const auto& gens = build_system(SystemName::H3).generators;
    FiniteGroup one, many;
    {
        ScopedWorkers w(1);
        one = generate(gens);
    }
    {
        ScopedWorkers w(8);
        many = generate(gens);
    }
    EXPECT_EQ(one, many);
}

TEST(AutA4, OrderAndEmbedding) {
    const FiniteGroup& aut = aut_a4();
    EXPECT_EQ(aut.order(), 240u);
    const FiniteGroup& h4 = weyl_group(SystemName::H4);
    for (const auto& g : aut.elements()) EXPECT_TRUE(h4.contains(g));
}

TEST(AutA4, GammaSwapsRoots) {
    const auto& a4 = build_system(SystemName::A4);
    const GroupElement g = a4_diagram_automorphism();
    EXPECT_EQ(g.apply(a4.roots[0]), a4.roots[3]);
    EXPECT_EQ(g.apply(a4.roots[3]), a4.roots[0]);
    EXPECT_EQ(g.apply(a4.roots[1]), a4.roots[2]);
    EXPECT_EQ(g.apply(a4.roots[2]), a4.roots[1]);
}
