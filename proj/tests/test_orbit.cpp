#include "h4/orbit.hpp"

#include <gtest/gtest.h>

#include <map>

using namespace h4;

namespace {

std::vector<GoldenScalar> w(int a, int b, int c, int d) { return {a, b, c, d}; }

struct Uniform {
    std::vector<GoldenScalar> seed;
    std::size_t vertices;
    std::map<int, std::size_t> per_vertex;  // deleted node -> cells at a vertex
};

// Independent counts: vertices from |W|/|W_stab|; incidences from a float enumeration.
const std::vector<Uniform>& uniforms() {
    static const std::vector<Uniform> u = {
        {w(0, 0, 0, 1), 120, {{1, 20}}},
        {w(1, 0, 0, 0), 600, {{4, 4}}},
        {w(0, 1, 0, 0), 1200, {{1, 2}, {4, 3}}},
        {w(0, 0, 1, 0), 720, {{1, 5}, {4, 2}}},
        {w(1, 0, 0, 1), 2400, {{1, 1}, {2, 3}, {3, 3}, {4, 1}}},
        {w(0, 1, 0, 1), 3600, {{1, 2}, {3, 2}, {4, 1}}},
        {w(0, 0, 1, 1), 1440, {{1, 5}, {4, 1}}},
        {w(0, 1, 1, 0), 3600, {{1, 2}, {4, 2}}},
        {w(1, 0, 1, 0), 3600, {{1, 1}, {2, 2}, {4, 2}}},
        {w(1, 1, 0, 0), 2400, {{1, 1}, {4, 3}}},
        {w(1, 1, 1, 0), 7200, {{1, 1}, {2, 1}, {4, 2}}},
        {w(1, 1, 0, 1), 7200, {{1, 1}, {2, 1}, {3, 2}, {4, 1}}},
        {w(1, 0, 1, 1), 7200, {{1, 1}, {2, 2}, {3, 1}, {4, 1}}},
        {w(0, 1, 1, 1), 7200, {{1, 2}, {3, 1}, {4, 1}}},
        {w(1, 1, 1, 1), 14400, {{1, 1}, {2, 1}, {3, 1}, {4, 1}}},
    };
    return u;
}

}  // namespace

TEST(Weight, ParseAndAmbient) {
    const WeightVector x = parse_weight(SystemName::H4, "1, 0,t ,1/2");
    EXPECT_EQ(x.coeffs[2], GoldenScalar::tau());
    const auto& h4 = build_system(SystemName::H4);
    EXPECT_EQ(x.ambient, h4.weights[0] + GoldenScalar::tau() * h4.weights[2] + GoldenScalar::rational(1, 2) * h4.weights[3]);
    EXPECT_THROW(parse_weight(SystemName::H4, "1,0,0"), std::invalid_argument);
    EXPECT_THROW(parse_weight(SystemName::H4, "1,0,,0"), ScalarParseError);
}

TEST(Orbit, Examples) {
    EXPECT_EQ(h4_orbit(w(0, 0, 0, 1)).size(), 120u);
    EXPECT_EQ(h4_orbit(w(1, 0, 0, 0)).size(), 600u);
    EXPECT_EQ(h4_orbit(w(1, 1, 1, 1)).size(), 14400u);
}

TEST(Orbit, RejectsBadSeeds) {
    EXPECT_THROW(h4_orbit(w(0, 0, 0, 0)), OrbitError);
    EXPECT_THROW(h4_orbit(w(-1, 0, 0, 1)), OrbitError);
}

TEST(Orbit, OrbitStabilizerForEveryUniformSeed) {
    for (const auto& u : uniforms()) {
        const OrbitPolytope p = h4_orbit(u.seed);
        EXPECT_EQ(p.size(), u.vertices) << format_coeffs(u.seed);
        EXPECT_EQ(p.size() * p.stabilizer_order, 14400u);
    }
}

TEST(Orbit, AllVerticesOnOneSphere) {
    const OrbitPolytope p = h4_orbit(w(0, 1, 0, 1));
    const GoldenScalar r = q_norm(p.seed.ambient);
    for (const auto& v : p.vertices) EXPECT_EQ(q_norm(v), r);
}

TEST(DominantRep, AlreadyDominant) {
    const auto& h4 = build_system(SystemName::H4);
    const auto r = dominant_rep(h4, std::vector<GoldenScalar>{1, 0, 2, 0});
    EXPECT_EQ(r.coeffs, (std::vector<GoldenScalar>{1, 0, 2, 0}));
    EXPECT_TRUE(r.witness.is_identity());
}

TEST(DominantRep, NegativeOmega1MatchesBruteForce) {
    const auto& h4 = build_system(SystemName::H4);
    const auto r = dominant_rep(h4, std::vector<GoldenScalar>{-1, 0, 0, 0});
    // Brute force: the unique orbit point with all (x, alpha_i) >= 0.
    std::vector<Quaternion> dominant;
    for (const auto& v : orbit_points(weyl_group(SystemName::H4), -h4.weights[0])) {
        auto b = weight_coords(h4, v);
        if (std::all_of(b.begin(), b.end(), [](const GoldenScalar& x) { return x.sign() >= 0; }))
            dominant.push_back(v);
    }
    ASSERT_EQ(dominant.size(), 1u);
    EXPECT_EQ(r.point, dominant[0]);
    EXPECT_EQ(r.point, h4.weights[0]);
}

TEST(DominantRep, WitnessMapsInputToResult) {
    const auto& h3 = build_system(SystemName::H3);
    const Quaternion x(GoldenScalar(3), GoldenScalar::tau(), GoldenScalar(-2), GoldenScalar::sigma());
    const auto r = dominant_rep(h3, x);
    EXPECT_EQ(r.witness.apply(x), r.point);
    for (std::size_t i = 0; i < 3; ++i) EXPECT_GE(r.coeffs[i].sign(), 0);
    EXPECT_EQ(r.coeffs[3], weight_coords(h3, x)[3]);
}

TEST(AffineRank, Basics) {
    EXPECT_EQ(affine_rank({Quaternion::one()}), 0);
    EXPECT_EQ(affine_rank({Quaternion::one(), Quaternion::e1(), Quaternion::e2()}), 2);
    EXPECT_EQ(affine_rank({Quaternion::one(), Quaternion::e1(), Quaternion::e2(), Quaternion::e3()}), 3);
}

TEST(CellCensus, SixHundredCell) {
    const CellCensus c = cell_census(make_weight(SystemName::H4, w(0, 0, 0, 1)));
    const CellType* t = c.type(1);
    ASSERT_TRUE(t && t->is_cell);
    EXPECT_EQ(t->label, "tetrahedron");
    EXPECT_EQ(t->cell_count, 600u);
    EXPECT_EQ(t->cells_per_vertex, 20u);
    EXPECT_EQ(c.total_cells(), 600u);
    EXPECT_FALSE(c.type(4)->is_cell);
}

TEST(CellCensus, Omega2) {
    const CellCensus c = cell_census(make_weight(SystemName::H4, w(0, 1, 0, 0)));
    EXPECT_EQ(c.type(1)->cell_count, 600u);
    EXPECT_EQ(c.type(1)->label, "tetrahedron");
    EXPECT_EQ(c.type(4)->cell_count, 120u);
    EXPECT_EQ(c.type(4)->label, "icosidodecahedron");
    EXPECT_EQ(c.total_cells(), 720u);
}

TEST(CellCensus, Omega2PlusOmega4) {
    const CellCensus c = cell_census(make_weight(SystemName::H4, w(0, 1, 0, 1)));
    EXPECT_EQ(c.type(4)->label, "icosidodecahedron");
    EXPECT_EQ(c.type(1)->label, "cuboctahedron");
    EXPECT_EQ(c.type(3)->label, "pentagonal prism");
    EXPECT_FALSE(c.type(2)->is_cell);
    EXPECT_EQ(c.total_cells(), 1440u);
    EXPECT_EQ(c.vertex_count, 3600u);
}

TEST(CellCensus, IncidenceForEveryUniformSeed) {
    for (const auto& u : uniforms()) {
        const CellCensus c = cell_census(make_weight(SystemName::H4, u.seed));
        std::map<int, std::size_t> got;
        for (const auto& t : c.types)
            if (t.is_cell) got[t.deleted_node] = t.cells_per_vertex;
        EXPECT_EQ(got, u.per_vertex) << format_coeffs(u.seed);
    }
}

TEST(CellCensus, VertexTransitiveIncidence) {
    const OrbitPolytope p = h4_orbit(w(1, 1, 0, 1));
    for (std::size_t k = 0; k < p.size(); k += 997)
        for (int j = 1; j <= 4; ++j)
            EXPECT_EQ(incident_count(p.seed.ambient, p.vertices[k], j), incident_count(p.seed.ambient, p.seed.ambient, j));
}

TEST(CellLabels, PrismsAndSolids) {
    EXPECT_EQ(cell_label(2, {true, false, true, true}), "hexagonal prism");
    EXPECT_EQ(cell_label(3, {true, true, false, true}), "decagonal prism");
    EXPECT_EQ(cell_label(4, {true, true, true, false}), "great rhombicosidodecahedron");
    EXPECT_EQ(cell_label(1, {false, true, true, true}), "truncated octahedron");
    EXPECT_EQ(polyhedron_label(SystemName::H3, {false, false, true}), "icosahedron");
}
