#include "h4/dual.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <set>

using namespace h4;

namespace {

WeightVector h4w(int a, int b, int c, int d) { return make_weight(SystemName::H4, {a, b, c, d}); }

std::vector<std::array<double, 3>> to_doubles(const std::vector<Point3>& pts) {
    std::vector<std::array<double, 3>> out;
    for (const auto& p : pts) out.push_back({p[0].to_double(), p[1].to_double(), p[2].to_double()});
    return out;
}

std::vector<std::array<double, 3>> scaled(const GoldenScalar& k, std::vector<std::array<std::string, 3>> rows) {
    std::vector<std::array<double, 3>> out;
    for (const auto& r : rows)
        out.push_back({(k * parse_scalar(r[0])).to_double(), (k * parse_scalar(r[1])).to_double(),
                       (k * parse_scalar(r[2])).to_double()});
    return out;
}

// Distinct hull edge lengths, ascending.
std::vector<double> edge_lengths(const std::vector<Point3>& pts) {
    const Hull h = hull3(pts);
    std::set<double> lens;
    for (const auto& poly : h.polygons)
        for (std::size_t i = 0; i < poly.size(); ++i) {
            const auto& a = pts[static_cast<std::size_t>(poly[i])];
            const auto& b = pts[static_cast<std::size_t>(poly[(i + 1) % poly.size()])];
            const double d = std::hypot((a[0] - b[0]).to_double(), (a[1] - b[1]).to_double(), (a[2] - b[2]).to_double());
            bool merged = false;
            for (double l : lens) merged = merged || std::abs(l - d) < 1e-9 * d;
            if (!merged) lens.insert(d);
        }
    return {lens.begin(), lens.end()};
}

const std::vector<std::vector<int>> kUniform = {
    {0, 0, 0, 1}, {1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {1, 0, 0, 1}, {0, 1, 0, 1}, {0, 0, 1, 1},
    {0, 1, 1, 0}, {1, 0, 1, 0}, {1, 1, 0, 0}, {1, 1, 1, 0}, {1, 1, 0, 1}, {1, 0, 1, 1}, {0, 1, 1, 1}, {1, 1, 1, 1}};

}  // namespace

TEST(IncidentCells, SixHundredCellVertex) {
    const auto cells = incident_cells(h4w(0, 0, 0, 1));
    ASSERT_EQ(cells.types.size(), 1u);
    EXPECT_EQ(cells.types[0].node, 1);
    EXPECT_EQ(cells.types[0].label, "tetrahedron");
    EXPECT_EQ(cells.total(), 20u);
    // The 20 directions are one W(H3) orbit of a (b,0,0) weight: a dodecahedron.
    const auto& h3 = build_system(SystemName::H3);
    const auto b = dominant_rep(h3, cells.types[0].centers[0]).coeffs;
    EXPECT_GT(b[0].sign(), 0);
    EXPECT_TRUE(b[1].is_zero());
    EXPECT_TRUE(b[2].is_zero());
    EXPECT_EQ(polyhedron_label(SystemName::H3, {true, false, false}), "dodecahedron");
}

TEST(IncidentCells, Omega2AndOmega3) {
    const auto c2 = incident_cells(h4w(0, 1, 0, 0));
    ASSERT_NE(c2.type(1), nullptr);
    ASSERT_NE(c2.type(4), nullptr);
    EXPECT_EQ(c2.type(1)->centers.size(), 2u);
    EXPECT_EQ(c2.type(4)->centers.size(), 3u);
    EXPECT_EQ(c2.type(4)->label, "icosidodecahedron");
    const auto c3 = incident_cells(h4w(0, 0, 1, 0));
    EXPECT_EQ(c3.type(4)->centers.size(), 2u);
    EXPECT_EQ(c3.type(4)->label, "icosahedron");
    EXPECT_EQ(c3.type(1)->centers.size(), 5u);
    EXPECT_EQ(c3.type(1)->label, "octahedron");
}

TEST(SolveScales, PublishedFactors) {
    const auto s2 = dual_polytope(h4w(0, 1, 0, 0));
    EXPECT_EQ(s2.relative_scales(4).at(1), parse_scalar("2/(3*t)"));
    const auto s3 = dual_polytope(h4w(0, 0, 1, 0));
    EXPECT_EQ(s3.relative_scales(1).at(4), parse_scalar("2*t/(2+s)"));
    EXPECT_NE(s3.relative_scales(1).at(4), parse_scalar("2*t/(3+s)"));
    const auto s14 = dual_polytope(h4w(1, 0, 0, 1));
    const auto r = s14.relative_scales(2);
    EXPECT_EQ(r.at(3), parse_scalar("t^4/(t+3)"));
    EXPECT_EQ(r.at(1), parse_scalar("t^4/(t+4)"));
    EXPECT_EQ(r.at(4), parse_scalar("t^4/(s+3)"));
}

TEST(SolveScales, SingleTypeIsUnscaled) {
    const auto s = solve_scales(incident_cells(h4w(0, 0, 0, 1)));
    EXPECT_EQ(s.anchor, 1);
    EXPECT_EQ(s.lambda.at(1), GoldenScalar(1));
}

TEST(SolveScales, AnchorSelection) {
    const auto cells = incident_cells(h4w(1, 1, 1, 1));
    const auto def = solve_scales(cells);
    const auto& h4 = build_system(SystemName::H4);
    const Quaternion& lam = cells.vertex.ambient;
    for (const auto& t : cells.types)
        EXPECT_GE(q_dot(h4.weights[static_cast<std::size_t>(def.anchor - 1)], lam),
                  q_dot(h4.weights[static_cast<std::size_t>(t.node - 1)], lam));
    const auto at4 = solve_scales(cells, 4);
    EXPECT_EQ(at4.lambda.at(4), GoldenScalar(1));
    for (const auto& [node, l] : at4.lambda) EXPECT_EQ(l / at4.lambda.at(1), def.lambda.at(node) / def.lambda.at(1));
    EXPECT_THROW(solve_scales(incident_cells(h4w(0, 1, 0, 0)), 2), std::invalid_argument);
}

TEST(SolveScales, OrthogonalCenterIsDegenerate) {
    IncidentCellSet cells{h4w(0, 0, 0, 1), {}};
    cells.types.push_back({1, "tetrahedron", {Quaternion::e1()}});
    EXPECT_THROW(solve_scales(cells), DegenerateCenterError);
    EXPECT_THROW(solve_scales(IncidentCellSet{h4w(0, 0, 0, 1), {}}), std::invalid_argument);
}

TEST(DualPolytope, RadiiRatios) {
    EXPECT_NEAR(dual_polytope(h4w(0, 1, 0, 0)).radius_ratios(1).at(4), 1.061, 5e-3);
    EXPECT_NEAR(dual_polytope(h4w(0, 0, 1, 0)).radius_ratios(1).at(4), 1.023, 5e-3);
    const auto r = dual_polytope(h4w(1, 0, 0, 1)).radius_ratios(2);
    EXPECT_NEAR(r.at(3), 2.47 / 2.45, 5e-3);
    EXPECT_NEAR(r.at(4), 2.52 / 2.45, 5e-3);
}

TEST(DualPolytope, CountsAndHyperplaneForAllUniform) {
    for (const auto& c : kUniform) {
        const WeightVector w = make_weight(SystemName::H4, {c[0], c[1], c[2], c[3]});
        const DualSpec spec = dual_polytope(w);
        const CellCensus census = cell_census(w);
        EXPECT_EQ(spec.vertex_count, census.total_cells());
        EXPECT_EQ(spec.cell_count, census.vertex_count);
        EXPECT_EQ(spec.cell.size(), census.cells_at_vertex());
        for (const auto& x : spec.cell)
            for (const auto& y : spec.cell) EXPECT_TRUE(q_dot(x - y, w.ambient).is_zero());
        EXPECT_TRUE(cell_invariant_under_stabilizer(spec)) << format_coeffs(w.coeffs);
    }
}

TEST(DualPolytope, VertexAndCellCountsOfRuncinated) {
    const DualSpec spec = dual_polytope(h4w(1, 0, 0, 1));
    EXPECT_EQ(spec.vertex_count, 2640u);
    EXPECT_EQ(spec.cell_count, 2400u);
    EXPECT_EQ(dual_vertices(spec).size(), 2640u);
}

TEST(DualPolytope, DualityInvolution) {
    const auto v600 = dual_vertices(dual_polytope(h4w(0, 0, 0, 1)));
    const auto v120 = dual_vertices(dual_polytope(h4w(1, 0, 0, 0)));
    EXPECT_TRUE(equal_up_to_scale(v600, h4_orbit({1, 0, 0, 0}).vertices));
    EXPECT_TRUE(equal_up_to_scale(v120, h4_orbit({0, 0, 0, 1}).vertices));
    EXPECT_FALSE(equal_up_to_scale(v600, h4_orbit({0, 1, 0, 0}).vertices));
}

TEST(EqualUpToScale, DetectsScaleAndMismatch) {
    const auto pts = h4_orbit({0, 0, 0, 1}).vertices;
    std::vector<Quaternion> k;
    for (const auto& p : pts) k.push_back(GoldenScalar::tau() * p);
    EXPECT_TRUE(equal_up_to_scale(k, pts));
    std::vector<Quaternion> neg;
    for (const auto& p : pts) neg.push_back(GoldenScalar(-1) * p);
    EXPECT_TRUE(equal_up_to_scale(neg, pts));  // the 600-cell is centrally symmetric
    k.back() = k.back() + Quaternion::e1();
    EXPECT_FALSE(equal_up_to_scale(k, pts));
}

TEST(DualCellGeometry, TriangularDipyramid) {
    const DualSpec spec = dual_polytope(h4w(0, 1, 0, 0));
    const DualCell cell = dual_cell_geometry(spec);
    ASSERT_EQ(cell.points.size(), 5u);
    const auto expected = scaled(GoldenScalar(6), {{"0", "0", "1"}, {"s/2", "t/2", "-1/2"}, {"-s/2", "-t/2", "-1/2"},
                                                   {"-1/3", "-s^2/3", "0"}, {"1/3", "s^2/3", "0"}});
    EXPECT_TRUE(congruent_up_to_scale(to_doubles(cell.points), expected, 1e-9));
    const auto lens = edge_lengths(cell.points);
    ASSERT_EQ(lens.size(), 2u);
    EXPECT_NEAR(lens[1] / lens[0] / (1.41 / 0.867), 1.0, 5e-3);
    EXPECT_EQ(hull3(cell.points).polygons.size(), 6u);
}

TEST(DualCellGeometry, PentagonalPyramid) {
    const DualCell cell = dual_cell_geometry(dual_polytope(h4w(0, 0, 1, 1)));
    ASSERT_EQ(cell.points.size(), 6u);
    const auto lens = edge_lengths(cell.points);
    ASSERT_EQ(lens.size(), 2u);
    EXPECT_NEAR(lens[1] / lens[0] / (2.01 / 1.41), 1.0, 5e-3);
}

TEST(DualCellGeometry, OmnitruncatedCellHasNoSymmetry) {
    const DualCell cell = dual_cell_geometry(dual_polytope(h4w(1, 1, 1, 1)));
    ASSERT_EQ(cell.points.size(), 4u);
    const auto d = pairwise_sq_distances(cell.points);
    ASSERT_EQ(d.size(), 6u);
    for (std::size_t i = 1; i < d.size(); ++i) EXPECT_NE(d[i - 1], d[i]);
}

TEST(DualCellGeometry, SharedFrameComponent) {
    const DualSpec spec = dual_polytope(h4w(1, 0, 1, 1));
    const DualCell cell = dual_cell_geometry(spec);
    EXPECT_TRUE(cell.frame.is_orthogonal());
    for (const auto& c : spec.cell) EXPECT_EQ(cell.frame.coords(c)[0], cell.p0);
}
