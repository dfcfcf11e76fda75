#include "h4/geometry_io.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace h4;

namespace {

WeightVector h4w(int a, int b, int c, int d) { return make_weight(SystemName::H4, {a, b, c, d}); }

Point3 p3(long x, long y, long z) { return {GoldenScalar(x), GoldenScalar(y), GoldenScalar(z)}; }

std::vector<Point3> tetrahedron() { return {p3(1, 1, 1), p3(1, -1, -1), p3(-1, 1, -1), p3(-1, -1, 1)}; }

std::filesystem::path temp_file(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("h4core_test_" + name);
}

}  // namespace

TEST(ProjectionFrame, OrthogonalForRandomVectors) {
    std::mt19937 rng(11);
    for (int i = 0; i < 50; ++i) {
        const Quaternion q = h4::testing::random_quaternion(rng);
        if (q.is_zero()) continue;
        const ProjectionFrame f = make_frame(q);
        EXPECT_TRUE(f.is_orthogonal());
        for (const auto& p : f.p) EXPECT_EQ(q_norm(p), f.norm);
    }
}

TEST(ProjectShells, SixHundredCellUnderH3) {
    const auto shells = project_shells(h4w(0, 0, 0, 1), SystemName::H3);
    ASSERT_EQ(shells.size(), 9u);
    std::multiset<std::string> labels;
    for (const auto& s : shells) labels.insert(s.label);
    EXPECT_EQ(labels.count("point"), 2u);
    EXPECT_EQ(labels.count("icosahedron"), 4u);
    EXPECT_EQ(labels.count("dodecahedron"), 2u);
    EXPECT_EQ(labels.count("icosidodecahedron"), 1u);
    const auto& h3 = build_system(SystemName::H3);
    const GoldenScalar total = q_norm(h4w(0, 0, 0, 1).ambient);
    const GoldenScalar w4 = q_norm(*h3.complement);
    for (const auto& s : shells)
        for (const auto& p : s.points)
            EXPECT_EQ(p[0] * p[0] + p[1] * p[1] + p[2] * p[2] + s.height * s.height * w4, total);
}

TEST(ProjectShells, HundredTwentyCellFamilies) {
    const auto shells = project_shells(h4w(1, 0, 0, 0), SystemName::H3);
    EXPECT_EQ(shells.size(), 15u);
    std::set<std::string> families;
    for (const auto& s : shells) families.insert(format_coeffs(s.weight));
    EXPECT_EQ(families.size(), 8u);
}

TEST(ProjectShells, SixHundredCellUnderA3) {
    const auto shells = project_shells(h4w(0, 0, 0, 1), SystemName::A3inA4);
    EXPECT_EQ(shells.size(), 15u);
    std::size_t total = 0;
    for (const auto& s : shells) total += s.points.size();
    EXPECT_EQ(total, 120u);
    for (const auto& s : shells) EXPECT_FALSE(s.label.empty());
    EXPECT_THROW(project_shells(h4w(0, 0, 0, 1), SystemName::A4), std::invalid_argument);
}

TEST(ProjectShells, Deterministic) {
    const auto a = project_shells(h4w(0, 1, 0, 1), SystemName::H3);
    const auto b = project_shells(h4w(0, 1, 0, 1), SystemName::H3);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        EXPECT_EQ(a[i].points, b[i].points);
        EXPECT_EQ(a[i].label, b[i].label);
    }
}

TEST(Hull3, Tetrahedron) {
    const Hull h = hull3(tetrahedron());
    EXPECT_EQ(h.vertices.size(), 4u);
    EXPECT_EQ(h.polygons.size(), 4u);
    EXPECT_EQ(h.triangles.size(), 4u);
    EXPECT_EQ(h.edge_count(), 6u);
}

TEST(Hull3, CubeWithInteriorPointHasQuadFaces) {
    std::vector<Point3> pts;
    for (int x : {-1, 1})
        for (int y : {-1, 1})
            for (int z : {-1, 1}) pts.push_back(p3(x, y, z));
    pts.push_back(p3(0, 0, 0));
    pts.push_back(p3(1, 0, 0));  // on a face
    const Hull h = hull3(pts);
    EXPECT_EQ(h.vertices.size(), 8u);
    EXPECT_EQ(h.polygons.size(), 6u);
    EXPECT_EQ(h.triangles.size(), 12u);
    for (const auto& p : h.polygons) EXPECT_EQ(p.size(), 4u);
}

TEST(Hull3, OutwardOrientation) {
    const auto pts = tetrahedron();
    const Hull h = hull3(pts);
    for (const auto& t : h.triangles) {
        // centroid is the origin: outward normals point away from it
        const auto& a = pts[t[0]];
        const auto& b = pts[t[1]];
        const auto& c = pts[t[2]];
        const Point3 u{b[0] - a[0], b[1] - a[1], b[2] - a[2]};
        const Point3 v{c[0] - a[0], c[1] - a[1], c[2] - a[2]};
        const Point3 n{u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
        EXPECT_GT((n[0] * a[0] + n[1] * a[1] + n[2] * a[2]).sign(), 0);
    }
}

TEST(Hull3, IcosahedralShells) {
    for (const auto& s : project_shells(h4w(0, 0, 0, 1), SystemName::H3)) {
        if (s.label == "dodecahedron") {
            const Hull h = hull3(s.points);
            EXPECT_EQ(h.polygons.size(), 12u);
            for (const auto& p : h.polygons) EXPECT_EQ(p.size(), 5u);
        }
        if (s.label == "icosidodecahedron") EXPECT_EQ(hull3(s.points).polygons.size(), 32u);
    }
    for (const auto& s : project_shells(h4w(1, 1, 1, 1), SystemName::H3)) {
        if (s.points.size() != 120) continue;
        const Hull h = hull3(s.points);
        EXPECT_EQ(h.polygons.size(), 62u);
        EXPECT_EQ(h.edge_count(), 180u);
        break;
    }
}

TEST(Hull3, RejectsDegenerateInput) {
    EXPECT_THROW(hull3({p3(0, 0, 0), p3(1, 0, 0), p3(0, 1, 0), p3(1, 1, 0)}), GeometryError);
    EXPECT_THROW(hull3({p3(0, 0, 0), p3(1, 0, 0), p3(0, 1, 0), p3(0, 0, 1), p3(0, 0, 1)}), GeometryError);
    std::vector<Point3> many;
    for (int i = 0; i < 130; ++i) many.push_back(p3(i, i * i, i * i * i));
    EXPECT_THROW(hull3(many), GeometryError);
}

TEST(ExportMesh, OffHeaderAndRoundTrip) {
    const auto pts = tetrahedron();
    const Hull h = hull3(pts);
    const auto path = temp_file("tet.off");
    export_mesh(h, path, MeshFormat::OFF);
    std::ifstream is(path);
    std::string magic;
    std::size_t v = 0, f = 0, e = 0;
    is >> magic >> v >> f >> e;
    EXPECT_EQ(magic, "OFF");
    EXPECT_EQ(v, 4u);
    EXPECT_EQ(f, 4u);
    EXPECT_EQ(e, 6u);
    for (std::size_t i = 0; i < v; ++i) {
        double x, y, z;
        is >> x >> y >> z;
        const auto& p = pts[static_cast<std::size_t>(h.vertices[i])];
        EXPECT_NEAR(x, p[0].to_double(), 1e-12);
        EXPECT_NEAR(y, p[1].to_double(), 1e-12);
        EXPECT_NEAR(z, p[2].to_double(), 1e-12);
    }
    std::filesystem::remove(path);
}

TEST(ExportMesh, ObjAndIrrationalRoundTrip) {
    const auto shells = project_shells(h4w(0, 0, 0, 1), SystemName::H3);
    const Shell* ico = nullptr;
    for (const auto& s : shells)
        if (s.label == "icosahedron") ico = &s;
    ASSERT_NE(ico, nullptr);
    const Hull h = hull3(ico->points);
    const auto path = temp_file("ico.obj");
    export_mesh(h, path, MeshFormat::OBJ);
    std::ifstream is(path);
    std::string line;
    std::size_t vi = 0, faces = 0;
    while (std::getline(is, line)) {
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag == "v") {
            double x, y, z;
            ls >> x >> y >> z;
            const auto& p = h.points[static_cast<std::size_t>(h.vertices[vi++])];
            EXPECT_NEAR(x, p[0].to_double(), 1e-12);
            EXPECT_NEAR(y, p[1].to_double(), 1e-12);
            EXPECT_NEAR(z, p[2].to_double(), 1e-12);
        } else if (tag == "f") {
            ++faces;
        }
    }
    EXPECT_EQ(vi, 12u);
    EXPECT_EQ(faces, 20u);
    std::filesystem::remove(path);
}

TEST(ExportMesh, Errors) {
    Hull empty;
    EXPECT_THROW(export_mesh(empty, temp_file("empty.off"), MeshFormat::OFF), GeometryError);
    EXPECT_FALSE(std::filesystem::exists(temp_file("empty.off")));
    try {
        export_mesh(hull3(tetrahedron()), "/nonexistent-dir/x.off", MeshFormat::OFF);
        FAIL() << "expected GeometryError";
    } catch (const GeometryError& e) {
        EXPECT_NE(std::string(e.what()).find("/nonexistent-dir/x.off"), std::string::npos);
    }
    EXPECT_EQ(parse_mesh_format("OBJ"), MeshFormat::OBJ);
    EXPECT_THROW(parse_mesh_format("stl"), std::invalid_argument);
}

TEST(ExportTable, JsonRoundTrip) {
    const BranchTable t = branch_h3(h4w(0, 0, 0, 1));
    const auto path = temp_file("table.json");
    export_table(to_json(t), path);
    std::ifstream is(path);
    const nlohmann::json j = nlohmann::json::parse(is);
    EXPECT_EQ(j["vertex_total"], 120);
    EXPECT_EQ(j["terms"].size(), t.terms.size());
    for (std::size_t i = 0; i < t.terms.size(); ++i) {
        EXPECT_EQ(parse_scalar(j["terms"][i]["height"]["exact"].get<std::string>()), *t.terms[i].height);
        EXPECT_NEAR(j["terms"][i]["height"]["value"].get<double>(), t.terms[i].height->to_double(), 1e-15);
    }
    std::filesystem::remove(path);
    EXPECT_THROW(export_table(j, "/nonexistent-dir/t.json"), GeometryError);
}
