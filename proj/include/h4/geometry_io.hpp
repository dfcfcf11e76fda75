#pragma once

#include "h4/branching.hpp"

#include <json.hpp>

#include <array>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

namespace h4 {

using Point3 = std::array<GoldenScalar, 3>;

/// p0 = Λ and p_i = e_i Λ, stored unnormalized; |p_k|² = norm for every k.
struct ProjectionFrame {
    std::array<Quaternion, 4> p;
    GoldenScalar norm;

    bool is_orthogonal() const;
    /// (x, p_k) for k = 0..3.
    std::array<GoldenScalar, 4> coords(const Quaternion& x) const;
    /// (x, p_1), (x, p_2), (x, p_3).
    Point3 project(const Quaternion& x) const;
};

ProjectionFrame make_frame(const Quaternion& lambda);

/// One sub-orbit of a branching, realized as a 3D point set.
struct Shell {
    std::vector<GoldenScalar> weight;  // dominant label in the subgroup
    GoldenScalar height;               // same convention as the branch table
    std::vector<Point3> points;        // sorted
    std::string label;
};

/// Shells of W(H4).seed under H3 (imaginary parts) or A3 = <r1,r2,r3> of A4
/// (coordinates (x0, x1, (x2 + x3)/sqrt2)). Ordered like branch_h3 / branch_h4_to_a3.
/// Throws std::logic_error if the shells disagree with the branch table.
std::vector<Shell> project_shells(const WeightVector& seed, SystemName subgroup);

class GeometryError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Hull {
    std::vector<Point3> points;                   // input, exact
    std::vector<int> vertices;                    // indices of hull vertices, ascending
    std::vector<std::vector<int>> polygons;       // planar faces, counterclockwise from outside
    std::vector<std::array<int, 3>> triangles;    // fan triangulation of polygons
    std::size_t edge_count() const;
};

/// Gift-wrapping hull of at most 128 exact points. Orientation tests run on
/// normalized doubles and fall back to exact signs below 1e-9.
/// Throws GeometryError when the points do not span 3D; std::logic_error if
/// Euler's formula fails on the result.
Hull hull3(const std::vector<Point3>& points);

enum class MeshFormat { OFF, OBJ };
MeshFormat parse_mesh_format(std::string_view text);

/// Writes the triangulated hull. Throws GeometryError on an empty face list
/// or an I/O failure (message carries the path).
void export_mesh(const Hull& hull, const std::filesystem::path& path, MeshFormat format);
void export_table(const nlohmann::json& data, const std::filesystem::path& path);

/// {"exact": literal, "value": double}
nlohmann::json scalar_json(const GoldenScalar& x);
nlohmann::json coeffs_json(const std::vector<GoldenScalar>& xs);
nlohmann::json to_json(const BranchTable& table);
nlohmann::json to_json(const Shell& shell);
nlohmann::json quaternion_json(const Quaternion& q);
nlohmann::json to_json(const OrbitPolytope& orbit, bool with_vertices);
nlohmann::json to_json(const CellCensus& census);

}  // namespace h4
