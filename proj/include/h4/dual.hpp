#pragma once

#include "h4/geometry_io.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

namespace h4 {

/// Cells of one type meeting the vertex Λ.
struct IncidentType {
    int node = 0;                       // deleted node j (1-based); cells are W_S-orbits, S = {1..4} \ {j}
    std::string label;
    std::vector<Quaternion> centers;    // images g.omega_j of the incident cells, sorted
};

struct IncidentCellSet {
    WeightVector vertex;
    std::vector<IncidentType> types;    // ascending node
    std::size_t total() const;
    const IncidentType* type(int node) const;
};

/// Every cell through Λ with its center. Cross-checked against cell_census
/// and the stabilizer orbit of omega_j.
IncidentCellSet incident_cells(const WeightVector& lambda);

class DegenerateCenterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct ScaleFactors {
    int anchor = 0;
    std::map<int, GoldenScalar> lambda;  // node -> factor, anchor -> 1
};

/// Factors that put every incident center in the hyperplane (x, Λ) = (anchor center, Λ).
/// Default anchor: the type with the largest (center, Λ); ties go to the lower node.
/// Throws DegenerateCenterError if a center is orthogonal to Λ, std::invalid_argument
/// for an anchor that is not incident or an empty set.
ScaleFactors solve_scales(const IncidentCellSet& cells, std::optional<int> anchor = std::nullopt);

struct DualOrbit {
    int node = 0;
    GoldenScalar scale;        // lambda_j
    std::size_t size = 0;      // |W.omega_j| = number of primal cells of this type
    GoldenScalar radius_sq;    // |lambda_j omega_j|^2
    double radius = 0;
};

struct DualSpec {
    WeightVector seed;
    ScaleFactors scales;
    std::vector<DualOrbit> orbits;       // ascending node
    std::vector<Quaternion> cell;        // scaled incident centers: the dual cell at Λ
    GoldenScalar hyperplane;             // common (c, Λ) over the dual cell
    std::size_t vertex_count = 0;        // dual vertices = primal cells
    std::size_t cell_count = 0;          // dual cells = primal vertices

    const DualOrbit* orbit(int node) const;
    /// lambda_j / lambda_unscaled: the factors when `unscaled` is left at 1.
    std::map<int, GoldenScalar> relative_scales(int unscaled) const;
    /// R_j / R_ref for every orbit.
    std::map<int, double> radius_ratios(int reference) const;
};

/// Dual vertex orbits, radii and the dual cell at Λ. The hyperplane condition
/// is checked exactly; errors propagate from solve_scales.
DualSpec dual_polytope(const WeightVector& lambda, std::optional<int> anchor = std::nullopt);

/// Full dual vertex set: union of lambda_j W.omega_j, sorted.
std::vector<Quaternion> dual_vertices(const DualSpec& spec);

struct DualCell {
    ProjectionFrame frame;
    GoldenScalar p0;                     // shared (c, Λ)
    std::vector<Point3> points;          // ((c, e1Λ), (c, e2Λ), (c, e3Λ)) per center, in DualSpec::cell order
};

/// 3D coordinates of the dual cell in the frame of Λ.
DualCell dual_cell_geometry(const DualSpec& spec);

/// Sorted squared pairwise distances, exact.
std::vector<GoldenScalar> pairwise_sq_distances(const std::vector<Point3>& points);

/// Sorted pairwise distances divided by the largest one.
std::vector<double> normalized_distances(const std::vector<std::array<double, 3>>& points);
std::vector<double> normalized_distances(const std::vector<Point3>& points);

/// Distance multisets agree up to one global scale within a relative tolerance.
bool congruent_up_to_scale(const std::vector<std::array<double, 3>>& a, const std::vector<std::array<double, 3>>& b,
                           double rel_tol);

/// A = s B for one positive scalar s (exact, as sets).
bool equal_up_to_scale(std::vector<Quaternion> a, std::vector<Quaternion> b);

nlohmann::json to_json(const DualSpec& spec);

/// Whether every element of Stab(Λ) maps the dual cell onto itself.
bool cell_invariant_under_stabilizer(const DualSpec& spec);

}  // namespace h4
