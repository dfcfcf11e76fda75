#pragma once

#include "h4/coxeter.hpp"

#include <string>
#include <vector>

namespace h4 {

/// a1 w1 + ... + an wn in the weight basis of a system.
struct WeightVector {
    SystemName system{};
    std::vector<GoldenScalar> coeffs;
    Quaternion ambient;

    bool is_dominant() const;
    bool is_zero() const;
};

/// Throws std::invalid_argument when the coefficient count differs from the rank.
WeightVector make_weight(SystemName system, std::vector<GoldenScalar> coeffs);

/// "1,0,t,1/2" -> H4 weight; each entry uses the scalar literal grammar.
WeightVector parse_weight(SystemName system, std::string_view text);

std::string format_coeffs(const std::vector<GoldenScalar>& coeffs);

struct OrbitPolytope {
    WeightVector seed;
    std::string group_name;
    std::size_t group_order = 0;
    std::vector<Quaternion> vertices;  // canonical order
    std::size_t stabilizer_order = 0;

    std::size_t size() const { return vertices.size(); }
    bool contains(const Quaternion& x) const;
};

class OrbitError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Exact orbit group.Lambda. Throws OrbitError for a non-dominant or zero seed.
OrbitPolytope orbit(const FiniteGroup& group, const WeightVector& seed);

/// Orbit of an arbitrary point (no dominance requirement), canonically sorted.
std::vector<Quaternion> orbit_points(const FiniteGroup& group, const Quaternion& x);

/// W(H4).(coeffs); orbit(weyl_group(H4), make_weight(H4, coeffs)).
OrbitPolytope h4_orbit(const std::vector<GoldenScalar>& coeffs);

struct DominantResult {
    std::vector<GoldenScalar> coeffs;  // rank entries, plus the complement coordinate for rank-3 systems
    Quaternion point;
    GroupElement witness;  // witness.apply(input) == point
};

/// Reflects in r_i while some coefficient b_i < 0 (lowest such i first).
DominantResult dominant_rep(const CoxeterSystem& system, const Quaternion& x);
DominantResult dominant_rep(const CoxeterSystem& system, const std::vector<GoldenScalar>& coeffs);

/// Subgroup of W(H4) generated by the simple reflections at the given 0-based nodes.
FiniteGroup parabolic_subgroup(const std::vector<int>& nodes);

/// Affine dimension of a point set (-1 for an empty set).
int affine_rank(const std::vector<Quaternion>& points);

struct CellType {
    int deleted_node = 0;      // 1-based node j
    std::vector<int> nodes;    // 1-based nodes of S
    std::size_t subgroup_order = 0;
    std::size_t cell_vertices = 0;  // |W_S . Lambda|
    bool is_cell = false;           // W_S . Lambda spans three dimensions
    std::string label;
    std::size_t cell_count = 0;        // |W| / |W_S|
    std::size_t cells_per_vertex = 0;  // cell_count * cell_vertices / |orbit|
};

struct CellCensus {
    WeightVector seed;
    std::size_t vertex_count = 0;
    std::vector<CellType> types;  // one entry per deleted node, cells and non-cells alike

    std::size_t total_cells() const;
    std::size_t cells_at_vertex() const;
    const CellType* type(int deleted_node) const;
};

/**
 * Cells of the H4 orbit polytope of a dominant weight.
 *
 * Each count is derived from group orders and checked twice: against the
 * stabilizer orbit Stab(Lambda).w_j and against an explicit scan of the
 * center orbit W.w_j for centers c with (Lambda, c) = (Lambda, w_j).
 * Throws std::logic_error if the routes disagree.
 */
CellCensus cell_census(const WeightVector& seed);

/// Name of the uniform solid W.(b1,b2,b3) for H3 or A3 from its nonzero pattern ("" if none).
std::string polyhedron_label(SystemName system, const std::vector<bool>& ringed);

/// Label of the cell of type j (1-based) for an H4 seed with the given nonzero pattern.
std::string cell_label(int deleted_node, const std::vector<bool>& ringed);

/// Canonical orbit W(H4).w_j (cached per j, 1-based).
const std::vector<Quaternion>& weight_orbit(int j);

/// Number of centers c in W(H4).w_j with (v, c) = (Lambda, w_j): cells of type j at vertex v.
std::size_t incident_count(const Quaternion& lambda, const Quaternion& v, int j);

}  // namespace h4
