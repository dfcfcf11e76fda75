#pragma once

#include "h4/orbit.hpp"

#include <optional>
#include <string>
#include <vector>

namespace h4 {

/// One sub-orbit of a branching: the dominant label of a subgroup orbit and its height.
struct BranchTerm {
    std::vector<GoldenScalar> weight;     // dominant coefficients in the subgroup basis
    std::optional<GoldenScalar> height;   // absent for A4
    std::size_t multiplicity = 1;         // distinct sub-orbits carrying this (weight, height)
    std::size_t orbit_size = 0;           // |W_sub . weight|
    std::size_t coset_hits = 0;           // coset representatives landing in this sub-orbit
    std::optional<GoldenScalar> geometric_height;  // A3 only: (x, v4)
};

struct BranchTable {
    WeightVector seed;
    SystemName subgroup{};
    std::vector<BranchTerm> terms;

    std::size_t vertex_total() const;  // sum of multiplicity * orbit_size
};

/// The 120 elements [p, 1], p in I. Throws std::logic_error unless they are a
/// right transversal of the subgroup (H3 or A4) in W(H4).
const std::vector<GroupElement>& coset_reps(SystemName subgroup);

/// |W(system) . point| for a dominant point given by its coefficients.
std::size_t suborbit_size(SystemName system, const std::vector<GoldenScalar>& dominant);

/// W(H4) orbit under W(H3): labels (b1,b2,b3) with height b4 along w4.
/// Sorted by |height| descending, then height descending, then label.
BranchTable branch_h3(const WeightVector& seed);

/// W(H4) orbit under W(A4) in the v-basis, sorted by label.
/// Throws std::logic_error if the table is not symmetric under (b1,b2,b3,b4) -> (b4,b3,b2,b1).
BranchTable branch_a4(const WeightVector& seed);

/// Five-term rule for W(A4).(a1,a2,a3,a4) under <r1,r2,r3> with heights
/// h = -5 (x, v4); identical (label, height) pairs are merged.
std::vector<BranchTerm> branch_a4_to_a3(const std::vector<GoldenScalar>& a4_dominant);

/// W(H4) orbit under W(A3) = <r1,r2,r3> of A4, composed from branch_a4 and the
/// five-term rule. Throws std::logic_error unless it matches a direct grouping
/// of the orbit by (A3 label, (x, v4)) with height = -5 (x, v4).
BranchTable branch_h4_to_a3(const WeightVector& seed);

/// Direct route: groups an explicit point set by (dominant label, complement coordinate)
/// for a rank-3 subsystem. Heights are the complement coordinates b4.
std::vector<BranchTerm> group_by_suborbit(SystemName system, const std::vector<Quaternion>& points);

/// Ratio between the five-term rule height and (x, v4).
GoldenScalar a3_height_scale();

}  // namespace h4
