#pragma once

// Published values used by the acceptance checks. Scalars are kept as literals
// in the parse_scalar grammar so they are compared exactly.

#include "h4/coxeter.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace h4::reference {

struct PrintedMatrix {
    std::string name;       // "C(H4)", "Cinv(H4)", ..., "D"
    std::string prefactor;  // literal multiplying every entry
    std::vector<std::vector<std::string>> entries;
};
const std::vector<PrintedMatrix>& printed_matrices();

/// Printed quaternion form of a fundamental weight: factor * (q0 + q1 e1 + q2 e2 + q3 e3).
struct PrintedWeight {
    SystemName system;
    int index;  // 1-based
    std::string factor;
    std::array<std::string, 4> components;
};
const std::vector<PrintedWeight>& printed_weights();

struct GroupOrder {
    std::string name;
    std::size_t order;
};
const std::vector<GroupOrder>& group_orders();

struct ClassRow {
    std::size_t size;
    int element_order;
};
/// Conjugacy classes of I in published order.
const std::vector<ClassRow>& class_table();

struct PublishedTerm {
    std::vector<std::string> weight;
    std::string height;       // empty for A4 tables
    bool plus_minus = false;  // the term stands for heights +h and -h
};

struct PublishedBranching {
    std::string name;  // e.g. "600-cell under H3"
    std::vector<long> seed;
    SystemName subgroup;
    std::vector<PublishedTerm> terms;
    std::string note;  // transcription remark, empty if none
};
const std::vector<PublishedBranching>& published_branchings();

struct PublishedCellType {
    int node;  // deleted node of the generating parabolic subgroup
    std::string label;
    std::size_t count;
    std::optional<std::size_t> per_vertex;
};

struct PublishedScale {
    std::string symbol;  // lambda, rho, eta
    int node;
    std::string literal;
};

/// A point of a published dual cell: value(symbol) * prefactor * coords.
struct PublishedPoint {
    std::string symbol;  // empty when unscaled
    std::string prefactor;
    std::array<std::string, 3> coords;
};

/// Radii R_nodes[k] proportional to values[k].
struct PublishedRadii {
    std::vector<int> nodes;
    std::vector<double> values;
};

struct PublishedDual {
    std::string name;  // "O(a1,a2,a3,a4)"
    std::vector<long> seed;
    std::size_t vertices;
    std::vector<PublishedCellType> cells;
    int unscaled;  // the incident type left at scale 1
    std::vector<PublishedScale> scales;
    std::vector<PublishedScale> alternates;  // a second printed value for the same factor
    std::optional<PublishedRadii> radii;
    std::vector<PublishedPoint> cell_points;
};
const std::vector<PublishedDual>& published_duals();
const PublishedDual* find_dual(const std::vector<long>& seed);

}  // namespace h4::reference
