#pragma once

#include "h4/exact_matrix.hpp"
#include "h4/group_element.hpp"
#include "h4/quaternion.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace h4 {

/// H4, H3 = <r1,r2,r3> of H4, A3 = <r2,r3,r4> of H4, A4, and A3 = <r1,r2,r3> of A4.
enum class SystemName { H4, H3, A4, A3, A3inA4 };

std::string_view to_string(SystemName name);
SystemName parse_system_name(std::string_view text);

struct CoxeterSystem {
    SystemName name{};
    std::vector<Quaternion> roots;
    ExactMatrix cartan;
    ExactMatrix cartan_inverse;
    /// weights[i] = sum_j cartan_inverse(i, j) roots[j], so (weights[i], roots[j]) = delta_ij.
    std::vector<Quaternion> weights;
    std::vector<GroupElement> generators;
    /// Rank-3 systems only: the ambient weight orthogonal to every root
    /// (omega4 for H3, omega1 for A3, v4 for A3inA4).
    std::optional<Quaternion> complement;
    /// Index (0-based) of each root in the rank-4 parent; identity for rank 4.
    std::vector<int> parent_nodes;

    std::size_t rank() const { return roots.size(); }
};

const CoxeterSystem& build_system(SystemName name);

/**
 * Coordinates of r relative to a system.
 *
 * Rank 4: b_i = (r, alpha_i), so r = sum b_i w_i.
 * Rank 3: b_i = (r, alpha_i) for i <= 3 plus b_4 = (r, n)/(n, n) where n is the
 * complement weight, so r = sum b_i w_i + b_4 n.
 */
std::vector<GoldenScalar> weight_coords(const CoxeterSystem& system, const Quaternion& r);

/// Point with weight-basis coordinates `coeffs` (rank-many entries).
Quaternion from_weight_coords(const CoxeterSystem& system, const std::vector<GoldenScalar>& coeffs);

class GroupClosureError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Canonically sorted, closed set of group elements.
class FiniteGroup {
public:
    FiniteGroup() = default;
    FiniteGroup(std::string name, std::vector<GroupElement> sorted_elements, std::vector<std::string> generator_labels);

    const std::string& name() const { return name_; }
    const std::vector<GroupElement>& elements() const { return elements_; }
    const std::vector<std::string>& generator_labels() const { return labels_; }
    std::size_t order() const { return elements_.size(); }

    bool contains(const GroupElement& g) const { return index_.count(g) != 0; }
    /// Position in elements(); throws std::out_of_range when absent.
    std::size_t index_of(const GroupElement& g) const { return index_.at(g); }

    /// Set equality of element lists.
    friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) { return a.elements_ == b.elements_; }

private:
    std::string name_;
    std::vector<GroupElement> elements_;
    std::vector<std::string> labels_;
    std::unordered_map<GroupElement, std::size_t, GroupElementHash> index_;
};

/**
 * Breadth-first closure of `generators` under compose. Frontier expansion is
 * sharded over worker_count() threads; the result is sorted canonically and
 * does not depend on the worker count.
 *
 * Throws GroupClosureError past `cap` elements, or when `expected_order` is
 * given and does not match.
 */
FiniteGroup generate(const std::vector<GroupElement>& generators, std::string name = "G",
                     std::optional<std::size_t> expected_order = std::nullopt, std::size_t cap = 30000,
                     std::vector<std::string> labels = {});

/// Reflection group of a system (cached; W(H4) is built once per process).
const FiniteGroup& weyl_group(SystemName name);

/// The diagram automorphism [a, b] of A4 swapping alpha1 <-> alpha4 and alpha2 <-> alpha3.
GroupElement a4_diagram_automorphism();

/// <W(A4), gamma>, order 240. Throws GroupClosureError unless every element lies in W(H4).
const FiniteGroup& aut_a4();

/// {[p,q], [p,q]* : p, q in I}: the closed form of W(H4).
FiniteGroup h4_from_binary_icosahedral();

/// {[p, conj p], [p, conj p]* : p in I}: the closed form of W(H3).
FiniteGroup h3_from_binary_icosahedral();

}  // namespace h4
