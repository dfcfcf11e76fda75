#pragma once

#include "h4/quaternion.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace h4 {

enum class QuaternionSetName { T, Tprime, O, I, S, Itilde };

std::string_view to_string(QuaternionSetName name);
QuaternionSetName parse_quaternion_set_name(std::string_view text);

/// Deduplicated, canonically sorted set of unit quaternions.
struct QuaternionSet {
    std::string name;
    std::vector<Quaternion> elements;

    std::size_t size() const { return elements.size(); }
    bool contains(const Quaternion& q) const;
};

/**
 * Finite quaternion sets:
 *   T      binary tetrahedral group (24)
 *   Tprime the rotated 24-cell (24, not a group)
 *   O      T u T' (binary octahedral group, 48)
 *   I      binary icosahedral group (120), closure of two generators;
 *          checked against T u S at construction
 *   S      snub 24-cell vertices (96)
 *   Itilde I with tau and sigma exchanged (120)
 *
 * Throws std::logic_error if a closure overshoots its expected size or the
 * two constructions of I disagree.
 */
QuaternionSet build_set(QuaternionSetName name);

/// Closure of `generators` under q_mul; aborts past `cap` elements.
QuaternionSet close_under_product(std::string name, const std::vector<Quaternion>& generators, std::size_t cap);

/// True when the set is closed under q_mul, contains 1 and inverses (brute force).
bool is_group(const QuaternionSet& set);

/// Smallest n > 0 with q^n = 1; 0 when none is found up to `limit`.
int element_order(const Quaternion& q, int limit = 120);

struct ConjugacyClass {
    Quaternion representative;  // largest member in canonical order
    std::vector<Quaternion> members;
    int element_order = 0;
};

/// Classes of g -> x g x^-1. Sorted by size, then by decreasing scalar part.
std::vector<ConjugacyClass> conjugacy_classes(const QuaternionSet& group);

}  // namespace h4
