#include "h4/coxeter.hpp"

#include "h4/parallel.hpp"
#include "h4/quaternion_groups.hpp"

#include <algorithm>
#include <cctype>
#include <array>
#include <mutex>
#include <unordered_set>

namespace h4 {

namespace {

const GoldenScalar& r2_half() {
    static const GoldenScalar v = GoldenScalar::sqrt2() / GoldenScalar(2);
    return v;
}

std::vector<Quaternion> h4_roots() {
    const GoldenScalar r2 = GoldenScalar::sqrt2();
    const GoldenScalar t = GoldenScalar::tau();
    const GoldenScalar s = GoldenScalar::sigma();
    return {
        {0, -r2, 0, 0},
        r2_half() * Quaternion(0, t, 1, s),
        {0, 0, -r2, 0},
        r2_half() * Quaternion(s, 0, 1, t),
    };
}

std::vector<Quaternion> a4_roots() {
    const GoldenScalar r2 = GoldenScalar::sqrt2();
    const GoldenScalar t = GoldenScalar::tau();
    const GoldenScalar s = GoldenScalar::sigma();
    return {
        {-r2, 0, 0, 0},
        r2_half() * Quaternion(1, 1, 1, 1),
        {0, -r2, 0, 0},
        r2_half() * Quaternion(0, 1, -s, -t),
    };
}

CoxeterSystem make_system(SystemName name, std::vector<Quaternion> roots, std::vector<int> parent_nodes,
                          std::optional<Quaternion> complement) {
    CoxeterSystem sys;
    sys.name = name;
    sys.roots = std::move(roots);
    sys.parent_nodes = std::move(parent_nodes);
    sys.complement = std::move(complement);
    const std::size_t n = sys.roots.size();
    sys.cartan = ExactMatrix(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) sys.cartan(i, j) = q_dot(sys.roots[i], sys.roots[j]);
    sys.cartan_inverse = inverse(sys.cartan);
    for (std::size_t i = 0; i < n; ++i) {
        Quaternion w;
        for (std::size_t j = 0; j < n; ++j) w += sys.cartan_inverse(i, j) * sys.roots[j];
        sys.weights.push_back(std::move(w));
    }
    for (const auto& a : sys.roots) sys.generators.push_back(GroupElement::reflection(a));
    return sys;
}

CoxeterSystem make_named(SystemName name) {
    switch (name) {
        case SystemName::H4: return make_system(name, h4_roots(), {0, 1, 2, 3}, std::nullopt);
        case SystemName::A4: return make_system(name, a4_roots(), {0, 1, 2, 3}, std::nullopt);
        case SystemName::H3: {
            const auto& h4 = build_system(SystemName::H4);
            return make_system(name, {h4.roots[0], h4.roots[1], h4.roots[2]}, {0, 1, 2}, h4.weights[3]);
        }
        case SystemName::A3: {
            const auto& h4 = build_system(SystemName::H4);
            return make_system(name, {h4.roots[1], h4.roots[2], h4.roots[3]}, {1, 2, 3}, h4.weights[0]);
        }
        case SystemName::A3inA4: {
            const auto& a4 = build_system(SystemName::A4);
            return make_system(name, {a4.roots[0], a4.roots[1], a4.roots[2]}, {0, 1, 2}, a4.weights[3]);
        }
    }
    throw std::invalid_argument("build_system: unknown system");
}

constexpr std::size_t kSystems = 5;

std::size_t expected_order(SystemName name) {
    switch (name) {
        case SystemName::H4: return 14400;
        case SystemName::H3:
        case SystemName::A4: return 120;
        case SystemName::A3:
        case SystemName::A3inA4: return 24;
    }
    return 0;
}

FiniteGroup from_set(std::string name, const std::unordered_set<GroupElement, GroupElementHash>& set) {
    std::vector<GroupElement> v(set.begin(), set.end());
    std::sort(v.begin(), v.end(), GroupElementLess{});
    return {std::move(name), std::move(v), {}};
}

}  // namespace

std::string_view to_string(SystemName name) {
    switch (name) {
        case SystemName::H4: return "H4";
        case SystemName::H3: return "H3";
        case SystemName::A4: return "A4";
        case SystemName::A3: return "A3";
        case SystemName::A3inA4: return "A3inA4";
    }
    return "?";
}

SystemName parse_system_name(std::string_view text) {
    std::string lower(text);
    std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char ch) { return std::tolower(ch); });
    if (lower == "h4") return SystemName::H4;
    if (lower == "h3") return SystemName::H3;
    if (lower == "a4") return SystemName::A4;
    if (lower == "a3") return SystemName::A3;
    if (lower == "a3ina4") return SystemName::A3inA4;
    throw std::invalid_argument("unknown group: " + std::string(text));
}

const CoxeterSystem& build_system(SystemName name) {
    static std::array<std::once_flag, kSystems> flags;
    static std::array<CoxeterSystem, kSystems> systems;
    const auto i = static_cast<std::size_t>(name);
    std::call_once(flags[i], [&] { systems[i] = make_named(name); });
    return systems[i];
}

std::vector<GoldenScalar> weight_coords(const CoxeterSystem& system, const Quaternion& r) {
    std::vector<GoldenScalar> b;
    b.reserve(4);
    for (const auto& a : system.roots) b.push_back(q_dot(r, a));
    if (system.complement) {
        const Quaternion& n = *system.complement;
        b.push_back(q_dot(r, n) / q_norm(n));
    }
    return b;
}

Quaternion from_weight_coords(const CoxeterSystem& system, const std::vector<GoldenScalar>& coeffs) {
    if (coeffs.size() != system.rank() && !(system.complement && coeffs.size() == system.rank() + 1))
        throw std::invalid_argument("from_weight_coords: wrong coefficient count");
    Quaternion x;
    for (std::size_t i = 0; i < system.rank(); ++i)
        if (!coeffs[i].is_zero()) x += coeffs[i] * system.weights[i];
    if (coeffs.size() > system.rank()) x += coeffs.back() * *system.complement;
    return x;
}

FiniteGroup::FiniteGroup(std::string name, std::vector<GroupElement> sorted_elements,
                         std::vector<std::string> generator_labels)
    : name_(std::move(name)), elements_(std::move(sorted_elements)), labels_(std::move(generator_labels)) {
    index_.reserve(elements_.size());
    for (std::size_t i = 0; i < elements_.size(); ++i) index_.emplace(elements_[i], i);
}

FiniteGroup generate(const std::vector<GroupElement>& generators, std::string name,
                     std::optional<std::size_t> expected_order, std::size_t cap, std::vector<std::string> labels) {
    std::unordered_set<GroupElement, GroupElementHash> seen{GroupElement{}};
    std::vector<GroupElement> frontier{GroupElement{}};
    while (!frontier.empty()) {
        std::vector<std::vector<GroupElement>> produced(std::max(1u, worker_count()));
        parallel_chunks(frontier.size(), [&](std::size_t begin, std::size_t end, std::size_t chunk) {
            auto& out = produced[chunk];
            for (std::size_t i = begin; i < end; ++i)
                for (const auto& g : generators) {
                    GroupElement y = compose(frontier[i], g);
                    if (!seen.count(y)) out.push_back(std::move(y));
                }
        });
        std::vector<GroupElement> next;
        for (auto& chunk : produced)
            for (auto& y : chunk)
                if (seen.insert(y).second) {
                    if (seen.size() > cap) throw GroupClosureError("generate(" + name + "): closure exceeds cap");
                    next.push_back(std::move(y));
                }
        frontier = std::move(next);
    }
    if (expected_order && seen.size() != *expected_order)
        throw GroupClosureError("generate(" + name + "): order " + std::to_string(seen.size()) + ", expected " +
                                std::to_string(*expected_order));
    FiniteGroup g = from_set(name, seen);
    return {std::move(name), g.elements(), std::move(labels)};
}

const FiniteGroup& weyl_group(SystemName name) {
    static std::array<std::once_flag, kSystems> flags;
    static std::array<FiniteGroup, kSystems> groups;
    const auto i = static_cast<std::size_t>(name);
    std::call_once(flags[i], [&] {
        const auto& sys = build_system(name);
        std::vector<std::string> labels;
        for (int node : sys.parent_nodes) labels.push_back("r" + std::to_string(node + 1));
        groups[i] = generate(sys.generators, "W(" + std::string(to_string(name)) + ")", expected_order(name), 30000,
                             std::move(labels));
    });
    return groups[i];
}

GroupElement a4_diagram_automorphism() {
    const GoldenScalar half = GoldenScalar::rational(1, 2);
    const GoldenScalar t = GoldenScalar::tau();
    const GoldenScalar s = GoldenScalar::sigma();
    const Quaternion a = half * Quaternion(0, -t, 1, s);
    const Quaternion b = half * Quaternion(0, s, -t, -1);
    return {GroupElement::Kind::plain, a, b};
}

const FiniteGroup& aut_a4() {
    static const FiniteGroup group = [] {
        std::vector<GroupElement> gens = build_system(SystemName::A4).generators;
        gens.push_back(a4_diagram_automorphism());
        FiniteGroup g = generate(gens, "Aut(A4)", 240, 30000, {"r1", "r2", "r3", "r4", "gamma"});
        const FiniteGroup& h4 = weyl_group(SystemName::H4);
        for (const auto& x : g.elements())
            if (!h4.contains(x)) throw GroupClosureError("aut_a4: element outside W(H4)");
        return g;
    }();
    return group;
}

FiniteGroup h4_from_binary_icosahedral() {
    const QuaternionSet i = build_set(QuaternionSetName::I);
    std::unordered_set<GroupElement, GroupElementHash> set;
    set.reserve(14400);
    for (const auto& p : i.elements)
        for (const auto& q : i.elements) {
            set.emplace(GroupElement::Kind::plain, p, q);
            set.emplace(GroupElement::Kind::star, p, q);
        }
    return from_set("[I,I]+[I,I]*", set);
}

FiniteGroup h3_from_binary_icosahedral() {
    const QuaternionSet i = build_set(QuaternionSetName::I);
    std::unordered_set<GroupElement, GroupElementHash> set;
    for (const auto& p : i.elements) {
        set.emplace(GroupElement::Kind::plain, p, q_conj(p));
        set.emplace(GroupElement::Kind::star, p, q_conj(p));
    }
    return from_set("[p,conj p]+[p,conj p]*", set);
}

}  // namespace h4
