#include "h4/branching.hpp"

#include "h4/parallel.hpp"
#include "h4/quaternion_groups.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace h4 {

namespace {

struct LexLess {
    bool operator()(const std::vector<GoldenScalar>& a, const std::vector<GoldenScalar>& b) const {
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                            [](const GoldenScalar& x, const GoldenScalar& y) { return x < y; });
    }
};

using TermMap = std::map<std::vector<GoldenScalar>, BranchTerm, LexLess>;

std::size_t h4_orbit_size(const WeightVector& seed) {
    std::vector<GoldenScalar> c = seed.coeffs;
    return suborbit_size(SystemName::H4, c);
}

void check_seed(const WeightVector& seed) {
    if (seed.system != SystemName::H4) throw std::invalid_argument("branching: H4 weight required");
    if (seed.is_zero()) throw OrbitError("branching: trivial weight");
    if (!seed.is_dominant()) throw OrbitError("branching: non-dominant weight " + format_coeffs(seed.coeffs));
}

// Dominant coordinates of g.x for every coset representative, aggregated.
TermMap aggregate_cosets(SystemName subgroup, const Quaternion& x) {
    const auto& reps = coset_reps(subgroup);
    const auto& sys = build_system(subgroup);
    const auto coords = parallel_map<std::vector<GoldenScalar>>(
        reps.size(), [&](std::size_t i) { return dominant_rep(sys, reps[i].apply(x)).coeffs; });
    TermMap map;
    for (const auto& c : coords) {
        auto [it, inserted] = map.try_emplace(c);
        it->second.coset_hits++;
    }
    return map;
}

bool height_order(const BranchTerm& a, const BranchTerm& b) {
    const GoldenScalar& ha = *a.height;
    const GoldenScalar& hb = *b.height;
    if (int c = compare(abs(hb), abs(ha)); c != 0) return c < 0;
    if (int c = compare(hb, ha); c != 0) return c < 0;
    return LexLess{}(a.weight, b.weight);
}

bool descending_height(const BranchTerm& a, const BranchTerm& b) {
    if (int c = compare(*b.height, *a.height); c != 0) return c < 0;
    return LexLess{}(a.weight, b.weight);
}

}  // namespace

std::size_t BranchTable::vertex_total() const {
    std::size_t n = 0;
    for (const auto& t : terms) n += t.multiplicity * t.orbit_size;
    return n;
}

const std::vector<GroupElement>& coset_reps(SystemName subgroup) {
    if (subgroup != SystemName::H3 && subgroup != SystemName::A4)
        throw std::invalid_argument("coset_reps: subgroup must be H3 or A4");
    static std::once_flag once;
    static std::vector<GroupElement> reps;
    std::call_once(once, [] {
        for (const auto& p : build_set(QuaternionSetName::I).elements)
            reps.emplace_back(GroupElement::Kind::plain, p, Quaternion::one());
        std::sort(reps.begin(), reps.end(), GroupElementLess{});
        reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
    });
    static std::once_flag checked[2];
    std::call_once(checked[subgroup == SystemName::H3 ? 0 : 1], [subgroup] {
        const FiniteGroup& h = weyl_group(subgroup);
        const FiniteGroup& w = weyl_group(SystemName::H4);
        if (reps.size() * h.order() != w.order()) throw std::logic_error("coset_reps: wrong count");
        for (std::size_t i = 0; i < reps.size(); ++i) {
            if (!w.contains(reps[i])) throw std::logic_error("coset_reps: representative outside W(H4)");
            const GroupElement inv = reps[i].inverse();
            for (std::size_t j = i + 1; j < reps.size(); ++j)
                if (h.contains(compose(reps[j], inv))) throw std::logic_error("coset_reps: two reps share a coset");
        }
    });
    return reps;
}

std::size_t suborbit_size(SystemName system, const std::vector<GoldenScalar>& dominant) {
    const auto& sys = build_system(system);
    unsigned mask = 0;
    for (std::size_t i = 0; i < sys.rank(); ++i)
        if (dominant.at(i).is_zero()) mask |= 1u << i;
    static std::mutex mu;
    static std::map<std::pair<SystemName, unsigned>, std::size_t> cache;
    {
        std::lock_guard lock(mu);
        if (auto it = cache.find({system, mask}); it != cache.end()) return it->second;
    }
    std::vector<GroupElement> gens;
    for (std::size_t i = 0; i < sys.rank(); ++i)
        if (mask & (1u << i)) gens.push_back(sys.generators[i]);
    const std::size_t size = weyl_group(system).order() / generate(gens).order();
    std::lock_guard lock(mu);
    cache[{system, mask}] = size;
    return size;
}

BranchTable branch_h3(const WeightVector& seed) {
    check_seed(seed);
    BranchTable table{seed, SystemName::H3, {}};
    for (auto& [coords, term] : aggregate_cosets(SystemName::H3, seed.ambient)) {
        term.weight.assign(coords.begin(), coords.begin() + 3);
        term.height = coords[3];
        term.orbit_size = suborbit_size(SystemName::H3, term.weight);
        table.terms.push_back(std::move(term));
    }
    std::sort(table.terms.begin(), table.terms.end(), height_order);
    if (table.vertex_total() != h4_orbit_size(seed)) throw std::logic_error("branch_h3: vertex count not conserved");
    return table;
}

BranchTable branch_a4(const WeightVector& seed) {
    check_seed(seed);
    BranchTable table{seed, SystemName::A4, {}};
    std::vector<std::vector<GoldenScalar>> labels;
    for (auto& [coords, term] : aggregate_cosets(SystemName::A4, seed.ambient)) {
        term.weight = coords;
        term.orbit_size = suborbit_size(SystemName::A4, coords);
        labels.push_back(coords);
        table.terms.push_back(std::move(term));
    }
    if (table.vertex_total() != h4_orbit_size(seed)) throw std::logic_error("branch_a4: vertex count not conserved");
    std::vector<std::vector<GoldenScalar>> mirrored;
    for (auto l : labels) {
        std::reverse(l.begin(), l.end());
        mirrored.push_back(std::move(l));
    }
    std::sort(mirrored.begin(), mirrored.end(), LexLess{});
    if (mirrored != labels) throw std::logic_error("branch_a4: table not symmetric under the diagram automorphism");
    return table;
}

GoldenScalar a3_height_scale() { return GoldenScalar(-5); }

std::vector<BranchTerm> branch_a4_to_a3(const std::vector<GoldenScalar>& a) {
    if (a.size() != 4) throw std::invalid_argument("branch_a4_to_a3: four coefficients required");
    const GoldenScalar &a1 = a[0], &a2 = a[1], &a3 = a[2], &a4 = a[3];
    const GoldenScalar two(2), three(3), four(4);
    const std::vector<std::pair<std::vector<GoldenScalar>, GoldenScalar>> rule = {
        {{a1, a2, a3}, -(a1 + two * a2 + three * a3 + four * a4)},
        {{a1, a2, a3 + a4}, -a1 - two * a2 - three * a3 + a4},
        {{a1, a2 + a3, a4}, -a1 - two * a2 + two * a3 + a4},
        {{a1 + a2, a3, a4}, -a1 + three * a2 + two * a3 + a4},
        {{a2, a3, a4}, four * a1 + three * a2 + two * a3 + a4},
    };
    TermMap merged;
    for (const auto& [label, h] : rule) {
        std::vector<GoldenScalar> key = label;
        key.push_back(h);
        auto [it, inserted] = merged.try_emplace(key);
        if (inserted) {
            it->second.weight = label;
            it->second.height = h;
            it->second.geometric_height = h / a3_height_scale();
            it->second.orbit_size = suborbit_size(SystemName::A3inA4, label);
        }
    }
    std::vector<BranchTerm> out;
    for (auto& [k, t] : merged) out.push_back(std::move(t));
    std::sort(out.begin(), out.end(), descending_height);
    std::size_t total = 0;
    for (const auto& t : out) total += t.orbit_size;
    const bool trivial = std::all_of(a.begin(), a.end(), [](const GoldenScalar& x) { return x.is_zero(); });
    if (total != (trivial ? 1 : suborbit_size(SystemName::A4, a)))
        throw std::logic_error("branch_a4_to_a3: vertex count not conserved");
    return out;
}

std::vector<BranchTerm> group_by_suborbit(SystemName system, const std::vector<Quaternion>& points) {
    const auto& sys = build_system(system);
    if (!sys.complement) throw std::invalid_argument("group_by_suborbit: rank-3 subsystem required");
    const auto coords = parallel_map<std::vector<GoldenScalar>>(
        points.size(), [&](std::size_t i) { return dominant_rep(sys, points[i]).coeffs; });
    TermMap map;
    for (const auto& c : coords) map.try_emplace(c).first->second.coset_hits++;
    std::vector<BranchTerm> out;
    for (auto& [c, t] : map) {
        t.weight.assign(c.begin(), c.begin() + 3);
        t.height = c[3];
        t.orbit_size = suborbit_size(system, t.weight);
        if (t.coset_hits % t.orbit_size != 0) throw std::logic_error("group_by_suborbit: partial sub-orbit");
        t.multiplicity = t.coset_hits / t.orbit_size;
        t.coset_hits = 0;
        out.push_back(std::move(t));
    }
    std::sort(out.begin(), out.end(), descending_height);
    return out;
}

BranchTable branch_h4_to_a3(const WeightVector& seed) {
    const BranchTable a4 = branch_a4(seed);
    TermMap composite;
    for (const auto& outer : a4.terms)
        for (auto& t : branch_a4_to_a3(outer.weight)) {
            std::vector<GoldenScalar> key = t.weight;
            key.push_back(*t.height);
            auto [it, inserted] = composite.try_emplace(key, t);
            if (!inserted) it->second.multiplicity += t.multiplicity;
        }
    BranchTable table{seed, SystemName::A3inA4, {}};
    for (const auto& [k, t] : composite) table.terms.push_back(t);
    std::sort(table.terms.begin(), table.terms.end(), descending_height);
    if (table.vertex_total() != h4_orbit_size(seed)) throw std::logic_error("branch_h4_to_a3: vertex count not conserved");

    // Direct route: group the explicit orbit by A3 sub-orbit and compare.
    const auto& sys = build_system(SystemName::A3inA4);
    const GoldenScalar v4_norm = q_norm(*sys.complement);
    const OrbitPolytope poly = orbit(weyl_group(SystemName::H4), seed);
    std::vector<BranchTerm> direct = group_by_suborbit(SystemName::A3inA4, poly.vertices);
    if (direct.size() != composite.size()) throw std::logic_error("branch_h4_to_a3: routes disagree on term count");
    for (const auto& d : direct) {
        const GoldenScalar geometric = *d.height * v4_norm;
        std::vector<GoldenScalar> key = d.weight;
        key.push_back(geometric * a3_height_scale());
        auto it = composite.find(key);
        if (it == composite.end() || *it->second.geometric_height != geometric ||
            it->second.multiplicity != d.multiplicity)
            throw std::logic_error("branch_h4_to_a3: five-term rule disagrees with the explicit orbit");
    }
    return table;
}

}  // namespace h4
