#include "h4/orbit.hpp"

#include "h4/parallel.hpp"

#include <algorithm>
#include <array>
#include <mutex>
#include <sstream>
#include <unordered_set>

namespace h4 {

bool WeightVector::is_dominant() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](const GoldenScalar& a) { return a.sign() >= 0; });
}

bool WeightVector::is_zero() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](const GoldenScalar& a) { return a.is_zero(); });
}

WeightVector make_weight(SystemName system, std::vector<GoldenScalar> coeffs) {
    const auto& sys = build_system(system);
    if (coeffs.size() != sys.rank())
        throw std::invalid_argument("weight for " + std::string(to_string(system)) + " needs " +
                                    std::to_string(sys.rank()) + " coefficients");
    WeightVector w{system, std::move(coeffs), {}};
    w.ambient = from_weight_coords(sys, w.coeffs);
    return w;
}

WeightVector parse_weight(SystemName system, std::string_view text) {
    std::vector<GoldenScalar> coeffs;
    std::size_t start = 0;
    for (;;) {
        const std::size_t comma = text.find(',', start);
        coeffs.push_back(parse_scalar(text.substr(start, comma == std::string_view::npos ? comma : comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return make_weight(system, std::move(coeffs));
}

std::string format_coeffs(const std::vector<GoldenScalar>& coeffs) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < coeffs.size(); ++i) os << (i ? ", " : "") << coeffs[i].to_literal();
    os << ")";
    return os.str();
}

bool OrbitPolytope::contains(const Quaternion& x) const {
    return std::binary_search(vertices.begin(), vertices.end(), x, QuaternionLess{});
}

std::vector<Quaternion> orbit_points(const FiniteGroup& group, const Quaternion& x) {
    const auto& els = group.elements();
    std::vector<Quaternion> images =
        parallel_map<Quaternion>(els.size(), [&](std::size_t i) { return els[i].apply(x); });
    std::unordered_set<Quaternion, QuaternionHash> unique(images.begin(), images.end());
    std::vector<Quaternion> out(unique.begin(), unique.end());
    std::sort(out.begin(), out.end(), QuaternionLess{});
    return out;
}

OrbitPolytope orbit(const FiniteGroup& group, const WeightVector& seed) {
    if (seed.is_zero()) throw OrbitError("orbit: trivial weight " + format_coeffs(seed.coeffs));
    if (!seed.is_dominant()) throw OrbitError("orbit: non-dominant weight " + format_coeffs(seed.coeffs));
    OrbitPolytope p;
    p.seed = seed;
    p.group_name = group.name();
    p.group_order = group.order();
    p.vertices = orbit_points(group, seed.ambient);
    p.stabilizer_order = static_cast<std::size_t>(
        std::count_if(group.elements().begin(), group.elements().end(),
                      [&](const GroupElement& g) { return g.apply(seed.ambient) == seed.ambient; }));
    return p;
}

OrbitPolytope h4_orbit(const std::vector<GoldenScalar>& coeffs) {
    return orbit(weyl_group(SystemName::H4), make_weight(SystemName::H4, coeffs));
}

DominantResult dominant_rep(const CoxeterSystem& system, const Quaternion& x) {
    std::vector<GoldenScalar> b = weight_coords(system, x);
    const std::size_t n = system.rank();
    GroupElement witness;
    for (int guard = 0;; ++guard) {
        if (guard > 10000) throw std::logic_error("dominant_rep: no convergence");
        std::size_t i = 0;
        while (i < n && b[i].sign() >= 0) ++i;
        if (i == n) break;
        // r_i: b_j -> b_j - b_i * 2 C_ij / C_ii
        const GoldenScalar bi = b[i];
        const GoldenScalar k = GoldenScalar(2) / system.cartan(i, i);
        for (std::size_t j = 0; j < n; ++j)
            if (!system.cartan(i, j).is_zero()) b[j] -= bi * k * system.cartan(i, j);
        witness = compose(system.generators[i], witness);
    }
    Quaternion point = witness.apply(x);
    return {std::move(b), std::move(point), std::move(witness)};
}

DominantResult dominant_rep(const CoxeterSystem& system, const std::vector<GoldenScalar>& coeffs) {
    return dominant_rep(system, from_weight_coords(system, coeffs));
}

FiniteGroup parabolic_subgroup(const std::vector<int>& nodes) {
    const auto& h4 = build_system(SystemName::H4);
    std::vector<GroupElement> gens;
    std::vector<std::string> labels;
    std::string name = "W<";
    for (int i : nodes) {
        gens.push_back(h4.generators.at(static_cast<std::size_t>(i)));
        labels.push_back("r" + std::to_string(i + 1));
        name += labels.back();
    }
    name += ">";
    return generate(gens, name, std::nullopt, 30000, labels);
}

int affine_rank(const std::vector<Quaternion>& points) {
    if (points.empty()) return -1;
    if (points.size() == 1) return 0;
    ExactMatrix m(points.size() - 1, 4);
    for (std::size_t i = 1; i < points.size(); ++i)
        for (std::size_t c = 0; c < 4; ++c) m(i - 1, c) = points[i][c] - points[0][c];
    return static_cast<int>(rank(m));
}

std::size_t CellCensus::total_cells() const {
    std::size_t n = 0;
    for (const auto& t : types)
        if (t.is_cell) n += t.cell_count;
    return n;
}

std::size_t CellCensus::cells_at_vertex() const {
    std::size_t n = 0;
    for (const auto& t : types)
        if (t.is_cell) n += t.cells_per_vertex;
    return n;
}

const CellType* CellCensus::type(int deleted_node) const {
    for (const auto& t : types)
        if (t.deleted_node == deleted_node) return &t;
    return nullptr;
}

std::string polyhedron_label(SystemName system, const std::vector<bool>& ringed) {
    if (ringed.size() != 3) return "";
    const int mask = (ringed[0] ? 1 : 0) | (ringed[1] ? 2 : 0) | (ringed[2] ? 4 : 0);
    if (system == SystemName::H3) {
        static const std::array<const char*, 8> names = {"",
                                                         "dodecahedron",
                                                         "icosidodecahedron",
                                                         "truncated dodecahedron",
                                                         "icosahedron",
                                                         "small rhombicosidodecahedron",
                                                         "truncated icosahedron",
                                                         "great rhombicosidodecahedron"};
        return names[mask];
    }
    if (system == SystemName::A3 || system == SystemName::A3inA4) {
        static const std::array<const char*, 8> names = {"",
                                                         "tetrahedron",
                                                         "octahedron",
                                                         "truncated tetrahedron",
                                                         "tetrahedron",
                                                         "cuboctahedron",
                                                         "truncated tetrahedron",
                                                         "truncated octahedron"};
        return names[mask];
    }
    return "";
}

std::string cell_label(int deleted_node, const std::vector<bool>& r) {
    switch (deleted_node) {
        case 1: return polyhedron_label(SystemName::A3, {r[1], r[2], r[3]});
        case 2: return r[2] && r[3] ? "hexagonal prism" : "triangular prism";
        case 3: return r[0] && r[1] ? "decagonal prism" : "pentagonal prism";
        case 4: return polyhedron_label(SystemName::H3, {r[0], r[1], r[2]});
    }
    return "";
}

const std::vector<Quaternion>& weight_orbit(int j) {
    static std::array<std::once_flag, 4> flags;
    static std::array<std::vector<Quaternion>, 4> orbits;
    const auto i = static_cast<std::size_t>(j - 1);
    std::call_once(flags.at(i), [&] {
        orbits[i] = orbit_points(weyl_group(SystemName::H4), build_system(SystemName::H4).weights[i]);
    });
    return orbits[i];
}

std::size_t incident_count(const Quaternion& lambda, const Quaternion& v, int j) {
    const GoldenScalar target = q_dot(lambda, build_system(SystemName::H4).weights[static_cast<std::size_t>(j - 1)]);
    const auto& centers = weight_orbit(j);
    return static_cast<std::size_t>(
        std::count_if(centers.begin(), centers.end(), [&](const Quaternion& c) { return q_dot(v, c) == target; }));
}

CellCensus cell_census(const WeightVector& seed) {
    if (seed.system != SystemName::H4) throw std::invalid_argument("cell_census: H4 weight required");
    const FiniteGroup& w = weyl_group(SystemName::H4);
    const OrbitPolytope poly = orbit(w, seed);
    const auto& h4 = build_system(SystemName::H4);

    std::vector<bool> ringed;
    std::vector<int> zero_nodes;
    for (std::size_t i = 0; i < 4; ++i) {
        ringed.push_back(!seed.coeffs[i].is_zero());
        if (seed.coeffs[i].is_zero()) zero_nodes.push_back(static_cast<int>(i));
    }
    const FiniteGroup stab = parabolic_subgroup(zero_nodes);
    if (stab.order() != poly.stabilizer_order) throw std::logic_error("cell_census: stabilizer mismatch");

    CellCensus census;
    census.seed = seed;
    census.vertex_count = poly.size();
    for (int j = 1; j <= 4; ++j) {
        CellType t;
        t.deleted_node = j;
        std::vector<int> s;
        for (int i = 0; i < 4; ++i)
            if (i != j - 1) {
                s.push_back(i);
                t.nodes.push_back(i + 1);
            }
        const FiniteGroup ws = parabolic_subgroup(s);
        const std::vector<Quaternion> cell = orbit_points(ws, seed.ambient);
        t.subgroup_order = ws.order();
        t.cell_vertices = cell.size();
        t.is_cell = affine_rank(cell) == 3;
        if (t.is_cell) {
            t.label = cell_label(j, ringed);
            t.cell_count = w.order() / ws.order();
            if ((t.cell_count * t.cell_vertices) % poly.size() != 0)
                throw std::logic_error("cell_census: non-integral cells per vertex");
            t.cells_per_vertex = t.cell_count * t.cell_vertices / poly.size();
            const std::size_t via_stabilizer = orbit_points(stab, h4.weights[static_cast<std::size_t>(j - 1)]).size();
            const std::size_t via_scan = incident_count(seed.ambient, seed.ambient, j);
            if (via_stabilizer != t.cells_per_vertex || via_scan != t.cells_per_vertex)
                throw std::logic_error("cell_census: incidence routes disagree for node " + std::to_string(j));
            if (weight_orbit(j).size() != t.cell_count)
                throw std::logic_error("cell_census: center orbit size differs from cell count");
        }
        census.types.push_back(std::move(t));
    }
    std::size_t lhs = 0;
    for (const auto& t : census.types)
        if (t.is_cell) lhs += t.cell_count * t.cell_vertices;
    if (lhs != census.vertex_count * census.cells_at_vertex())
        throw std::logic_error("cell_census: flag count identity fails");
    return census;
}

}  // namespace h4
