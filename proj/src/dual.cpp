#include "h4/dual.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

namespace h4 {

namespace {

std::vector<int> zero_nodes(const WeightVector& w) {
    std::vector<int> out;
    for (std::size_t i = 0; i < w.coeffs.size(); ++i)
        if (w.coeffs[i].is_zero()) out.push_back(static_cast<int>(i));
    return out;
}

}  // namespace

std::size_t IncidentCellSet::total() const {
    std::size_t n = 0;
    for (const auto& t : types) n += t.centers.size();
    return n;
}

const IncidentType* IncidentCellSet::type(int node) const {
    for (const auto& t : types)
        if (t.node == node) return &t;
    return nullptr;
}

IncidentCellSet incident_cells(const WeightVector& lambda) {
    const CellCensus census = cell_census(lambda);
    const FiniteGroup stab = parabolic_subgroup(zero_nodes(lambda));
    const auto& h4 = build_system(SystemName::H4);
    IncidentCellSet set{lambda, {}};
    for (const auto& ct : census.types) {
        if (!ct.is_cell) continue;
        const auto j = static_cast<std::size_t>(ct.deleted_node - 1);
        const GoldenScalar target = q_dot(lambda.ambient, h4.weights[j]);
        IncidentType t{ct.deleted_node, ct.label, {}};
        for (const auto& c : weight_orbit(ct.deleted_node))
            if (q_dot(lambda.ambient, c) == target) t.centers.push_back(c);
        if (t.centers.size() != ct.cells_per_vertex)
            throw std::logic_error("incident_cells: count differs from census for node " + std::to_string(ct.deleted_node));
        if (orbit_points(stab, h4.weights[j]) != t.centers)
            throw std::logic_error("incident_cells: centers are not one stabilizer orbit");
        set.types.push_back(std::move(t));
    }
    return set;
}

ScaleFactors solve_scales(const IncidentCellSet& cells, std::optional<int> anchor) {
    if (cells.types.empty()) throw std::invalid_argument("solve_scales: no incident cells");
    std::map<int, GoldenScalar> ip;
    for (const auto& t : cells.types) {
        if (t.centers.empty()) throw std::invalid_argument("solve_scales: empty cell type");
        const GoldenScalar v = q_dot(t.centers.front(), cells.vertex.ambient);
        for (const auto& c : t.centers) {
            const GoldenScalar w = q_dot(c, cells.vertex.ambient);
            if (w.is_zero())
                throw DegenerateCenterError("solve_scales: center orthogonal to " + format_coeffs(cells.vertex.coeffs));
            if (w != v) throw std::logic_error("solve_scales: centers of one type off a common hyperplane");
        }
        ip.emplace(t.node, v);
    }
    ScaleFactors out;
    if (anchor) {
        if (!ip.count(*anchor)) throw std::invalid_argument("solve_scales: anchor type not incident");
        out.anchor = *anchor;
    } else {
        out.anchor = ip.begin()->first;
        for (const auto& [node, v] : ip)
            if (v > ip.at(out.anchor)) out.anchor = node;
    }
    const GoldenScalar target = ip.at(out.anchor);
    for (const auto& [node, v] : ip) out.lambda.emplace(node, target / v);
    return out;
}

const DualOrbit* DualSpec::orbit(int node) const {
    for (const auto& o : orbits)
        if (o.node == node) return &o;
    return nullptr;
}

std::map<int, GoldenScalar> DualSpec::relative_scales(int unscaled) const {
    const GoldenScalar base = scales.lambda.at(unscaled);
    std::map<int, GoldenScalar> out;
    for (const auto& [node, l] : scales.lambda) out.emplace(node, l / base);
    return out;
}

std::map<int, double> DualSpec::radius_ratios(int reference) const {
    const double base = orbit(reference) ? orbit(reference)->radius : throw std::out_of_range("radius_ratios: node");
    std::map<int, double> out;
    for (const auto& o : orbits) out.emplace(o.node, o.radius / base);
    return out;
}

DualSpec dual_polytope(const WeightVector& lambda, std::optional<int> anchor) {
    const IncidentCellSet cells = incident_cells(lambda);
    DualSpec spec;
    spec.seed = lambda;
    spec.scales = solve_scales(cells, anchor);
    const auto& h4 = build_system(SystemName::H4);
    spec.hyperplane = q_dot(h4.weights[static_cast<std::size_t>(spec.scales.anchor - 1)], lambda.ambient);
    for (const auto& t : cells.types) {
        const GoldenScalar& l = spec.scales.lambda.at(t.node);
        DualOrbit o;
        o.node = t.node;
        o.scale = l;
        o.size = weight_orbit(t.node).size();
        o.radius_sq = l * l * q_norm(h4.weights[static_cast<std::size_t>(t.node - 1)]);
        o.radius = std::sqrt(o.radius_sq.to_double());
        spec.vertex_count += o.size;
        spec.orbits.push_back(std::move(o));
        for (const auto& c : t.centers) {
            Quaternion s = l * c;
            if (q_dot(s, lambda.ambient) != spec.hyperplane)
                throw std::logic_error("dual_polytope: scaled center off the hyperplane");
            spec.cell.push_back(std::move(s));
        }
    }
    for (std::size_t i = 0; i < spec.cell.size(); ++i)
        for (std::size_t k = i + 1; k < spec.cell.size(); ++k)
            if (!q_dot(spec.cell[i] - spec.cell[k], lambda.ambient).is_zero())
                throw std::logic_error("dual_polytope: hyperplane condition fails");
    spec.cell_count = h4_orbit(lambda.coeffs).size();
    return spec;
}

std::vector<Quaternion> dual_vertices(const DualSpec& spec) {
    std::vector<Quaternion> out;
    for (const auto& o : spec.orbits)
        for (const auto& c : weight_orbit(o.node)) out.push_back(o.scale * c);
    std::sort(out.begin(), out.end(), QuaternionLess{});
    if (std::adjacent_find(out.begin(), out.end()) != out.end())
        throw std::logic_error("dual_vertices: scaled orbits overlap");
    return out;
}

DualCell dual_cell_geometry(const DualSpec& spec) {
    DualCell cell{make_frame(spec.seed.ambient), spec.hyperplane, {}};
    for (const auto& c : spec.cell) {
        const auto k = cell.frame.coords(c);
        if (k[0] != spec.hyperplane) throw std::logic_error("dual_cell_geometry: unequal p0 components");
        cell.points.push_back({k[1], k[2], k[3]});
    }
    return cell;
}

std::vector<GoldenScalar> pairwise_sq_distances(const std::vector<Point3>& points) {
    std::vector<GoldenScalar> out;
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t k = i + 1; k < points.size(); ++k) {
            GoldenScalar d2(0);
            for (std::size_t c = 0; c < 3; ++c) {
                const GoldenScalar d = points[i][c] - points[k][c];
                d2 += d * d;
            }
            out.push_back(std::move(d2));
        }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<double> normalized_distances(const std::vector<std::array<double, 3>>& points) {
    std::vector<double> out;
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t k = i + 1; k < points.size(); ++k)
            out.push_back(std::hypot(points[i][0] - points[k][0], points[i][1] - points[k][1],
                                     points[i][2] - points[k][2]));
    std::sort(out.begin(), out.end());
    if (!out.empty() && out.back() > 0)
        for (auto& d : out) d /= out.back();
    return out;
}

std::vector<double> normalized_distances(const std::vector<Point3>& points) {
    std::vector<double> out;
    for (const auto& d2 : pairwise_sq_distances(points)) out.push_back(std::sqrt(d2.to_double()));
    if (!out.empty() && out.back() > 0) {
        const double m = out.back();
        for (auto& d : out) d /= m;
    }
    return out;
}

bool congruent_up_to_scale(const std::vector<std::array<double, 3>>& a, const std::vector<std::array<double, 3>>& b,
                           double rel_tol) {
    if (a.size() != b.size()) return false;
    const auto da = normalized_distances(a);
    const auto db = normalized_distances(b);
    for (std::size_t i = 0; i < da.size(); ++i)
        if (std::abs(da[i] - db[i]) > rel_tol) return false;
    return true;
}

bool equal_up_to_scale(std::vector<Quaternion> a, std::vector<Quaternion> b) {
    if (a.size() != b.size() || a.empty()) return a.size() == b.size();
    std::sort(a.begin(), a.end(), QuaternionLess{});
    std::sort(b.begin(), b.end(), QuaternionLess{});
    if (b.front().is_zero()) return false;
    const GoldenScalar s = q_dot(a.front(), b.front()) / q_norm(b.front());
    if (s.sign() <= 0) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != s * b[i]) return false;
    return true;
}

bool cell_invariant_under_stabilizer(const DualSpec& spec) {
    const FiniteGroup stab = parabolic_subgroup(zero_nodes(spec.seed));
    const std::unordered_set<Quaternion, QuaternionHash> cell(spec.cell.begin(), spec.cell.end());
    for (const auto& g : stab.elements())
        for (const auto& c : spec.cell)
            if (!cell.count(g.apply(c))) return false;
    return true;
}

nlohmann::json to_json(const DualSpec& spec) {
    nlohmann::json orbits = nlohmann::json::array();
    for (const auto& o : spec.orbits)
        orbits.push_back({{"node", o.node},
                          {"scale", scalar_json(o.scale)},
                          {"size", o.size},
                          {"radius_sq", scalar_json(o.radius_sq)},
                          {"radius", o.radius}});
    nlohmann::json cell = nlohmann::json::array();
    for (const auto& c : spec.cell) cell.push_back(quaternion_json(c));
    return {{"seed", coeffs_json(spec.seed.coeffs)},
            {"anchor", spec.scales.anchor},
            {"hyperplane", scalar_json(spec.hyperplane)},
            {"orbits", std::move(orbits)},
            {"cell", std::move(cell)},
            {"vertex_count", spec.vertex_count},
            {"cell_count", spec.cell_count}};
}

}  // namespace h4
