#include "h4/geometry_io.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <map>
#include <set>

namespace h4 {

bool ProjectionFrame::is_orthogonal() const {
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j)
            if (!q_dot(p[i], p[j]).is_zero()) return false;
    return true;
}

std::array<GoldenScalar, 4> ProjectionFrame::coords(const Quaternion& x) const {
    return {q_dot(x, p[0]), q_dot(x, p[1]), q_dot(x, p[2]), q_dot(x, p[3])};
}

Point3 ProjectionFrame::project(const Quaternion& x) const { return {q_dot(x, p[1]), q_dot(x, p[2]), q_dot(x, p[3])}; }

ProjectionFrame make_frame(const Quaternion& lambda) {
    ProjectionFrame f{{lambda, Quaternion::e1() * lambda, Quaternion::e2() * lambda, Quaternion::e3() * lambda},
                      q_norm(lambda)};
    if (!f.is_orthogonal()) throw std::logic_error("make_frame: frame not orthogonal");
    return f;
}

// ---------------------------------------------------------------- shells

namespace {

struct ShellFrame {
    std::array<Quaternion, 3> axes;  // orthonormal, orthogonal to the complement
};

ShellFrame shell_frame(SystemName subgroup) {
    const auto& sys = build_system(subgroup);
    ShellFrame f;
    if (subgroup == SystemName::H3) {
        f.axes = {Quaternion::e1(), Quaternion::e2(), Quaternion::e3()};
    } else if (subgroup == SystemName::A3inA4) {
        const GoldenScalar h = GoldenScalar::sqrt2() / GoldenScalar(2);
        f.axes = {Quaternion::one(), Quaternion::e1(), Quaternion(0, 0, h, h)};
    } else {
        throw std::invalid_argument("project_shells: subgroup must be H3 or A3");
    }
    for (const auto& a : f.axes)
        if (!q_dot(a, *sys.complement).is_zero()) throw std::logic_error("shell_frame: axis not orthogonal");
    return f;
}

std::string shell_label(SystemName subgroup, const std::vector<GoldenScalar>& w) {
    if (std::all_of(w.begin(), w.end(), [](const GoldenScalar& x) { return x.is_zero(); })) return "point";
    return polyhedron_label(subgroup, {!w[0].is_zero(), !w[1].is_zero(), !w[2].is_zero()});
}

std::string term_key(const std::vector<GoldenScalar>& w, const GoldenScalar& h) {
    return format_coeffs(w) + "|" + h.to_literal();
}

}  // namespace

std::vector<Shell> project_shells(const WeightVector& seed, SystemName subgroup) {
    const ShellFrame frame = shell_frame(subgroup);
    const BranchTable table = subgroup == SystemName::H3 ? branch_h3(seed) : branch_h4_to_a3(seed);
    const auto& sys = build_system(subgroup);
    const GoldenScalar scale =
        subgroup == SystemName::H3 ? GoldenScalar(1) : q_norm(*sys.complement) * a3_height_scale();

    std::map<std::string, Shell> shells;
    for (const auto& x : h4_orbit(seed.coeffs).vertices) {
        const auto b = dominant_rep(sys, x).coeffs;
        std::vector<GoldenScalar> w(b.begin(), b.begin() + 3);
        const GoldenScalar h = b[3] * scale;
        auto [it, inserted] = shells.try_emplace(term_key(w, h));
        if (inserted) {
            it->second.weight = w;
            it->second.height = h;
            it->second.label = shell_label(subgroup, w);
        }
        it->second.points.push_back({q_dot(x, frame.axes[0]), q_dot(x, frame.axes[1]), q_dot(x, frame.axes[2])});
    }
    if (shells.size() != table.terms.size()) throw std::logic_error("project_shells: shell count differs from table");
    std::vector<Shell> out;
    for (const auto& term : table.terms) {
        auto it = shells.find(term_key(term.weight, *term.height));
        if (it == shells.end() || it->second.points.size() != term.orbit_size * term.multiplicity)
            throw std::logic_error("project_shells: shell disagrees with branch term " + format_coeffs(term.weight));
        std::sort(it->second.points.begin(), it->second.points.end());
        out.push_back(std::move(it->second));
    }
    return out;
}

// ---------------------------------------------------------------- hull

namespace {

using D3 = std::array<double, 3>;

D3 sub(const D3& a, const D3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
D3 cross(const D3& a, const D3& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}
double dot(const D3& a, const D3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

Point3 sub(const Point3& a, const Point3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
Point3 cross(const Point3& a, const Point3& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}
GoldenScalar dot(const Point3& a, const Point3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

constexpr double kExactThreshold = 1e-9;

class HullBuilder {
public:
    explicit HullBuilder(const std::vector<Point3>& pts) : ex_(pts) {
        double m = 0;
        for (const auto& p : pts)
            for (const auto& x : p) m = std::max(m, std::abs(x.to_double()));
        for (const auto& p : pts) fl_.push_back({p[0].to_double() / m, p[1].to_double() / m, p[2].to_double() / m});
    }

    // sign of ((b - a) x (c - a)) . (d - a)
    int orient(int a, int b, int c, int d) const {
        const double v = dot(cross(sub(fl_[b], fl_[a]), sub(fl_[c], fl_[a])), sub(fl_[d], fl_[a]));
        if (std::abs(v) >= kExactThreshold) return v > 0 ? 1 : -1;
        return dot(cross(sub(ex_[b], ex_[a]), sub(ex_[c], ex_[a])), sub(ex_[d], ex_[a])).sign();
    }

    bool collinear(int a, int b, int c) const {
        const D3 v = cross(sub(fl_[b], fl_[a]), sub(fl_[c], fl_[a]));
        if (std::sqrt(dot(v, v)) >= kExactThreshold) return false;
        const Point3 e = cross(sub(ex_[b], ex_[a]), sub(ex_[c], ex_[a]));
        return e[0].is_zero() && e[1].is_zero() && e[2].is_zero();
    }

    // sign of ((q - p) x (r - p)) . n, the in-plane turn seen from the tip of n
    int turn(int p, int q, int r, const Point3& n, const D3& nf) const {
        const double v = dot(cross(sub(fl_[q], fl_[p]), sub(fl_[r], fl_[p])), nf);
        if (std::abs(v) >= kExactThreshold) return v > 0 ? 1 : -1;
        return dot(cross(sub(ex_[q], ex_[p]), sub(ex_[r], ex_[p])), n).sign();
    }

    GoldenScalar dist2(int a, int b) const {
        const Point3 d = sub(ex_[b], ex_[a]);
        return dot(d, d);
    }

    // Polygon of the supporting plane through a, b, c, counterclockwise from outside.
    std::vector<int> face(int a, int b, int c) const {
        const Point3 n = cross(sub(ex_[b], ex_[a]), sub(ex_[c], ex_[a]));
        const D3 nf0 = cross(sub(fl_[b], fl_[a]), sub(fl_[c], fl_[a]));
        const double len = std::sqrt(dot(nf0, nf0));
        const D3 nf = {nf0[0] / len, nf0[1] / len, nf0[2] / len};
        std::vector<int> plane;
        for (int p = 0; p < size(); ++p)
            if (p == a || p == b || p == c || orient(a, b, c, p) == 0) plane.push_back(p);
        const int start = *std::min_element(plane.begin(), plane.end(),
                                            [&](int x, int y) { return ex_[x] < ex_[y]; });
        std::vector<int> poly;
        int cur = start;
        do {
            poly.push_back(cur);
            if (poly.size() > plane.size()) throw std::logic_error("hull3: planar wrap does not close");
            int next = -1;
            for (int r : plane) {
                if (r == cur) continue;
                if (next < 0) {
                    next = r;
                    continue;
                }
                const int t = turn(cur, next, r, n, nf);
                if (t < 0 || (t == 0 && dist2(cur, r) > dist2(cur, next))) next = r;
            }
            cur = next;
        } while (cur != start);
        return poly;
    }

    int size() const { return static_cast<int>(ex_.size()); }

private:
    const std::vector<Point3>& ex_;
    std::vector<D3> fl_;
};

}  // namespace

std::size_t Hull::edge_count() const {
    std::size_t n = 0;
    for (const auto& p : polygons) n += p.size();
    return n / 2;
}

Hull hull3(const std::vector<Point3>& points) {
    if (points.size() > 128) throw GeometryError("hull3: at most 128 points");
    {
        std::vector<Quaternion> q;
        for (const auto& p : points) q.emplace_back(p[0], p[1], p[2], 0);
        if (affine_rank(q) < 3) throw GeometryError("hull3: points do not span 3D");
        std::sort(q.begin(), q.end(), QuaternionLess{});
        if (std::adjacent_find(q.begin(), q.end()) != q.end()) throw GeometryError("hull3: duplicate points");
    }
    Hull hull;
    hull.points = points;
    const HullBuilder hb(hull.points);
    const int n = hb.size();

    // A first supporting plane through the lexicographically smallest point.
    const int a0 = static_cast<int>(std::min_element(points.begin(), points.end()) - points.begin());
    std::vector<int> first;
    for (int j = 0; j < n && first.empty(); ++j)
        for (int k = 0; k < n && first.empty(); ++k) {
            if (j == a0 || k == a0 || j == k || hb.collinear(a0, j, k)) continue;
            bool support = true;
            for (int p = 0; p < n && support; ++p) support = hb.orient(a0, j, k, p) <= 0;
            if (support) first = hb.face(a0, j, k);
        }
    if (first.empty()) throw std::logic_error("hull3: no supporting plane found");

    std::set<std::vector<int>> seen;
    std::set<std::pair<int, int>> directed;
    std::vector<std::pair<int, int>> open;
    auto add_face = [&](std::vector<int> poly) {
        std::vector<int> key = poly;
        std::sort(key.begin(), key.end());
        if (!seen.insert(key).second) return;
        for (std::size_t i = 0; i < poly.size(); ++i) {
            const int u = poly[i], v = poly[(i + 1) % poly.size()];
            if (!directed.insert({u, v}).second) throw std::logic_error("hull3: edge used twice in one direction");
            open.emplace_back(u, v);
        }
        hull.polygons.push_back(std::move(poly));
    };
    add_face(first);
    while (!open.empty()) {
        const auto [u, v] = open.back();
        open.pop_back();
        if (directed.count({v, u})) continue;
        int c = -1;
        for (int p = 0; p < n; ++p) {
            if (p == u || p == v || hb.collinear(v, u, p)) continue;
            if (c < 0 || hb.orient(v, u, c, p) > 0) c = p;
        }
        if (c < 0) throw std::logic_error("hull3: no face across edge");
        add_face(hb.face(v, u, c));
    }

    std::set<int> verts;
    for (const auto& poly : hull.polygons) {
        verts.insert(poly.begin(), poly.end());
        for (std::size_t i = 1; i + 1 < poly.size(); ++i) hull.triangles.push_back({poly[0], poly[i], poly[i + 1]});
        for (int p = 0; p < n; ++p)
            if (hb.orient(poly[0], poly[1], poly[2], p) > 0) throw std::logic_error("hull3: point outside a face");
    }
    hull.vertices.assign(verts.begin(), verts.end());
    const long euler = static_cast<long>(hull.vertices.size()) - static_cast<long>(hull.edge_count()) +
                       static_cast<long>(hull.polygons.size());
    const long euler_tri = static_cast<long>(hull.vertices.size()) - static_cast<long>(hull.triangles.size()) / 2;
    if (euler != 2 || euler_tri != 2) throw std::logic_error("hull3: Euler characteristic is not 2");
    return hull;
}

// ---------------------------------------------------------------- export

MeshFormat parse_mesh_format(std::string_view text) {
    std::string s(text);
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    if (s == "off") return MeshFormat::OFF;
    if (s == "obj") return MeshFormat::OBJ;
    throw std::invalid_argument("unknown mesh format '" + std::string(text) + "'");
}

void export_mesh(const Hull& hull, const std::filesystem::path& path, MeshFormat format) {
    if (hull.triangles.empty()) throw GeometryError("export_mesh: no faces to write to " + path.string());
    std::map<int, std::size_t> index;
    for (int v : hull.vertices) index.emplace(v, index.size());
    std::ofstream os(path);
    if (!os) throw GeometryError("export_mesh: cannot open " + path.string());
    os.precision(17);
    auto vertex = [&](int v) -> const Point3& { return hull.points[static_cast<std::size_t>(v)]; };
    if (format == MeshFormat::OFF) {
        os << "OFF\n" << hull.vertices.size() << ' ' << hull.triangles.size() << ' ' << hull.triangles.size() * 3 / 2
           << '\n';
        for (int v : hull.vertices) {
            const auto& p = vertex(v);
            os << p[0].to_double() << ' ' << p[1].to_double() << ' ' << p[2].to_double() << '\n';
        }
        for (const auto& t : hull.triangles) os << "3 " << index[t[0]] << ' ' << index[t[1]] << ' ' << index[t[2]] << '\n';
    } else {
        for (int v : hull.vertices) {
            const auto& p = vertex(v);
            os << "v " << p[0].to_double() << ' ' << p[1].to_double() << ' ' << p[2].to_double() << '\n';
        }
        for (const auto& t : hull.triangles)
            os << "f " << index[t[0]] + 1 << ' ' << index[t[1]] + 1 << ' ' << index[t[2]] + 1 << '\n';
    }
    os.flush();
    if (!os) throw GeometryError("export_mesh: write failed for " + path.string());
}

void export_table(const nlohmann::json& data, const std::filesystem::path& path) {
    std::ofstream os(path);
    if (!os) throw GeometryError("export_table: cannot open " + path.string());
    os << data.dump(2) << '\n';
    os.flush();
    if (!os) throw GeometryError("export_table: write failed for " + path.string());
}

nlohmann::json scalar_json(const GoldenScalar& x) { return {{"exact", x.to_literal()}, {"value", x.to_double()}}; }

nlohmann::json coeffs_json(const std::vector<GoldenScalar>& xs) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& x : xs) a.push_back(x.to_literal());
    return a;
}

nlohmann::json to_json(const BranchTable& table) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& t : table.terms) {
        nlohmann::json j{{"weight", coeffs_json(t.weight)},
                         {"multiplicity", t.multiplicity},
                         {"orbit_size", t.orbit_size}};
        if (t.height) j["height"] = scalar_json(*t.height);
        if (t.geometric_height) j["geometric_height"] = scalar_json(*t.geometric_height);
        if (t.coset_hits) j["coset_hits"] = t.coset_hits;
        terms.push_back(std::move(j));
    }
    return {{"seed", coeffs_json(table.seed.coeffs)},
            {"subgroup", std::string(to_string(table.subgroup))},
            {"terms", std::move(terms)},
            {"vertex_total", table.vertex_total()}};
}

nlohmann::json to_json(const Shell& shell) {
    nlohmann::json pts = nlohmann::json::array();
    for (const auto& p : shell.points) pts.push_back({p[0].to_literal(), p[1].to_literal(), p[2].to_literal()});
    return {{"weight", coeffs_json(shell.weight)},
            {"height", scalar_json(shell.height)},
            {"label", shell.label},
            {"size", shell.points.size()},
            {"points", std::move(pts)}};
}

nlohmann::json quaternion_json(const Quaternion& q) {
    return {q[0].to_literal(), q[1].to_literal(), q[2].to_literal(), q[3].to_literal()};
}

nlohmann::json to_json(const OrbitPolytope& orbit, bool with_vertices) {
    nlohmann::json j{{"seed", coeffs_json(orbit.seed.coeffs)},
                     {"group", orbit.group_name},
                     {"group_order", orbit.group_order},
                     {"stabilizer_order", orbit.stabilizer_order},
                     {"vertex_count", orbit.size()}};
    if (with_vertices) {
        nlohmann::json v = nlohmann::json::array();
        for (const auto& q : orbit.vertices) v.push_back(quaternion_json(q));
        j["vertices"] = std::move(v);
    }
    return j;
}

nlohmann::json to_json(const CellCensus& census) {
    nlohmann::json types = nlohmann::json::array();
    for (const auto& t : census.types) {
        if (!t.is_cell) continue;
        types.push_back({{"deleted_node", t.deleted_node},
                         {"label", t.label},
                         {"cell_count", t.cell_count},
                         {"cell_vertices", t.cell_vertices},
                         {"cells_per_vertex", t.cells_per_vertex}});
    }
    return {{"seed", coeffs_json(census.seed.coeffs)},
            {"vertex_count", census.vertex_count},
            {"cell_types", std::move(types)},
            {"total_cells", census.total_cells()},
            {"cells_per_vertex", census.cells_at_vertex()}};
}

}  // namespace h4
