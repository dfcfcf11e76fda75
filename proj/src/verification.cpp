#include "h4/verification.hpp"

#include "h4/branching.hpp"
#include "h4/dual.hpp"
#include "h4/parallel.hpp"
#include "h4/quaternion_groups.hpp"
#include "h4/reference_data.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <map>
#include <ostream>
#include <random>
#include <set>
#include <sstream>

namespace h4::verify {

namespace ref = h4::reference;

namespace {

std::string num(double x, int digits = 6) {
    std::ostringstream os;
    os << std::setprecision(digits) << x;
    return os.str();
}

Check exact(std::string name, const std::string& expected, const std::string& computed) {
    return {std::move(name), expected, computed, expected == computed, false};
}

Check count(std::string name, std::size_t expected, std::size_t computed) {
    return {std::move(name), std::to_string(expected), std::to_string(computed), expected == computed, false};
}

// Published data that need not hold: a mismatch is reported, never failed.
Check printed(std::string name, const std::string& expected, const std::string& computed) {
    return {std::move(name), expected, computed, true, expected != computed};
}

std::vector<GoldenScalar> to_scalars(const std::vector<long>& v) { return {v.begin(), v.end()}; }

std::vector<GoldenScalar> to_scalars(const std::vector<std::string>& v) {
    std::vector<GoldenScalar> out;
    for (const auto& s : v) out.push_back(parse_scalar(s));
    return out;
}

std::string literal(const ExactMatrix& m) {
    std::string s = "[";
    for (std::size_t r = 0; r < m.rows(); ++r) {
        s += r ? ", [" : "[";
        for (std::size_t c = 0; c < m.cols(); ++c) s += (c ? ", " : "") + m(r, c).to_literal();
        s += "]";
    }
    return s + "]";
}

ExactMatrix from_printed(const ref::PrintedMatrix& p) {
    const GoldenScalar k = parse_scalar(p.prefactor);
    ExactMatrix m(p.entries.size(), p.entries.front().size());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = k * parse_scalar(p.entries[r][c]);
    return m;
}

const ref::PrintedMatrix& printed_matrix(const std::string& name) {
    for (const auto& m : ref::printed_matrices())
        if (m.name == name) return m;
    throw std::logic_error("no printed matrix " + name);
}

std::string quaternion_literal(const Quaternion& q) {
    return "(" + q[0].to_literal() + ", " + q[1].to_literal() + ", " + q[2].to_literal() + ", " + q[3].to_literal() +
           ")";
}

std::vector<int> zero_nodes(const std::vector<long>& seed) {
    std::vector<int> out;
    for (std::size_t i = 0; i < seed.size(); ++i)
        if (seed[i] == 0) out.push_back(static_cast<int>(i));
    return out;
}

const DualSpec& dual_of(const std::vector<long>& seed) {
    static std::map<std::vector<long>, DualSpec> cache;
    auto it = cache.find(seed);
    if (it == cache.end()) it = cache.emplace(seed, dual_polytope(make_weight(SystemName::H4, to_scalars(seed)))).first;
    return it->second;
}

std::string join(const std::multiset<std::string>& s) {
    std::string out;
    for (const auto& x : s) out += (out.empty() ? "" : "; ") + x;
    return out.empty() ? "(none)" : out;
}

// ---------------------------------------------------------------------------

void groups(std::vector<Check>& out) {
    std::map<std::string, std::size_t> computed{
        {"T", build_set(QuaternionSetName::T).size()},
        {"O", build_set(QuaternionSetName::O).size()},
        {"I", build_set(QuaternionSetName::I).size()},
        {"W(H4)", weyl_group(SystemName::H4).order()},
        {"W(H3)", weyl_group(SystemName::H3).order()},
        {"W(A4)", weyl_group(SystemName::A4).order()},
        {"Aut(A4)", aut_a4().order()},
    };
    for (const auto& g : ref::group_orders()) out.push_back(count("|" + g.name + "|", g.order, computed.at(g.name)));
}

void class_table(std::vector<Check>& out) {
    const auto classes = conjugacy_classes(build_set(QuaternionSetName::I));
    std::multiset<std::string> expected, computed;
    for (const auto& r : ref::class_table())
        expected.insert("size " + std::to_string(r.size) + " order " + std::to_string(r.element_order));
    for (const auto& c : classes)
        computed.insert("size " + std::to_string(c.members.size()) + " order " + std::to_string(c.element_order));
    out.push_back(count("class count", ref::class_table().size(), classes.size()));
    out.push_back(exact("(size, order) multiset", join(expected), join(computed)));
    for (const auto& c : classes) {
        if (c.members.size() != 30) continue;
        const bool imaginary =
            std::all_of(c.members.begin(), c.members.end(), [](const Quaternion& q) { return q[0].is_zero(); });
        out.push_back(exact("30-element class purely imaginary", "true", imaginary ? "true" : "false"));
    }
}

void cartan(std::vector<Check>& out) {
    const std::vector<std::pair<SystemName, std::string>> systems{
        {SystemName::H4, "H4"}, {SystemName::H3, "H3"}, {SystemName::A4, "A4"}};
    for (const auto& [name, label] : systems) {
        const CoxeterSystem& sys = build_system(name);
        const std::size_t n = sys.rank();
        ExactMatrix gram(n, n), wgram(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                gram(i, j) = q_dot(sys.roots[i], sys.roots[j]);
                wgram(i, j) = q_dot(sys.weights[i], sys.weights[j]);
            }
        out.push_back(exact("C(" + label + ") = (alpha_i, alpha_j)",
                            literal(from_printed(printed_matrix("C(" + label + ")"))), literal(gram)));
        const ExactMatrix inv = inverse(gram);
        out.push_back(exact("C(" + label + ") C^-1 = 1", literal(ExactMatrix::identity(n)), literal(gram * inv)));
        out.push_back(exact("C^-1(" + label + ") = (omega_i, omega_j)", literal(inv), literal(wgram)));
        out.push_back(printed("printed C^-1(" + label + ")", literal(from_printed(printed_matrix("Cinv(" + label + ")"))),
                              literal(inv)));
    }
    for (const auto& w : ref::printed_weights()) {
        const GoldenScalar k = parse_scalar(w.factor);
        const Quaternion q(k * parse_scalar(w.components[0]), k * parse_scalar(w.components[1]),
                           k * parse_scalar(w.components[2]), k * parse_scalar(w.components[3]));
        const std::string sys = w.system == SystemName::H4 ? "omega" : "v";
        const auto& weights = build_system(w.system).weights;
        out.push_back(printed("printed " + sys + std::to_string(w.index), quaternion_literal(q),
                              quaternion_literal(weights[static_cast<std::size_t>(w.index - 1)])));
    }
    const ExactMatrix d = from_printed(printed_matrix("D"));
    const auto& h4 = build_system(SystemName::H4).weights;
    const auto& a4 = build_system(SystemName::A4).weights;
    for (std::size_t i = 0; i < 4; ++i) {
        Quaternion sum;
        for (std::size_t j = 0; j < 4; ++j) sum += d(i, j) * a4[j];
        out.push_back(printed("omega" + std::to_string(i + 1) + " = sum_j D_ij v_j", quaternion_literal(sum),
                              quaternion_literal(h4[i])));
    }
}

void orbit_sizes(std::vector<Check>& out) {
    for (const auto& d : ref::published_duals())
        out.push_back(count(d.name + " vertices", d.vertices, h4_orbit(to_scalars(d.seed)).size()));
}

void censuses(std::vector<Check>& out) {
    for (const auto& d : ref::published_duals()) {
        const CellCensus census = cell_census(make_weight(SystemName::H4, to_scalars(d.seed)));
        std::size_t cell_types = 0, total = 0;
        for (const auto& t : census.types) cell_types += t.is_cell ? 1 : 0;
        out.push_back(count(d.name + " cell types", d.cells.size(), cell_types));
        for (const auto& c : d.cells) {
            total += c.count;
            const CellType* t = census.type(c.node);
            const std::string tag = d.name + " " + c.label + " (node " + std::to_string(c.node) + ")";
            if (!t || !t->is_cell) {
                out.push_back({tag, "cell type", "absent", false, false});
                continue;
            }
            out.push_back(exact(tag + " label", c.label, t->label));
            out.push_back(count(tag + " count", c.count, t->cell_count));
            if (c.per_vertex) out.push_back(count(tag + " per vertex", *c.per_vertex, t->cells_per_vertex));
        }
        out.push_back(count(d.name + " total cells", total, census.total_cells()));
    }
}

std::multiset<std::string> published_terms(const ref::PublishedBranching& b) {
    std::multiset<std::string> out;
    for (const auto& t : b.terms) {
        const std::string w = format_coeffs(to_scalars(t.weight));
        if (t.height.empty()) {
            out.insert(w);
        } else {
            const GoldenScalar h = parse_scalar(t.height);
            out.insert(w + " @ " + h.to_literal());
            if (t.plus_minus) out.insert(w + " @ " + (-h).to_literal());
        }
    }
    return out;
}

std::multiset<std::string> computed_terms(const BranchTable& table) {
    std::multiset<std::string> out;
    for (const auto& t : table.terms)
        for (std::size_t k = 0; k < t.multiplicity; ++k)
            out.insert(format_coeffs(t.weight) + (t.height ? " @ " + t.height->to_literal() : ""));
    return out;
}

// Multiset difference rendered as "-missing +extra".
std::string difference(const std::multiset<std::string>& expected, const std::multiset<std::string>& computed) {
    std::multiset<std::string> missing, extra;
    std::set_difference(expected.begin(), expected.end(), computed.begin(), computed.end(),
                        std::inserter(missing, missing.end()));
    std::set_difference(computed.begin(), computed.end(), expected.begin(), expected.end(),
                        std::inserter(extra, extra.end()));
    if (missing.empty() && extra.empty()) return "identical";
    return "missing {" + join(missing) + "} extra {" + join(extra) + "}";
}

void branchings(std::vector<Check>& out) {
    for (const auto& b : ref::published_branchings()) {
        const WeightVector seed = make_weight(SystemName::H4, to_scalars(b.seed));
        const BranchTable table = b.subgroup == SystemName::H3   ? branch_h3(seed)
                                  : b.subgroup == SystemName::A4 ? branch_a4(seed)
                                                                 : branch_h4_to_a3(seed);
        const auto expected = published_terms(b);
        const auto computed = computed_terms(table);
        out.push_back({b.name + " terms", std::to_string(expected.size()) + " terms",
                       difference(expected, computed), expected == computed, false});
        out.push_back(count(b.name + " conservation", h4_orbit(seed.coeffs).size(), table.vertex_total()));
    }
}

void scale_factors(std::vector<Check>& out) {
    for (const auto& d : ref::published_duals()) {
        const DualSpec& spec = dual_of(d.seed);
        const auto rel = spec.relative_scales(d.unscaled);
        if (d.scales.empty()) {
            out.push_back(count(d.name + " scaled types", 0, rel.size() - 1));
            continue;
        }
        out.push_back(count(d.name + " scaled types", d.scales.size(), rel.size() - 1));
        for (const auto& s : d.scales) {
            const std::string tag = d.name + " " + s.symbol + " (node " + std::to_string(s.node) + ")";
            const auto it = rel.find(s.node);
            const std::string computed = it == rel.end() ? "not incident" : it->second.to_literal();
            out.push_back(exact(tag, parse_scalar(s.literal).to_literal(), computed));
        }
        for (const auto& s : d.alternates) {
            const std::string tag = d.name + " " + s.symbol + " (node " + std::to_string(s.node) + ") alternate";
            out.push_back(printed(tag, parse_scalar(s.literal).to_literal(), rel.at(s.node).to_literal()));
        }
    }
}

void radii(std::vector<Check>& out) {
    for (const auto& d : ref::published_duals()) {
        if (!d.radii) continue;
        const DualSpec& spec = dual_of(d.seed);
        const auto ratios = spec.radius_ratios(d.unscaled);
        const auto& r = *d.radii;
        const auto u = std::find(r.nodes.begin(), r.nodes.end(), d.unscaled);
        if (u == r.nodes.end()) throw std::logic_error(d.name + ": unscaled radius not listed");
        const double base = r.values[static_cast<std::size_t>(u - r.nodes.begin())];
        for (std::size_t k = 0; k < r.nodes.size(); ++k) {
            const double expected = r.values[k] / base;
            const double computed = ratios.at(r.nodes[k]);
            const std::string tag =
                d.name + " R" + std::to_string(r.nodes[k]) + "/R" + std::to_string(d.unscaled);
            out.push_back({tag, num(expected), num(computed), std::abs(computed / expected - 1) <= 5e-3, false});
        }
    }
}

void cell_shapes(std::vector<Check>& out) {
    for (const auto& d : ref::published_duals()) {
        if (d.cell_points.empty()) continue;
        const DualSpec& spec = dual_of(d.seed);
        const auto rel = spec.relative_scales(d.unscaled);
        std::map<std::string, GoldenScalar> symbol{{"", GoldenScalar(1)}};
        for (const auto& s : d.scales) symbol.emplace(s.symbol, rel.at(s.node));
        std::vector<std::array<double, 3>> published;
        for (const auto& p : d.cell_points) {
            const GoldenScalar k = symbol.at(p.symbol) * parse_scalar(p.prefactor);
            published.push_back({(k * parse_scalar(p.coords[0])).to_double(), (k * parse_scalar(p.coords[1])).to_double(),
                                  (k * parse_scalar(p.coords[2])).to_double()});
        }
        const DualCell cell = dual_cell_geometry(spec);
        std::vector<std::array<double, 3>> computed;
        for (const auto& p : cell.points) computed.push_back({p[0].to_double(), p[1].to_double(), p[2].to_double()});
        if (published.size() != computed.size()) {
            out.push_back(count(d.name + " cell points", published.size(), computed.size()));
            continue;
        }
        const auto a = normalized_distances(published);
        const auto b = normalized_distances(computed);
        double worst = 0;
        for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
        out.push_back({d.name + " cell congruence", "max deviation <= 1e-9", "max deviation " + num(worst, 3),
                       congruent_up_to_scale(published, computed, 1e-9), false});
    }
}

void involution(std::vector<Check>& out) {
    const auto v600 = dual_vertices(dual_of({0, 0, 0, 1}));
    const auto v120 = dual_vertices(dual_of({1, 0, 0, 0}));
    const bool a = equal_up_to_scale(v600, h4_orbit(to_scalars(std::vector<long>{1, 0, 0, 0})).vertices);
    const bool b = equal_up_to_scale(v120, h4_orbit(to_scalars(std::vector<long>{0, 0, 0, 1})).vertices);
    out.push_back(exact("dual of O(0,0,0,1) ~ O(1,0,0,0)", "equal up to scale", a ? "equal up to scale" : "different"));
    out.push_back(exact("dual of O(1,0,0,0) ~ O(0,0,0,1)", "equal up to scale", b ? "equal up to scale" : "different"));
}

GoldenScalar random_scalar(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> n(-12, 12), d(1, 7);
    auto q = [&] { return Rational(n(rng), d(rng)); };
    return GoldenScalar(q(), q(), q(), q());
}

Quaternion random_quaternion(std::mt19937_64& rng) {
    return {random_scalar(rng), random_scalar(rng), random_scalar(rng), random_scalar(rng)};
}

std::string deterministic_outputs() {
    nlohmann::json j = nlohmann::json::array();
    const auto w = [](std::vector<long> c) { return make_weight(SystemName::H4, to_scalars(c)); };
    j.push_back(to_json(h4_orbit(to_scalars(std::vector<long>{1, 1, 1, 1})), true));
    j.push_back(to_json(cell_census(w({1, 1, 0, 1}))));
    j.push_back(to_json(branch_h3(w({1, 1, 1, 1}))));
    j.push_back(to_json(branch_a4(w({1, 0, 0, 0}))));
    j.push_back(to_json(branch_h4_to_a3(w({0, 0, 0, 1}))));
    j.push_back(to_json(dual_polytope(w({1, 1, 1, 1}))));
    for (const auto& s : project_shells(w({0, 1, 1, 1}), SystemName::H3)) j.push_back(to_json(s));
    return j.dump();
}

void properties(std::vector<Check>& out) {
    std::mt19937_64 rng(20240607);
    std::size_t field_failures = 0;
    for (int i = 0; i < 1000; ++i) {
        const GoldenScalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
        bool ok = a + b == b + a && (a + b) + c == a + (b + c) && a * b == b * a && (a * b) * c == a * (b * c) &&
                  a * (b + c) == a * b + a * c && a + GoldenScalar(0) == a && a * GoldenScalar(1) == a &&
                  (a - a).is_zero();
        if (!a.is_zero()) ok = ok && a * (GoldenScalar(1) / a) == GoldenScalar(1);
        field_failures += ok ? 0 : 1;
    }
    out.push_back(count("field axioms, failing random triples of 1000", 0, field_failures));

    const auto& w = weyl_group(SystemName::H4).elements();
    std::uniform_int_distribution<std::size_t> pick(0, w.size() - 1);
    std::size_t ortho_failures = 0;
    for (int i = 0; i < 1000; ++i) {
        const GroupElement& g = w[pick(rng)];
        const Quaternion x = random_quaternion(rng), y = random_quaternion(rng);
        if (q_dot(g.apply(x), g.apply(y)) != q_dot(x, y)) ++ortho_failures;
    }
    out.push_back(count("inner product preserved, failing random pairs of 1000", 0, ortho_failures));

    for (const auto& d : ref::published_duals()) {
        const OrbitPolytope o = h4_orbit(to_scalars(d.seed));
        const std::size_t stab = parabolic_subgroup(zero_nodes(d.seed)).order();
        out.push_back(count(d.name + " |orbit| * |Stab|", o.group_order, o.size() * stab));
    }

    for (const auto& d : ref::published_duals()) {
        const DualSpec& spec = dual_of(d.seed);
        std::size_t bad = 0;
        for (const auto& x : spec.cell)
            for (const auto& y : spec.cell)
                if (!q_dot(x - y, spec.seed.ambient).is_zero()) ++bad;
        out.push_back(count(d.name + " dual cell off hyperplane", 0, bad));
    }

    std::string one, eight;
    {
        ScopedWorkers s(1);
        one = deterministic_outputs();
    }
    {
        ScopedWorkers s(8);
        eight = deterministic_outputs();
    }
    out.push_back(exact("outputs at 1 and 8 workers", "byte-identical",
                        one == eight ? "byte-identical" : "differ (" + std::to_string(one.size()) + " vs " +
                                                              std::to_string(eight.size()) + " bytes)"));
}

}  // namespace

bool CriterionResult::passed() const { return failures() == 0 && !checks.empty(); }

std::size_t CriterionResult::failures() const {
    return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.passed; }));
}

std::size_t CriterionResult::flags() const {
    return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const Check& c) { return c.flagged; }));
}

std::string criterion_title(int id) {
    static const char* titles[kCriterionCount] = {
        "group orders",
        "conjugacy classes of I",
        "Cartan matrices, inverses and weights",
        "orbit sizes",
        "cell censuses",
        "branching tables",
        "dual scale factors",
        "dual radii ratios",
        "dual cell shapes",
        "duality involution",
        "property suites",
    };
    if (id < 1 || id > kCriterionCount) throw std::out_of_range("criterion " + std::to_string(id));
    return titles[id - 1];
}

CriterionResult run_criterion(int id) {
    using Fn = void (*)(std::vector<Check>&);
    static const Fn fns[kCriterionCount] = {groups,     class_table, cartan,      orbit_sizes, censuses,  branchings,
                                            scale_factors, radii,    cell_shapes, involution,  properties};
    CriterionResult r{id, criterion_title(id), {}, 0};
    const auto t0 = std::chrono::steady_clock::now();
    try {
        fns[id - 1](r.checks);
    } catch (const std::exception& e) {
        r.checks.push_back({"exception", "none", e.what(), false, false});
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

std::vector<CriterionResult> run_all() {
    std::vector<CriterionResult> out;
    for (int id = 1; id <= kCriterionCount; ++id) out.push_back(run_criterion(id));
    return out;
}

nlohmann::json to_json(const CriterionResult& result) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : result.checks)
        checks.push_back({{"name", c.name},
                          {"expected", c.expected},
                          {"computed", c.computed},
                          {"passed", c.passed},
                          {"flagged", c.flagged}});
    return {{"criterion", result.id},
            {"title", result.title},
            {"passed", result.passed()},
            {"failures", result.failures()},
            {"flagged", result.flags()},
            {"checks", std::move(checks)}};
}

nlohmann::json report_json(const std::vector<CriterionResult>& results) {
    nlohmann::json crit = nlohmann::json::array();
    std::size_t passed = 0;
    for (const auto& r : results) {
        crit.push_back(to_json(r));
        passed += r.passed() ? 1 : 0;
    }
    return {{"criteria", std::move(crit)}, {"passed", passed}, {"total", results.size()}};
}

void print_result(std::ostream& os, const CriterionResult& result, bool details) {
    os << (result.passed() ? "PASS" : "FAIL") << "  criterion " << result.id << ": " << result.title << " ("
       << result.checks.size() << " checks, " << result.failures() << " failed, " << result.flags() << " flagged, "
       << std::fixed << std::setprecision(2) << result.seconds << " s)\n";
    os.unsetf(std::ios::floatfield);
    for (const auto& c : result.checks) {
        if (!details && c.passed && !c.flagged) continue;
        const char* tag = !c.passed ? "fail" : c.flagged ? "diff" : "ok  ";
        os << "    " << tag << "  " << c.name << ": expected " << c.expected << ", computed " << c.computed << "\n";
    }
}

}  // namespace h4::verify
