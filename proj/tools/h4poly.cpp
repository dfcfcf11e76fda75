// h4poly: command-line front end for the h4core library.

#include "h4/branching.hpp"
#include "h4/dual.hpp"
#include "h4/parallel.hpp"
#include "h4/quaternion_groups.hpp"
#include "h4/reference_data.hpp"
#include "h4/verification.hpp"

#include <CLI11.hpp>

#include <iomanip>
#include <iostream>

using namespace h4;

namespace {

struct Options {
    unsigned jobs = 1;
    std::string group = "h4";
    std::string subgroup = "h3";
    std::string weight;
    std::string json;
    std::string mesh;
    std::string format = "off";
    std::string out;
    std::string table = "cartan";
    std::string quaternion_set = "I";
    std::optional<int> anchor;
    int shell = -1;
    int criterion = 0;
    bool vertices = false;
    bool details = false;
};

void write_json(const nlohmann::json& j, const std::string& path) {
    if (path.empty()) return;
    export_table(j, path);
    std::cout << "wrote " << path << "\n";
}

std::string matrix_text(const ExactMatrix& m) {
    std::ostringstream os;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        os << "  ";
        for (std::size_t c = 0; c < m.cols(); ++c) os << std::setw(16) << m(r, c).to_literal();
        os << "\n";
    }
    return os.str();
}

std::string quaternion_text(const Quaternion& q) {
    return "(" + q[0].to_literal() + ", " + q[1].to_literal() + ", " + q[2].to_literal() + ", " + q[3].to_literal() +
           ")";
}

WeightVector h4_weight(const Options& o) { return parse_weight(SystemName::H4, o.weight); }

int cmd_classes(const Options& o) {
    const QuaternionSet set = build_set(parse_quaternion_set_name(o.quaternion_set));
    const auto classes = conjugacy_classes(set);
    std::cout << set.name << ": " << set.size() << " elements, " << classes.size() << " conjugacy classes\n";
    nlohmann::json j = nlohmann::json::array();
    for (const auto& c : classes) {
        std::cout << "  size " << std::setw(3) << c.members.size() << "  order " << std::setw(3) << c.element_order
                  << "  real part " << c.members.front()[0].to_literal() << "\n";
        j.push_back({{"size", c.members.size()},
                     {"order", c.element_order},
                     {"real_part", c.members.front()[0].to_literal()}});
    }
    write_json({{"set", set.name}, {"order", set.size()}, {"classes", j}}, o.json);
    return 0;
}

int cmd_table(const Options& o) {
    if (o.table == "orders") {
        for (auto n : {QuaternionSetName::T, QuaternionSetName::O, QuaternionSetName::I})
            std::cout << "|" << to_string(n) << "| = " << build_set(n).size() << "\n";
        for (auto s : {SystemName::H4, SystemName::H3, SystemName::A4})
            std::cout << "|W(" << to_string(s) << ")| = " << weyl_group(s).order() << "\n";
        std::cout << "|Aut(A4)| = " << aut_a4().order() << "\n";
        return 0;
    }
    const SystemName name = parse_system_name(o.group);
    const CoxeterSystem& sys = build_system(name);
    std::cout << "Cartan matrix C(" << to_string(name) << "):\n" << matrix_text(sys.cartan);
    std::cout << "inverse C^-1:\n" << matrix_text(sys.cartan_inverse);
    nlohmann::json roots = nlohmann::json::array(), weights = nlohmann::json::array();
    for (std::size_t i = 0; i < sys.rank(); ++i) {
        std::cout << "alpha" << i + 1 << " = " << quaternion_text(sys.roots[i]) << "\n";
        roots.push_back(quaternion_json(sys.roots[i]));
    }
    for (std::size_t i = 0; i < sys.rank(); ++i) {
        std::cout << "omega" << i + 1 << " = " << quaternion_text(sys.weights[i]) << "\n";
        weights.push_back(quaternion_json(sys.weights[i]));
    }
    auto rows = [](const ExactMatrix& m) {
        nlohmann::json a = nlohmann::json::array();
        for (std::size_t r = 0; r < m.rows(); ++r) {
            nlohmann::json row = nlohmann::json::array();
            for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).to_literal());
            a.push_back(row);
        }
        return a;
    };
    write_json({{"group", std::string(to_string(name))},
                {"cartan", rows(sys.cartan)},
                {"cartan_inverse", rows(sys.cartan_inverse)},
                {"roots", roots},
                {"weights", weights}},
               o.json);
    return 0;
}

int cmd_orbit(const Options& o) {
    const SystemName name = parse_system_name(o.group);
    const OrbitPolytope p = orbit(weyl_group(name), parse_weight(name, o.weight));
    std::cout << "W(" << to_string(name) << ") orbit of " << format_coeffs(p.seed.coeffs) << ": " << p.size()
              << " vertices, stabilizer order " << p.stabilizer_order << "\n";
    if (o.vertices)
        for (const auto& v : p.vertices) std::cout << "  " << quaternion_text(v) << "\n";
    write_json(to_json(p, true), o.json);
    return 0;
}

int cmd_cells(const Options& o) {
    const CellCensus c = cell_census(h4_weight(o));
    std::cout << "O" << format_coeffs(c.seed.coeffs) << ": " << c.vertex_count << " vertices, " << c.total_cells()
              << " cells, " << c.cells_at_vertex() << " cells per vertex\n";
    for (const auto& t : c.types) {
        if (!t.is_cell) continue;
        std::cout << "  node " << t.deleted_node << ": " << t.cell_count << " " << t.label << " ("
                  << t.cell_vertices << " vertices each, " << t.cells_per_vertex << " per vertex)\n";
    }
    write_json(to_json(c), o.json);
    return 0;
}

int cmd_branch(const Options& o) {
    const WeightVector seed = h4_weight(o);
    const SystemName sub = parse_system_name(o.subgroup);
    const BranchTable t = sub == SystemName::H3   ? branch_h3(seed)
                          : sub == SystemName::A4 ? branch_a4(seed)
                          : (sub == SystemName::A3 || sub == SystemName::A3inA4)
                              ? branch_h4_to_a3(seed)
                              : throw std::invalid_argument("branch: subgroup must be h3, a4 or a3");
    std::cout << "O" << format_coeffs(seed.coeffs) << " under W(" << to_string(t.subgroup) << "): "
              << t.terms.size() << " sub-orbits, " << t.vertex_total() << " vertices\n";
    for (const auto& term : t.terms) {
        std::cout << "  " << format_coeffs(term.weight);
        if (term.height) std::cout << "  height " << term.height->to_literal();
        std::cout << "  size " << term.orbit_size << "\n";
    }
    write_json(to_json(t), o.json);
    return 0;
}

int cmd_dual(const Options& o) {
    const WeightVector seed = h4_weight(o);
    std::optional<int> anchor = o.anchor;
    if (!anchor) {
        for (const auto& d : reference::published_duals())
            if (std::vector<GoldenScalar>(d.seed.begin(), d.seed.end()) == seed.coeffs) anchor = d.unscaled;
    }
    const DualSpec spec = dual_polytope(seed, anchor);
    std::cout << "dual of O" << format_coeffs(spec.seed.coeffs) << ": " << spec.vertex_count << " vertices, "
              << spec.cell_count << " cells, " << spec.cell.size() << " vertices per cell\n";
    std::cout << "hyperplane (c, Lambda) = " << spec.hyperplane.to_literal() << "\n";
    const DualOrbit* smallest = &spec.orbits.front();
    for (const auto& orb : spec.orbits)
        if (orb.radius < smallest->radius) smallest = &orb;
    const int ref = smallest->node;
    std::cout << "unscaled node " << spec.scales.anchor << "\n";
    for (const auto& orb : spec.orbits) {
        std::cout << "  node " << orb.node << ": scale " << orb.scale.to_literal() << "  orbit " << orb.size
                  << "  R^2 " << orb.radius_sq.to_literal() << "  R" << orb.node << "/R" << ref << " = "
                  << std::setprecision(6) << orb.radius / spec.orbit(ref)->radius << "\n";
    }
    const DualCell cell = dual_cell_geometry(spec);
    std::cout << "dual cell in the frame of Lambda:\n";
    for (const auto& p : cell.points)
        std::cout << "  (" << p[0].to_literal() << ", " << p[1].to_literal() << ", " << p[2].to_literal() << ")\n";
    write_json(to_json(spec), o.json);
    if (!o.mesh.empty()) {
        export_mesh(hull3(cell.points), o.mesh, parse_mesh_format(o.format));
        std::cout << "wrote " << o.mesh << "\n";
    }
    return 0;
}

int cmd_export(const Options& o) {
    const SystemName sub = CLI::detail::to_lower(o.subgroup) == "a3" ? SystemName::A3inA4 : SystemName::H3;
    const auto shells = project_shells(h4_weight(o), sub);
    if (o.shell < 0) {
        for (std::size_t i = 0; i < shells.size(); ++i)
            std::cout << "  shell " << i << ": " << format_coeffs(shells[i].weight) << " height "
                      << shells[i].height.to_literal() << "  " << shells[i].points.size() << " points  "
                      << shells[i].label << "\n";
        return 0;
    }
    if (static_cast<std::size_t>(o.shell) >= shells.size())
        throw std::out_of_range("export: shell " + std::to_string(o.shell) + " of " + std::to_string(shells.size()));
    if (o.out.empty()) throw std::invalid_argument("export: --out is required with --shell");
    const Shell& s = shells[static_cast<std::size_t>(o.shell)];
    const Hull h = hull3(s.points);
    export_mesh(h, o.out, parse_mesh_format(o.format));
    std::cout << "wrote " << o.out << ": " << s.label << ", " << h.vertices.size() << " vertices, "
              << h.polygons.size() << " faces\n";
    write_json(to_json(s), o.json);
    return 0;
}

int cmd_verify(const Options& o) {
    std::vector<verify::CriterionResult> results;
    if (o.criterion)
        results.push_back(verify::run_criterion(o.criterion));
    else
        results = verify::run_all();
    std::size_t passed = 0;
    for (const auto& r : results) {
        verify::print_result(std::cout, r, o.details);
        passed += r.passed() ? 1 : 0;
    }
    std::cout << passed << "/" << results.size() << " criteria passed\n";
    write_json(verify::report_json(results), o.json);
    return passed == results.size() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact H4 polytopes, branchings and duals"};
    app.require_subcommand(1);
    Options o;
    app.add_option("-j,--jobs", o.jobs, "worker threads")->check(CLI::Range(1u, 256u));

    auto* classes = app.add_subcommand("classes", "conjugacy classes of a finite quaternion group");
    classes->add_option("--set", o.quaternion_set, "T, O or I")->check(CLI::IsMember({"T", "O", "I"}));
    classes->add_option("--json", o.json, "write JSON");

    auto* table = app.add_subcommand("table", "Cartan data or group orders");
    table->add_option("kind", o.table, "cartan or orders")->check(CLI::IsMember({"cartan", "orders"}));
    table->add_option("--group", o.group, "h4, h3 or a4")->check(CLI::IsMember({"h4", "h3", "a4"}, CLI::ignore_case));
    table->add_option("--json", o.json, "write JSON");

    auto* orb = app.add_subcommand("orbit", "orbit of a dominant weight");
    orb->add_option("--group", o.group, "h4, h3 or a4")->check(CLI::IsMember({"h4", "h3", "a4"}, CLI::ignore_case));
    orb->add_option("--weight", o.weight, "coefficients, e.g. 0,0,0,1 or 1,0,t,0")->required();
    orb->add_flag("--vertices", o.vertices, "list the vertices");
    orb->add_option("--json", o.json, "write JSON");

    auto* cells = app.add_subcommand("cells", "cell census of an H4 orbit polytope");
    cells->add_option("--weight", o.weight, "H4 coefficients")->required();
    cells->add_option("--json", o.json, "write JSON");

    auto* branch = app.add_subcommand("branch", "branch an H4 orbit under a subgroup");
    branch->add_option("--weight", o.weight, "H4 coefficients")->required();
    branch->add_option("--subgroup", o.subgroup, "h3, a4 or a3")
        ->check(CLI::IsMember({"h3", "a4", "a3"}, CLI::ignore_case));
    branch->add_option("--json", o.json, "write JSON");

    auto* dual = app.add_subcommand("dual", "dual polytope of an H4 orbit polytope");
    dual->add_option("--weight", o.weight, "H4 coefficients")->required();
    dual->add_option("--anchor", o.anchor, "node of the unscaled cell type")->check(CLI::Range(1, 4));
    dual->add_option("--json", o.json, "write JSON");
    dual->add_option("--mesh", o.mesh, "write the dual cell as a mesh");
    dual->add_option("--format", o.format, "off or obj")->check(CLI::IsMember({"off", "obj"}, CLI::ignore_case));

    auto* exp = app.add_subcommand("export", "export a 3D shell as a mesh; lists shells without --shell");
    exp->add_option("--weight", o.weight, "H4 coefficients")->required();
    exp->add_option("--subgroup", o.subgroup, "h3 or a3")
        ->check(CLI::IsMember({"h3", "a3"}, CLI::ignore_case));
    exp->add_option("--shell", o.shell, "shell index");
    exp->add_option("--format", o.format, "off or obj")->check(CLI::IsMember({"off", "obj"}, CLI::ignore_case));
    exp->add_option("--out", o.out, "output path");
    exp->add_option("--json", o.json, "write the shell as JSON");

    auto* verify = app.add_subcommand("verify-paper", "run the acceptance checks against the published values");
    verify->add_option("--criterion", o.criterion, "run one criterion")->check(CLI::Range(1, verify::kCriterionCount));
    verify->add_flag("--details", o.details, "print every check");
    verify->add_option("--json", o.json, "write the report as JSON");

    CLI11_PARSE(app, argc, argv);
    set_worker_count(o.jobs);

    try {
        if (*classes) return cmd_classes(o);
        if (*table) return cmd_table(o);
        if (*orb) return cmd_orbit(o);
        if (*cells) return cmd_cells(o);
        if (*branch) return cmd_branch(o);
        if (*dual) return cmd_dual(o);
        if (*exp) return cmd_export(o);
        if (*verify) return cmd_verify(o);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what();
        if (!o.weight.empty()) std::cerr << " (weight " << o.weight << ")";
        std::cerr << "\n";
        return 2;
    }
    return 0;
}
