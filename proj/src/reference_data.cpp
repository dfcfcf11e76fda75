#include "h4/reference_data.hpp"

namespace h4::reference {

const std::vector<PrintedMatrix>& printed_matrices() {
    static const std::vector<PrintedMatrix> m = {
        {"C(H4)", "1", {{"2", "-t", "0", "0"}, {"-t", "2", "-1", "0"}, {"0", "-1", "2", "-1"}, {"0", "0", "-1", "2"}}},
        {"Cinv(H4)",
         "t^4",
         {{"4", "3*t", "2*t", "t"}, {"3*t", "6", "4", "2"}, {"2*t", "4", "2*(2+s)", "2+s"}, {"t", "2", "2+s", "2*s^2"}}},
        {"C(H3)", "1", {{"2", "-t", "0"}, {"-t", "2", "-1"}, {"0", "-1", "2"}}},
        {"Cinv(H3)", "1/2", {{"3*t^2", "2*t^3", "t^3"}, {"2*t^3", "4*t^2", "2*t^2"}, {"t^3", "2*t^2", "t+2"}}},
        {"C(A4)", "1", {{"2", "-1", "0", "0"}, {"-1", "2", "-1", "0"}, {"0", "-1", "2", "-1"}, {"0", "0", "-1", "2"}}},
        {"Cinv(A4)", "1/5", {{"4", "3", "2", "1"}, {"3", "6", "4", "2"}, {"2", "4", "6", "3"}, {"1", "2", "3", "4"}}},
        {"D",
         "1",
         {{"t^4", "-2*t^2", "1", "t"},
          {"2*t^3", "-(3*t+1)", "0", "t^2"},
          {"3*t+1", "-t^3", "0", "1"},
          {"2*t", "-t", "0", "0"}}},
    };
    return m;
}

const std::vector<PrintedWeight>& printed_weights() {
    static const std::vector<PrintedWeight> w = {
        {SystemName::H4, 1, "-1/r2", {"t^4", "1", "0", "t^2"}},
        {SystemName::H4, 2, "-r2", {"t^3", "0", "0", "t"}},
        {SystemName::H4, 3, "-1/r2", {"t*(t+2)", "0", "1", "t"}},
        {SystemName::H4, 4, "-r2", {"t", "0", "0", "0"}},
        {SystemName::A4, 1, "1/(r2*r5)", {"-r5", "0", "t", "-s"}},
        {SystemName::A4, 2, "1/(r2*r5)", {"0", "0", "2*t", "-2*s"}},
        {SystemName::A4, 3, "1/(r2*r5)", {"0", "-r5", "t^2", "-s^2"}},
        {SystemName::A4, 4, "1/(r2*r5)", {"0", "0", "2", "-2"}},
    };
    return w;
}

const std::vector<GroupOrder>& group_orders() {
    static const std::vector<GroupOrder> g = {
        {"T", 24}, {"O", 48}, {"I", 120}, {"W(H4)", 14400}, {"W(H3)", 120}, {"W(A4)", 120}, {"Aut(A4)", 240},
    };
    return g;
}

const std::vector<ClassRow>& class_table() {
    static const std::vector<ClassRow> c = {
        {1, 1}, {1, 2}, {12, 10}, {12, 5}, {12, 10}, {12, 5}, {20, 6}, {20, 3}, {30, 4},
    };
    return c;
}

namespace {

PublishedTerm pm(std::vector<std::string> w, std::string h) { return {std::move(w), std::move(h), true}; }
PublishedTerm at(std::vector<std::string> w, std::string h) { return {std::move(w), std::move(h), false}; }
PublishedTerm a4(std::vector<std::string> w) { return {std::move(w), "", false}; }

}  // namespace

const std::vector<PublishedBranching>& published_branchings() {
    static const std::vector<PublishedBranching> b = {
        {"600-cell under H3",
         {0, 0, 0, 1},
         SystemName::H3,
         {pm({"0", "0", "0"}, "1"), pm({"0", "0", "1"}, "t/2"), pm({"0", "0", "t"}, "s/2"), pm({"1", "0", "0"}, "1/2"),
          at({"0", "1", "0"}, "0")},
         ""},
        {"120-cell under H3",
         {1, 0, 0, 0},
         SystemName::H3,
         {pm({"1", "0", "0"}, "t^3/2"), pm({"t", "0", "0"}, "(t+2)/2"), pm({"t^2", "0", "0"}, "s/2"),
          pm({"0", "t", "0"}, "t"), pm({"0", "1", "t"}, "t^2/2"), pm({"0", "t", "1"}, "t/2"), pm({"t", "0", "t"}, "1/2"),
          at({"1", "0", "t^2"}, "0")},
         ""},
        {"720-cell under H3",
         {0, 1, 0, 0},
         SystemName::H3,
         {pm({"t", "0", "0"}, "3*t/2"), pm({"0", "1", "0"}, "t^2"), pm({"0", "t^2", "0"}, "1"),
          pm({"1", "1", "0"}, "t^3/2"), pm({"0", "t", "1"}, "(t+2)/2"), pm({"0", "t", "t"}, "t^2/2"),
          pm({"1", "0", "t^2"}, "t"), pm({"t^2", "0", "1"}, "1/2"), pm({"t", "0", "t^2"}, "s/2"),
          pm({"1", "1", "t"}, "t/2"), at({"2*t", "0", "0"}, "0"), at({"0", "1", "2*t"}, "0")},
         "the label (1,1,0) is printed as (1,10)"},
        {"720'-cell under H3",
         {0, 0, 1, 0},
         SystemName::H3,
         {pm({"0", "0", "1"}, "(t+2)/2"), pm({"0", "0", "t^2"}, "(t-s)/2"), pm({"0", "1", "0"}, "t"),
          at({"0", "0", "2*t"}, "0"), pm({"0", "1", "t"}, "s/2"), pm({"1", "0", "1"}, "t^2/2"),
          pm({"1", "0", "t"}, "t/2"), pm({"1", "1", "0"}, "1/2"), at({"t", "0", "1"}, "0"), pm({"0", "t", "0"}, "1")},
         ""},
        {"600-cell under A4",
         {0, 0, 0, 1},
         SystemName::A4,
         {a4({"0", "0", "1", "t"}), a4({"t", "1", "0", "0"}), a4({"t", "0", "0", "t"}), a4({"1", "0", "t", "0"}),
          a4({"0", "t", "0", "1"})},
         ""},
        {"120-cell under A4",
         {1, 0, 0, 0},
         SystemName::A4,
         {a4({"3*t+1", "0", "0", "0"}), a4({"0", "0", "0", "3*t+1"}), a4({"1", "t^3", "0", "0"}),
          a4({"0", "0", "t^3", "1"}), a4({"t", "0", "0", "2*t^2"}), a4({"2*t^2", "0", "0", "t"}),
          a4({"0", "t^2", "t^2", "0"}), a4({"1", "t", "0", "t^3"}), a4({"t^3", "0", "t", "1"}),
          a4({"t", "t^2", "t", "0"}), a4({"0", "t", "t^2", "t"}), a4({"t^2", "t", "1", "t"}), a4({"t", "1", "t", "t^2"})},
         ""},
        {"720-cell under A4",
         {0, 1, 0, 0},
         SystemName::A4,
         {a4({"0", "3*t+1", "0", "0"}),   a4({"0", "0", "3*t+1", "0"}),   a4({"t^4", "0", "0", "1"}),
          a4({"1", "0", "0", "t^4"}),     a4({"2*t^2", "0", "t^2", "0"}), a4({"0", "t^2", "0", "2*t^2"}),
          a4({"t", "t^3", "1", "0"}),     a4({"0", "1", "t^3", "t"}),     a4({"1", "2*t", "t^2", "0"}),
          a4({"0", "t^2", "2*t", "1"}),   a4({"t^2", "0", "t^2", "2*t"}), a4({"2*t", "t^2", "0", "t^2"}),
          a4({"t", "1", "0", "3*t+1"}),   a4({"3*t+1", "0", "1", "t"}),   a4({"1", "t", "t^2", "t^2"}),
          a4({"t^2", "t^2", "t", "1"}),   a4({"t", "t", "1", "t^3"}),     a4({"t^3", "1", "t", "t"}),
          a4({"t^2", "t", "t", "t^2"})},
         ""},
        {"720'-cell under A4",
         {0, 0, 1, 0},
         SystemName::A4,
         {a4({"t^3", "0", "1", "0"}), a4({"0", "1", "0", "t^3"}), a4({"0", "2*t", "1", "0"}),
          a4({"0", "1", "2*t", "0"}), a4({"t", "t^2", "0", "1"}), a4({"1", "0", "t^2", "t"}),
          a4({"t^2", "0", "t", "t"}), a4({"t", "t", "0", "t^2"}), a4({"t^2", "1", "t", "0"}),
          a4({"0", "t", "1", "t^2"}), a4({"2*t", "1", "0", "t"}), a4({"t", "0", "1", "2*t"}), a4({"1", "t", "t", "1"})},
         ""},
        {"600-cell under A3",
         {0, 0, 0, 1},
         SystemName::A3inA4,
         {at({"1", "0", "0"}, "4*t+3"), at({"0", "0", "1"}, "-(4*t+3)"), at({"t", "0", "0"}, "-5*t"),
          at({"0", "0", "t"}, "5*t"), at({"t^2", "0", "0"}, "2+s"), at({"0", "0", "t^2"}, "-(2+s)"),
          pm({"0", "t", "0"}, "2*t+4"), at({"1", "0", "t"}, "-(3*t+1)"), at({"t", "0", "1"}, "3*t+1"),
          at({"0", "t", "1"}, "-r5"), at({"1", "t", "0"}, "r5"), at({"t", "1", "0"}, "-(t+2)"),
          at({"0", "1", "t"}, "t+2"), at({"t", "0", "t"}, "0")},
         ""},
    };
    return b;
}

namespace {

PublishedPoint pt(std::string symbol, std::string pre, std::string x, std::string y, std::string z) {
    return {std::move(symbol), std::move(pre), {std::move(x), std::move(y), std::move(z)}};
}

}  // namespace

const std::vector<PublishedDual>& published_duals() {
    static const std::vector<PublishedDual> d = {
        {"O(0,0,0,1)", {0, 0, 0, 1}, 120, {{1, "tetrahedron", 600, 20}}, 1, {}, {}, std::nullopt, {}},
        {"O(1,0,0,0)", {1, 0, 0, 0}, 600, {{4, "dodecahedron", 120, 4}}, 4, {}, {}, std::nullopt, {}},
        {"O(0,1,0,0)",
         {0, 1, 0, 0},
         1200,
         {{1, "tetrahedron", 600, 2}, {4, "icosidodecahedron", 120, 3}},
         4,
         {{"lambda", 1, "2/(3*t)"}},
         {},
         PublishedRadii{{4, 1}, {1.061, 1.0}},
         {pt("", "1", "0", "0", "1"), pt("", "1/2", "s", "t", "-1"), pt("", "1/2", "-s", "-t", "-1"),
          pt("", "1/3", "-1", "-s^2", "0"), pt("", "1/3", "1", "s^2", "0")}},
        {"O(0,0,1,0)",
         {0, 0, 1, 0},
         720,
         {{1, "octahedron", 600, 5}, {4, "icosahedron", 120, 2}},
         1,
         {{"lambda", 4, "2*t/(2+s)"}},
         {{"lambda", 4, "2*t/(3+s)"}},
         PublishedRadii{{4, 1}, {1.023, 1.0}},
         {pt("", "1", "0", "1", "t"), pt("", "1", "0", "-1", "-t"), pt("", "r5/2", "-1", "-s", "-s^2"),
          pt("", "r5/2", "s^2", "1", "s"), pt("", "r5/2", "-2*s", "0", "0"), pt("", "r5/2", "s^2", "-1", "-s"),
          pt("", "r5/2", "-1", "s", "s^2")}},
        {"O(1,0,0,1)",
         {1, 0, 0, 1},
         2400,
         {{4, "dodecahedron", 120, 1},
          {1, "tetrahedron", 600, 1},
          {3, "pentagonal prism", 720, 3},
          {2, "triangular prism", 1200, 3}},
         2,
         {{"lambda", 3, "t^4/(t+3)"}, {"rho", 1, "t^4/(t+4)"}, {"eta", 4, "t^4/(s+3)"}},
         {},
         PublishedRadii{{2, 3, 4, 1}, {2.45, 2.47, 2.52, 2.97}},
         {pt("rho", "1", "s^2", "0", "1"), pt("", "1", "-1", "-s^2", "-2*s"), pt("", "1", "-s", "s+2", "-s"),
          pt("", "1", "-2*s", "-1", "s^2"), pt("lambda", "1", "-1", "1", "-s^3"),
          pt("lambda", "1", "-s^2", "-(s+2)", "0"), pt("lambda", "1", "-2*s", "s^2", "s"),
          pt("eta", "1", "-s^2", "0", "-1")}},
        {"O(0,1,0,1)",
         {0, 1, 0, 1},
         3600,
         {{4, "icosidodecahedron", 120, 1}, {1, "cuboctahedron", 600, 2}, {3, "pentagonal prism", 720, 2}},
         3,
         {{"lambda", 4, "(4*t+13)/10"}, {"rho", 1, "(7*t-8)/4"}},
         {},
         PublishedRadii{{3, 1, 4}, {1.6625, 1.6631, 1.7019}},
         {pt("rho", "1", "-r5", "s", "-t"), pt("rho", "1", "r5", "-s", "-t"), pt("", "1", "-s", "-r5", "0"),
          pt("", "1", "s", "r5", "0"), pt("lambda", "1", "0", "0", "2")}},
        {"O(0,0,1,1)",
         {0, 0, 1, 1},
         1440,
         {{4, "icosahedron", 120, 1}, {1, "truncated tetrahedron", 600, 5}},
         1,
         {{"lambda", 4, "(21*t+9)/19"}},
         {},
         PublishedRadii{{1, 4}, {1.012, 1.0}},
         {pt("", "1", "r5", "-1", "r5"), pt("", "1", "2*s", "-t", "t^2"), pt("", "1", "-3", "1", "1"),
          pt("", "1", "s", "2*t", "-s^2"), pt("", "1", "t^2", "2", "s^2"), pt("lambda", "1", "0", "s", "-1")}},
        {"O(0,1,1,0)",
         {0, 1, 1, 0},
         3600,
         {{4, "truncated icosahedron", 120, 2}, {1, "truncated tetrahedron", 600, 2}},
         1,
         {{"lambda", 4, "5*t/(4+s)"}},
         {},
         PublishedRadii{{1, 4}, {0.957, 1.0}},
         {pt("", "1", "-2*t^2", "-s", "-1"), pt("", "1", "t+2", "t+2", "-t"), pt("lambda", "1", "0", "1", "3*t"),
          pt("lambda", "1", "1", "-(t+2)", "-2*t")}},
        {"O(1,0,1,0)",
         {1, 0, 1, 0},
         3600,
         {{4, "small rhombicosidodecahedron", 120, 2}, {1, "octahedron", 600, 1}, {2, "triangular prism", 1200, 2}},
         4,
         {{"lambda", 1, "3/(4+2*t)"}, {"rho", 2, "3/(4+3*t)"}},
         {},
         PublishedRadii{{1, 2, 4}, {0.9991, 0.9495, 1.0}},
         {pt("lambda", "1", "-t^2", "t", "-1"), pt("rho", "1", "t", "t+2", "-t"), pt("rho", "1", "-2*t", "-t^2", "1"),
          pt("", "1", "1", "1", "t^3"), pt("", "1", "t", "-t^2", "-2*t")}},
        {"O(1,1,0,0)",
         {1, 1, 0, 0},
         2400,
         {{4, "truncated dodecahedron", 120, 3}, {1, "tetrahedron", 600, 1}},
         4,
         {{"lambda", 1, "(t+2)/(3*t+4)"}},
         {},
         PublishedRadii{{1, 4}, {0.935, 1.0}},
         {pt("lambda", "1", "-t^2", "-1", "0"), pt("", "1", "1", "0", "3*t+1"), pt("", "1", "-1", "2*t^2", "-t^2"),
          pt("", "1", "t^2", "-t^3", "-2*t")}},
        {"O(1,1,1,0)",
         {1, 1, 1, 0},
         7200,
         {{4, "great rhombicosidodecahedron", 120, 2},
          {1, "truncated tetrahedron", 600, 1},
          {2, "triangular prism", 1200, 1}},
         4,
         {{"lambda", 1, "5/(5*t+4)"}, {"rho", 2, "5/(3*t+10)"}},
         {},
         PublishedRadii{{1, 2, 4}, {1.0032, 0.9433, 1.0}},
         {pt("lambda", "1", "2*t^2", "s", "t"), pt("rho", "1", "t", "t+2", "-t"), pt("", "1", "1", "1", "4*t+1"),
          pt("", "1", "t^2", "-2*t^2", "-3*t")}},
        {"O(1,1,0,1)",
         {1, 1, 0, 1},
         7200,
         {{4, "truncated dodecahedron", 120, 1},
          {1, "cuboctahedron", 600, 1},
          {3, "decagonal prism", 720, 2},
          {2, "triangular prism", 1200, 1}},
         3,
         {{"lambda", 1, "(6*s+7)/4"}, {"rho", 2, "(13*s+61)/79"}, {"eta", 4, "(13*t+36)/29"}},
         {},
         PublishedRadii{{4, 1, 2, 3}, {1.00, 1.33, 1.88, 1.90}},
         {pt("lambda", "1/2", "2-3*s", "-2*s", "-s^2"), pt("rho", "1", "-t", "s", "2"), pt("eta", "1", "s", "0", "-t-2"),
          pt("", "1", "-r5", "2*t", "s"), pt("", "1", "0", "3*s-2", "-1")}},
        {"O(1,0,1,1)",
         {1, 0, 1, 1},
         7200,
         {{4, "small rhombicosidodecahedron", 120, 1},
          {1, "truncated tetrahedron", 600, 1},
          {3, "pentagonal prism", 720, 1},
          {2, "hexagonal prism", 1200, 2}},
         2,
         {{"lambda", 4, "(33*t+36)/31"}, {"rho", 1, "(6*s+27)/19"}, {"eta", 3, "(33*t+51)/71"}},
         {},
         PublishedRadii{{1, 2, 3, 4}, {1.418, 1.002, 1.000, 1.031}},
         {pt("rho", "1", "r5", "-1", "r5"), pt("eta", "1", "-t", "t", "s^2"), pt("lambda", "1", "s", "s", "-t^2"),
          pt("", "1", "-1", "-r5", "3"), pt("", "1", "3", "r5", "1")}},
        {"O(0,1,1,1)",
         {0, 1, 1, 1},
         7200,
         {{4, "truncated icosahedron", 120, 1}, {1, "truncated octahedron", 600, 2}, {3, "pentagonal prism", 720, 1}},
         1,
         {{"lambda", 4, "(6*t+2)/5"}, {"rho", 3, "6*(13*t+3)/121"}},
         {},
         PublishedRadii{{1, 3, 4}, {1.000, 0.9906, 1.0233}},
         {pt("", "1", "-(2*t+3)", "-s", "-(t+2)"), pt("", "1", "t+3", "t+2", "-(2*t+1)"),
          pt("rho", "1", "1", "-(t+2)", "0"), pt("lambda", "1", "0", "1", "3*t")}},
        {"O(1,1,1,1)",
         {1, 1, 1, 1},
         14400,
         {{4, "great rhombicosidodecahedron", 120, 1},
          {1, "truncated octahedron", 600, 1},
          {2, "hexagonal prism", 1200, 1},
          {3, "decagonal prism", 720, 1}},
         4,
         {{"lambda", 1, "(31*s+20)/2"}, {"rho", 2, "(17*s+30)/57"}, {"eta", 3, "(17*s+89)/155"}},
         {},
         PublishedRadii{{1, 2, 3, 4}, {0.9621, 0.9584, 0.9632, 1.000}},
         {pt("lambda", "1", "-(5*t+2)", "1", "-(3*t+1)"), pt("rho", "1", "t+1", "3*t+1", "-3*(t+1)"),
          pt("eta", "1", "3*t+1", "-2*(2*t+1)", "t"), pt("", "1", "t", "t", "4+5*t")}},
    };
    return d;
}

const PublishedDual* find_dual(const std::vector<long>& seed) {
    for (const auto& d : published_duals())
        if (d.seed == seed) return &d;
    return nullptr;
}

}  // namespace h4::reference
