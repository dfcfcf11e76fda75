#include "h4/quaternion_groups.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <unordered_set>

namespace h4 {

namespace {

using Set = std::unordered_set<Quaternion, QuaternionHash>;

QuaternionSet finish(std::string name, const Set& set) {
    QuaternionSet out{std::move(name), {set.begin(), set.end()}};
    std::sort(out.elements.begin(), out.elements.end(), QuaternionLess{});
    return out;
}

// All sign choices of a pattern, each nonzero coordinate independently +-.
void add_signed(Set& out, const Quaternion& pattern, const GoldenScalar& scale) {
    for (int mask = 0; mask < 16; ++mask) {
        Quaternion q;
        bool skip = false;
        for (int i = 0; i < 4; ++i) {
            const bool negative = (mask >> i) & 1;
            if (pattern[i].is_zero() && negative) {
                skip = true;
                break;
            }
            q[i] = scale * (negative ? -pattern[i] : pattern[i]);
        }
        if (!skip) out.insert(q);
    }
}

Set build_T() {
    Set s;
    const GoldenScalar half = GoldenScalar::rational(1, 2);
    for (int i = 0; i < 4; ++i) {
        Quaternion u;
        u[i] = 1;
        add_signed(s, u, 1);
    }
    add_signed(s, {1, 1, 1, 1}, half);
    return s;
}

Set build_Tprime() {
    Set s;
    const GoldenScalar k = GoldenScalar::sqrt2() / GoldenScalar(2);
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            Quaternion u;
            u[i] = 1;
            u[j] = 1;
            add_signed(s, u, k);
        }
    return s;
}

// Quaternion with value v placed at the (scalar, e_a, e_b, e_c) slots.
Quaternion place(const std::array<int, 3>& slots, const std::array<GoldenScalar, 3>& values) {
    Quaternion q;
    for (int k = 0; k < 3; ++k) q[slots[k]] = values[k];
    return q;
}

Set build_S() {
    const GoldenScalar t = GoldenScalar::tau();
    const GoldenScalar s = GoldenScalar::sigma();
    const GoldenScalar half = GoldenScalar::rational(1, 2);
    Set out;
    // Cyclic index triples (i, i+1, i+2) over e1, e2, e3 -> slots 1..3.
    const std::array<std::array<int, 2>, 3> cyc = {{{1, 3}, {2, 1}, {3, 2}}};
    for (const auto& [a, b] : cyc) {
        add_signed(out, place({0, a, b}, {t, 1, s}), half);  // (+-tau +- e_a +- sigma e_b)
    }
    const std::array<std::array<int, 2>, 3> cyc2 = {{{1, 2}, {2, 3}, {3, 1}}};
    for (const auto& [a, b] : cyc2) {
        add_signed(out, place({0, a, b}, {s, 1, t}), half);  // (+-sigma +- e_a +- tau e_b)
        add_signed(out, place({0, a, b}, {1, t, s}), half);  // (+-1 +- tau e_a +- sigma e_b)
    }
    // (+- sigma e_a +- tau e_b +- e_c) for (a,b,c) cyclic
    const std::array<std::array<int, 3>, 3> cyc3 = {{{1, 2, 3}, {2, 3, 1}, {3, 1, 2}}};
    for (const auto& slots : cyc3) add_signed(out, place(slots, {s, t, 1}), half);
    return out;
}

Quaternion galois(const Quaternion& q) { return {q[0].galois(), q[1].galois(), q[2].galois(), q[3].galois()}; }

}  // namespace

std::string_view to_string(QuaternionSetName name) {
    switch (name) {
        case QuaternionSetName::T: return "T";
        case QuaternionSetName::Tprime: return "Tprime";
        case QuaternionSetName::O: return "O";
        case QuaternionSetName::I: return "I";
        case QuaternionSetName::S: return "S";
        case QuaternionSetName::Itilde: return "Itilde";
    }
    return "?";
}

QuaternionSetName parse_quaternion_set_name(std::string_view text) {
    for (auto n : {QuaternionSetName::T, QuaternionSetName::Tprime, QuaternionSetName::O, QuaternionSetName::I,
                   QuaternionSetName::S, QuaternionSetName::Itilde})
        if (to_string(n) == text) return n;
    throw std::invalid_argument("unknown quaternion set: " + std::string(text));
}

bool QuaternionSet::contains(const Quaternion& q) const {
    return std::binary_search(elements.begin(), elements.end(), q, QuaternionLess{});
}

QuaternionSet close_under_product(std::string name, const std::vector<Quaternion>& generators, std::size_t cap) {
    Set seen{Quaternion::one()};
    std::vector<Quaternion> frontier{Quaternion::one()};
    while (!frontier.empty()) {
        std::vector<Quaternion> next;
        for (const auto& x : frontier)
            for (const auto& g : generators) {
                Quaternion y = q_mul(x, g);
                if (seen.insert(y).second) {
                    if (seen.size() > cap) throw std::logic_error("close_under_product: closure exceeds cap");
                    next.push_back(std::move(y));
                }
            }
        frontier = std::move(next);
    }
    return finish(std::move(name), seen);
}

QuaternionSet build_set(QuaternionSetName name) {
    switch (name) {
        case QuaternionSetName::T: return finish("T", build_T());
        case QuaternionSetName::Tprime: return finish("Tprime", build_Tprime());
        case QuaternionSetName::O: {
            Set s = build_T();
            Set tp = build_Tprime();
            s.insert(tp.begin(), tp.end());
            return finish("O", s);
        }
        case QuaternionSetName::S: return finish("S", build_S());
        case QuaternionSetName::I: {
            const GoldenScalar half = GoldenScalar::rational(1, 2);
            const GoldenScalar t = GoldenScalar::tau();
            const GoldenScalar s = GoldenScalar::sigma();
            const Quaternion b = half * Quaternion(t, s, 1, 0);
            const Quaternion c = half * Quaternion(t, -s, 1, 0);
            QuaternionSet closed = close_under_product("I", {b, c}, 120);
            Set u = build_T();
            Set sset = build_S();
            const std::size_t t_size = u.size();
            u.insert(sset.begin(), sset.end());
            if (u.size() != t_size + sset.size()) throw std::logic_error("build_set(I): T and S overlap");
            QuaternionSet unioned = finish("I", u);
            if (closed.elements != unioned.elements)
                throw std::logic_error("build_set(I): generator closure differs from T u S");
            return closed;
        }
        case QuaternionSetName::Itilde: {
            QuaternionSet i = build_set(QuaternionSetName::I);
            Set s;
            for (const auto& q : i.elements) s.insert(galois(q));
            return finish("Itilde", s);
        }
    }
    throw std::invalid_argument("build_set: unknown name");
}

bool is_group(const QuaternionSet& set) {
    if (!set.contains(Quaternion::one())) return false;
    Set members(set.elements.begin(), set.elements.end());
    for (const auto& g : set.elements) {
        if (!members.count(q_conj(g))) return false;
        for (const auto& h : set.elements)
            if (!members.count(q_mul(g, h))) return false;
    }
    return true;
}

int element_order(const Quaternion& q, int limit) {
    Quaternion x = q;
    for (int n = 1; n <= limit; ++n) {
        if (x == Quaternion::one()) return n;
        x = q_mul(x, q);
    }
    return 0;
}

std::vector<ConjugacyClass> conjugacy_classes(const QuaternionSet& group) {
    std::vector<ConjugacyClass> classes;
    Set assigned;
    for (const auto& g : group.elements) {
        if (assigned.count(g)) continue;
        Set cls;
        for (const auto& x : group.elements) cls.insert(q_mul(q_mul(x, g), q_conj(x)));
        ConjugacyClass c;
        c.members.assign(cls.begin(), cls.end());
        std::sort(c.members.begin(), c.members.end(), QuaternionLess{});
        c.representative = c.members.back();
        c.element_order = element_order(g);
        assigned.insert(cls.begin(), cls.end());
        classes.push_back(std::move(c));
    }
    std::sort(classes.begin(), classes.end(), [](const ConjugacyClass& a, const ConjugacyClass& b) {
        if (a.members.size() != b.members.size()) return a.members.size() < b.members.size();
        return compare(a.representative[0], b.representative[0]) > 0;
    });
    return classes;
}

}  // namespace h4
