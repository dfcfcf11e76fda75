#include "h4/quaternion.hpp"

#include <ostream>

namespace h4 {

bool Quaternion::is_zero() const {
    for (const auto& x : c)
        if (!x.is_zero()) return false;
    return true;
}

std::size_t Quaternion::hash() const {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (const auto& x : c) h ^= x.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

std::array<double, 4> Quaternion::to_double() const {
    return {c[0].to_double(), c[1].to_double(), c[2].to_double(), c[3].to_double()};
}

Quaternion& Quaternion::operator+=(const Quaternion& o) {
    for (int i = 0; i < 4; ++i) c[i] += o.c[i];
    return *this;
}

Quaternion& Quaternion::operator-=(const Quaternion& o) {
    for (int i = 0; i < 4; ++i) c[i] -= o.c[i];
    return *this;
}

Quaternion operator+(Quaternion x, const Quaternion& y) { return x += y; }
Quaternion operator-(Quaternion x, const Quaternion& y) { return x -= y; }
Quaternion operator-(const Quaternion& x) { return {-x[0], -x[1], -x[2], -x[3]}; }

Quaternion operator*(const GoldenScalar& k, const Quaternion& q) {
    return {k * q[0], k * q[1], k * q[2], k * q[3]};
}

Quaternion q_mul(const Quaternion& p, const Quaternion& q) {
    Quaternion r;
    // Accumulate products only for nonzero pairs; group elements are sparse.
    auto acc = [](GoldenScalar& out, const GoldenScalar& x, const GoldenScalar& y, bool negate) {
        if (x.is_zero() || y.is_zero()) return;
        if (negate) {
            out -= x * y;
        } else {
            out += x * y;
        }
    };
    acc(r[0], p[0], q[0], false);
    acc(r[0], p[1], q[1], true);
    acc(r[0], p[2], q[2], true);
    acc(r[0], p[3], q[3], true);

    acc(r[1], p[0], q[1], false);
    acc(r[1], p[1], q[0], false);
    acc(r[1], p[2], q[3], false);
    acc(r[1], p[3], q[2], true);

    acc(r[2], p[0], q[2], false);
    acc(r[2], p[2], q[0], false);
    acc(r[2], p[3], q[1], false);
    acc(r[2], p[1], q[3], true);

    acc(r[3], p[0], q[3], false);
    acc(r[3], p[3], q[0], false);
    acc(r[3], p[1], q[2], false);
    acc(r[3], p[2], q[1], true);
    return r;
}

Quaternion q_conj(const Quaternion& q) { return {q[0], -q[1], -q[2], -q[3]}; }

GoldenScalar q_dot(const Quaternion& p, const Quaternion& q) {
    GoldenScalar s;
    for (int i = 0; i < 4; ++i)
        if (!p[i].is_zero() && !q[i].is_zero()) s += p[i] * q[i];
    return s;
}

GoldenScalar q_norm(const Quaternion& q) { return q_dot(q, q); }

Quaternion reflect(const Quaternion& normal, const Quaternion& r) {
    const GoldenScalar n2 = q_norm(normal);
    if (n2.is_zero()) throw std::domain_error("reflect: zero normal");
    const GoldenScalar k = -n2.inverse();
    return k * q_mul(q_mul(normal, q_conj(r)), normal);
}

int compare(const Quaternion& x, const Quaternion& y) {
    for (int i = 0; i < 4; ++i) {
        if (x[i] == y[i]) continue;
        return compare(x[i], y[i]);
    }
    return 0;
}

std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
    return os << "(" << q[0] << ", " << q[1] << ", " << q[2] << ", " << q[3] << ")";
}

}  // namespace h4
