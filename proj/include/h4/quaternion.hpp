#pragma once

#include "h4/golden_scalar.hpp"

#include <array>
#include <cstddef>
#include <iosfwd>
#include <string>

namespace h4 {

/// q0 + q1 e1 + q2 e2 + q3 e3 over Q(tau, sqrt2).
struct Quaternion {
    std::array<GoldenScalar, 4> c{};

    Quaternion() = default;
    Quaternion(GoldenScalar q0, GoldenScalar q1, GoldenScalar q2, GoldenScalar q3)
        : c{std::move(q0), std::move(q1), std::move(q2), std::move(q3)} {}

    static Quaternion one() { return {1, 0, 0, 0}; }
    static Quaternion e1() { return {0, 1, 0, 0}; }
    static Quaternion e2() { return {0, 0, 1, 0}; }
    static Quaternion e3() { return {0, 0, 0, 1}; }

    const GoldenScalar& operator[](std::size_t i) const { return c[i]; }
    GoldenScalar& operator[](std::size_t i) { return c[i]; }

    bool is_zero() const;
    std::size_t hash() const;
    std::array<double, 4> to_double() const;

    Quaternion& operator+=(const Quaternion& o);
    Quaternion& operator-=(const Quaternion& o);

    friend bool operator==(const Quaternion& x, const Quaternion& y) { return x.c == y.c; }
    friend bool operator!=(const Quaternion& x, const Quaternion& y) { return !(x == y); }
};

Quaternion operator+(Quaternion x, const Quaternion& y);
Quaternion operator-(Quaternion x, const Quaternion& y);
Quaternion operator-(const Quaternion& x);
Quaternion operator*(const GoldenScalar& k, const Quaternion& q);

/// Hamilton product: e_i e_j = -delta_ij + eps_ijk e_k.
Quaternion q_mul(const Quaternion& p, const Quaternion& q);
inline Quaternion operator*(const Quaternion& p, const Quaternion& q) { return q_mul(p, q); }

Quaternion q_conj(const Quaternion& q);
/// q * conj(q); always real and non-negative.
GoldenScalar q_norm(const Quaternion& q);
/// Euclidean inner product on R^4.
GoldenScalar q_dot(const Quaternion& p, const Quaternion& q);

/// Reflection in the hyperplane orthogonal to `normal`: r -> -n conj(r) n / |n|^2.
/// Throws std::domain_error for a zero normal.
Quaternion reflect(const Quaternion& normal, const Quaternion& r);

/// Lexicographic order on (q0, q1, q2, q3) by exact real value.
int compare(const Quaternion& x, const Quaternion& y);

struct QuaternionLess {
    bool operator()(const Quaternion& x, const Quaternion& y) const { return compare(x, y) < 0; }
};

struct QuaternionHash {
    std::size_t operator()(const Quaternion& q) const { return q.hash(); }
};

std::ostream& operator<<(std::ostream& os, const Quaternion& q);

}  // namespace h4
