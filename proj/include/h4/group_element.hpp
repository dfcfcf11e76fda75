#pragma once

#include "h4/quaternion.hpp"

#include <cstddef>
#include <iosfwd>
#include <stdexcept>

namespace h4 {

/**
 * Orthogonal map of R^4 written with two unit quaternions:
 *
 *     plain [p, q]:  r -> p r q
 *     star  [p, q]*: r -> p conj(r) q
 *
 * (p, q) and (-p, -q) give the same map. The stored pair is canonical: the
 * first nonzero component of p is positive.
 */
class GroupElement {
public:
    enum class Kind { plain, star };

    /// Identity [1, 1].
    GroupElement();

    /// Throws std::invalid_argument unless p and q have norm exactly 1.
    GroupElement(Kind kind, Quaternion p, Quaternion q);

    /// Unit-normal reflection [n, -n]* for a root of any nonzero length.
    static GroupElement reflection(const Quaternion& root);

    Kind kind() const { return kind_; }
    bool is_star() const { return kind_ == Kind::star; }
    const Quaternion& left() const { return p_; }
    const Quaternion& right() const { return q_; }
    std::size_t hash() const { return hash_; }

    Quaternion apply(const Quaternion& r) const;
    GroupElement inverse() const;
    bool is_identity() const;
    /// +1 for rotations, -1 for rotary reflections.
    int determinant() const { return is_star() ? -1 : 1; }

    friend bool operator==(const GroupElement& a, const GroupElement& b) {
        return a.hash_ == b.hash_ && a.kind_ == b.kind_ && a.p_ == b.p_ && a.q_ == b.q_;
    }
    friend bool operator!=(const GroupElement& a, const GroupElement& b) { return !(a == b); }

private:
    struct Trusted {};
    GroupElement(Trusted, Kind kind, Quaternion p, Quaternion q);
    void canonicalize();

    Kind kind_ = Kind::plain;
    Quaternion p_, q_;
    std::size_t hash_ = 0;

    friend GroupElement compose(const GroupElement& g, const GroupElement& h);
};

inline Quaternion apply(const GroupElement& g, const Quaternion& r) { return g.apply(r); }

/// g after h: apply(compose(g, h), r) == apply(g, apply(h, r)).
GroupElement compose(const GroupElement& g, const GroupElement& h);

/// Deterministic total order: plain before star, then p, then q.
int compare(const GroupElement& a, const GroupElement& b);

struct GroupElementLess {
    bool operator()(const GroupElement& a, const GroupElement& b) const { return compare(a, b) < 0; }
};

struct GroupElementHash {
    std::size_t operator()(const GroupElement& g) const { return g.hash(); }
};

std::ostream& operator<<(std::ostream& os, const GroupElement& g);

}  // namespace h4
