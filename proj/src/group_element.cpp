#include "h4/group_element.hpp"

#include <ostream>

namespace h4 {

namespace {

const GoldenScalar& first_nonzero(const Quaternion& q) {
    for (const auto& x : q.c)
        if (!x.is_zero()) return x;
    throw std::invalid_argument("GroupElement: zero quaternion");
}

}  // namespace

GroupElement::GroupElement() : GroupElement(Trusted{}, Kind::plain, Quaternion::one(), Quaternion::one()) {}

GroupElement::GroupElement(Kind kind, Quaternion p, Quaternion q) : kind_(kind), p_(std::move(p)), q_(std::move(q)) {
    if (q_norm(p_) != GoldenScalar(1) || q_norm(q_) != GoldenScalar(1))
        throw std::invalid_argument("GroupElement: p and q must be unit quaternions");
    canonicalize();
}

GroupElement::GroupElement(Trusted, Kind kind, Quaternion p, Quaternion q)
    : kind_(kind), p_(std::move(p)), q_(std::move(q)) {
    canonicalize();
}

void GroupElement::canonicalize() {
    if (first_nonzero(p_).sign() < 0) {
        p_ = -p_;
        q_ = -q_;
    }
    hash_ = p_.hash() * 31 + q_.hash() + (kind_ == Kind::star ? 0x5bd1e995 : 0);
}

GroupElement GroupElement::reflection(const Quaternion& root) {
    // [u, -u]* with u = root/|root|; |root| must lie in the field.
    const GoldenScalar n2 = q_norm(root);
    GoldenScalar k;
    if (n2 == GoldenScalar(2)) {
        k = GoldenScalar::sqrt2() / GoldenScalar(2);
    } else if (n2 == GoldenScalar(1)) {
        k = 1;
    } else {
        throw std::invalid_argument("GroupElement::reflection: root must have norm 1 or 2");
    }
    const Quaternion u = k * root;
    return {Kind::star, u, -u};
}

Quaternion GroupElement::apply(const Quaternion& r) const {
    const Quaternion& arg = kind_ == Kind::star ? q_conj(r) : r;
    return q_mul(q_mul(p_, arg), q_);
}

GroupElement GroupElement::inverse() const {
    // [p,q]^-1 = [conj p, conj q];  ([p,q]*)^-1 = [q, p]*
    if (kind_ == Kind::star) return {Trusted{}, Kind::star, q_, p_};
    return {Trusted{}, Kind::plain, q_conj(p_), q_conj(q_)};
}

bool GroupElement::is_identity() const {
    return kind_ == Kind::plain && p_ == Quaternion::one() && q_ == Quaternion::one();
}

GroupElement compose(const GroupElement& g, const GroupElement& h) {
    using Kind = GroupElement::Kind;
    const Quaternion& p = g.p_;
    const Quaternion& q = g.q_;
    const Quaternion& p2 = h.p_;
    const Quaternion& q2 = h.q_;
    if (!g.is_star()) {
        // p (p2 x q2) q  with x = r or conj(r)
        return {GroupElement::Trusted{}, h.kind_, q_mul(p, p2), q_mul(q2, q)};
    }
    // p conj(p2 x q2) q = (p conj q2) conj(x) (conj p2 q)
    const Kind kind = h.is_star() ? Kind::plain : Kind::star;
    return {GroupElement::Trusted{}, kind, q_mul(p, q_conj(q2)), q_mul(q_conj(p2), q)};
}

int compare(const GroupElement& a, const GroupElement& b) {
    if (a.kind() != b.kind()) return a.kind() == GroupElement::Kind::plain ? -1 : 1;
    if (int c = compare(a.left(), b.left()); c != 0) return c;
    return compare(a.right(), b.right());
}

std::ostream& operator<<(std::ostream& os, const GroupElement& g) {
    os << "[" << g.left() << ", " << g.right() << "]";
    if (g.is_star()) os << "*";
    return os;
}

}  // namespace h4
