#pragma once

#include "h4/rational.hpp"

#include <gmpxx.h>

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace h4 {

/**
 * Exact element of the field Q(tau, sqrt2), stored as
 *
 *     a + b*tau + c*sqrt2 + d*tau*sqrt2
 *
 * with tau = (1 + sqrt5)/2. The four rationals are kept in lowest terms with a
 * positive denominator, so equality is component-wise and the zero test is
 * exact.
 *
 * sigma = 1 - tau is the Galois conjugate of tau; tau*sigma = -1.
 */
class GoldenScalar {
public:
    GoldenScalar() = default;
    GoldenScalar(long v) : a_(v) {}  // NOLINT(google-explicit-constructor)
    explicit GoldenScalar(const mpq_class& v) : a_(v) {}
    explicit GoldenScalar(Rational v) : a_(std::move(v)) {}
    GoldenScalar(const mpq_class& a, const mpq_class& b, const mpq_class& c, const mpq_class& d);
    GoldenScalar(Rational a, Rational b, Rational c, Rational d)
        : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {}

    static GoldenScalar rational(long num, long den = 1);
    static GoldenScalar tau();
    static GoldenScalar sigma();
    static GoldenScalar sqrt2();
    static GoldenScalar sqrt5();

    const Rational& rational_part() const { return a_; }
    const Rational& tau_part() const { return b_; }
    const Rational& sqrt2_part() const { return c_; }
    const Rational& tau_sqrt2_part() const { return d_; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero() && c_.is_zero() && d_.is_zero(); }
    bool is_rational() const { return b_.is_zero() && c_.is_zero() && d_.is_zero(); }
    // True when the sqrt2-carrying components vanish (element of Q(tau)).
    bool in_golden_subfield() const { return c_.is_zero() && d_.is_zero(); }

    GoldenScalar& operator+=(const GoldenScalar& o);
    GoldenScalar& operator-=(const GoldenScalar& o);
    GoldenScalar& operator*=(const GoldenScalar& o);
    GoldenScalar& operator/=(const GoldenScalar& o);

    friend GoldenScalar operator+(GoldenScalar x, const GoldenScalar& y) { return x += y; }
    friend GoldenScalar operator-(GoldenScalar x, const GoldenScalar& y) { return x -= y; }
    friend GoldenScalar operator*(const GoldenScalar& x, const GoldenScalar& y);
    friend GoldenScalar operator/(const GoldenScalar& x, const GoldenScalar& y);
    GoldenScalar operator-() const;

    friend bool operator==(const GoldenScalar& x, const GoldenScalar& y);
    friend bool operator!=(const GoldenScalar& x, const GoldenScalar& y) { return !(x == y); }

    /// Multiplicative inverse; throws std::domain_error on zero.
    GoldenScalar inverse() const;

    /// Exact sign under the real embedding (-1, 0, +1).
    int sign() const;

    /// tau -> sigma; fixes rationals and sqrt2.
    GoldenScalar galois() const;

    double to_double() const;

    std::size_t hash() const;

    /// Literal in the scalar grammar, e.g. "3/2 + t - 1/2*r2". Parses back exactly.
    std::string to_literal() const;

private:
    Rational a_, b_, c_, d_;

    // Sum of |component| * |basis value|, used to bound float rounding.
    double magnitude_bound() const;
    int sign_by_intervals() const;
    friend int compare(const GoldenScalar& x, const GoldenScalar& y);
};

enum class Sign { negative = -1, zero = 0, positive = 1 };

inline Sign gs_sign(const GoldenScalar& x) { return static_cast<Sign>(x.sign()); }

/// Three-way comparison by real value; exact.
int compare(const GoldenScalar& x, const GoldenScalar& y);

inline bool operator<(const GoldenScalar& x, const GoldenScalar& y) { return compare(x, y) < 0; }
inline bool operator>(const GoldenScalar& x, const GoldenScalar& y) { return compare(x, y) > 0; }
inline bool operator<=(const GoldenScalar& x, const GoldenScalar& y) { return compare(x, y) <= 0; }
inline bool operator>=(const GoldenScalar& x, const GoldenScalar& y) { return compare(x, y) >= 0; }

GoldenScalar abs(const GoldenScalar& x);
GoldenScalar pow(GoldenScalar x, int n);

std::ostream& operator<<(std::ostream& os, const GoldenScalar& x);

class ScalarParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/**
 * Parse a scalar literal. Grammar:
 *
 *     expr   := term (('+' | '-') term)*
 *     term   := unary (('*' | '/') unary)*
 *     unary  := ('+' | '-') unary | power
 *     power  := atom ('^' integer)?
 *     atom   := integer | 't' | 's' | 'r2' | 'r5' | '(' expr ')'
 *
 * 't' is tau, 's' is sigma (= 1 - t), 'r2' is sqrt2, 'r5' is sqrt5.
 * Throws ScalarParseError on malformed input or division by zero.
 */
GoldenScalar parse_scalar(std::string_view text);

struct GoldenScalarHash {
    std::size_t operator()(const GoldenScalar& x) const { return x.hash(); }
};

}  // namespace h4
