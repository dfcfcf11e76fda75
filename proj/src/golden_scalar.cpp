#include "h4/golden_scalar.hpp"

#include <cctype>
#include <cmath>
#include <ostream>
#include <sstream>
#include <vector>

namespace h4 {

namespace {

constexpr double kTau = 1.6180339887498948482;
constexpr double kSqrt2 = 1.4142135623730950488;

// (a + b tau)(e + f tau) = (ae + bf) + (af + be + bf) tau
void golden_mul(const Rational& a, const Rational& b, const Rational& e, const Rational& f, Rational& out0,
                Rational& out1) {
    if (b.is_zero() && f.is_zero()) {
        out0 = a * e;
        out1 = Rational();
        return;
    }
    Rational bf = b * f;
    out0 = a * e + bf;
    out1 = a * f + b * e + bf;
}

bool golden_is_zero(const Rational& a, const Rational& b) { return a.is_zero() && b.is_zero(); }

// Rational enclosure [lo, hi] of sqrt(n) with width 2^-bits.
void sqrt_enclosure(unsigned long n, unsigned long bits, mpq_class& lo, mpq_class& hi) {
    mpz_class scaled = n;
    scaled <<= 2 * bits;
    mpz_class root;
    mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
    mpz_class den = 1;
    den <<= bits;
    lo = mpq_class(root, den);
    lo.canonicalize();
    hi = mpq_class(root + 1, den);
    hi.canonicalize();
}

// Interval [lo, hi] times scalar k.
void scale_interval(const mpq_class& k, const mpq_class& lo, const mpq_class& hi, mpq_class& out_lo,
                    mpq_class& out_hi) {
    if (sgn(k) >= 0) {
        out_lo = k * lo;
        out_hi = k * hi;
    } else {
        out_lo = k * hi;
        out_hi = k * lo;
    }
}

}  // namespace

GoldenScalar::GoldenScalar(const mpq_class& a, const mpq_class& b, const mpq_class& c, const mpq_class& d)
    : a_(a), b_(b), c_(c), d_(d) {}

GoldenScalar GoldenScalar::rational(long num, long den) {
    if (den == 0) throw std::domain_error("GoldenScalar::rational: zero denominator");
    return GoldenScalar(Rational(num, den));
}

GoldenScalar GoldenScalar::tau() { return {Rational(0), Rational(1), Rational(0), Rational(0)}; }
GoldenScalar GoldenScalar::sigma() { return {Rational(1), Rational(-1), Rational(0), Rational(0)}; }
GoldenScalar GoldenScalar::sqrt2() { return {Rational(0), Rational(0), Rational(1), Rational(0)}; }
GoldenScalar GoldenScalar::sqrt5() { return {Rational(-1), Rational(2), Rational(0), Rational(0)}; }

GoldenScalar& GoldenScalar::operator+=(const GoldenScalar& o) {
    if (!o.a_.is_zero()) a_ += o.a_;
    if (!o.b_.is_zero()) b_ += o.b_;
    if (!o.c_.is_zero()) c_ += o.c_;
    if (!o.d_.is_zero()) d_ += o.d_;
    return *this;
}

GoldenScalar& GoldenScalar::operator-=(const GoldenScalar& o) {
    if (!o.a_.is_zero()) a_ -= o.a_;
    if (!o.b_.is_zero()) b_ -= o.b_;
    if (!o.c_.is_zero()) c_ -= o.c_;
    if (!o.d_.is_zero()) d_ -= o.d_;
    return *this;
}

GoldenScalar GoldenScalar::operator-() const { return {-a_, -b_, -c_, -d_}; }

// x = u + v sqrt2, y = u' + v' sqrt2 with u, v, u', v' in Q(tau):
// xy = (uu' + 2vv') + (uv' + vu') sqrt2
GoldenScalar operator*(const GoldenScalar& x, const GoldenScalar& y) {
    GoldenScalar r;
    const bool xv = !golden_is_zero(x.c_, x.d_);
    const bool yv = !golden_is_zero(y.c_, y.d_);
    const bool xu = !golden_is_zero(x.a_, x.b_);
    const bool yu = !golden_is_zero(y.a_, y.b_);
    Rational t0, t1;
    if (xu && yu) golden_mul(x.a_, x.b_, y.a_, y.b_, r.a_, r.b_);
    if (xv && yv) {
        golden_mul(x.c_, x.d_, y.c_, y.d_, t0, t1);
        r.a_ += t0 * Rational(2);
        r.b_ += t1 * Rational(2);
    }
    if (xu && yv) golden_mul(x.a_, x.b_, y.c_, y.d_, r.c_, r.d_);
    if (xv && yu) {
        golden_mul(x.c_, x.d_, y.a_, y.b_, t0, t1);
        r.c_ += t0;
        r.d_ += t1;
    }
    return r;
}

GoldenScalar& GoldenScalar::operator*=(const GoldenScalar& o) { return *this = *this * o; }

GoldenScalar GoldenScalar::inverse() const {
    if (is_zero()) throw std::domain_error("GoldenScalar: division by zero");
    if (is_rational()) return GoldenScalar(a_.inverse());
    // Split as u + v sqrt2; 1/x = (u - v sqrt2) / (u^2 - 2 v^2). The denominator
    // lies in Q(tau) and is inverted through its norm a^2 + ab - b^2.
    GoldenScalar u(a_, b_, Rational(), Rational());
    GoldenScalar conj(a_, b_, -c_, -d_);
    GoldenScalar v(c_, d_, Rational(), Rational());
    GoldenScalar den = u * u - GoldenScalar(2) * v * v;
    const Rational& p = den.a_;
    const Rational& q = den.b_;
    const Rational norm = p * p + p * q - q * q;
    // 1/(p + q tau) = (p + q sigma)/norm = ((p + q) - q tau)/norm
    const Rational inv_norm = norm.inverse();
    GoldenScalar den_inv((p + q) * inv_norm, -q * inv_norm, Rational(), Rational());
    return conj * den_inv;
}

GoldenScalar operator/(const GoldenScalar& x, const GoldenScalar& y) { return x * y.inverse(); }

GoldenScalar& GoldenScalar::operator/=(const GoldenScalar& o) { return *this = *this / o; }

bool operator==(const GoldenScalar& x, const GoldenScalar& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && x.d_ == y.d_;
}

GoldenScalar GoldenScalar::galois() const {
    // a + b(1 - tau) + c sqrt2 + d(1 - tau) sqrt2
    return {a_ + b_, -b_, c_ + d_, -d_};
}

double GoldenScalar::to_double() const {
    return a_.to_double() + b_.to_double() * kTau + c_.to_double() * kSqrt2 + d_.to_double() * (kTau * kSqrt2);
}

double GoldenScalar::magnitude_bound() const {
    return std::fabs(a_.to_double()) + std::fabs(b_.to_double()) * kTau + std::fabs(c_.to_double()) * kSqrt2 +
           std::fabs(d_.to_double()) * (kTau * kSqrt2);
}

int GoldenScalar::sign_by_intervals() const {
    const mpq_class a = a_.to_mpq(), b = b_.to_mpq(), c = c_.to_mpq(), d = d_.to_mpq();
    mpq_class s5lo, s5hi, s2lo, s2hi;
    mpq_class lo, hi, tlo, thi, plo, phi;
    for (unsigned long bits = 64;; bits *= 2) {
        sqrt_enclosure(5, bits, s5lo, s5hi);
        sqrt_enclosure(2, bits, s2lo, s2hi);
        const mpq_class tau_lo = (1 + s5lo) / 2;
        const mpq_class tau_hi = (1 + s5hi) / 2;
        lo = a;
        hi = a;
        scale_interval(b, tau_lo, tau_hi, tlo, thi);
        lo += tlo;
        hi += thi;
        scale_interval(c, s2lo, s2hi, tlo, thi);
        lo += tlo;
        hi += thi;
        plo = tau_lo * s2lo;
        phi = tau_hi * s2hi;
        scale_interval(d, plo, phi, tlo, thi);
        lo += tlo;
        hi += thi;
        if (sgn(lo) > 0) return 1;
        if (sgn(hi) < 0) return -1;
    }
}

int GoldenScalar::sign() const {
    if (is_rational()) return a_.sign();
    const double approx = to_double();
    const double bound = magnitude_bound() * 1e-13;
    if (std::isfinite(approx) && std::isfinite(bound) && std::fabs(approx) > bound) return approx > 0 ? 1 : -1;
    return sign_by_intervals();
}

int compare(const GoldenScalar& x, const GoldenScalar& y) {
    if (x.is_rational() && y.is_rational()) return cmp(x.a_, y.a_);
    const double dx = x.to_double();
    const double dy = y.to_double();
    const double bound = (x.magnitude_bound() + y.magnitude_bound()) * 1e-13;
    if (std::isfinite(dx) && std::isfinite(dy) && std::isfinite(bound) && std::fabs(dx - dy) > bound)
        return dx < dy ? -1 : 1;
    return (x - y).sign();
}

std::size_t GoldenScalar::hash() const {
    std::size_t h = a_.hash(0x51ed27);
    h = b_.hash(h);
    h = c_.hash(h);
    return d_.hash(h);
}

GoldenScalar abs(const GoldenScalar& x) { return x.sign() < 0 ? -x : x; }

GoldenScalar pow(GoldenScalar x, int n) {
    if (n < 0) return pow(x.inverse(), -n);
    GoldenScalar result(1);
    while (n > 0) {
        if (n & 1) result *= x;
        x *= x;
        n >>= 1;
    }
    return result;
}

std::string GoldenScalar::to_literal() const {
    struct Term {
        const Rational* coeff;
        const char* basis;
    };
    const Term terms[] = {{&a_, ""}, {&b_, "t"}, {&c_, "r2"}, {&d_, "t*r2"}};
    std::string out;
    for (const auto& [coeff, basis] : terms) {
        if (coeff->is_zero()) continue;
        const bool negative = coeff->sign() < 0;
        const Rational mag = negative ? -*coeff : *coeff;
        std::string body;
        if (*basis == '\0') {
            body = mag.to_string();
        } else if (mag == Rational(1)) {
            body = basis;
        } else {
            body = mag.to_string() + "*" + basis;
        }
        if (out.empty()) {
            out = negative ? "-" + body : body;
        } else {
            out += negative ? " - " : " + ";
            out += body;
        }
    }
    return out.empty() ? "0" : out;
}

std::ostream& operator<<(std::ostream& os, const GoldenScalar& x) { return os << x.to_literal(); }

namespace {

class ScalarParser {
public:
    explicit ScalarParser(std::string_view text) : text_(text) {}

    GoldenScalar parse() {
        GoldenScalar v = expr();
        skip_space();
        if (pos_ != text_.size()) fail("unexpected character");
        return v;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) const {
        std::ostringstream os;
        os << "scalar literal '" << text_ << "': " << what << " at position " << pos_;
        throw ScalarParseError(os.str());
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    GoldenScalar expr() {
        GoldenScalar v = term();
        for (;;) {
            if (accept('+')) {
                v += term();
            } else if (accept('-')) {
                v -= term();
            } else {
                return v;
            }
        }
    }

    GoldenScalar term() {
        GoldenScalar v = unary();
        for (;;) {
            if (accept('*')) {
                v *= unary();
            } else if (accept('/')) {
                GoldenScalar d = unary();
                if (d.is_zero()) fail("division by zero");
                v /= d;
            } else {
                return v;
            }
        }
    }

    GoldenScalar unary() {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    GoldenScalar power() {
        GoldenScalar base = atom();
        if (!accept('^')) return base;
        skip_space();
        bool negative = false;
        if (accept('-')) negative = true;
        skip_space();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected integer exponent");
        const int n = std::stoi(std::string(text_.substr(start, pos_ - start)));
        if (negative && base.is_zero()) fail("division by zero");
        return pow(base, negative ? -n : n);
    }

    GoldenScalar atom() {
        skip_space();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            GoldenScalar v = expr();
            if (!accept(')')) fail("expected ')'");
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            return GoldenScalar(mpq_class(mpz_class(std::string(text_.substr(start, pos_ - start)))));
        }
        if (text_.substr(pos_, 2) == "r2") {
            pos_ += 2;
            return GoldenScalar::sqrt2();
        }
        if (text_.substr(pos_, 2) == "r5") {
            pos_ += 2;
            return GoldenScalar::sqrt5();
        }
        if (c == 't') {
            ++pos_;
            return GoldenScalar::tau();
        }
        if (c == 's') {
            ++pos_;
            return GoldenScalar::sigma();
        }
        fail(std::string("unknown token '") + c + "'");
    }
};

}  // namespace

GoldenScalar parse_scalar(std::string_view text) { return ScalarParser(text).parse(); }

}  // namespace h4
