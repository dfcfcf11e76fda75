#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <string>

namespace h4 {

/// Exact rational in lowest terms. Values whose numerator and denominator fit
/// in 64 bits are stored inline; larger ones spill to a GMP rational. The
/// representation is unique, so equality and hashing are structural.
class Rational {
public:
    Rational() = default;
    Rational(long v) : n_(v) {  // NOLINT(google-explicit-constructor)
        if (v == INT64_MIN) set_big(mpq_class(v));
    }
    Rational(long num, long den);
    explicit Rational(const mpq_class& v) { set_big(v); }

    Rational(const Rational& o) : n_(o.n_), d_(o.d_), big_(o.big_ ? std::make_unique<mpq_class>(*o.big_) : nullptr) {}
    Rational(Rational&&) noexcept = default;
    Rational& operator=(const Rational& o) {
        if (this != &o) {
            n_ = o.n_;
            d_ = o.d_;
            big_ = o.big_ ? std::make_unique<mpq_class>(*o.big_) : nullptr;
        }
        return *this;
    }
    Rational& operator=(Rational&&) noexcept = default;

    bool is_zero() const { return !big_ && n_ == 0; }
    bool is_integer() const { return big_ ? mpz_cmp_ui(big_->get_den_mpz_t(), 1) == 0 : d_ == 1; }
    int sign() const { return big_ ? sgn(*big_) : (n_ > 0) - (n_ < 0); }
    double to_double() const { return big_ ? big_->get_d() : static_cast<double>(n_) / static_cast<double>(d_); }
    mpq_class to_mpq() const;
    std::string to_string() const;
    std::size_t hash(std::size_t seed) const;

    Rational operator-() const;
    Rational inverse() const;

    friend Rational operator+(const Rational& x, const Rational& y);
    friend Rational operator-(const Rational& x, const Rational& y);
    friend Rational operator*(const Rational& x, const Rational& y);
    friend Rational operator/(const Rational& x, const Rational& y) { return x * y.inverse(); }
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }

    friend bool operator==(const Rational& x, const Rational& y) {
        if (x.big_ || y.big_) return x.big_ && y.big_ && *x.big_ == *y.big_;
        return x.n_ == y.n_ && x.d_ == y.d_;
    }
    friend bool operator!=(const Rational& x, const Rational& y) { return !(x == y); }
    friend int cmp(const Rational& x, const Rational& y);

private:
    std::int64_t n_ = 0;
    std::int64_t d_ = 1;
    std::unique_ptr<mpq_class> big_;

    void set_big(mpq_class v);
    void set_wide(__int128 num, __int128 den);
};

}  // namespace h4
