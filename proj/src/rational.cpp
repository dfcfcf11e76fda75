#include "h4/rational.hpp"

#include <stdexcept>

namespace h4 {

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

u128 uabs(i128 x) { return x < 0 ? static_cast<u128>(-(x + 1)) + 1 : static_cast<u128>(x); }

u128 gcd128(u128 a, u128 b) {
    while (b != 0) {
        const u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
    std::uint64_t x = a < 0 ? -static_cast<std::uint64_t>(a) : static_cast<std::uint64_t>(a);
    std::uint64_t y = b < 0 ? -static_cast<std::uint64_t>(b) : static_cast<std::uint64_t>(b);
    while (y != 0) {
        const std::uint64_t t = x % y;
        x = y;
        y = t;
    }
    return static_cast<std::int64_t>(x);
}

bool fits(i128 x) { return x > INT64_MIN && x <= INT64_MAX; }

mpz_class to_mpz(i128 x) {
    const u128 m = uabs(x);
    const std::uint64_t limbs[2] = {static_cast<std::uint64_t>(m), static_cast<std::uint64_t>(m >> 64)};
    mpz_class z;
    mpz_import(z.get_mpz_t(), 2, -1, sizeof(std::uint64_t), 0, 0, limbs);
    if (x < 0) z = -z;
    return z;
}

}  // namespace

Rational::Rational(long num, long den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    set_wide(num, den);
}

void Rational::set_big(mpq_class v) {
    v.canonicalize();
    mpz_srcptr num = v.get_num_mpz_t();
    mpz_srcptr den = v.get_den_mpz_t();
    if (mpz_fits_slong_p(num) && mpz_fits_slong_p(den) && mpz_cmp_si(num, INT64_MIN) != 0) {
        n_ = mpz_get_si(num);
        d_ = mpz_get_si(den);
        big_.reset();
        return;
    }
    big_ = std::make_unique<mpq_class>(std::move(v));
}

void Rational::set_wide(i128 num, i128 den) {
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const u128 g = gcd128(uabs(num), static_cast<u128>(den));
    if (g > 1) {
        num /= static_cast<i128>(g);
        den /= static_cast<i128>(g);
    }
    if (num == 0) den = 1;
    if (fits(num) && fits(den)) {
        n_ = static_cast<std::int64_t>(num);
        d_ = static_cast<std::int64_t>(den);
        big_.reset();
        return;
    }
    mpq_class q(to_mpz(num), to_mpz(den));
    big_ = std::make_unique<mpq_class>(std::move(q));
}

mpq_class Rational::to_mpq() const {
    if (big_) return *big_;
    mpq_class q(n_, 1);
    mpz_set_si(q.get_den_mpz_t(), d_);
    return q;
}

std::string Rational::to_string() const {
    if (big_) return big_->get_str();
    return d_ == 1 ? std::to_string(n_) : std::to_string(n_) + "/" + std::to_string(d_);
}

std::size_t Rational::hash(std::size_t seed) const {
    auto mix = [&](std::size_t v) { seed ^= v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2); };
    if (!big_) {
        mix(static_cast<std::size_t>(n_));
        mix(static_cast<std::size_t>(d_));
        return seed;
    }
    for (mpz_srcptr z : {big_->get_num_mpz_t(), big_->get_den_mpz_t()}) {
        mix(static_cast<std::size_t>(mpz_sgn(z) + 2));
        for (std::size_t i = 0; i < mpz_size(z); ++i)
            mix(static_cast<std::size_t>(mpz_getlimbn(z, static_cast<mp_size_t>(i))));
    }
    return seed;
}

Rational Rational::operator-() const {
    Rational r;
    if (big_) {
        r.set_big(-*big_);
    } else {
        r.n_ = -n_;
        r.d_ = d_;
    }
    return r;
}

Rational Rational::inverse() const {
    if (is_zero()) throw std::domain_error("Rational: division by zero");
    Rational r;
    if (big_) {
        r.set_big(1 / *big_);
    } else if (n_ < 0) {
        r.n_ = -d_;
        r.d_ = -n_;
    } else {
        r.n_ = d_;
        r.d_ = n_;
    }
    return r;
}

Rational operator+(const Rational& x, const Rational& y) {
    Rational r;
    if (x.big_ || y.big_) {
        r.set_big(x.to_mpq() + y.to_mpq());
    } else if (x.d_ == y.d_) {
        r.set_wide(static_cast<i128>(x.n_) + y.n_, x.d_);
    } else {
        r.set_wide(static_cast<i128>(x.n_) * y.d_ + static_cast<i128>(y.n_) * x.d_, static_cast<i128>(x.d_) * y.d_);
    }
    return r;
}

Rational operator-(const Rational& x, const Rational& y) { return x + (-y); }

Rational operator*(const Rational& x, const Rational& y) {
    Rational r;
    if (x.big_ || y.big_) {
        r.set_big(x.to_mpq() * y.to_mpq());
        return r;
    }
    if (x.n_ == 0 || y.n_ == 0) return r;
    // Cross-cancel so the product is already in lowest terms.
    const std::int64_t g1 = gcd64(x.n_, y.d_);
    const std::int64_t g2 = gcd64(y.n_, x.d_);
    const i128 num = static_cast<i128>(x.n_ / g1) * (y.n_ / g2);
    const i128 den = static_cast<i128>(x.d_ / g2) * (y.d_ / g1);
    if (fits(num) && fits(den)) {
        r.n_ = static_cast<std::int64_t>(num);
        r.d_ = static_cast<std::int64_t>(den);
    } else {
        r.set_wide(num, den);
    }
    return r;
}

int cmp(const Rational& x, const Rational& y) {
    if (x.big_ || y.big_) return cmp(x.to_mpq(), y.to_mpq());
    const i128 l = static_cast<i128>(x.n_) * y.d_;
    const i128 r = static_cast<i128>(y.n_) * x.d_;
    return (l > r) - (l < r);
}

}  // namespace h4
