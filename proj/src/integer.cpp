#include "qsp/integer.hpp"

#include <functional>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace qsp {

namespace {

bool fits_int64(const mpz_class& z) {
    return mpz_fits_slong_p(z.get_mpz_t()) != 0 && sizeof(long) == 8;
}

}  // namespace

Int::Int(const std::string& decimal) {
    mpz_class z;
    if (z.set_str(decimal, 10) != 0) throw std::invalid_argument("bad integer literal: " + decimal);
    assign(z);
}

void Int::assign(const mpz_class& z) {
    if (fits_int64(z)) {
        small_ = z.get_si();
        big_.reset();
    } else {
        small_ = 0;
        big_ = std::make_unique<mpz_class>(z);
    }
}

void Int::normalize() {
    if (big_ && fits_int64(*big_)) {
        small_ = big_->get_si();
        big_.reset();
    }
}

int Int::sign() const {
    if (big_) return sgn(*big_);
    return (small_ > 0) - (small_ < 0);
}

Int Int::operator-() const {
    if (!big_ && small_ != std::numeric_limits<std::int64_t>::min()) return Int(-small_);
    Int r;
    r.assign(-to_mpz());
    return r;
}

Int& Int::operator+=(const Int& o) {
    if (!big_ && !o.big_) {
        std::int64_t r;
        if (!__builtin_add_overflow(small_, o.small_, &r)) {
            small_ = r;
            return *this;
        }
    }
    assign(to_mpz() + o.to_mpz());
    return *this;
}

Int& Int::operator-=(const Int& o) {
    if (!big_ && !o.big_) {
        std::int64_t r;
        if (!__builtin_sub_overflow(small_, o.small_, &r)) {
            small_ = r;
            return *this;
        }
    }
    assign(to_mpz() - o.to_mpz());
    return *this;
}

Int& Int::operator*=(const Int& o) {
    if (!big_ && !o.big_) {
        std::int64_t r;
        if (!__builtin_mul_overflow(small_, o.small_, &r)) {
            small_ = r;
            return *this;
        }
    }
    assign(to_mpz() * o.to_mpz());
    return *this;
}

Int& Int::divexact(const Int& o) {
    if (o.is_zero()) throw std::domain_error("integer division by zero");
    if (!big_ && !o.big_ && !(small_ == std::numeric_limits<std::int64_t>::min() && o.small_ == -1)) {
        small_ /= o.small_;
        return *this;
    }
    mpz_class r;
    mpz_class a = to_mpz();
    mpz_class b = o.to_mpz();
    mpz_divexact(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    assign(r);
    return *this;
}

bool operator==(const Int& a, const Int& b) {
    if (!a.big_ && !b.big_) return a.small_ == b.small_;
    if (a.big_ && b.big_) return *a.big_ == *b.big_;
    return false;  // normalized: a big value never fits in int64
}

int cmp(const Int& a, const Int& b) {
    if (!a.big_ && !b.big_) return (a.small_ > b.small_) - (a.small_ < b.small_);
    int c = ::cmp(a.to_mpz(), b.to_mpz());
    return (c > 0) - (c < 0);
}

void Int::tdiv(const Int& a, const Int& b, Int& quot, Int& rem) {
    if (b.is_zero()) throw std::domain_error("integer division by zero");
    if (!a.big_ && !b.big_ && !(a.small_ == std::numeric_limits<std::int64_t>::min() && b.small_ == -1)) {
        quot = Int(a.small_ / b.small_);
        rem = Int(a.small_ % b.small_);
        return;
    }
    mpz_class q, r;
    mpz_class az = a.to_mpz();
    mpz_class bz = b.to_mpz();
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), az.get_mpz_t(), bz.get_mpz_t());
    quot.assign(q);
    rem.assign(r);
}

bool Int::divisible_by(const Int& d) const {
    if (d.is_zero()) return is_zero();
    if (!big_ && !d.big_) {
        if (d.small_ == -1) return true;
        return small_ % d.small_ == 0;
    }
    mpz_class az = to_mpz();
    mpz_class dz = d.to_mpz();
    return mpz_divisible_p(az.get_mpz_t(), dz.get_mpz_t()) != 0;
}

Int Int::gcd(const Int& a, const Int& b) {
    if (!a.big_ && !b.big_ && a.small_ != std::numeric_limits<std::int64_t>::min() &&
        b.small_ != std::numeric_limits<std::int64_t>::min()) {
        return Int(std::gcd(a.small_, b.small_));
    }
    mpz_class g;
    mpz_class az = a.to_mpz();
    mpz_class bz = b.to_mpz();
    mpz_gcd(g.get_mpz_t(), az.get_mpz_t(), bz.get_mpz_t());
    return Int(g);
}

std::size_t Int::bits() const {
    if (big_) return mpz_sizeinbase(big_->get_mpz_t(), 2);
    std::uint64_t v = small_ < 0 ? static_cast<std::uint64_t>(-(small_ + 1)) + 1 : static_cast<std::uint64_t>(small_);
    return v == 0 ? 1 : 64 - static_cast<std::size_t>(__builtin_clzll(v));
}

std::string Int::str() const { return big_ ? big_->get_str() : std::to_string(small_); }

std::size_t Int::hash() const {
    if (!big_) return std::hash<std::int64_t>{}(small_);
    return std::hash<std::string>{}(big_->get_str(16));
}

}  // namespace qsp
