#pragma once

#include <cstdint>
#include <memory>
#include <string>

#include <gmpxx.h>

namespace qsp {

/// Arbitrary-precision integer with an inline int64 fast path; spills to GMP on overflow.
class Int {
public:
    Int() = default;
    Int(std::int64_t v) : small_(v) {}  // NOLINT(google-explicit-constructor)
    explicit Int(const mpz_class& z) { assign(z); }
    explicit Int(const std::string& decimal);

    Int(const Int& o) : small_(o.small_), big_(o.big_ ? std::make_unique<mpz_class>(*o.big_) : nullptr) {}
    Int(Int&&) noexcept = default;
    Int& operator=(const Int& o) {
        if (this != &o) {
            small_ = o.small_;
            big_ = o.big_ ? std::make_unique<mpz_class>(*o.big_) : nullptr;
        }
        return *this;
    }
    Int& operator=(Int&&) noexcept = default;

    bool is_small() const { return !big_; }
    std::int64_t small() const { return small_; }
    mpz_class to_mpz() const { return big_ ? *big_ : mpz_class(static_cast<long>(small_)); }

    int sign() const;
    bool is_zero() const { return !big_ && small_ == 0; }
    bool is_one() const { return !big_ && small_ == 1; }

    Int operator-() const;
    Int& operator+=(const Int& o);
    Int& operator-=(const Int& o);
    Int& operator*=(const Int& o);
    /// Exact division; the caller guarantees divisibility.
    Int& divexact(const Int& o);

    friend Int operator+(Int a, const Int& b) { return a += b; }
    friend Int operator-(Int a, const Int& b) { return a -= b; }
    friend Int operator*(Int a, const Int& b) { return a *= b; }

    friend bool operator==(const Int& a, const Int& b);
    friend bool operator!=(const Int& a, const Int& b) { return !(a == b); }
    friend int cmp(const Int& a, const Int& b);
    friend bool operator<(const Int& a, const Int& b) { return cmp(a, b) < 0; }

    /// Truncating division with remainder.
    static void tdiv(const Int& a, const Int& b, Int& quot, Int& rem);
    bool divisible_by(const Int& d) const;

    static Int gcd(const Int& a, const Int& b);
    Int abs() const { return sign() < 0 ? -*this : *this; }
    std::size_t bits() const;
    std::string str() const;
    std::size_t hash() const;

private:
    void assign(const mpz_class& z);
    void normalize();

    std::int64_t small_ = 0;
    std::unique_ptr<mpz_class> big_;
};

}  // namespace qsp
