#pragma once

#include <iosfwd>
#include <string>

#include "qsp/poly.hpp"

namespace qsp {

/// Exact element of ℚ(q).
///
/// Stored as q^e · N/D with N(0) ≠ 0, D(0) ≠ 0, gcd(N, D) = 1 in ℤ[q] and lc(D) > 0,
/// which makes the representation unique. numerator()/denominator() expose the usual
/// coprime pair with negative q-powers moved into the denominator.
class Scalar {
public:
    Scalar() = default;
    Scalar(std::int64_t v) : num_(Poly::constant(Int(v))), den_(Poly::constant(Int(1))) {}  // NOLINT
    explicit Scalar(const Int& v) : num_(Poly::constant(v)), den_(Poly::constant(Int(1))) {}
    /// Builds num/den and brings it into canonical form.
    static Scalar fraction(const Poly& num, const Poly& den);
    static Scalar q_pow(int k);
    static Scalar laurent(const Poly& p, int shift);  // q^shift · p
    static Scalar parse(const std::string& text);

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return shift_ == 0 && num_.is_one() && den_.is_one(); }
    bool is_laurent() const { return den_.is_one(); }

    Poly numerator() const;
    Poly denominator() const;
    int shift() const { return shift_; }
    const Poly& core_num() const { return num_; }
    const Poly& core_den() const { return den_; }

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);
    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    Scalar inverse() const;
    Scalar pow(int k) const;
    Scalar times_q_pow(int k) const;

    /// q ↦ q⁻¹.
    Scalar bar() const;

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.shift_ == b.shift_ && a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    std::size_t hash() const;
    /// Parseable text: Laurent polynomials as sums of q-powers, otherwise "(num)/(den)".
    std::string str() const;
    std::string latex() const;

private:
    void canonicalize();
    int shift_ = 0;
    Poly num_;
    Poly den_ = Poly::constant(Int(1));
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

Scalar bar_scalar(const Scalar& a);

}  // namespace qsp
