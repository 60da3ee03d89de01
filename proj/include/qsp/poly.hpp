#pragma once

#include <string>
#include <vector>

#include "qsp/integer.hpp"

namespace qsp {

/// Dense univariate polynomial over ℤ, coefficients stored low degree first, no trailing zeros.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }
    static Poly constant(const Int& v) { return v.is_zero() ? Poly() : Poly(std::vector<Int>{v}); }
    static Poly monomial(const Int& v, int degree);

    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const Int& coeff(int k) const;
    const Int& lead() const { return c_.back(); }
    const std::vector<Int>& coeffs() const { return c_; }
    /// Index of the lowest nonzero coefficient (0 for the zero polynomial).
    int valuation() const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly scaled(const Int& k) const;
    Poly shifted(int k) const;  // multiply by q^k, k >= 0
    Poly unshifted(int k) const;  // divide by q^k, requires valuation >= k
    Poly reversed() const;        // q^deg · p(1/q), assumes p(0) != 0 for an exact round trip

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Int content() const;
    Poly divexact(const Int& k) const;
    /// Exact quotient a / b when b divides a over ℤ[q]; returns false otherwise.
    static bool try_divide(const Poly& a, const Poly& b, Poly& quot);
    Poly divexact(const Poly& b) const;
    /// gcd over ℤ[q], normalized to positive leading coefficient.
    static Poly gcd(const Poly& a, const Poly& b);

    Int eval(const Int& x) const;
    std::size_t hash() const;
    /// Human-readable form in descending powers, e.g. "q^2-1".
    std::string str(const std::string& var = "q") const;

private:
    void trim();
    std::vector<Int> c_;
};

}  // namespace qsp
