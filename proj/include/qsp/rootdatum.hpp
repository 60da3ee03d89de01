#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/rational.hpp>

namespace qsp {

using Rat = boost::rational<std::int64_t>;
using IVec = std::vector<int>;

/// Element of the rational span of the simple roots, in simple-root coordinates.
class Weight {
public:
    Weight() = default;
    explicit Weight(std::size_t n) : c_(n, Rat(0)) {}
    explicit Weight(std::vector<Rat> c) : c_(std::move(c)) {}
    static Weight from_ints(const IVec& v);
    static Weight simple(std::size_t n, int i);

    std::size_t size() const { return c_.size(); }
    const Rat& operator[](std::size_t i) const { return c_[i]; }
    Rat& operator[](std::size_t i) { return c_[i]; }
    const std::vector<Rat>& coords() const { return c_; }

    Rat height() const;
    bool is_zero() const;
    bool is_integral() const;
    /// All coordinates ≥ 0.
    bool is_nonnegative() const;
    IVec to_ints() const;  // requires is_integral()

    Weight& operator+=(const Weight& o);
    Weight& operator-=(const Weight& o);
    friend Weight operator+(Weight a, const Weight& b) { return a += b; }
    friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
    Weight operator-() const;
    friend Weight operator*(const Rat& k, Weight w);

    friend bool operator==(const Weight& a, const Weight& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Weight& a, const Weight& b) { return !(a == b); }
    friend bool operator<(const Weight& a, const Weight& b) { return a.c_ < b.c_; }

    /// e.g. "(a1+a3)/2" style is avoided; prints "1/2*a1+1/2*a3" with 1-based labels.
    std::string str() const;

private:
    std::vector<Rat> c_;
};

std::string rat_str(const Rat& r);

/// Finite-type root datum, Bourbaki numbering, short roots of squared length 2.
class RootDatum {
public:
    RootDatum() = default;
    static RootDatum make(char type, int rank);
    /// Process-lifetime instance, used where elements keep a pointer to their datum.
    static const RootDatum& interned(const std::string& label);
    /// Parses labels such as "A3", "B2", "G2", and products such as "A1xA1".
    static RootDatum from_label(const std::string& label);
    /// Block-diagonal form; nodes of later factors are numbered after earlier ones.
    static RootDatum product(const RootDatum& a, const RootDatum& b);

    /// Type letter of the first simple factor.
    char type() const { return type_; }
    int rank() const { return rank_; }
    const std::string& label() const { return label_; }
    bool is_simple() const { return label_.find('x') == std::string::npos; }

    /// (α_i, α_j), 0-based indices.
    int form(int i, int j) const { return form_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
    /// a_ij = 2(α_i,α_j)/(α_j,α_j).
    int cartan(int i, int j) const { return 2 * form(i, j) / form(j, j); }
    /// d_i = (α_i,α_i)/2.
    int d(int i) const { return form(i, i) / 2; }

    Rat pair(const Weight& a, const Weight& b) const;
    int pair(const IVec& a, const IVec& b) const;
    /// (α_i, v) for an integral vector v.
    int pair_simple(int i, const IVec& v) const;

    Weight reflect(int i, const Weight& w) const;
    IVec reflect(int i, const IVec& v) const;

    /// Positive roots sorted by height, then lexicographically.
    const std::vector<IVec>& positive_roots() const { return positive_; }
    bool is_root(const IVec& v) const;
    bool connected(int i, int j) const { return i != j && form(i, j) != 0; }

    friend bool operator==(const RootDatum& a, const RootDatum& b) {
        return a.label_ == b.label_;
    }

private:
    void build_roots();
    char type_ = 'A';
    int rank_ = 0;
    std::string label_;
    std::vector<IVec> form_;
    std::vector<IVec> positive_;
};

}  // namespace qsp
