#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qsp/uq.hpp"

namespace qsp {

/// Ordered PBW monomial: nondecreasing root indices, E_{β_{k₁}} E_{β_{k₂}} ⋯.
using PbwMono = std::vector<int>;

/// Element of U⁺ in the PBW basis attached to a reduced word of w₀.
class PbwElem {
public:
    using Terms = std::map<PbwMono, Scalar>;
    const Terms& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    void add(const PbwMono& m, const Scalar& c);

    PbwElem& operator+=(const PbwElem& o);
    PbwElem& operator-=(const PbwElem& o);
    PbwElem& operator*=(const Scalar& c);
    friend PbwElem operator+(PbwElem a, const PbwElem& b) { return a += b; }
    friend PbwElem operator-(PbwElem a, const PbwElem& b) { return a -= b; }
    friend PbwElem operator*(const Scalar& c, PbwElem a) { return a *= c; }
    friend bool operator==(const PbwElem& a, const PbwElem& b) { return a.t_ == b.t_; }
    friend bool operator!=(const PbwElem& a, const PbwElem& b) { return !(a == b); }

private:
    Terms t_;
};

/// Root vectors E_{β_k} = T_{i₁}⋯T_{i_{k−1}}(E_{i_k}) for β_k = s_{i₁}⋯s_{i_{k−1}}(α_{i_k}), and
/// straightening of products through the commutation rule
///   E_{β_k} E_{β_j} ∈ span of ordered monomials in β_j, …, β_k   (j < k),
/// whose coefficients are solved exactly in derivation coordinates. Ordered monomials form a
/// basis of U⁺, so equality of normal forms is equality in U⁺. Memo tables are not locked;
/// use one instance per thread.
class PbwBasis {
public:
    PbwBasis(const RootDatum& rd, const Word& w0);
    /// Cached instance for the lexicographically smallest reduced word of w₀.
    static const PbwBasis& of(const RootDatum& rd);

    const RootDatum& datum() const { return *rd_; }
    std::size_t size() const { return roots_.size(); }
    const IVec& root(int k) const { return roots_[static_cast<std::size_t>(k)]; }
    const Word& word() const { return word_; }
    IVec weight(const PbwMono& m) const;

    PbwElem one() const;
    PbwElem E(int i) const;
    PbwElem mul(const PbwElem& x, const PbwElem& y) const;
    PbwElem pow(const PbwElem& x, int n) const;
    /// x y − c y x.
    PbwElem qcomm(const PbwElem& x, const PbwElem& y, const Scalar& c) const;
    /// x must be E-only (after semantic pruning).
    PbwElem from_alg(const AlgElem& x) const;
    PbwElem from_uvec(const UVec& x) const;
    UVec to_uvec(const PbwElem& x, const IVec& mu) const;
    /// The left skew derivation _ir.
    PbwElem skew_l(int i, const PbwElem& x) const;

    std::string str(const PbwElem& x) const;

private:
    PbwElem mul_root(const PbwMono& m, int b) const;
    PbwElem mul_root(const PbwElem& x, int b) const;
    const PbwElem& relation(int b, int g) const;  // E_g E_b, b < g
    const PbwElem& skew_root(int i, int k) const;
    PbwElem skew_mono(int i, const PbwMono& m) const;
    std::vector<PbwMono> monomials(const IVec& mu, int lo, int hi) const;
    UVec mono_uvec(const PbwMono& m) const;

    const RootDatum* rd_;
    Word word_;
    std::vector<IVec> roots_;
    std::vector<UVec> vecs_;
    std::vector<int> simple_;  // simple_[i] = k with β_k = α_i
    mutable std::map<std::pair<int, int>, PbwElem> rel_;
    mutable std::map<std::pair<int, int>, PbwElem> skew_;
    mutable std::map<std::pair<PbwMono, int>, PbwElem> mul_;
    mutable std::map<std::pair<int, PbwMono>, PbwElem> der_;
};

/// Coefficients a with Σ a_j cols[j] = rhs, if any (exact; pivot rows found modulo a prime).
std::optional<std::vector<Scalar>> solve_in_coordinates(const std::vector<UVec>& cols, const UVec& rhs);

}  // namespace qsp
