#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qsp/scalar.hpp"
#include "qsp/weyl.hpp"

namespace qsp {

/// All words with letter multiset μ, in lexicographic order.
struct WordSpace {
    IVec weight;
    std::vector<Word> words;
    std::size_t size() const { return words.size(); }
    /// Position of w in `words`; w must have weight μ.
    std::size_t index(const Word& w) const;
};

/// Cached per (datum, μ); the reference stays valid for the life of the process.
const WordSpace& word_space(const RootDatum& rd, const IVec& mu);

IVec word_weight(const Word& w, std::size_t n);
int height(const IVec& mu);

/// Element of U⁺_μ stored through its iterated skew-derivative coordinates
///   c[w₁…w_k] = (_{w₁}r ∘ ⋯ ∘ _{w_k}r)(x).
/// The coordinate map is injective, so equality of UVecs is equality in U⁺.
class UVec {
public:
    UVec() = default;
    UVec(const RootDatum& rd, IVec mu);
    /// Coordinates of the monomial E_{w₁}⋯E_{w_k}.
    static UVec monomial(const RootDatum& rd, const Word& w);
    static UVec one(const RootDatum& rd);

    const RootDatum& datum() const { return *rd_; }
    const IVec& weight() const { return mu_; }
    const WordSpace& space() const { return *space_; }
    const std::vector<Scalar>& coords() const { return c_; }
    std::vector<Scalar>& coords() { return c_; }
    const Scalar& operator[](std::size_t k) const { return c_[k]; }
    Scalar& operator[](std::size_t k) { return c_[k]; }
    const Scalar& at(const Word& w) const { return c_[space_->index(w)]; }

    bool is_zero() const;
    UVec& operator+=(const UVec& o);
    UVec& operator-=(const UVec& o);
    UVec& operator*=(const Scalar& k);
    friend UVec operator+(UVec a, const UVec& b) { return a += b; }
    friend UVec operator-(UVec a, const UVec& b) { return a -= b; }
    friend UVec operator*(const Scalar& k, UVec a) { return a *= k; }
    UVec operator-() const;
    friend bool operator==(const UVec& a, const UVec& b);
    friend bool operator!=(const UVec& a, const UVec& b) { return !(a == b); }

    /// Product in U⁺ via the q-shuffle rule on coordinates.
    friend UVec operator*(const UVec& x, const UVec& y);
    UVec pow(int k) const;

private:
    const RootDatum* rd_ = nullptr;
    IVec mu_;
    const WordSpace* space_ = nullptr;
    std::vector<Scalar> c_;
};

/// _ir(x): coordinates at v read off x at v·i. Returns an empty (zero) UVec when α_i ≰ μ.
UVec skew_l(int i, const UVec& x);
/// r_i(x): coordinates at v read off x at i·v.
UVec skew_r(int i, const UVec& x);

/// First violated Serre-type constraint, if any. A coordinate vector comes from an element
/// of U⁺ iff it is annihilated by every relation a·S_ij·b, because the operators _ir
/// satisfy the quantum Serre relations.
std::optional<std::string> image_violation(const UVec& c);
inline bool in_image(const UVec& c) { return !image_violation(c).has_value(); }

/// Kostant partition count of μ.
long kostant_count(const RootDatum& rd, const IVec& mu);

/// Rank bounds for the coordinate image of U⁺_μ from a specialisation q ↦ q0 mod p.
/// lower = rank of the monomial coordinate rows; upper = #words − rank of the Serre constraints.
/// Both bounds are rigorous over ℚ(q) since specialisation can only lower a rank.
struct RankBounds {
    long lower;
    long upper;
};
RankBounds coordinate_rank_bounds(const RootDatum& rd, const IVec& mu, long q0 = 7919, long prime = 2147483629);

/// Scalar evaluated at q = q0 modulo p (throws if the denominator vanishes).
long eval_mod(const Scalar& s, long q0, long p);

/// Linear-algebra handle for U⁺_μ: a monomial basis and pivot coordinates.
struct WeightBasis {
    IVec weight;
    std::vector<Word> basis;         // words whose monomials form a basis
    std::vector<std::size_t> pivots;  // coordinate indices with an invertible minor
};
const WeightBasis& weight_basis(const RootDatum& rd, const IVec& mu);

/// Expansion of x in the monomial basis of its weight space (exact, via the pivot minor).
std::vector<std::pair<Word, Scalar>> expand_in_monomials(const UVec& x);

}  // namespace qsp
