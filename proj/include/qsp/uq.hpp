#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qsp/uvec.hpp"

namespace qsp {

/// Normally ordered monomial F_{f₁}⋯F_{f_a} K_k E_{e₁}⋯E_{e_b}.
struct Monomial {
    Word f;
    IVec k;
    Word e;
    friend bool operator<(const Monomial& a, const Monomial& b) {
        if (a.f != b.f) return a.f < b.f;
        if (a.k != b.k) return a.k < b.k;
        return a.e < b.e;
    }
    friend bool operator==(const Monomial& a, const Monomial& b) { return a.f == b.f && a.k == b.k && a.e == b.e; }
    bool is_one() const;
    /// wt(e) − wt(f).
    IVec weight(std::size_t n) const;
    std::string str() const;
};

using Terms = std::map<Monomial, Scalar>;

/// Element of U_q(g) as a combination of normally ordered monomials. The representation is
/// not unique (no Serre reduction); semantic equality goes through is_zero().
class AlgElem {
public:
    AlgElem() = default;
    explicit AlgElem(const RootDatum& rd);
    static AlgElem scalar(const RootDatum& rd, const Scalar& c);
    static AlgElem E(const RootDatum& rd, int i);
    static AlgElem F(const RootDatum& rd, int i);
    static AlgElem K(const RootDatum& rd, const IVec& kappa);
    static AlgElem K(const RootDatum& rd, int i, int power = 1);
    static AlgElem E_word(const RootDatum& rd, const Word& w);
    static AlgElem F_word(const RootDatum& rd, const Word& w);
    static AlgElem from_uvec(const UVec& x);
    /// Inverse of json(); throws std::invalid_argument on malformed input.
    static AlgElem from_json(const RootDatum& rd, const std::string& text);

    const RootDatum& datum() const { return *rd_; }
    const Terms& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool structurally_zero() const { return terms_.empty(); }
    void add_term(const Monomial& m, const Scalar& c);

    AlgElem& operator+=(const AlgElem& o);
    AlgElem& operator-=(const AlgElem& o);
    AlgElem& operator*=(const Scalar& c);
    friend AlgElem operator+(AlgElem a, const AlgElem& b) { return a += b; }
    friend AlgElem operator-(AlgElem a, const AlgElem& b) { return a -= b; }
    friend AlgElem operator*(const Scalar& c, AlgElem a) { return a *= c; }
    friend AlgElem operator*(const AlgElem& a, const AlgElem& b);
    AlgElem operator-() const;
    AlgElem pow(int k) const;

    /// True iff every term has no F and K = 1.
    bool is_e_only() const;
    /// Terms with no F and K = 1.
    AlgElem e_part() const;
    bool is_f_only() const;
    AlgElem f_part() const;

    std::string str() const;
    std::string latex() const;
    std::string json() const;

private:
    const RootDatum* rd_ = nullptr;
    Terms terms_;
};

/// Semantic zero test via two-leg derivation coordinates, group by group.
bool is_zero(const AlgElem& x);
inline bool equal(const AlgElem& a, const AlgElem& b) { return is_zero(a - b); }

/// If x equals an element of U⁺ (all other groups vanish), its E-part; otherwise nullopt.
std::optional<AlgElem> as_e_only(const AlgElem& x);
std::optional<AlgElem> as_f_only(const AlgElem& x);
/// Coordinates of an element of U⁺_μ; x must be E-only and homogeneous (checked).
UVec to_uvec(const AlgElem& x);
/// Coordinates of an F-only homogeneous element through the swap F_i ↦ E_i.
UVec to_uvec_f(const AlgElem& x);

/// x y − c y x.
AlgElem qcomm(const AlgElem& x, const AlgElem& y, const Scalar& c);

/// Lusztig's T''_{i,1} and its inverse T'_{i,−1}.
AlgElem lusztig_T(int i, const AlgElem& x);
AlgElem lusztig_T_inv(int i, const AlgElem& x);
/// T_{w₁} ∘ ⋯ ∘ T_{w_k}(x). Intermediate results that lie in U⁺ (or U⁻) are pruned to their E-part (F-part).
AlgElem T_word(const Word& w, const AlgElem& x);
AlgElem T_word_inv(const Word& w, const AlgElem& x);

/// Bar involution: q ↦ q⁻¹, E_i, F_i fixed, K_μ ↦ K_{−μ}.
AlgElem bar_u(const AlgElem& x);

/// Element of U ⊗ U.
class TensorElem {
public:
    using Key = std::pair<Monomial, Monomial>;
    TensorElem() = default;
    explicit TensorElem(const RootDatum& rd);
    static TensorElem pure(const AlgElem& a, const AlgElem& b);

    const RootDatum& datum() const { return *rd_; }
    const std::map<Key, Scalar>& terms() const { return terms_; }
    void add_term(const Key& k, const Scalar& c);

    TensorElem& operator+=(const TensorElem& o);
    TensorElem& operator-=(const TensorElem& o);
    TensorElem& operator*=(const Scalar& c);
    friend TensorElem operator+(TensorElem a, const TensorElem& b) { return a += b; }
    friend TensorElem operator-(TensorElem a, const TensorElem& b) { return a -= b; }
    friend TensorElem operator*(const TensorElem& a, const TensorElem& b);
    std::string str() const;

private:
    const RootDatum* rd_ = nullptr;
    std::map<Key, Scalar> terms_;
};

bool is_zero(const TensorElem& x);

TensorElem coproduct(const AlgElem& x);
Scalar counit(const AlgElem& x);

}  // namespace qsp
