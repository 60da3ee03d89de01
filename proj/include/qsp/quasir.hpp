#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qsp/report.hpp"
#include "qsp/uq.hpp"

namespace qsp {

/// Truncated element of ∏_μ U⁻_{−μ} ⊗ U⁺_μ.
///
/// The left leg goes through the algebra isomorphism U⁻ → U⁺, F_i ↦ E_i, so a component is a
/// matrix M[a][b] over word coordinates of both legs: Σ_k x_k ⊗ y_k is stored as
/// Σ_k coords(x_k) ⊗ coords(y_k). Row a holds the right-leg vector paired with left word a.
class RSeries {
public:
    RSeries() = default;
    RSeries(const RootDatum& rd, int height);
    static RSeries one(const RootDatum& rd, int height);

    const RootDatum& datum() const { return *rd_; }
    int height() const { return height_; }
    std::vector<IVec> weights() const;
    bool has(const IVec& mu) const { return comp_.count(mu) > 0; }
    /// Adds x ⊗ y, x given through F ↦ E.
    void add_pure(const UVec& x, const UVec& y);
    /// Component at μ as an element of U ⊗ U (zero if absent).
    TensorElem tensor(const IVec& mu) const;

    friend RSeries operator*(const RSeries& a, const RSeries& b);
    friend bool operator==(const RSeries& a, const RSeries& b);
    friend bool operator!=(const RSeries& a, const RSeries& b) { return !(a == b); }
    std::optional<IVec> first_difference(const RSeries& o) const;

    std::string str() const;
    std::string json() const;

private:
    using Rows = std::vector<UVec>;
    void add_rows(const IVec& mu, std::size_t a, const UVec& row);
    void clean();

    const RootDatum* rd_ = nullptr;
    int height_ = 0;
    std::map<IVec, Rows> comp_;
};

/// R_i = Σ_r (−1)^r q_i^{−r(r−1)/2} (q_i − q_i⁻¹)^r / [r]_i! F_i^r ⊗ E_i^r, truncated at N.
RSeries rank_one_R(const RootDatum& rd, int i, int N);

/// (T_{i₁}⋯T_{i_{j−1}} ⊗ T_{i₁}⋯T_{i_{j−1}})(R_{i_j}) for j = prefix.size() + 1.
RSeries R_factor(const RootDatum& rd, const Word& prefix, int i, int N);

/// R^{[t]}⋯R^{[1]} along a reduced word of w₀. Throws std::invalid_argument otherwise.
RSeries R_factored(const RootDatum& rd, const Word& word, int N);

/// Which side the plain coproduct sits on in the intertwining identity.
enum class RSide {
    DeltaLeft,   // Δ(u)·R = R·Δ̄(u)
    DeltaRight,  // R·Δ(u) = Δ̄(u)·R
};

/// Checks the identity for u ∈ {E_i, F_i, K_i}, where Δ̄ = (bar ⊗ bar)∘Δ∘bar. Only the graded
/// pieces whose right-leg weight has height ≤ N − 1 are compared; those are fully determined
/// by the components of R up to height N.
CheckReport verify_R_intertwiner(const RSeries& R, int i, int N, RSide side = RSide::DeltaLeft);

}  // namespace qsp
