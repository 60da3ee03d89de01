#pragma once

#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qsp/satake.hpp"
#include "qsp/report.hpp"
#include "qsp/series.hpp"
#include "qsp/uq.hpp"

namespace qsp {

/// Diagram, restricted data, validated parameters and the generators X_i, B_i.
struct QSPData {
    SatakeDiagram diagram;
    RestrictedData restricted;
    ParamSet params;
    Word wX_word;                 // reduced word of w_X
    std::vector<AlgElem> TwX_E;   // T_{w_X}(E_{τ(i)}) for white i
    std::vector<AlgElem> X;       // X_i, zero off the white nodes
    std::vector<AlgElem> B;       // B_i on white nodes, F_j on X

    static QSPData make(const SatakeDiagram& d, const std::map<int, Scalar>& c, const std::map<int, Scalar>& s = {},
                        const std::optional<std::vector<Scalar>>& sfun = std::nullopt);
    static QSPData from_spec(const DiagramSpec& spec) { return make(spec.diagram, spec.c, spec.s); }

    const RootDatum& datum() const { return diagram.datum; }
    /// QSP data of the rank-one subdiagram at i with the inherited parameters.
    QSPData rank_one_sub(int i) const;
    /// Default truncation: 8 for rank ≤ 2 with at most four simple roots in the support, else 6.
    int default_height() const;
};

using KSeries = GradedSeries;

struct InconsistentSystem : std::runtime_error {
    InconsistentSystem(const IVec& mu, int i, const std::string& msg);
    IVec mu;
    int node;
};

/// The quasi K-matrix by the skew-derivative recursion, weight by weight.
KSeries solve_qkm(const QSPData& qsp, int height);

/// Σ_k coeff(k) · gen^k.
struct SeriesFactor {
    AlgElem gen;
    std::function<Scalar(int)> coeff;
};

/// The rank-one quasi K-matrix at a white node as an ordered product of one-generator series,
/// when the rank-one subdiagram is one of the type-A shapes with a closed formula.
struct RankOneForm {
    std::string shape;  // "AI1", "AII3", "AIII11", "AIV"
    std::vector<SeriesFactor> factors;
};
std::optional<RankOneForm> rank_one_form(const QSPData& qsp, int i);

/// Closed-form rank-one quasi K-matrix at the (single) white orbit of a rank-one diagram.
/// Shapes without a closed formula fall back to solve_qkm.
KSeries rank_one_qkm(const QSPData& qsp, int height);
/// Quasi K-matrix of the rank-one subdiagram at i, inside the ambient algebra.
KSeries rank_one_qkm_at(const QSPData& qsp, int i, int height);

struct OmegaError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Scalar by which Ω_{chain[0]} ∘ ⋯ ∘ Ω_{chain[k−1]} rescales the braid image of an element of weight μ.
Scalar omega_scalar(const QSPData& qsp, const Word& chain, const IVec& mu);
/// Ω_i(x) for an E-only homogeneous x of weight μ ∈ Q⁺(2Σ).
AlgElem omega(const QSPData& qsp, int i, const AlgElem& x);

/// The factors 𝔛^{[1]}, …, 𝔛^{[t]} of a reduced word in S̃.
std::vector<KSeries> partial_factors(const QSPData& qsp, const Word& word, int height);
/// 𝔛^{[t]} ⋯ 𝔛^{[1]}.
KSeries partial_qkm(const QSPData& qsp, const Word& word, int height);

/// Oracle vs. partial_qkm(w̃₀). All reduced words in rank ≤ 2, else the first `sample` words.
CheckReport check_theoremA(const QSPData& qsp, int height, int sample = 3);
/// partial_qkm over all reduced words of w̃₀ agree (rank two).
CheckReport check_conjectureB(const QSPData& qsp, int height);
/// B_i 𝔛 = 𝔛 bar(B_i), E_j for j ∈ X, and U⁰_Θ, at weights where the truncation is exact.
CheckReport intertwiner_check(const QSPData& qsp, const KSeries& K, int height);
/// _jr(𝔛_μ) = 0 for j ∈ X.
CheckReport derivation_vanishing_check(const QSPData& qsp, const KSeries& K);
/// η(𝔛_{c,s}) = 𝔛_{η(c),η(s)}; eta is a node permutation.
CheckReport diag_aut_check(const QSPData& qsp, const std::vector<int>& eta, int height);
/// Structural check 𝔛^{[t]} = 𝔛_{τ̃₀(i_t)} for every reduced word of w̃₀.
CheckReport last_factor_check(const QSPData& qsp, int height);

/// Node permutation applied to a series: coordinates at w of η(x) are those of x at η⁻¹(w).
KSeries permute_series(const KSeries& K, const std::vector<int>& eta);

}  // namespace qsp
