#pragma once

#include <string>
#include <vector>

#include "qsp/rootdatum.hpp"

namespace qsp {

using Word = std::vector<int>;  // 0-based letters

/// 1-based letters; comma-separated once the word is longer than nine letters.
std::string word_str(const Word& w);

/// Weyl group element stored through the images w(α_1), …, w(α_n).
class WeylElem {
public:
    WeylElem() = default;
    static WeylElem identity(const RootDatum& rd);
    static WeylElem simple(const RootDatum& rd, int i);
    /// s_{w[0]} s_{w[1]} ⋯
    static WeylElem from_word(const RootDatum& rd, const Word& w);

    const RootDatum& datum() const { return *rd_; }
    const std::vector<IVec>& images() const { return images_; }
    const IVec& image(int i) const { return images_[static_cast<std::size_t>(i)]; }

    IVec act(const IVec& v) const;
    Weight act(const Weight& v) const;

    WeylElem operator*(const WeylElem& o) const;
    WeylElem inverse() const;
    friend bool operator==(const WeylElem& a, const WeylElem& b) { return a.images_ == b.images_; }
    friend bool operator!=(const WeylElem& a, const WeylElem& b) { return !(a == b); }
    friend bool operator<(const WeylElem& a, const WeylElem& b) { return a.images_ < b.images_; }

    bool is_identity() const;
    /// Number of positive roots sent to negative roots.
    int length() const;
    /// True iff l(w s_i) < l(w), i.e. w(α_i) < 0.
    bool has_right_descent(int i) const;
    /// Reduced word obtained by peeling off the smallest right descent repeatedly.
    Word reduced_word() const;

private:
    const RootDatum* rd_ = nullptr;
    std::vector<IVec> images_;
};

/// Longest element of the parabolic subgroup W_J.
WeylElem longest_element(const RootDatum& rd, const std::vector<int>& J);

struct RhoData {
    Weight rho;          // ½ Σ β over Φ⁺_J
    Weight rho_check;    // Σ β/(β,β) over Φ⁺_J, expressed in root coordinates
    std::vector<Rat> alpha_on_rho_check;  // α_j(ρ_J^∨) for every j ∈ I
};

RhoData rho_data(const RootDatum& rd, const std::vector<int>& J);

/// τ₀ with w₀(α_i) = −α_{τ₀(i)}.
std::vector<int> tau0(const RootDatum& rd);

/// All reduced words of w (exhaustive; intended for small lengths).
std::vector<Word> all_reduced_words(const WeylElem& w);

bool is_negative(const IVec& v);
bool is_positive(const IVec& v);

}  // namespace qsp
