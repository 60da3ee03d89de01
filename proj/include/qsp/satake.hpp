#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qsp/report.hpp"
#include "qsp/scalar.hpp"
#include "qsp/weyl.hpp"

namespace qsp {

/// Satake diagram (J, X, τ). The support J is all of I unless the diagram was cut out
/// as a subdiagram; indices always refer to the ambient root datum.
struct SatakeDiagram {
    RootDatum datum;
    std::vector<int> nodes;  // J, sorted
    std::vector<int> X;      // black nodes, sorted, X ⊆ J
    std::vector<int> tau;    // permutation of I, identity outside J
    std::string name;

    static SatakeDiagram make(const RootDatum& rd, std::vector<int> X, std::vector<int> tau, std::string name = "");

    int size() const { return datum.rank(); }
    bool contains(int i) const;
    bool in_X(int i) const;
    bool is_white(int i) const { return contains(i) && !in_X(i); }
    std::vector<int> white() const;
    /// Number of τ-orbits of white nodes.
    int rank() const;
};

struct PropertyCheck {
    int property;  // 0: τ is a diagram automorphism with τ(X) = X, 1..3 as in the definition
    bool ok;
    std::string detail;
};

struct SatakeReport {
    bool valid = true;
    std::vector<PropertyCheck> checks;
    std::string str() const;
};

SatakeReport validate_satake(const SatakeDiagram& d);

/// Rank-one subdiagram ({i,τ(i)} ∪ X^i, X^i, τ|) with X^i the components of X adjacent to i or τ(i).
SatakeDiagram subdiagram(const SatakeDiagram& d, int i);
/// Subdiagram generated by a τ-stable set of white nodes.
SatakeDiagram subdiagram(const SatakeDiagram& d, const std::vector<int>& white_nodes);

/// Θ = −w_X∘τ together with the restricted root data and the restricted Weyl group.
struct RestrictedData {
    WeylElem w_X;
    std::vector<IVec> theta;          // Θ(α_j), zero vector for j outside the support
    std::vector<int> reps;            // smallest node of each τ-orbit of white nodes
    std::vector<int> rep_of;          // node -> its orbit representative, -1 on X or outside
    std::vector<Weight> alpha_tilde;  // indexed by node, meaningful on white nodes
    std::vector<WeylElem> s_tilde;    // indexed by node, meaningful on white nodes
    std::map<std::pair<int, int>, int> coxeter;  // m̃ for pairs of representatives
    Word w0_tilde;                    // letters are representatives; lexicographically smallest
    WeylElem w0_tilde_elem;
    std::string restricted_type;
    bool non_reduced = false;         // Σ contains both β and 2β

    IVec theta_of(const IVec& v) const;
    Weight theta_of(const Weight& v) const;
    /// s̃_{w[0]} s̃_{w[1]} ⋯ as an element of W.
    WeylElem tilde_elem(const Word& w) const;
    /// l(s̃_{i1}⋯s̃_{ik}) = Σ l(s̃_{ij}).
    bool is_tilde_reduced(const Word& w) const;
    /// All reduced words of w over S̃ (w must lie in W̃).
    std::vector<Word> tilde_reduced_words(const WeylElem& w) const;
    /// All elements of W̃ of restricted length ≤ k, each with one reduced word.
    std::vector<std::pair<WeylElem, Word>> tilde_ball(int k) const;
};

RestrictedData restricted_data(const SatakeDiagram& d);

/// Restricted length λ by breadth-first search in the Cayley graph of (W̃, S̃), independent of
/// the length in W. Checks l(w̃) = Σ l(s̃_{i_k}) along a λ-reduced word for every w̃ with λ ≤ 2k,
/// and l(w̃w̃′) = l(w̃) + l(w̃′) whenever λ(w̃), λ(w̃′) ≤ k and λ(w̃w̃′) = λ(w̃) + λ(w̃′).
CheckReport length_additivity_check(const RestrictedData& r, int k);

/// Names a restricted root system from its Coxeter matrix and root lengths, e.g. "B2", "A1xA1", "BC1".
std::string classify_restricted(const SatakeDiagram& d, const RestrictedData& r);

struct ParamError : std::runtime_error {
    ParamError(const std::string& equation, const std::string& msg)
        : std::runtime_error(equation + ": " + msg), equation(equation) {}
    std::string equation;
};

/// QSP parameters, all vectors indexed by node.
struct ParamSet {
    std::vector<Scalar> c;
    std::vector<Scalar> s;
    std::vector<Scalar> sfun;
    std::vector<Scalar> ctilde_sq;
    std::vector<std::optional<Scalar>> ctilde;
    bool s_is_zero() const;
};

/// I_ns: white τ-fixed nodes orthogonal to X.
std::vector<int> ins_set(const SatakeDiagram& d);

/// The exponent (α_i, Θ(α_i) − 2ρ_X) of the c-condition.
int ccond_exponent(const SatakeDiagram& d, const RestrictedData& r, int i);

/// Default s(·): 1 on X and fixed points; on a τ-pair the smaller node gets 1.
std::vector<Scalar> default_sfun(const SatakeDiagram& d);

ParamSet build_params(const SatakeDiagram& d, const RestrictedData& r, const std::map<int, Scalar>& c,
                      const std::map<int, Scalar>& s, const std::optional<std::vector<Scalar>>& sfun = std::nullopt);

/// Diagram plus parameters as read from a JSON spec file (1-based indices on disk).
struct DiagramSpec {
    SatakeDiagram diagram;
    std::map<int, Scalar> c;  // 0-based keys
    std::map<int, Scalar> s;
};

struct SpecParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

DiagramSpec parse_diagram_spec(const std::string& json_text);
DiagramSpec load_diagram_spec(const std::string& path);
std::string diagram_spec_json(const DiagramSpec& spec);

}  // namespace qsp
