#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qsp/uvec.hpp"

namespace qsp {

/// Truncated element of the completion of U⁺: components indexed by μ ∈ Q⁺ with ht(μ) ≤ height.
/// Missing components are zero.
class GradedSeries {
public:
    GradedSeries() = default;
    GradedSeries(const RootDatum& rd, int height);
    static GradedSeries one(const RootDatum& rd, int height);

    const RootDatum& datum() const { return *rd_; }
    int height() const { return height_; }
    const std::map<IVec, UVec>& components() const { return comp_; }

    /// Component at μ, zero (and correctly shaped) if absent.
    UVec at(const IVec& mu) const;
    bool has(const IVec& mu) const { return comp_.count(mu) > 0; }
    /// Stores x unless it is zero; drops components above the truncation height.
    void set(const IVec& mu, const UVec& x);
    void add(const IVec& mu, const UVec& x);

    /// Nonzero weights by height, then lexicographically.
    std::vector<IVec> weights() const;
    GradedSeries truncated(int h) const;

    friend GradedSeries operator*(const GradedSeries& a, const GradedSeries& b);
    GradedSeries& operator*=(const Scalar& c);

    /// First weight (in weights() order) at which the two series differ, up to min height.
    std::optional<IVec> first_difference(const GradedSeries& o) const;

    std::string str() const;
    std::string latex() const;
    std::string json() const;

private:
    const RootDatum* rd_ = nullptr;
    int height_ = 0;
    std::map<IVec, UVec> comp_;
};

/// Height-then-lex order on weights.
bool weight_less(const IVec& a, const IVec& b);
std::string weight_str(const IVec& mu);

}  // namespace qsp
