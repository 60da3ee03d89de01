#include "qsp/series.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"
#include "qsp/uq.hpp"

namespace qsp {

bool weight_less(const IVec& a, const IVec& b) {
    int ha = height(a), hb = height(b);
    if (ha != hb) return ha < hb;
    return a < b;
}

std::string weight_str(const IVec& mu) {
    std::string s = "(";
    for (std::size_t i = 0; i < mu.size(); ++i) s += (i ? "," : "") + std::to_string(mu[i]);
    return s + ")";
}

GradedSeries::GradedSeries(const RootDatum& rd, int height) : rd_(&RootDatum::interned(rd.label())), height_(height) {}

GradedSeries GradedSeries::one(const RootDatum& rd, int height) {
    GradedSeries s(rd, height);
    s.set(IVec(static_cast<std::size_t>(rd.rank()), 0), UVec::one(rd));
    return s;
}

UVec GradedSeries::at(const IVec& mu) const {
    auto it = comp_.find(mu);
    if (it != comp_.end()) return it->second;
    return UVec(*rd_, mu);
}

void GradedSeries::set(const IVec& mu, const UVec& x) {
    if (qsp::height(mu) > height_ || x.is_zero()) {
        comp_.erase(mu);
        return;
    }
    comp_[mu] = x;
}

void GradedSeries::add(const IVec& mu, const UVec& x) {
    if (qsp::height(mu) > height_) return;
    auto it = comp_.find(mu);
    if (it == comp_.end()) {
        if (!x.is_zero()) comp_.emplace(mu, x);
        return;
    }
    it->second += x;
    if (it->second.is_zero()) comp_.erase(it);
}

std::vector<IVec> GradedSeries::weights() const {
    std::vector<IVec> w;
    for (const auto& [mu, x] : comp_) w.push_back(mu);
    std::sort(w.begin(), w.end(), weight_less);
    return w;
}

GradedSeries GradedSeries::truncated(int h) const {
    GradedSeries r(*rd_, std::min(h, height_));
    for (const auto& [mu, x] : comp_) r.set(mu, x);
    return r;
}

GradedSeries operator*(const GradedSeries& a, const GradedSeries& b) {
    GradedSeries r(a.datum(), std::min(a.height_, b.height_));
    for (const auto& [ma, xa] : a.comp_)
        for (const auto& [mb, xb] : b.comp_) {
            if (qsp::height(ma) + qsp::height(mb) > r.height_) continue;
            IVec mu = ma;
            for (std::size_t k = 0; k < mu.size(); ++k) mu[k] += mb[k];
            r.add(mu, xa * xb);
        }
    return r;
}

GradedSeries& GradedSeries::operator*=(const Scalar& c) {
    if (c.is_zero()) comp_.clear();
    for (auto& [mu, x] : comp_) x *= c;
    return *this;
}

std::optional<IVec> GradedSeries::first_difference(const GradedSeries& o) const {
    const int h = std::min(height_, o.height_);
    std::vector<IVec> all;
    for (const auto& [mu, x] : comp_)
        if (qsp::height(mu) <= h) all.push_back(mu);
    for (const auto& [mu, x] : o.comp_)
        if (qsp::height(mu) <= h && !comp_.count(mu)) all.push_back(mu);
    std::sort(all.begin(), all.end(), weight_less);
    for (const auto& mu : all)
        if (at(mu) != o.at(mu)) return mu;
    return std::nullopt;
}

std::string GradedSeries::str() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& mu : weights()) {
        if (!first) os << "\n";
        first = false;
        os << weight_str(mu) << ": " << AlgElem::from_uvec(comp_.at(mu)).str();
    }
    if (first) os << "0";
    return os.str();
}

std::string GradedSeries::latex() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& mu : weights()) {
        if (!first) os << "\n";
        first = false;
        os << "\\mathfrak{X}_{" << weight_str(mu) << "} &= " << AlgElem::from_uvec(comp_.at(mu)).latex() << " \\\\";
    }
    return os.str();
}

std::string GradedSeries::json() const {
    nlohmann::ordered_json out;
    out["height"] = height_;
    nlohmann::ordered_json comps = nlohmann::ordered_json::array();
    for (const auto& mu : weights()) {
        nlohmann::ordered_json c;
        c["weight"] = mu;
        c["terms"] = nlohmann::ordered_json::parse(AlgElem::from_uvec(comp_.at(mu)).json());
        comps.push_back(c);
    }
    out["components"] = comps;
    return out.dump();
}

}  // namespace qsp
