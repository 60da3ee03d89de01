#include "qsp/catalogue.hpp"

#include <functional>
#include <stdexcept>

namespace qsp {

std::map<int, Scalar> default_c(const SatakeDiagram& d) {
    RestrictedData r = restricted_data(d);
    const RootDatum& rd = d.datum;
    std::map<int, Scalar> c;
    // c = q^{e/2} for even e; q^{(e−1)/2}(1+q) otherwise. Both satisfy c = q^e bar(c).
    auto half = [](int e) {
        if (e % 2 == 0) return Scalar::q_pow(e / 2);
        return Scalar::fraction(Poly::constant(Int(1)) + Poly::monomial(Int(1), 1), Poly::constant(Int(1)))
            .times_q_pow((e - 1) / 2);
    };
    for (int i : d.white()) {
        const int t = d.tau[static_cast<std::size_t>(i)];
        if (t < i) continue;
        const int e = ccond_exponent(d, r, i);
        IVec ei(static_cast<std::size_t>(rd.rank()), 0);
        ei[static_cast<std::size_t>(i)] = 1;
        if (t == i || rd.pair(ei, r.theta[static_cast<std::size_t>(i)]) == 0) {
            c[i] = half(e);
            c[t] = c[i];
        } else {
            c[i] = Scalar(1);
            c[t] = Scalar::q_pow(e);
        }
    }
    return c;
}

namespace {

struct Entry {
    const char* name;
    const char* label;
    std::vector<int> X;                       // 1-based
    std::vector<std::pair<int, int>> swaps;  // 1-based τ-pairs
};

const std::vector<Entry>& entries() {
    static const std::vector<Entry> e = {
        // rank one
        {"AI1", "A1", {}, {}},
        {"AII3", "A3", {1, 3}, {}},
        {"AIII11", "A1xA1", {}, {{1, 2}}},
        {"AIV2", "A2", {}, {{1, 2}}},
        {"AIV3", "A3", {2}, {{1, 3}}},
        {"AIV4", "A4", {2, 3}, {{1, 4}, {2, 3}}},
        {"BII3", "B3", {2, 3}, {}},
        {"CII3", "C3", {1, 3}, {}},
        {"DII5", "D5", {2, 3, 4, 5}, {}},
        {"FII", "F4", {1, 2, 3}, {}},
        // rank two
        {"AI2", "A2", {}, {}},
        {"AII5", "A5", {1, 3, 5}, {}},
        {"AIII3", "A3", {}, {{1, 3}}},
        {"AIII4", "A4", {}, {{1, 4}, {2, 3}}},
        {"AIII5X", "A5", {3}, {{1, 5}, {2, 4}}},
        {"BI3", "B3", {3}, {}},
        {"CI2", "B2", {}, {}},
        {"CII4", "C4", {1, 3}, {}},
        {"CII5", "C5", {1, 3, 5}, {}},
        {"DI6", "D6", {3, 4, 5, 6}, {}},
        {"DIII4", "D4", {1, 3}, {}},
        {"DIII5", "D5", {1, 3}, {{4, 5}}},
        {"EIII", "E6", {3, 4, 5}, {{1, 6}, {3, 5}}},
        {"EIV", "E6", {2, 3, 4, 5}, {}},
        {"G", "G2", {}, {}},
        // higher rank
        {"AI3", "A3", {}, {}},
        {"AIII5", "A5", {}, {{1, 5}, {2, 4}}},
    };
    return e;
}

}  // namespace

std::vector<std::string> catalogue_names() {
    std::vector<std::string> n;
    for (const auto& e : entries()) n.emplace_back(e.name);
    return n;
}

DiagramSpec catalogue_spec(const std::string& name) {
    for (const auto& e : entries()) {
        if (name != e.name) continue;
        RootDatum rd = RootDatum::from_label(e.label);
        std::vector<int> X, tau(static_cast<std::size_t>(rd.rank()));
        for (int x : e.X) X.push_back(x - 1);
        for (std::size_t k = 0; k < tau.size(); ++k) tau[k] = static_cast<int>(k);
        for (auto [a, b] : e.swaps) {
            tau[static_cast<std::size_t>(a - 1)] = b - 1;
            tau[static_cast<std::size_t>(b - 1)] = a - 1;
        }
        DiagramSpec s;
        s.diagram = SatakeDiagram::make(rd, X, tau, e.name);
        s.c = default_c(s.diagram);
        return s;
    }
    throw std::out_of_range("unknown catalogue diagram: " + name);
}

}  // namespace qsp
