#include "qsp/quasir.hpp"

#include <algorithm>
#include <stdexcept>

#include "json.hpp"
#include "qsp/qnumbers.hpp"
#include "qsp/series.hpp"

namespace qsp {

namespace {

std::size_t ix(int i) { return static_cast<std::size_t>(i); }

UVec unit(const RootDatum& rd, const IVec& mu, std::size_t a) {
    UVec u(rd, mu);
    u[a] = Scalar(1);
    return u;
}

AlgElem f_elem(const UVec& x) {
    AlgElem r(x.datum());
    for (const auto& [w, c] : expand_in_monomials(x)) r += c * AlgElem::F_word(x.datum(), w);
    return r;
}

TensorElem bar_tensor(const TensorElem& t) {
    TensorElem r(t.datum());
    for (const auto& [k, c] : t.terms()) {
        auto [a, b] = k;
        for (auto& v : a.k) v = -v;
        for (auto& v : b.k) v = -v;
        r.add_term({a, b}, c.bar());
    }
    return r;
}

int right_height(const Monomial& m) {
    return static_cast<int>(m.e.size()) - static_cast<int>(m.f.size());
}

}  // namespace

RSeries::RSeries(const RootDatum& rd, int height) : rd_(&RootDatum::interned(rd.label())), height_(height) {}

RSeries RSeries::one(const RootDatum& rd, int height) {
    RSeries r(rd, height);
    r.add_pure(UVec::one(rd), UVec::one(rd));
    return r;
}

std::vector<IVec> RSeries::weights() const {
    std::vector<IVec> w;
    for (const auto& [mu, rows] : comp_) w.push_back(mu);
    std::sort(w.begin(), w.end(), weight_less);
    return w;
}

void RSeries::add_rows(const IVec& mu, std::size_t a, const UVec& row) {
    if (qsp::height(mu) > height_ || row.is_zero()) return;
    auto it = comp_.find(mu);
    if (it == comp_.end()) {
        const std::size_t n = word_space(*rd_, mu).size();
        it = comp_.emplace(mu, Rows(n, UVec(*rd_, mu))).first;
    }
    it->second[a] += row;
}

void RSeries::add_pure(const UVec& x, const UVec& y) {
    if (x.weight() != y.weight()) throw std::invalid_argument("RSeries: leg weights differ");
    for (std::size_t a = 0; a < x.coords().size(); ++a)
        if (!x[a].is_zero()) add_rows(x.weight(), a, x[a] * y);
    clean();
}

void RSeries::clean() {
    for (auto it = comp_.begin(); it != comp_.end();) {
        bool zero = std::all_of(it->second.begin(), it->second.end(), [](const UVec& r) { return r.is_zero(); });
        it = zero ? comp_.erase(it) : std::next(it);
    }
}

RSeries operator*(const RSeries& a, const RSeries& b) {
    const RootDatum& rd = a.datum();
    RSeries r(rd, std::min(a.height_, b.height_));
    for (const auto& [ma, ra] : a.comp_)
        for (const auto& [mb, rb] : b.comp_) {
            if (qsp::height(ma) + qsp::height(mb) > r.height_) continue;
            for (std::size_t i = 0; i < ra.size(); ++i) {
                if (ra[i].is_zero()) continue;
                const UVec ui = unit(rd, ma, i);
                for (std::size_t j = 0; j < rb.size(); ++j) {
                    if (rb[j].is_zero()) continue;
                    const UVec left = ui * unit(rd, mb, j);
                    const UVec right = ra[i] * rb[j];
                    for (std::size_t k = 0; k < left.coords().size(); ++k)
                        if (!left[k].is_zero()) r.add_rows(left.weight(), k, left[k] * right);
                }
            }
        }
    r.clean();
    return r;
}

bool operator==(const RSeries& a, const RSeries& b) { return a.height_ == b.height_ && !a.first_difference(b); }

std::optional<IVec> RSeries::first_difference(const RSeries& o) const {
    const int h = std::min(height_, o.height_);
    std::vector<IVec> all;
    for (const auto& [mu, r] : comp_)
        if (qsp::height(mu) <= h) all.push_back(mu);
    for (const auto& [mu, r] : o.comp_)
        if (qsp::height(mu) <= h && !comp_.count(mu)) all.push_back(mu);
    std::sort(all.begin(), all.end(), weight_less);
    for (const auto& mu : all) {
        auto x = comp_.find(mu), y = o.comp_.find(mu);
        if (x == comp_.end() || y == o.comp_.end() || x->second != y->second) return mu;
    }
    return std::nullopt;
}

TensorElem RSeries::tensor(const IVec& mu) const {
    const RootDatum& rd = datum();
    TensorElem t(rd);
    auto it = comp_.find(mu);
    if (it == comp_.end()) return t;
    // Expand the right leg in monomials; the matching left columns are then genuine elements.
    std::map<Word, UVec> cols;
    for (std::size_t a = 0; a < it->second.size(); ++a) {
        const UVec& row = it->second[a];
        if (row.is_zero()) continue;
        for (const auto& [w, c] : expand_in_monomials(row)) {
            auto [ci, fresh] = cols.try_emplace(w, UVec(rd, mu));
            ci->second[a] += c;
        }
    }
    for (const auto& [w, col] : cols)
        if (!col.is_zero()) t += TensorElem::pure(f_elem(col), AlgElem::E_word(rd, w));
    return t;
}

std::string RSeries::str() const {
    std::string s;
    for (const auto& mu : weights()) {
        if (!s.empty()) s += "\n";
        s += weight_str(mu) + ": " + tensor(mu).str();
    }
    return s.empty() ? "0" : s;
}

std::string RSeries::json() const {
    nlohmann::ordered_json out;
    out["height"] = height_;
    auto comps = nlohmann::ordered_json::array();
    for (const auto& mu : weights()) {
        nlohmann::ordered_json c;
        c["weight"] = mu;
        auto terms = nlohmann::ordered_json::array();
        for (const auto& [k, v] : tensor(mu).terms())
            terms.push_back({{"coeff", v.str()}, {"left", k.first.str()}, {"right", k.second.str()}});
        c["terms"] = terms;
        comps.push_back(c);
    }
    out["components"] = comps;
    return out.dump();
}

RSeries R_factor(const RootDatum& rd, const Word& prefix, int i, int N) {
    UVec A = to_uvec(T_word(prefix, AlgElem::E(rd, i)));
    UVec B = to_uvec_f(T_word(prefix, AlgElem::F(rd, i)));
    if (A.weight() != B.weight()) throw std::logic_error("R_factor: leg weights differ");
    const int d = rd.d(i);
    const int h = qsp::height(A.weight());
    RSeries R = RSeries::one(rd, N);
    UVec Ar = UVec::one(rd), Br = UVec::one(rd);
    for (int r = 1; r * h <= N; ++r) {
        Ar = Ar * A;
        Br = Br * B;
        Scalar c = q_diff(d).pow(r) * Scalar::q_pow(-d * r * (r - 1) / 2) / q_factorial(r, d);
        if (r % 2) c = -c;
        R.add_pure(c * Br, Ar);
    }
    return R;
}

RSeries rank_one_R(const RootDatum& rd, int i, int N) { return R_factor(rd, {}, i, N); }

RSeries R_factored(const RootDatum& rd, const Word& word, int N) {
    WeylElem w = WeylElem::from_word(rd, word);
    if (w.length() != static_cast<int>(word.size())) throw std::invalid_argument("R_factored: word is not reduced");
    std::vector<int> all(ix(rd.rank()));
    for (int k = 0; k < rd.rank(); ++k) all[ix(k)] = k;
    if (w != longest_element(rd, all)) throw std::invalid_argument("R_factored: word is not a word for w0");
    RSeries R = RSeries::one(rd, N);
    for (std::size_t j = 0; j < word.size(); ++j) {
        Word prefix(word.begin(), word.begin() + static_cast<std::ptrdiff_t>(j));
        R = R_factor(rd, prefix, word[j], N) * R;
    }
    return R;
}

CheckReport verify_R_intertwiner(const RSeries& R, int i, int N, RSide side) {
    const RootDatum& rd = R.datum();
    CheckReport rep;
    rep.name = "R-intertwiner node " + std::to_string(i + 1);
    TensorElem Rt(rd);
    for (const auto& mu : R.weights())
        if (qsp::height(mu) <= N) Rt += R.tensor(mu);
    const std::vector<std::pair<std::string, AlgElem>> gens = {
        {"E", AlgElem::E(rd, i)}, {"F", AlgElem::F(rd, i)}, {"K", AlgElem::K(rd, i)}};
    for (const auto& [name, u] : gens) {
        const TensorElem d = coproduct(u);
        const TensorElem db = bar_tensor(coproduct(bar_u(u)));
        TensorElem diff = side == RSide::DeltaLeft ? d * Rt - Rt * db : Rt * d - db * Rt;
        TensorElem kept(rd);
        for (const auto& [k, c] : diff.terms())
            if (right_height(k.second) <= N - 1) kept.add_term(k, c);
        if (!is_zero(kept))
            rep.fail(name + std::to_string(i + 1) + ": identity fails below height " + std::to_string(N));
        else
            rep.note(name + std::to_string(i + 1) + ": ok up to right-leg height " + std::to_string(N - 1));
    }
    return rep;
}

}  // namespace qsp
