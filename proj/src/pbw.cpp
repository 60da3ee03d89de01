#include "qsp/pbw.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <sstream>
#include <stdexcept>

#include "qsp/series.hpp"

namespace qsp {

namespace {

constexpr long kPrime = 2147483629;
constexpr long kQ0 = 7919;

std::size_t ix(int i) { return static_cast<std::size_t>(i); }

long inv_mod(long a) {
    long r = 1, b = a % kPrime, e = kPrime - 2;
    if (b < 0) b += kPrime;
    while (e) {
        if (e & 1) r = static_cast<long>((static_cast<__int128>(r) * b) % kPrime);
        b = static_cast<long>((static_cast<__int128>(b) * b) % kPrime);
        e >>= 1;
    }
    return r;
}

}  // namespace

void PbwElem::add(const PbwMono& m, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = t_.find(m);
    if (it == t_.end()) {
        t_.emplace(m, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
}

PbwElem& PbwElem::operator+=(const PbwElem& o) {
    for (const auto& [m, c] : o.t_) add(m, c);
    return *this;
}

PbwElem& PbwElem::operator-=(const PbwElem& o) {
    for (const auto& [m, c] : o.t_) add(m, -c);
    return *this;
}

PbwElem& PbwElem::operator*=(const Scalar& c) {
    if (c.is_zero()) t_.clear();
    for (auto& [m, v] : t_) v *= c;
    return *this;
}

std::optional<std::vector<Scalar>> solve_in_coordinates(const std::vector<UVec>& cols, const UVec& rhs) {
    const std::size_t m = cols.size();
    const std::size_t n = rhs.coords().size();
    if (m == 0) {
        if (rhs.is_zero()) return std::vector<Scalar>{};
        return std::nullopt;
    }
    // Pick m rows that are independent after specialising q; the exact solve then runs on an
    // m × m minor and the result is checked on every coordinate.
    std::vector<std::size_t> rows;
    std::vector<std::vector<long>> basis;  // reduced rows
    std::vector<std::size_t> lead;
    for (std::size_t w = 0; w < n && rows.size() < m; ++w) {
        std::vector<long> r(m);
        bool any = false;
        try {
            for (std::size_t j = 0; j < m; ++j) {
                r[j] = cols[j][w].is_zero() ? 0 : eval_mod(cols[j][w], kQ0, kPrime);
                any = any || r[j] != 0;
            }
        } catch (const std::domain_error&) {
            continue;
        }
        if (!any) continue;
        for (std::size_t b = 0; b < basis.size(); ++b) {
            long f = r[lead[b]];
            if (!f) continue;
            for (std::size_t j = 0; j < m; ++j)
                r[j] = static_cast<long>(((r[j] - static_cast<__int128>(f) * basis[b][j]) % kPrime + kPrime) % kPrime);
        }
        std::size_t p = 0;
        while (p < m && r[p] == 0) ++p;
        if (p == m) continue;
        long inv = inv_mod(r[p]);
        for (auto& v : r) v = static_cast<long>((static_cast<__int128>(v) * inv) % kPrime);
        basis.push_back(r);
        lead.push_back(p);
        rows.push_back(w);
    }
    if (rows.size() < m) throw std::logic_error("solve_in_coordinates: columns are dependent");
    std::vector<std::vector<Scalar>> A(m, std::vector<Scalar>(m + 1));
    for (std::size_t e = 0; e < m; ++e) {
        for (std::size_t j = 0; j < m; ++j) A[e][j] = cols[j][rows[e]];
        A[e][m] = rhs[rows[e]];
    }
    for (std::size_t col = 0; col < m; ++col) {
        std::size_t piv = col;
        while (piv < m && A[piv][col].is_zero()) ++piv;
        if (piv == m) throw std::logic_error("solve_in_coordinates: singular minor");
        std::swap(A[piv], A[col]);
        Scalar inv = A[col][col].inverse();
        for (std::size_t k = col; k <= m; ++k)
            if (!A[col][k].is_zero()) A[col][k] *= inv;
        for (std::size_t e = 0; e < m; ++e) {
            if (e == col || A[e][col].is_zero()) continue;
            Scalar f = A[e][col];
            for (std::size_t k = col; k <= m; ++k)
                if (!A[col][k].is_zero()) A[e][k] -= f * A[col][k];
        }
    }
    std::vector<Scalar> a(m);
    UVec check(rhs.datum(), rhs.weight());
    for (std::size_t j = 0; j < m; ++j) {
        a[j] = A[j][m];
        if (!a[j].is_zero()) check += a[j] * cols[j];
    }
    if (check != rhs) return std::nullopt;
    return a;
}

PbwBasis::PbwBasis(const RootDatum& rd, const Word& w0) : rd_(&RootDatum::interned(rd.label())), word_(w0) {
    std::vector<int> all(ix(rd.rank()));
    for (int k = 0; k < rd.rank(); ++k) all[ix(k)] = k;
    WeylElem w = WeylElem::from_word(rd, w0);
    if (w.length() != static_cast<int>(w0.size()) || w != longest_element(rd, all))
        throw std::invalid_argument("PbwBasis: not a reduced word for w0");
    simple_.assign(ix(rd.rank()), -1);
    for (std::size_t k = 0; k < w0.size(); ++k) {
        Word prefix(w0.begin(), w0.begin() + static_cast<std::ptrdiff_t>(k));
        IVec a(ix(rd.rank()), 0);
        a[ix(w0[k])] = 1;
        IVec beta = WeylElem::from_word(rd, prefix).act(a);
        UVec v = qsp::to_uvec(T_word(prefix, AlgElem::E(rd, w0[k])));
        if (v.weight() != beta) throw std::logic_error("PbwBasis: root vector has the wrong weight");
        if (qsp::height(beta) == 1) {
            int i = 0;
            while (beta[ix(i)] == 0) ++i;
            if (v != UVec::monomial(rd, {i})) throw std::logic_error("PbwBasis: simple root vector is not E_i");
            simple_[ix(i)] = static_cast<int>(k);
        }
        roots_.push_back(beta);
        vecs_.push_back(v);
    }
}

const PbwBasis& PbwBasis::of(const RootDatum& rd) {
    static std::map<std::string, std::unique_ptr<PbwBasis>> cache;
    auto it = cache.find(rd.label());
    if (it == cache.end()) {
        std::vector<int> all(ix(rd.rank()));
        for (int k = 0; k < rd.rank(); ++k) all[ix(k)] = k;
        Word w0 = longest_element(rd, all).reduced_word();
        it = cache.emplace(rd.label(), std::make_unique<PbwBasis>(rd, w0)).first;
    }
    return *it->second;
}

IVec PbwBasis::weight(const PbwMono& m) const {
    IVec w(ix(rd_->rank()), 0);
    for (int k : m)
        for (std::size_t a = 0; a < w.size(); ++a) w[a] += roots_[ix(k)][a];
    return w;
}

PbwElem PbwBasis::one() const {
    PbwElem e;
    e.add({}, Scalar(1));
    return e;
}

PbwElem PbwBasis::E(int i) const {
    PbwElem e;
    e.add({simple_[ix(i)]}, Scalar(1));
    return e;
}

std::vector<PbwMono> PbwBasis::monomials(const IVec& mu, int lo, int hi) const {
    std::vector<PbwMono> out;
    PbwMono cur;
    std::function<void(int, IVec)> go = [&](int k, IVec left) {
        if (std::all_of(left.begin(), left.end(), [](int x) { return x == 0; })) {
            out.push_back(cur);
            return;
        }
        if (k > hi) return;
        go(k + 1, left);
        const IVec& r = roots_[ix(k)];
        int pushed = 0;
        while (true) {
            bool ok = true;
            for (std::size_t a = 0; a < left.size(); ++a) ok = ok && left[a] >= r[a];
            if (!ok) break;
            for (std::size_t a = 0; a < left.size(); ++a) left[a] -= r[a];
            cur.push_back(k);
            ++pushed;
            go(k + 1, left);
        }
        cur.resize(cur.size() - static_cast<std::size_t>(pushed));
    };
    go(lo, mu);
    return out;
}

UVec PbwBasis::mono_uvec(const PbwMono& m) const {
    UVec v = UVec::one(*rd_);
    for (int k : m) v = v * vecs_[ix(k)];
    return v;
}

const PbwElem& PbwBasis::relation(int b, int g) const {
    auto key = std::make_pair(b, g);
    auto it = rel_.find(key);
    if (it != rel_.end()) return it->second;
    IVec mu = roots_[ix(b)];
    for (std::size_t a = 0; a < mu.size(); ++a) mu[a] += roots_[ix(g)][a];
    std::vector<PbwMono> ms = monomials(mu, b, g);
    std::vector<UVec> cols;
    for (const auto& m : ms) cols.push_back(mono_uvec(m));
    auto a = solve_in_coordinates(cols, vecs_[ix(g)] * vecs_[ix(b)]);
    if (!a) throw std::logic_error("PbwBasis: commutation rule leaves the convex interval");
    PbwElem r;
    for (std::size_t j = 0; j < ms.size(); ++j) r.add(ms[j], (*a)[j]);
    return rel_.emplace(key, r).first->second;
}

PbwElem PbwBasis::mul_root(const PbwMono& m, int b) const {
    if (m.empty() || m.back() <= b) {
        PbwMono r = m;
        r.push_back(b);
        PbwElem e;
        e.add(r, Scalar(1));
        return e;
    }
    auto key = std::make_pair(m, b);
    auto it = mul_.find(key);
    if (it != mul_.end()) return it->second;
    const int g = m.back();
    const PbwMono mp(m.begin(), m.end() - 1);
    PbwElem out;
    for (const auto& [M, c] : relation(b, g).terms()) {
        PbwElem z;
        z.add(mp, Scalar(1));
        for (int l : M) z = mul_root(z, l);
        out += c * z;
    }
    mul_.emplace(key, out);
    return out;
}

PbwElem PbwBasis::mul_root(const PbwElem& x, int b) const {
    PbwElem out;
    for (const auto& [m, c] : x.terms()) out += c * mul_root(m, b);
    return out;
}

PbwElem PbwBasis::mul(const PbwElem& x, const PbwElem& y) const {
    PbwElem out;
    for (const auto& [M, c] : y.terms()) {
        PbwElem z = x;
        for (int l : M) z = mul_root(z, l);
        out += c * z;
    }
    return out;
}

PbwElem PbwBasis::pow(const PbwElem& x, int n) const {
    PbwElem r = one();
    for (int k = 0; k < n; ++k) r = mul(r, x);
    return r;
}

PbwElem PbwBasis::qcomm(const PbwElem& x, const PbwElem& y, const Scalar& c) const {
    return mul(x, y) - c * mul(y, x);
}

PbwElem PbwBasis::from_alg(const AlgElem& x) const {
    auto e = as_e_only(x);
    if (!e) throw std::invalid_argument("PbwBasis::from_alg: element is not in U+");
    PbwElem out;
    for (const auto& [m, c] : e->terms()) {
        PbwElem z = one();
        for (int l : m.e) z = mul_root(z, simple_[ix(l)]);
        out += c * z;
    }
    return out;
}

PbwElem PbwBasis::from_uvec(const UVec& x) const {
    std::vector<PbwMono> ms = monomials(x.weight(), 0, static_cast<int>(size()) - 1);
    std::vector<UVec> cols;
    for (const auto& m : ms) cols.push_back(mono_uvec(m));
    auto a = solve_in_coordinates(cols, x);
    if (!a) throw std::invalid_argument("PbwBasis::from_uvec: vector is not in the image of U+");
    PbwElem r;
    for (std::size_t j = 0; j < ms.size(); ++j) r.add(ms[j], (*a)[j]);
    return r;
}

UVec PbwBasis::to_uvec(const PbwElem& x, const IVec& mu) const {
    UVec v(*rd_, mu);
    for (const auto& [m, c] : x.terms()) {
        if (weight(m) != mu) throw std::invalid_argument("PbwBasis::to_uvec: weight mismatch");
        v += c * mono_uvec(m);
    }
    return v;
}

const PbwElem& PbwBasis::skew_root(int i, int k) const {
    auto key = std::make_pair(i, k);
    auto it = skew_.find(key);
    if (it != skew_.end()) return it->second;
    PbwElem r;
    if (roots_[ix(k)][ix(i)] > 0) r = from_uvec(qsp::skew_l(i, vecs_[ix(k)]));
    return skew_.emplace(key, r).first->second;
}

PbwElem PbwBasis::skew_mono(int i, const PbwMono& m) const {
    if (m.empty()) return PbwElem();
    auto key = std::make_pair(i, m);
    auto it = der_.find(key);
    if (it != der_.end()) return it->second;
    // _ir(x y) = _ir(x) y + q^{(α_i, wt x)} x _ir(y) with y the last root vector.
    const PbwMono mp(m.begin(), m.end() - 1);
    const int L = m.back();
    PbwElem out = mul_root(skew_mono(i, mp), L);
    const PbwElem& d = skew_root(i, L);
    if (!d.is_zero()) {
        PbwElem x;
        x.add(mp, Scalar(1));
        out += Scalar::q_pow(rd_->pair_simple(i, weight(mp))) * mul(x, d);
    }
    der_.emplace(key, out);
    return out;
}

PbwElem PbwBasis::skew_l(int i, const PbwElem& x) const {
    PbwElem out;
    for (const auto& [m, c] : x.terms()) out += c * skew_mono(i, m);
    return out;
}

std::string PbwBasis::str(const PbwElem& x) const {
    if (x.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : x.terms()) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        for (int k : m) os << " E" << weight_str(roots_[ix(k)]);
    }
    return os.str();
}

}  // namespace qsp
