#include "qsp/uq.hpp"

#include <mutex>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "qsp/qnumbers.hpp"

namespace qsp {

namespace {

std::mutex& memo_mutex() {
    static std::mutex m;
    return m;
}

IVec zeros(const RootDatum& rd) { return IVec(static_cast<std::size_t>(rd.rank()), 0); }

IVec unit(const RootDatum& rd, int i, int v = 1) {
    IVec e = zeros(rd);
    e[static_cast<std::size_t>(i)] = v;
    return e;
}

IVec add(IVec a, const IVec& b) {
    for (std::size_t k = 0; k < a.size(); ++k) a[k] += b[k];
    return a;
}

std::vector<std::pair<Monomial, Scalar>> to_vec(const Terms& t) { return {t.begin(), t.end()}; }

void accumulate(Terms& t, const Monomial& m, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = t.find(m);
    if (it == t.end()) {
        t.emplace(m, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) t.erase(it);
}

// E_b F_c in normal order. Strip the last E letter j of b and use
//   E_j F_c = F_c E_j + Σ_{p: c_p = j} F_{c∖p} (q^{−(α_j,wt c_{>p})} K_j − q^{(α_j,wt c_{>p})} K_j⁻¹)/(q_j − q_j⁻¹).
const std::vector<std::pair<Monomial, Scalar>>& ef_product(const RootDatum& rd, const Word& b, const Word& c) {
    static std::map<std::tuple<std::string, Word, Word>, std::vector<std::pair<Monomial, Scalar>>> memo;
    auto key = std::make_tuple(rd.label(), b, c);
    {
        std::lock_guard<std::mutex> lock(memo_mutex());
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
    }
    const std::size_t n = static_cast<std::size_t>(rd.rank());
    Terms out;
    if (b.empty() || c.empty()) {
        out.emplace(Monomial{c, IVec(n, 0), b}, Scalar(1));
    } else {
        const int j = b.back();
        Word bp(b.begin(), b.end() - 1);
        for (const auto& [m, s] : ef_product(rd, bp, c)) {
            Monomial mm = m;
            mm.e.push_back(j);
            accumulate(out, mm, s);
        }
        const Scalar inv = q_diff(rd.d(j)).inverse();
        int e_after = 0;  // (α_j, wt c_{>p}) accumulated from the right
        for (std::size_t pp = c.size(); pp-- > 0;) {
            if (c[pp] == j) {
                Word cs = c;
                cs.erase(cs.begin() + static_cast<long>(pp));
                for (const auto& [m, s] : ef_product(rd, bp, cs)) {
                    int ev = 0;
                    for (int l : m.e) ev += rd.form(j, l);
                    Monomial plus = m, minus = m;
                    plus.k[static_cast<std::size_t>(j)] += 1;
                    minus.k[static_cast<std::size_t>(j)] -= 1;
                    accumulate(out, plus, (s * inv).times_q_pow(-e_after - ev));
                    accumulate(out, minus, -(s * inv).times_q_pow(e_after + ev));
                }
            }
            e_after += rd.form(j, c[pp]);
        }
    }
    std::lock_guard<std::mutex> lock(memo_mutex());
    return memo.emplace(key, to_vec(out)).first->second;
}

void mono_mul_into(const RootDatum& rd, const Monomial& a, const Monomial& b, const Scalar& c, Terms& out) {
    for (const auto& [m, s] : ef_product(rd, a.e, b.f)) {
        int e = 0;
        // K_{a.k} F_{m.f} = q^{−(a.k, wt m.f)} F_{m.f} K_{a.k}
        for (int l : m.f) e -= rd.pair_simple(l, a.k);
        // E_{m.e} K_{b.k} = q^{−(b.k, wt m.e)} K_{b.k} E_{m.e}
        for (int l : m.e) e -= rd.pair_simple(l, b.k);
        Monomial r;
        r.f = a.f;
        r.f.insert(r.f.end(), m.f.begin(), m.f.end());
        r.k = add(add(a.k, m.k), b.k);
        r.e = m.e;
        r.e.insert(r.e.end(), b.e.begin(), b.e.end());
        accumulate(out, r, (c * s).times_q_pow(e));
    }
}

std::string letters(const Word& w) {
    std::string s;
    for (std::size_t k = 0; k < w.size(); ++k) s += (k ? "," : "") + std::to_string(w[k] + 1);
    return s;
}

bool needs_parens(const std::string& s) {
    for (std::size_t k = 1; k < s.size(); ++k)
        if (s[k] == '+' || s[k] == '-' || s[k] == '/') return true;
    return false;
}

}  // namespace

bool Monomial::is_one() const {
    if (!f.empty() || !e.empty()) return false;
    for (int x : k)
        if (x != 0) return false;
    return true;
}

IVec Monomial::weight(std::size_t n) const {
    IVec w(n, 0);
    for (int l : e) ++w[static_cast<std::size_t>(l)];
    for (int l : f) --w[static_cast<std::size_t>(l)];
    return w;
}

std::string Monomial::str() const {
    std::string s;
    if (!f.empty()) s += "F(" + letters(f) + ")";
    bool kz = true;
    for (int x : k) kz = kz && x == 0;
    if (!kz) {
        s += s.empty() ? "" : " ";
        s += "K[";
        for (std::size_t i = 0; i < k.size(); ++i) s += (i ? "," : "") + std::to_string(k[i]);
        s += "]";
    }
    if (!e.empty()) s += (s.empty() ? "" : " ") + std::string("E(") + letters(e) + ")";
    return s.empty() ? "1" : s;
}

AlgElem::AlgElem(const RootDatum& rd) : rd_(&RootDatum::interned(rd.label())) {}

AlgElem AlgElem::scalar(const RootDatum& rd, const Scalar& c) {
    AlgElem x(rd);
    x.add_term(Monomial{{}, zeros(rd), {}}, c);
    return x;
}

AlgElem AlgElem::E(const RootDatum& rd, int i) { return E_word(rd, {i}); }
AlgElem AlgElem::F(const RootDatum& rd, int i) { return F_word(rd, {i}); }

AlgElem AlgElem::K(const RootDatum& rd, const IVec& kappa) {
    AlgElem x(rd);
    x.add_term(Monomial{{}, kappa, {}}, Scalar(1));
    return x;
}

AlgElem AlgElem::K(const RootDatum& rd, int i, int power) { return K(rd, unit(rd, i, power)); }

AlgElem AlgElem::E_word(const RootDatum& rd, const Word& w) {
    AlgElem x(rd);
    x.add_term(Monomial{{}, zeros(rd), w}, Scalar(1));
    return x;
}

AlgElem AlgElem::F_word(const RootDatum& rd, const Word& w) {
    AlgElem x(rd);
    x.add_term(Monomial{w, zeros(rd), {}}, Scalar(1));
    return x;
}

AlgElem AlgElem::from_uvec(const UVec& v) {
    AlgElem x(v.datum());
    for (const auto& [w, c] : expand_in_monomials(v)) x.add_term(Monomial{{}, zeros(v.datum()), w}, c);
    return x;
}

void AlgElem::add_term(const Monomial& m, const Scalar& c) { accumulate(terms_, m, c); }

AlgElem& AlgElem::operator+=(const AlgElem& o) {
    if (!rd_) rd_ = o.rd_;
    for (const auto& [m, c] : o.terms_) accumulate(terms_, m, c);
    return *this;
}

AlgElem& AlgElem::operator-=(const AlgElem& o) {
    if (!rd_) rd_ = o.rd_;
    for (const auto& [m, c] : o.terms_) accumulate(terms_, m, -c);
    return *this;
}

AlgElem& AlgElem::operator*=(const Scalar& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

AlgElem AlgElem::operator-() const {
    AlgElem r = *this;
    for (auto& [m, v] : r.terms_) v = -v;
    return r;
}

AlgElem operator*(const AlgElem& a, const AlgElem& b) {
    const RootDatum& rd = a.rd_ ? *a.rd_ : *b.rd_;
    AlgElem r(rd);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) mono_mul_into(rd, ma, mb, ca * cb, r.terms_);
    return r;
}

AlgElem AlgElem::pow(int k) const {
    if (k < 0) throw std::invalid_argument("AlgElem::pow: negative exponent");
    AlgElem r = scalar(datum(), Scalar(1));
    for (int i = 0; i < k; ++i) r = r * *this;
    return r;
}

bool AlgElem::is_e_only() const {
    for (const auto& [m, c] : terms_) {
        if (!m.f.empty()) return false;
        for (int x : m.k)
            if (x != 0) return false;
    }
    return true;
}

AlgElem AlgElem::e_part() const {
    AlgElem r(datum());
    for (const auto& [m, c] : terms_) {
        bool ok = m.f.empty();
        for (int x : m.k) ok = ok && x == 0;
        if (ok) r.terms_.emplace(m, c);
    }
    return r;
}

bool AlgElem::is_f_only() const {
    for (const auto& [m, c] : terms_) {
        if (!m.e.empty()) return false;
        for (int x : m.k)
            if (x != 0) return false;
    }
    return true;
}

AlgElem AlgElem::f_part() const {
    AlgElem r(datum());
    for (const auto& [m, c] : terms_) {
        bool ok = m.e.empty();
        for (int x : m.k) ok = ok && x == 0;
        if (ok) r.terms_.emplace(m, c);
    }
    return r;
}

std::string AlgElem::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        std::string cs = c.str();
        bool neg = cs[0] == '-' && !needs_parens(cs);
        if (neg) cs = cs.substr(1);
        if (!first) os << (neg ? " - " : " + ");
        else if (neg) os << "-";
        first = false;
        if (m.is_one()) {
            os << (needs_parens(cs) ? "(" + cs + ")" : cs);
        } else {
            if (cs != "1") os << (needs_parens(cs) ? "(" + cs + ")" : cs) << " ";
            os << m.str();
        }
    }
    return os.str();
}

std::string AlgElem::latex() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        std::string cs = c.latex();
        if (!(cs == "1" && !m.is_one())) os << (needs_parens(cs) ? "\\left(" + cs + "\\right)" : cs);
        for (int l : m.f) os << "F_{" << l + 1 << "}";
        bool kz = true;
        for (int x : m.k) kz = kz && x == 0;
        if (!kz) {
            os << "K_{";
            bool f2 = true;
            for (std::size_t i = 0; i < m.k.size(); ++i) {
                if (m.k[i] == 0) continue;
                if (!f2 && m.k[i] > 0) os << "+";
                if (m.k[i] == -1) os << "-";
                else if (m.k[i] != 1) os << m.k[i];
                os << "\\alpha_{" << i + 1 << "}";
                f2 = false;
            }
            os << "}";
        }
        for (int l : m.e) os << "E_{" << l + 1 << "}";
    }
    return os.str();
}

std::string AlgElem::json() const {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& [m, c] : terms_) {
        nlohmann::ordered_json t;
        t["coeff"] = c.str();
        nlohmann::ordered_json f = nlohmann::ordered_json::array(), e = nlohmann::ordered_json::array();
        for (int l : m.f) f.push_back(l + 1);
        for (int l : m.e) e.push_back(l + 1);
        t["F"] = f;
        t["K"] = m.k;
        t["E"] = e;
        arr.push_back(t);
    }
    return arr.dump();
}

AlgElem AlgElem::from_json(const RootDatum& rd, const std::string& text) {
    AlgElem out(rd);
    const auto n = static_cast<std::size_t>(rd.rank());
    try {
        auto arr = nlohmann::json::parse(text);
        if (!arr.is_array()) throw std::invalid_argument("expected a term list");
        for (const auto& t : arr) {
            Monomial m;
            for (int l : t.at("F").get<std::vector<int>>()) m.f.push_back(l - 1);
            for (int l : t.at("E").get<std::vector<int>>()) m.e.push_back(l - 1);
            m.k = t.at("K").get<IVec>();
            if (m.k.size() != n) throw std::invalid_argument("K exponent has the wrong length");
            for (int l : m.f)
                if (l < 0 || l >= rd.rank()) throw std::invalid_argument("letter out of range");
            for (int l : m.e)
                if (l < 0 || l >= rd.rank()) throw std::invalid_argument("letter out of range");
            out.add_term(m, Scalar::parse(t.at("coeff").get<std::string>()));
        }
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("element JSON: ") + e.what());
    }
    return out;
}

namespace {

// A term with several word legs, alternately F-legs and E-legs; F-legs use the swap F_i ↦ E_i.
struct LegTerm {
    std::vector<Word> legs;
    Scalar c;
};

bool legs_zero(const RootDatum& rd, const std::vector<LegTerm>& terms, std::size_t nlegs) {
    if (terms.empty()) return true;
    if (nlegs == 0) {
        Scalar s;
        for (const auto& t : terms) s += t.c;
        return s.is_zero();
    }
    std::map<std::vector<Word>, UVec> acc;
    for (const auto& t : terms) {
        std::vector<Word> prefix(t.legs.begin(), t.legs.begin() + static_cast<long>(nlegs - 1));
        UVec row = UVec::monomial(rd, t.legs[nlegs - 1]);
        auto it = acc.find(prefix);
        if (it == acc.end()) acc.emplace(prefix, t.c * row);
        else it->second += t.c * row;
    }
    std::size_t dim = acc.begin()->second.coords().size();
    for (std::size_t k = 0; k < dim; ++k) {
        std::vector<LegTerm> sub;
        for (const auto& [prefix, v] : acc)
            if (!v[k].is_zero()) sub.push_back({prefix, v[k]});
        if (!legs_zero(rd, sub, nlegs - 1)) return false;
    }
    return true;
}

using GroupKey = std::vector<IVec>;

GroupKey group_key(const Monomial& m, std::size_t n) {
    return {m.k, word_weight(m.f, n), word_weight(m.e, n)};
}

bool terms_zero(const RootDatum& rd, const Terms& terms) {
    const std::size_t n = static_cast<std::size_t>(rd.rank());
    std::map<GroupKey, std::vector<LegTerm>> groups;
    for (const auto& [m, c] : terms) groups[group_key(m, n)].push_back({{m.f, m.e}, c});
    for (const auto& [k, g] : groups)
        if (!legs_zero(rd, g, 2)) return false;
    return true;
}

}  // namespace

bool is_zero(const AlgElem& x) {
    if (x.terms().empty()) return true;
    return terms_zero(x.datum(), x.terms());
}

std::optional<AlgElem> as_e_only(const AlgElem& x) {
    if (x.terms().empty() || x.is_e_only()) return x;
    AlgElem ep = x.e_part();
    AlgElem rest = x - ep;
    if (!is_zero(rest)) return std::nullopt;
    return ep;
}

std::optional<AlgElem> as_f_only(const AlgElem& x) {
    if (x.terms().empty() || x.is_f_only()) return x;
    AlgElem fp = x.f_part();
    if (!is_zero(x - fp)) return std::nullopt;
    return fp;
}

UVec to_uvec(const AlgElem& x) {
    const RootDatum& rd = x.datum();
    auto e = as_e_only(x);
    if (!e) throw std::invalid_argument("to_uvec: element is not in U+");
    std::optional<IVec> mu;
    UVec out;
    for (const auto& [m, c] : e->terms()) {
        IVec w = word_weight(m.e, static_cast<std::size_t>(rd.rank()));
        if (!mu) {
            mu = w;
            out = UVec(rd, w);
        } else if (*mu != w) {
            throw std::invalid_argument("to_uvec: element is not homogeneous");
        }
        out += c * UVec::monomial(rd, m.e);
    }
    if (!mu) throw std::invalid_argument("to_uvec: zero element has no weight");
    return out;
}

UVec to_uvec_f(const AlgElem& x) {
    const RootDatum& rd = x.datum();
    std::optional<IVec> mu;
    UVec out;
    auto fo = as_f_only(x);
    if (!fo) throw std::invalid_argument("to_uvec_f: element is not in U-");
    for (const auto& [m, c] : fo->terms()) {
        bool kz = true;
        for (int v : m.k) kz = kz && v == 0;
        if (!m.e.empty() || !kz) throw std::invalid_argument("to_uvec_f: element is not F-only");
        IVec w = word_weight(m.f, static_cast<std::size_t>(rd.rank()));
        if (!mu) {
            mu = w;
            out = UVec(rd, w);
        } else if (*mu != w) {
            throw std::invalid_argument("to_uvec_f: element is not homogeneous");
        }
        out += c * UVec::monomial(rd, m.f);
    }
    if (!mu) throw std::invalid_argument("to_uvec_f: zero element has no weight");
    return out;
}

AlgElem qcomm(const AlgElem& x, const AlgElem& y, const Scalar& c) { return x * y - c * (y * x); }

namespace {

AlgElem divided_power(const AlgElem& g, int k, int d) { return q_factorial(k, d).inverse() * g.pow(k); }

// Images of the generators under T_i (inv = false) or T_i⁻¹ (inv = true).
AlgElem T_on_E(const RootDatum& rd, int i, int j, bool inv) {
    const int di = rd.d(i);
    if (i == j) {
        if (!inv) return -(AlgElem::F(rd, i) * AlgElem::K(rd, i));
        return -(AlgElem::K(rd, i, -1) * AlgElem::F(rd, i));
    }
    const int a = -2 * rd.form(i, j) / rd.form(i, i);
    AlgElem out(rd);
    AlgElem Ei = AlgElem::E(rd, i), Ej = AlgElem::E(rd, j);
    for (int r = 0; r <= a; ++r) {
        const int s = a - r;
        Scalar c = Scalar(r % 2 ? -1 : 1).times_q_pow(-r * di);
        if (!inv) out += c * (divided_power(Ei, s, di) * Ej * divided_power(Ei, r, di));
        else out += c * (divided_power(Ei, r, di) * Ej * divided_power(Ei, s, di));
    }
    return out;
}

AlgElem T_on_F(const RootDatum& rd, int i, int j, bool inv) {
    const int di = rd.d(i);
    if (i == j) {
        if (!inv) return -(AlgElem::K(rd, i, -1) * AlgElem::E(rd, i));
        return -(AlgElem::E(rd, i) * AlgElem::K(rd, i));
    }
    const int a = -2 * rd.form(i, j) / rd.form(i, i);
    AlgElem out(rd);
    AlgElem Fi = AlgElem::F(rd, i), Fj = AlgElem::F(rd, j);
    for (int r = 0; r <= a; ++r) {
        const int s = a - r;
        Scalar c = Scalar(r % 2 ? -1 : 1).times_q_pow(r * di);
        if (!inv) out += c * (divided_power(Fi, r, di) * Fj * divided_power(Fi, s, di));
        else out += c * (divided_power(Fi, s, di) * Fj * divided_power(Fi, r, di));
    }
    return out;
}

// T_i^{±1} on a word of E's (kind 'E') or F's (kind 'F'), memoised by prefix.
const AlgElem& T_on_word(const RootDatum& rd, int i, bool inv, char kind, const Word& w) {
    static std::map<std::tuple<std::string, int, bool, char, Word>, AlgElem> memo;
    auto key = std::make_tuple(rd.label(), i, inv, kind, w);
    {
        std::lock_guard<std::mutex> lock(memo_mutex());
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
    }
    AlgElem r;
    if (w.empty()) {
        r = AlgElem::scalar(rd, Scalar(1));
    } else {
        Word prefix(w.begin(), w.end() - 1);
        AlgElem last = kind == 'E' ? T_on_E(rd, i, w.back(), inv) : T_on_F(rd, i, w.back(), inv);
        r = T_on_word(rd, i, inv, kind, prefix) * last;
    }
    std::lock_guard<std::mutex> lock(memo_mutex());
    return memo.emplace(key, r).first->second;
}

AlgElem T_apply(int i, const AlgElem& x, bool inv) {
    const RootDatum& rd = x.datum();
    AlgElem out(rd);
    for (const auto& [m, c] : x.terms()) {
        // T_i(K_κ) = K_{s_i κ}
        IVec k = rd.reflect(i, m.k);
        AlgElem mid = AlgElem::K(rd, k);
        AlgElem img = T_on_word(rd, i, inv, 'F', m.f) * mid * T_on_word(rd, i, inv, 'E', m.e);
        out += c * img;
    }
    return out;
}

AlgElem prune(const AlgElem& y) {
    if (y.is_e_only() || y.is_f_only()) return y;
    bool has_e = false, has_f = false;
    for (const auto& [m, c] : y.terms()) {
        if (m.k != IVec(m.k.size(), 0)) continue;
        has_e = has_e || m.f.empty();
        has_f = has_f || m.e.empty();
    }
    if (has_e)
        if (auto p = as_e_only(y)) return *p;
    if (has_f)
        if (auto p = as_f_only(y)) return *p;
    return y;
}

}  // namespace

AlgElem lusztig_T(int i, const AlgElem& x) { return T_apply(i, x, false); }
AlgElem lusztig_T_inv(int i, const AlgElem& x) { return T_apply(i, x, true); }

AlgElem T_word(const Word& w, const AlgElem& x) {
    AlgElem y = x;
    for (auto it = w.rbegin(); it != w.rend(); ++it) y = prune(lusztig_T(*it, y));
    return y;
}

AlgElem T_word_inv(const Word& w, const AlgElem& x) {
    // (T_{w₁}⋯T_{w_k})⁻¹ = T_{w_k}⁻¹ ⋯ T_{w₁}⁻¹, so T_{w₁}⁻¹ is applied first.
    AlgElem y = x;
    for (int l : w) y = prune(lusztig_T_inv(l, y));
    return y;
}

AlgElem bar_u(const AlgElem& x) {
    AlgElem r(x.datum());
    for (const auto& [m, c] : x.terms()) {
        Monomial mm = m;
        for (auto& v : mm.k) v = -v;
        r.add_term(mm, c.bar());
    }
    return r;
}

TensorElem::TensorElem(const RootDatum& rd) : rd_(&RootDatum::interned(rd.label())) {}

TensorElem TensorElem::pure(const AlgElem& a, const AlgElem& b) {
    TensorElem t(a.datum());
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) t.add_term({ma, mb}, ca * cb);
    return t;
}

void TensorElem::add_term(const Key& k, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_.emplace(k, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

TensorElem& TensorElem::operator+=(const TensorElem& o) {
    if (!rd_) rd_ = o.rd_;
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
}

TensorElem& TensorElem::operator-=(const TensorElem& o) {
    if (!rd_) rd_ = o.rd_;
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
}

TensorElem& TensorElem::operator*=(const Scalar& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, v] : terms_) v *= c;
    return *this;
}

TensorElem operator*(const TensorElem& a, const TensorElem& b) {
    const RootDatum& rd = a.rd_ ? *a.rd_ : *b.rd_;
    TensorElem r(rd);
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_) {
            Terms left, right;
            mono_mul_into(rd, ka.first, kb.first, Scalar(1), left);
            mono_mul_into(rd, ka.second, kb.second, Scalar(1), right);
            Scalar c = ca * cb;
            for (const auto& [ml, sl] : left)
                for (const auto& [mr, sr] : right) r.add_term({ml, mr}, c * sl * sr);
        }
    return r;
}

std::string TensorElem::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        std::string cs = c.str();
        os << (needs_parens(cs) ? "(" + cs + ")" : cs) << " " << k.first.str() << " (x) " << k.second.str();
    }
    return os.str();
}

bool is_zero(const TensorElem& x) {
    if (x.terms().empty()) return true;
    const RootDatum& rd = x.datum();
    const std::size_t n = static_cast<std::size_t>(rd.rank());
    std::map<std::vector<IVec>, std::vector<LegTerm>> groups;
    for (const auto& [k, c] : x.terms()) {
        GroupKey a = group_key(k.first, n), b = group_key(k.second, n);
        a.insert(a.end(), b.begin(), b.end());
        groups[a].push_back({{k.first.f, k.first.e, k.second.f, k.second.e}, c});
    }
    for (const auto& [key, g] : groups)
        if (!legs_zero(rd, g, 4)) return false;
    return true;
}

TensorElem coproduct(const AlgElem& x) {
    const RootDatum& rd = x.datum();
    TensorElem out(rd);
    const AlgElem one = AlgElem::scalar(rd, Scalar(1));
    for (const auto& [m, c] : x.terms()) {
        TensorElem t = TensorElem::pure(one, one);
        for (int l : m.f)
            t = t * (TensorElem::pure(AlgElem::F(rd, l), AlgElem::K(rd, l, -1)) + TensorElem::pure(one, AlgElem::F(rd, l)));
        t = t * TensorElem::pure(AlgElem::K(rd, m.k), AlgElem::K(rd, m.k));
        for (int l : m.e)
            t = t * (TensorElem::pure(AlgElem::E(rd, l), one) + TensorElem::pure(AlgElem::K(rd, l), AlgElem::E(rd, l)));
        t *= c;
        out += t;
    }
    return out;
}

Scalar counit(const AlgElem& x) {
    Scalar s;
    for (const auto& [m, c] : x.terms())
        if (m.f.empty() && m.e.empty()) s += c;
    return s;
}

}  // namespace qsp
