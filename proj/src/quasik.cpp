#include "qsp/quasik.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "qsp/qnumbers.hpp"

namespace qsp {

namespace {

std::size_t ix(int i) { return static_cast<std::size_t>(i); }

bool nonneg(const IVec& v) {
    return std::all_of(v.begin(), v.end(), [](int x) { return x >= 0; });
}

IVec scaled(const IVec& v, int k) {
    IVec r = v;
    for (auto& x : r) x *= k;
    return r;
}

// Weights supported on `nodes` with 1 ≤ height ≤ h, by height.
std::vector<IVec> weights_on(std::size_t n, const std::vector<int>& nodes, int h) {
    std::vector<IVec> out;
    IVec cur(n, 0);
    std::function<void(std::size_t, int)> go = [&](std::size_t k, int left) {
        if (k == nodes.size()) {
            if (left < h) out.push_back(cur);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            cur[ix(nodes[k])] = v;
            go(k + 1, left - v);
        }
        cur[ix(nodes[k])] = 0;
    };
    go(0, h);
    std::sort(out.begin(), out.end(), weight_less);
    return out;
}

}  // namespace

QSPData QSPData::make(const SatakeDiagram& d, const std::map<int, Scalar>& c, const std::map<int, Scalar>& s,
                      const std::optional<std::vector<Scalar>>& sfun) {
    QSPData q;
    q.diagram = d;
    q.restricted = restricted_data(d);
    q.params = build_params(d, q.restricted, c, s, sfun);
    q.wX_word = q.restricted.w_X.reduced_word();
    const RootDatum& rd = d.datum;
    const std::size_t n = ix(rd.rank());
    q.TwX_E.assign(n, AlgElem(rd));
    q.X.assign(n, AlgElem(rd));
    q.B.assign(n, AlgElem(rd));
    for (int i : d.white()) {
        const int t = d.tau[ix(i)];
        AlgElem te = T_word(q.wX_word, AlgElem::E(rd, t));
        if (!te.is_e_only()) throw std::logic_error("T_{w_X}(E_tau(i)) did not reduce to U+");
        q.TwX_E[ix(i)] = te;
        q.X[ix(i)] = -(q.params.sfun[ix(t)] * te);
        AlgElem Kinv = AlgElem::K(rd, i, -1);
        q.B[ix(i)] = AlgElem::F(rd, i) - (q.params.c[ix(i)] * q.params.sfun[ix(t)]) * (te * Kinv) + q.params.s[ix(i)] * Kinv;
    }
    for (int j : d.X) q.B[ix(j)] = AlgElem::F(rd, j);
    return q;
}

QSPData QSPData::rank_one_sub(int i) const {
    SatakeDiagram sub = subdiagram(diagram, i);
    std::map<int, Scalar> c, s;
    for (int w : sub.white()) {
        c[w] = params.c[ix(w)];
        if (!params.s[ix(w)].is_zero()) s[w] = params.s[ix(w)];
    }
    std::vector<Scalar> sf(params.sfun.size(), Scalar(1));
    for (int k : sub.nodes) sf[ix(k)] = params.sfun[ix(k)];
    return make(sub, c, s, sf);
}

int QSPData::default_height() const { return diagram.rank() <= 2 && diagram.nodes.size() <= 4 ? 8 : 6; }

InconsistentSystem::InconsistentSystem(const IVec& m, int i, const std::string& msg)
    : std::runtime_error("inconsistent recursion at weight " + weight_str(m) +
                         (i >= 0 ? ", node " + std::to_string(i + 1) : std::string()) + ": " + msg),
      mu(m),
      node(i) {}

KSeries solve_qkm(const QSPData& qsp, int N) {
    const RootDatum& rd = qsp.datum();
    const std::size_t n = ix(rd.rank());
    KSeries K = KSeries::one(rd, N);
    std::vector<std::optional<UVec>> Xv(n);
    for (int i : qsp.diagram.white()) Xv[ix(i)] = to_uvec(qsp.X[ix(i)]);

    for (const IVec& mu : weights_on(n, qsp.diagram.nodes, N)) {
        const WordSpace& ws = word_space(rd, mu);
        std::vector<std::optional<UVec>> rhs(n);
        auto rhs_for = [&](int i) -> const UVec& {
            auto& slot = rhs[ix(i)];
            if (slot) return *slot;
            IVec m1 = mu;
            m1[ix(i)] -= 1;
            UVec r(rd, m1);
            if (qsp.diagram.is_white(i)) {
                const IVec& th = qsp.restricted.theta[ix(i)];
                IVec nu = m1;
                for (std::size_t k = 0; k < n; ++k) nu[k] += th[k];
                if (nonneg(nu) && K.has(nu)) {
                    int e = -rd.pair_simple(i, th);
                    r += (qsp.params.c[ix(i)].times_q_pow(e)) * (*Xv[ix(i)] * K.at(nu));
                }
                const Scalar& si = qsp.params.s[ix(i)];
                if (!si.is_zero() && K.has(m1)) r += si * K.at(m1);
                r *= -q_diff(rd.d(i));
            }
            slot = r;
            return *slot;
        };
        UVec x(rd, mu);
        bool any = false;
        for (std::size_t k = 0; k < ws.size(); ++k) {
            const Word& w = ws.words[k];
            const int i = w.back();
            const UVec& r = rhs_for(i);
            if (r.is_zero()) continue;
            Word v(w.begin(), w.end() - 1);
            x[k] = r.at(v);
            any = any || !x[k].is_zero();
        }
        if (!any) continue;
        if (auto bad = image_violation(x))
            throw InconsistentSystem(mu, -1, "the derivative data is not the image of an element of U+ (" + *bad +
                                                 "); the parameters probably violate ciCond");
        K.set(mu, x);
    }
    return K;
}

std::optional<RankOneForm> rank_one_form(const QSPData& qsp, int i) {
    const SatakeDiagram& d = qsp.diagram;
    const RootDatum& rd = d.datum;
    if (!d.is_white(i)) throw std::invalid_argument("rank_one_form: node is not white");
    SatakeDiagram sub = subdiagram(d, i);
    const int t = d.tau[ix(i)];
    const auto& P = qsp.params;
    const Scalar q = Scalar::q_pow(1);
    std::vector<int> Xs = sub.X;
    auto simply_laced = [&]() {
        for (int a : sub.nodes)
            for (int b : sub.nodes) {
                if (rd.form(a, a) != 2) return false;
                if (a != b && rd.form(a, b) != 0 && rd.form(a, b) != -1) return false;
            }
        return true;
    };

    if (t == i && Xs.empty()) {
        const int di = rd.d(i);
        const Scalar base = q_diff(di) * P.c[ix(i)].times_q_pow(2 * di) * P.sfun[ix(i)];
        RankOneForm f{"AI1", {}};
        f.factors.push_back({AlgElem::E(rd, i), [base, di](int k) -> Scalar {
                                 if (k % 2) return Scalar(0);
                                 return base.pow(k / 2) / braced_double_factorial(k, di);
                             }});
        return f;
    }
    if (t == i && Xs.size() == 2 && simply_laced() && rd.form(i, Xs[0]) == -1 && rd.form(i, Xs[1]) == -1 &&
        rd.form(Xs[0], Xs[1]) == 0) {
        AlgElem Ei = AlgElem::E(rd, i);
        AlgElem gen = qcomm(Ei, qsp.TwX_E[ix(i)], Scalar::q_pow(-2));
        const Scalar base = q * P.c[ix(i)] * P.sfun[ix(i)];
        RankOneForm f{"AII3", {}};
        f.factors.push_back({gen, [base](int k) { return base.pow(k) / braced_factorial(k); }});
        return f;
    }
    if (t != i && Xs.empty() && rd.form(i, t) == 0) {
        const int a = std::min(i, t), b = std::max(i, t);
        const int di = rd.d(a);
        const Scalar base = q_diff(di) * P.c[ix(a)] * P.sfun[ix(b)];
        RankOneForm f{"AIII11", {}};
        f.factors.push_back({AlgElem::E(rd, a) * AlgElem::E(rd, b),
                             [base, di](int k) { return base.pow(k) / braced_factorial(k, di); }});
        return f;
    }
    if (t != i && simply_laced()) {
        // a path from i to τ(i) whose interior is X
        const std::size_t m = sub.nodes.size();
        int edges = 0;
        bool ok = true;
        for (int u : sub.nodes) {
            int deg = 0;
            for (int v : sub.nodes) deg += rd.connected(u, v) ? 1 : 0;
            edges += deg;
            bool end = (u == i || u == t);
            if (m > 1 && ((end && deg != 1) || (!end && deg != 2))) ok = false;
        }
        if (ok && edges / 2 == static_cast<int>(m) - 1 && Xs.size() + 2 == m) {
            const int a = std::min(i, t), b = std::max(i, t);
            Word wa{a}, wb{b};
            wa.insert(wa.end(), qsp.wX_word.begin(), qsp.wX_word.end());
            wb.insert(wb.end(), qsp.wX_word.begin(), qsp.wX_word.end());
            // only the X-letters adjacent to this orbit act nontrivially on E_a, E_b
            AlgElem g1 = T_word(wa, AlgElem::E(rd, b));
            AlgElem g2 = T_word(wb, AlgElem::E(rd, a));
            const Scalar b1 = P.c[ix(a)] * P.sfun[ix(b)];
            const Scalar b2 = P.c[ix(b)] * P.sfun[ix(a)];
            RankOneForm f{"AIV", {}};
            f.factors.push_back({g1, [b1](int k) { return b1.pow(k) / braced_factorial(k); }});
            f.factors.push_back({g2, [b2](int k) { return b2.pow(k) / braced_factorial(k); }});
            return f;
        }
    }
    return std::nullopt;
}

Scalar omega_scalar(const QSPData& qsp, const Word& chain, const IVec& mu) {
    const RootDatum& rd = qsp.datum();
    Weight m = Weight::from_ints(mu);
    Scalar total(1);
    for (std::size_t l = chain.size(); l-- > 0;) {
        const int i = chain[l];
        const Weight& at = qsp.restricted.alpha_tilde[ix(i)];
        const Rat a = rd.pair(m, at);
        const Rat e = a / rd.pair(at, at);
        if (a.denominator() != 1 || e.denominator() != 1)
            throw OmegaError("Omega_" + std::to_string(i + 1) + ": non-integral exponent at weight " + m.str() +
                             "; the weight is not in Q+(2 Sigma)");
        const int ai = static_cast<int>(a.numerator()), ei = static_cast<int>(e.numerator());
        Scalar f = Scalar::q_pow(-ai);
        const auto& ct = qsp.params.ctilde[ix(i)];
        if (ct) {
            f *= ct->pow(-ei);
        } else {
            if (ei % 2) throw OmegaError("Omega_" + std::to_string(i + 1) + ": odd exponent with c~ outside K(q)");
            f *= qsp.params.ctilde_sq[ix(i)].pow(-ei / 2);
        }
        total *= f;
        m = qsp.restricted.s_tilde[ix(i)].act(m);
    }
    return total;
}

AlgElem omega(const QSPData& qsp, int i, const AlgElem& x) {
    if (x.terms().empty()) return x;
    if (!x.is_e_only()) throw OmegaError("omega: argument is not in U+");
    UVec v = to_uvec(x);
    AlgElem y = T_word(qsp.restricted.s_tilde[ix(i)].reduced_word(), x);
    auto e = as_e_only(y);
    if (!e) throw OmegaError("omega: image is not in U+");
    return omega_scalar(qsp, {i}, v.weight()) * *e;
}

namespace {

Word chain_word(const QSPData& qsp, const Word& chain) {
    Word w;
    for (int i : chain) {
        Word r = qsp.restricted.s_tilde[ix(i)].reduced_word();
        w.insert(w.end(), r.begin(), r.end());
    }
    return w;
}

KSeries factor_series(const QSPData& qsp, const SeriesFactor& f, const Word& chain, int N) {
    const RootDatum& rd = qsp.datum();
    AlgElem g = chain.empty() ? f.gen : T_word(chain_word(qsp, chain), f.gen);
    auto ge = as_e_only(g);
    if (!ge) throw OmegaError("braid image of a rank-one generator is not in U+");
    UVec G = to_uvec(*ge);
    UVec g0 = to_uvec(f.gen);
    const int h = height(G.weight());
    if (h <= 0) throw OmegaError("braid image of a rank-one generator has non-positive height");
    KSeries S = KSeries::one(rd, N);
    UVec P = UVec::one(rd);
    for (int k = 1; k * h <= N; ++k) {
        P = P * G;
        Scalar c = f.coeff(k);
        if (c.is_zero()) continue;
        if (!chain.empty()) c *= omega_scalar(qsp, chain, scaled(g0.weight(), k));
        S.set(P.weight(), c * P);
    }
    return S;
}

KSeries apply_chain(const QSPData& qsp, const KSeries& base, const Word& chain, int N) {
    if (chain.empty()) return base.truncated(N);
    const RootDatum& rd = qsp.datum();
    const Word cw = chain_word(qsp, chain);
    KSeries out = KSeries::one(rd, N);
    for (const auto& mu : base.weights()) {
        if (height(mu) == 0) continue;
        AlgElem y = T_word(cw, AlgElem::from_uvec(base.at(mu)));
        auto e = as_e_only(y);
        if (!e) throw OmegaError("Omega chain leaves U+ at weight " + weight_str(mu));
        UVec v = to_uvec(*e);
        if (height(v.weight()) < height(mu))
            throw OmegaError("Omega chain lowers the height at weight " + weight_str(mu) + "; raise the source height");
        out.set(v.weight(), omega_scalar(qsp, chain, mu) * v);
    }
    return out;
}

}  // namespace

KSeries rank_one_qkm_at(const QSPData& qsp, int i, int N) {
    if (auto f = rank_one_form(qsp, i)) {
        KSeries S = KSeries::one(qsp.datum(), N);
        for (const auto& fac : f->factors) S = S * factor_series(qsp, fac, {}, N);
        return S;
    }
    return solve_qkm(qsp.rank_one_sub(i), N);
}

KSeries rank_one_qkm(const QSPData& qsp, int N) {
    if (qsp.diagram.rank() != 1) throw std::invalid_argument("rank_one_qkm: diagram is not of rank one");
    if (!qsp.params.s_is_zero()) throw std::invalid_argument("rank_one_qkm: s must be zero");
    return rank_one_qkm_at(qsp, qsp.restricted.reps.at(0), N);
}

std::vector<KSeries> partial_factors(const QSPData& qsp, const Word& word, int N) {
    if (!qsp.params.s_is_zero()) throw std::invalid_argument("partial_qkm: s must be zero");
    Word w;
    for (int l : word) {
        if (l < 0 || l >= qsp.datum().rank() || qsp.restricted.rep_of[ix(l)] < 0)
            throw std::invalid_argument("partial_qkm: letter " + std::to_string(l + 1) + " is not a white node");
        w.push_back(qsp.restricted.rep_of[ix(l)]);
    }
    if (!qsp.restricted.is_tilde_reduced(w))
        throw std::invalid_argument("partial_qkm: word " + word_str(w) + " is not reduced in the restricted Weyl group");
    std::vector<KSeries> out;
    for (std::size_t k = 0; k < w.size(); ++k) {
        Word chain(w.begin(), w.begin() + static_cast<long>(k));
        const int i = w[k];
        if (auto f = rank_one_form(qsp, i)) {
            KSeries S = KSeries::one(qsp.datum(), N);
            for (const auto& fac : f->factors) S = S * factor_series(qsp, fac, chain, N);
            out.push_back(S);
        } else {
            out.push_back(apply_chain(qsp, solve_qkm(qsp.rank_one_sub(i), N), chain, N));
        }
    }
    return out;
}

KSeries partial_qkm(const QSPData& qsp, const Word& word, int N) {
    auto f = partial_factors(qsp, word, N);
    KSeries P = KSeries::one(qsp.datum(), N);
    for (auto it = f.rbegin(); it != f.rend(); ++it) P = P * *it;
    return P;
}

namespace {

bool has_closed_forms(const QSPData& qsp) {
    for (int r : qsp.restricted.reps)
        if (!rank_one_form(qsp, r)) return false;
    return true;
}

std::vector<Word> w0_words(const QSPData& qsp) {
    auto words = qsp.restricted.tilde_reduced_words(qsp.restricted.w0_tilde_elem);
    std::sort(words.begin(), words.end());
    return words;
}

}  // namespace

CheckReport check_theoremA(const QSPData& qsp, int N, int sample) {
    CheckReport rep;
    rep.name = "theoremA";
    if (!qsp.params.s_is_zero()) throw std::invalid_argument("check_theoremA: s must be zero");
    auto words = w0_words(qsp);
    if (qsp.diagram.rank() > 2 && static_cast<int>(words.size()) > sample) words.resize(static_cast<std::size_t>(sample));
    // Type-A rank-one pieces carry the theorem; other pieces make the comparison conjectural.
    rep.conjectural = !has_closed_forms(qsp);
    KSeries oracle = solve_qkm(qsp, N);
    for (const auto& w : words) {
        KSeries P = partial_qkm(qsp, w, N);
        if (auto d = oracle.first_difference(P))
            rep.fail("word " + word_str(w) + ": FAIL at weight " + weight_str(*d));
        else
            rep.note("word " + word_str(w) + ": PASS");
    }
    rep.note(std::to_string(words.size()) + " reduced word(s) of w0~, height " + std::to_string(N));
    return rep;
}

CheckReport check_conjectureB(const QSPData& qsp, int N) {
    CheckReport rep;
    rep.name = "conjectureB";
    auto words = w0_words(qsp);
    rep.conjectural = !has_closed_forms(qsp);
    KSeries first = partial_qkm(qsp, words.at(0), N);
    for (std::size_t k = 1; k < words.size(); ++k) {
        KSeries P = partial_qkm(qsp, words[k], N);
        if (auto d = first.first_difference(P))
            rep.fail("words " + word_str(words[0]) + " and " + word_str(words[k]) + " differ at weight " + weight_str(*d));
        else
            rep.note("words " + word_str(words[0]) + " and " + word_str(words[k]) + " agree");
    }
    return rep;
}

CheckReport intertwiner_check(const QSPData& qsp, const KSeries& K, int N) {
    CheckReport rep;
    rep.name = "intertwiner";
    const RootDatum& rd = qsp.datum();
    const std::size_t n = ix(rd.rank());
    N = std::min(N, K.height());
    std::vector<std::pair<IVec, AlgElem>> comps;
    for (const auto& mu : K.weights())
        if (height(mu) <= N) comps.emplace_back(mu, AlgElem::from_uvec(K.at(mu)));

    // b 𝔛 − 𝔛 rb, checked at every weight ν whose contributions all come from stored components
    auto check = [&](const std::string& label, const AlgElem& b, const AlgElem& rb) {
        std::map<IVec, AlgElem> by_weight;
        for (const auto& [mu, x] : comps) {
            AlgElem d = b * x - x * rb;
            for (const auto& [m, c] : d.terms()) {
                IVec nu = m.weight(n);
                auto it = by_weight.find(nu);
                if (it == by_weight.end()) it = by_weight.emplace(nu, AlgElem(rd)).first;
                it->second.add_term(m, c);
            }
        }
        int checked = 0;
        for (const auto& [nu, d] : by_weight) {
            if (height(nu) > N - 1) continue;
            ++checked;
            if (!is_zero(d)) {
                rep.fail(label + " fails at weight " + weight_str(nu));
                return;
            }
        }
        if (by_weight.empty())
            rep.note(label + ": PASS (the difference cancels term by term)");
        else
            rep.note(label + ": PASS (" + std::to_string(checked) + " weights)");
    };

    for (int i : qsp.diagram.nodes) {
        const std::string id = std::to_string(i + 1);
        if (qsp.diagram.is_white(i)) {
            check("B_" + id, qsp.B[ix(i)], bar_u(qsp.B[ix(i)]));
        } else {
            check("F_" + id, AlgElem::F(rd, i), AlgElem::F(rd, i));
            check("E_" + id, AlgElem::E(rd, i), AlgElem::E(rd, i));
        }
        // K_κ with Θ(κ) = κ: bar(K_κ) = K_{−κ} on both sides, so 𝔛_μ must commute with K_κ
        IVec kappa(n, 0);
        kappa[ix(i)] = 1;
        const IVec& th = qsp.restricted.theta[ix(i)];
        for (std::size_t k = 0; k < n; ++k) kappa[k] += th[k];
        if (std::all_of(kappa.begin(), kappa.end(), [](int v) { return v == 0; })) continue;
        AlgElem Kk = AlgElem::K(rd, kappa);
        check("K_(a" + id + "+Theta a" + id + ")", Kk, Kk);
    }
    return rep;
}

CheckReport derivation_vanishing_check(const QSPData& qsp, const KSeries& K) {
    CheckReport rep;
    rep.name = "derivation";
    for (int j : qsp.diagram.X)
        for (const auto& mu : K.weights()) {
            UVec d = skew_l(j, K.at(mu));
            if (!d.is_zero()) rep.fail("_" + std::to_string(j + 1) + "r is nonzero at weight " + weight_str(mu));
        }
    if (rep.pass) rep.note(qsp.diagram.X.empty() ? "X is empty" : "all components killed by _jr, j in X");
    return rep;
}

KSeries permute_series(const KSeries& K, const std::vector<int>& eta) {
    const RootDatum& rd = K.datum();
    const std::size_t n = ix(rd.rank());
    std::vector<int> inv(n);
    for (std::size_t k = 0; k < n; ++k) inv[ix(eta[k])] = static_cast<int>(k);
    KSeries out(rd, K.height());
    for (const auto& [mu, x] : K.components()) {
        IVec m2(n, 0);
        for (std::size_t k = 0; k < n; ++k) m2[ix(eta[k])] = mu[k];
        UVec y(rd, m2);
        const WordSpace& ws = y.space();
        for (std::size_t k = 0; k < ws.size(); ++k) {
            Word w = ws.words[k];
            for (auto& l : w) l = inv[ix(l)];
            y[k] = x.at(w);
        }
        out.set(m2, y);
    }
    return out;
}

CheckReport diag_aut_check(const QSPData& qsp, const std::vector<int>& eta, int N) {
    CheckReport rep;
    rep.name = "diagram automorphism";
    const SatakeDiagram& d = qsp.diagram;
    const RootDatum& rd = d.datum;
    const std::size_t n = ix(rd.rank());
    if (eta.size() != n) throw std::invalid_argument("diag_aut_check: eta has the wrong length");
    std::vector<int> sorted = eta;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t k = 0; k < n; ++k)
        if (sorted[k] != static_cast<int>(k)) throw std::invalid_argument("diag_aut_check: eta is not a permutation");
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b)
            if (rd.form(eta[a], eta[b]) != rd.form(static_cast<int>(a), static_cast<int>(b)))
                throw std::invalid_argument("diag_aut_check: eta is not a diagram automorphism");
        if (eta[ix(d.tau[a])] != d.tau[ix(eta[a])]) throw std::invalid_argument("diag_aut_check: eta does not commute with tau");
        if (d.in_X(static_cast<int>(a)) != d.in_X(eta[a])) throw std::invalid_argument("diag_aut_check: eta(X) != X");
        if (d.contains(static_cast<int>(a)) != d.contains(eta[a])) throw std::invalid_argument("diag_aut_check: eta moves the support");
    }
    std::map<int, Scalar> c, s;
    std::vector<Scalar> sf(n, Scalar(1));
    for (std::size_t k = 0; k < n; ++k) {
        const int e = eta[k];
        sf[ix(e)] = qsp.params.sfun[k];
        if (d.is_white(static_cast<int>(k))) {
            c[e] = qsp.params.c[k];
            if (!qsp.params.s[k].is_zero()) s[e] = qsp.params.s[k];
        }
    }
    QSPData q2 = QSPData::make(d, c, s, sf);
    KSeries lhs = permute_series(solve_qkm(qsp, N), eta);
    KSeries rhs = solve_qkm(q2, N);
    if (auto w = lhs.first_difference(rhs)) rep.fail("differs at weight " + weight_str(*w));
    else rep.note("eta(X_{c,s}) = X_{eta(c),eta(s)} up to height " + std::to_string(N));
    return rep;
}

CheckReport last_factor_check(const QSPData& qsp, int N) {
    CheckReport rep;
    rep.name = "last factor";
    const auto& R = qsp.restricted;
    for (const auto& w : w0_words(qsp)) {
        const int it = w.back();
        // τ̃₀(i_t): w̃₀(α̃_{i_t}) = −α̃_j
        Weight img = -R.w0_tilde_elem.act(R.alpha_tilde[ix(it)]);
        int j = -1;
        for (int r : R.reps)
            if (R.alpha_tilde[ix(r)] == img) j = r;
        if (j < 0) {
            rep.fail("word " + word_str(w) + ": w0~ does not map alpha~_" + std::to_string(it + 1) + " to a negative simple root");
            continue;
        }
        auto f = partial_factors(qsp, w, N);
        KSeries ref = rank_one_qkm_at(qsp, j, N);
        if (auto d = f.back().first_difference(ref))
            rep.fail("word " + word_str(w) + ": X^[t] differs from X_" + std::to_string(j + 1) + " at " + weight_str(*d));
        else
            rep.note("word " + word_str(w) + ": X^[t] = X_" + std::to_string(j + 1));
    }
    return rep;
}

}  // namespace qsp
