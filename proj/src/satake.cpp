#include "qsp/satake.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

#include "json.hpp"

namespace qsp {

namespace {

std::string node_str(int i) { return std::to_string(i + 1); }

bool contains_sorted(const std::vector<int>& v, int x) { return std::binary_search(v.begin(), v.end(), x); }

// Connected components of the Dynkin subgraph on S.
std::vector<std::vector<int>> components(const RootDatum& rd, const std::vector<int>& S) {
    std::vector<std::vector<int>> out;
    std::set<int> left(S.begin(), S.end());
    while (!left.empty()) {
        std::vector<int> comp{*left.begin()};
        left.erase(left.begin());
        for (std::size_t k = 0; k < comp.size(); ++k) {
            for (auto it = left.begin(); it != left.end();) {
                if (rd.connected(comp[k], *it)) {
                    comp.push_back(*it);
                    it = left.erase(it);
                } else {
                    ++it;
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(comp);
    }
    return out;
}

// Σ = {(β − Θβ)/2} over positive roots of the support, without 0.
std::set<std::vector<Rat>> restricted_roots(const SatakeDiagram& d, const RestrictedData& r) {
    const auto n = static_cast<std::size_t>(d.size());
    std::set<std::vector<Rat>> sigma;
    for (const auto& b : d.datum.positive_roots()) {
        bool inside = true;
        for (std::size_t k = 0; k < n; ++k)
            if (b[k] != 0 && !d.contains(static_cast<int>(k))) inside = false;
        if (!inside) continue;
        IVec th = r.theta_of(b);
        std::vector<Rat> t(n);
        bool zero = true;
        for (std::size_t k = 0; k < n; ++k) {
            t[k] = Rat(b[k] - th[k], 2);
            zero = zero && t[k] == Rat(0);
        }
        if (!zero) sigma.insert(t);
    }
    return sigma;
}

bool has_doubled_root(const std::set<std::vector<Rat>>& sigma) {
    for (const auto& t : sigma) {
        std::vector<Rat> t2 = t;
        for (auto& x : t2) x *= 2;
        if (sigma.count(t2)) return true;
    }
    return false;
}

}  // namespace

SatakeDiagram SatakeDiagram::make(const RootDatum& rd, std::vector<int> X, std::vector<int> tau, std::string name) {
    SatakeDiagram d;
    d.datum = rd;
    d.nodes.resize(static_cast<std::size_t>(rd.rank()));
    std::iota(d.nodes.begin(), d.nodes.end(), 0);
    std::sort(X.begin(), X.end());
    X.erase(std::unique(X.begin(), X.end()), X.end());
    for (int x : X)
        if (x < 0 || x >= rd.rank()) throw std::out_of_range("black node out of range");
    d.X = std::move(X);
    if (tau.empty()) {
        tau.resize(static_cast<std::size_t>(rd.rank()));
        std::iota(tau.begin(), tau.end(), 0);
    }
    if (static_cast<int>(tau.size()) != rd.rank()) throw std::invalid_argument("tau has the wrong length");
    d.tau = std::move(tau);
    d.name = std::move(name);
    return d;
}

bool SatakeDiagram::contains(int i) const { return contains_sorted(nodes, i); }
bool SatakeDiagram::in_X(int i) const { return contains_sorted(X, i); }

std::vector<int> SatakeDiagram::white() const {
    std::vector<int> w;
    for (int i : nodes)
        if (!in_X(i)) w.push_back(i);
    return w;
}

int SatakeDiagram::rank() const {
    int r = 0;
    for (int i : white())
        if (tau[static_cast<std::size_t>(i)] >= i) ++r;
    return r;
}

std::string SatakeReport::str() const {
    std::ostringstream os;
    for (const auto& c : checks) {
        os << "property " << c.property << ": " << (c.ok ? "ok" : "FAIL");
        if (!c.detail.empty()) os << " (" << c.detail << ")";
        os << "\n";
    }
    return os.str();
}

SatakeReport validate_satake(const SatakeDiagram& d) {
    SatakeReport rep;
    const RootDatum& rd = d.datum;
    const int n = rd.rank();
    auto add = [&](int prop, bool ok, std::string detail) {
        rep.checks.push_back({prop, ok, std::move(detail)});
        rep.valid = rep.valid && ok;
    };

    // τ must be a permutation of J preserving the form, with τ(X) = X.
    {
        bool ok = true;
        std::string why;
        std::vector<int> seen(static_cast<std::size_t>(n), 0);
        for (int i = 0; i < n && ok; ++i) {
            int t = d.tau[static_cast<std::size_t>(i)];
            if (t < 0 || t >= n || seen[static_cast<std::size_t>(t)]++) {
                ok = false;
                why = "tau is not a permutation";
            } else if (d.contains(i) != d.contains(t)) {
                ok = false;
                why = "tau does not preserve the support at node " + node_str(i);
            } else if (d.in_X(i) != d.in_X(t)) {
                ok = false;
                why = "tau(X) != X at node " + node_str(i);
            }
        }
        for (int i = 0; i < n && ok; ++i)
            for (int j = 0; j < n && ok; ++j)
                if (d.contains(i) && d.contains(j) &&
                    rd.form(i, j) != rd.form(d.tau[static_cast<std::size_t>(i)], d.tau[static_cast<std::size_t>(j)])) {
                    ok = false;
                    why = "tau is not a diagram automorphism at (" + node_str(i) + "," + node_str(j) + ")";
                }
        add(0, ok, why);
        if (!ok) return rep;
    }

    {
        bool ok = true;
        std::string why;
        for (int i = 0; i < n; ++i) {
            int t = d.tau[static_cast<std::size_t>(i)];
            if (d.tau[static_cast<std::size_t>(t)] != i) {
                ok = false;
                why = "tau^2 != id at node " + node_str(i);
                break;
            }
        }
        add(1, ok, why);
    }

    WeylElem wX = longest_element(rd, d.X);
    {
        bool ok = true;
        std::string why;
        for (int i : d.X) {
            IVec e(static_cast<std::size_t>(n), 0);
            e[static_cast<std::size_t>(i)] = 1;
            IVec img = wX.act(e);
            IVec want(static_cast<std::size_t>(n), 0);
            want[static_cast<std::size_t>(d.tau[static_cast<std::size_t>(i)])] = -1;
            if (img != want) {
                ok = false;
                why = "witness i = " + node_str(i);
                break;
            }
        }
        add(2, ok, why);
    }

    {
        bool ok = true;
        std::string why;
        RhoData rho = rho_data(rd, d.X);
        for (int j : d.white()) {
            if (d.tau[static_cast<std::size_t>(j)] != j) continue;
            const Rat& v = rho.alpha_on_rho_check[static_cast<std::size_t>(j)];
            if (v.denominator() != 1) {
                ok = false;
                why = "witness j = " + node_str(j) + ", alpha_j(rho_X^v) = " + rat_str(v);
                break;
            }
        }
        add(3, ok, why);
    }
    return rep;
}

SatakeDiagram subdiagram(const SatakeDiagram& d, const std::vector<int>& white_nodes) {
    std::set<int> J;
    for (int i : white_nodes) {
        if (!d.is_white(i)) throw std::invalid_argument("subdiagram: node " + node_str(i) + " is not white");
        J.insert(i);
        J.insert(d.tau[static_cast<std::size_t>(i)]);
    }
    for (int i : white_nodes)
        if (!J.count(d.tau[static_cast<std::size_t>(i)])) throw std::invalid_argument("subdiagram: white set is not tau-stable");
    for (const auto& comp : components(d.datum, d.X)) {
        bool adjacent = false;
        for (int x : comp)
            for (int w : white_nodes) {
                adjacent = adjacent || d.datum.connected(x, w) || d.datum.connected(x, d.tau[static_cast<std::size_t>(w)]);
            }
        if (adjacent) J.insert(comp.begin(), comp.end());
    }
    SatakeDiagram sub = d;
    sub.nodes.assign(J.begin(), J.end());
    sub.X.clear();
    for (int x : d.X)
        if (J.count(x)) sub.X.push_back(x);
    for (int i = 0; i < d.size(); ++i)
        if (!J.count(i)) sub.tau[static_cast<std::size_t>(i)] = i;
    sub.name.clear();
    return sub;
}

SatakeDiagram subdiagram(const SatakeDiagram& d, int i) {
    std::vector<int> w{i};
    if (d.tau[static_cast<std::size_t>(i)] != i) w.push_back(d.tau[static_cast<std::size_t>(i)]);
    return subdiagram(d, w);
}

IVec RestrictedData::theta_of(const IVec& v) const {
    IVec r(v.size(), 0);
    for (std::size_t j = 0; j < v.size(); ++j) {
        if (v[j] == 0) continue;
        for (std::size_t k = 0; k < r.size(); ++k) r[k] += v[j] * theta[j][k];
    }
    return r;
}

Weight RestrictedData::theta_of(const Weight& v) const {
    Weight r(v.size());
    for (std::size_t j = 0; j < v.size(); ++j) {
        if (v[j] == Rat(0)) continue;
        for (std::size_t k = 0; k < r.size(); ++k) r[k] += v[j] * theta[j][k];
    }
    return r;
}

WeylElem RestrictedData::tilde_elem(const Word& w) const {
    WeylElem e = WeylElem::identity(w_X.datum());
    for (int i : w) e = e * s_tilde.at(static_cast<std::size_t>(i));
    return e;
}

bool RestrictedData::is_tilde_reduced(const Word& w) const {
    int sum = 0;
    for (int i : w) sum += s_tilde.at(static_cast<std::size_t>(i)).length();
    return tilde_elem(w).length() == sum;
}

std::vector<Word> RestrictedData::tilde_reduced_words(const WeylElem& w) const {
    std::vector<Word> out;
    Word suffix;
    std::function<void(const WeylElem&)> rec = [&](const WeylElem& u) {
        if (u.is_identity()) {
            out.emplace_back(suffix.rbegin(), suffix.rend());
            return;
        }
        for (int r : reps) {
            const WeylElem& s = s_tilde[static_cast<std::size_t>(r)];
            WeylElem v = u * s;  // s̃ is an involution
            if (v.length() + s.length() == u.length()) {
                suffix.push_back(r);
                rec(v);
                suffix.pop_back();
            }
        }
    };
    rec(w);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::pair<WeylElem, Word>> RestrictedData::tilde_ball(int k) const {
    std::vector<std::pair<WeylElem, Word>> out{{WeylElem::identity(w_X.datum()), Word{}}};
    std::set<WeylElem> seen{out.front().first};
    std::size_t begin = 0;
    for (int len = 1; len <= k; ++len) {
        std::size_t end = out.size();
        for (std::size_t idx = begin; idx < end; ++idx) {
            for (int r : reps) {
                Word w = out[idx].second;
                w.push_back(r);
                if (!is_tilde_reduced(w)) continue;
                WeylElem e = out[idx].first * s_tilde[static_cast<std::size_t>(r)];
                if (seen.insert(e).second) out.emplace_back(e, w);
            }
        }
        begin = end;
    }
    return out;
}

CheckReport length_additivity_check(const RestrictedData& r, int k) {
    CheckReport rep;
    rep.name = "length additivity";
    std::map<WeylElem, std::pair<int, Word>> dist;
    std::vector<WeylElem> frontier{WeylElem::identity(r.w_X.datum())};
    dist.emplace(frontier.front(), std::make_pair(0, Word{}));
    for (int len = 1; len <= 2 * k && !frontier.empty(); ++len) {
        std::vector<WeylElem> next;
        for (const auto& x : frontier)
            for (int i : r.reps) {
                WeylElem y = x * r.s_tilde[static_cast<std::size_t>(i)];
                if (dist.count(y)) continue;
                Word w = dist.at(x).second;
                w.push_back(i);
                dist.emplace(y, std::make_pair(len, w));
                next.push_back(y);
            }
        frontier = std::move(next);
    }
    int singles = 0, pairs = 0;
    for (const auto& [x, dw] : dist) {
        int sum = 0;
        for (int i : dw.second) sum += r.s_tilde[static_cast<std::size_t>(i)].length();
        ++singles;
        if (x.length() != sum) rep.fail("l differs from the sum over " + std::to_string(dw.second.size()) + " letters");
    }
    for (const auto& [x, dx] : dist) {
        if (dx.first > k) continue;
        for (const auto& [y, dy] : dist) {
            if (dy.first > k) continue;
            auto it = dist.find(x * y);
            if (it == dist.end() || it->second.first != dx.first + dy.first) continue;
            ++pairs;
            if ((x * y).length() != x.length() + y.length()) rep.fail("l(xy) != l(x) + l(y) for a lambda-additive pair");
        }
    }
    rep.note(std::to_string(singles) + " elements, " + std::to_string(pairs) + " lambda-additive pairs");
    return rep;
}

RestrictedData restricted_data(const SatakeDiagram& d) {
    const RootDatum& rd = d.datum;
    const auto n = static_cast<std::size_t>(rd.rank());
    RestrictedData r;
    r.w_X = longest_element(rd, d.X);
    r.theta.assign(n, IVec(n, 0));
    for (int j : d.nodes) {
        IVec e(n, 0);
        e[static_cast<std::size_t>(d.tau[static_cast<std::size_t>(j)])] = 1;
        IVec img = r.w_X.act(e);
        for (auto& x : img) x = -x;
        r.theta[static_cast<std::size_t>(j)] = img;
    }
    r.rep_of.assign(n, -1);
    r.alpha_tilde.assign(n, Weight(n));
    r.s_tilde.assign(n, WeylElem::identity(rd));
    for (int i : d.white()) {
        int t = d.tau[static_cast<std::size_t>(i)];
        int rep = std::min(i, t);
        r.rep_of[static_cast<std::size_t>(i)] = rep;
        if (rep == i) r.reps.push_back(i);
        IVec e(n, 0);
        e[static_cast<std::size_t>(i)] = 1;
        IVec th = r.theta[static_cast<std::size_t>(i)];
        Weight at(n);
        for (std::size_t k = 0; k < n; ++k) at[k] = Rat(e[k] - th[k], 2);
        r.alpha_tilde[static_cast<std::size_t>(i)] = at;
        std::vector<int> J = d.X;
        J.push_back(i);
        J.push_back(t);
        std::sort(J.begin(), J.end());
        J.erase(std::unique(J.begin(), J.end()), J.end());
        // w_X is an involution, so w_X⁻¹ = w_X.
        r.s_tilde[static_cast<std::size_t>(i)] = longest_element(rd, J) * r.w_X;
    }
    for (int a : r.reps) {
        for (int b : r.reps) {
            WeylElem p = r.s_tilde[static_cast<std::size_t>(a)] * r.s_tilde[static_cast<std::size_t>(b)];
            WeylElem acc = p;
            int m = 1;
            while (!acc.is_identity()) {
                if (++m > 6) throw std::logic_error("restricted Coxeter order exceeds 6; the diagram is not admissible");
                acc = acc * p;
            }
            r.coxeter[{a, b}] = m;
        }
    }
    // Greedy right multiplication by the smallest non-descent generator reaches w̃₀
    // and produces the lexicographically smallest reduced word.
    WeylElem w = WeylElem::identity(rd);
    for (;;) {
        bool grew = false;
        for (int a : r.reps) {
            const WeylElem& s = r.s_tilde[static_cast<std::size_t>(a)];
            WeylElem v = w * s;
            if (v.length() == w.length() + s.length()) {
                w = v;
                r.w0_tilde.push_back(a);
                grew = true;
                break;
            }
        }
        if (!grew) break;
    }
    r.w0_tilde_elem = w;
    r.non_reduced = has_doubled_root(restricted_roots(d, r));
    r.restricted_type = classify_restricted(d, r);
    return r;
}

std::string classify_restricted(const SatakeDiagram& d, const RestrictedData& r) {
    const RootDatum& rd = d.datum;
    if (r.reps.empty()) return "0";
    const bool nonreduced = has_doubled_root(restricted_roots(d, r));
    auto len = [&](int a) { return rd.pair(r.alpha_tilde[static_cast<std::size_t>(a)], r.alpha_tilde[static_cast<std::size_t>(a)]); };
    // Coxeter graph components.
    std::vector<std::vector<int>> comps;
    {
        std::set<int> left(r.reps.begin(), r.reps.end());
        while (!left.empty()) {
            std::vector<int> comp{*left.begin()};
            left.erase(left.begin());
            for (std::size_t k = 0; k < comp.size(); ++k)
                for (auto it = left.begin(); it != left.end();) {
                    if (r.coxeter.at({comp[k], *it}) > 2) {
                        comp.push_back(*it);
                        it = left.erase(it);
                    } else {
                        ++it;
                    }
                }
            std::sort(comp.begin(), comp.end());
            comps.push_back(comp);
        }
    }
    std::vector<std::string> names;
    for (const auto& comp : comps) {
        const int m = static_cast<int>(comp.size());
        int max_m = 2, n4 = 0, branch = 0;
        for (int a : comp) {
            int deg = 0;
            for (int b : comp) {
                if (a == b) continue;
                int o = r.coxeter.at({a, b});
                if (o > 2) ++deg;
                max_m = std::max(max_m, o);
                if (o == 4 && a < b) ++n4;
            }
            if (deg >= 3) ++branch;
        }
        std::string name;
        if (max_m == 6) {
            name = "G2";
        } else if (max_m == 4) {
            if (m == 4 && n4 == 1) {
                name = "F4";
            } else {
                // End node of the double edge decides B versus C.
                int end = -1, other = -1;
                for (int a : comp)
                    for (int b : comp)
                        if (a != b && r.coxeter.at({a, b}) == 4) {
                            int deg = 0;
                            for (int c : comp)
                                if (c != a && r.coxeter.at({a, c}) > 2) ++deg;
                            if (deg == 1 && (m == 2 ? a > b : true)) {
                                end = a;
                                other = b;
                            }
                        }
                bool short_end = end >= 0 && len(end) < len(other);
                name = (m == 2 ? std::string("B") : std::string(short_end ? "B" : "C")) + std::to_string(m);
            }
        } else if (branch > 0) {
            // D_m has two arms of length one at the branch node, E_m has one.
            int center = -1;
            for (int a : comp) {
                int deg = 0;
                for (int b : comp)
                    if (a != b && r.coxeter.at({a, b}) > 2) ++deg;
                if (deg == 3) center = a;
            }
            int short_arms = 0;
            for (int b : comp) {
                if (b == center || r.coxeter.at({center, b}) <= 2) continue;
                int deg = 0;
                for (int c : comp)
                    if (c != b && r.coxeter.at({b, c}) > 2) ++deg;
                if (deg == 1) ++short_arms;
            }
            name = (short_arms >= 2 ? "D" : "E") + std::to_string(m);
        } else {
            name = "A" + std::to_string(m);
        }
        if (nonreduced && (max_m == 4 || m == 1)) name = "BC" + std::to_string(m);
        names.push_back(name);
    }
    std::string out;
    for (std::size_t k = 0; k < names.size(); ++k) out += (k ? "x" : "") + names[k];
    return out;
}

std::vector<int> ins_set(const SatakeDiagram& d) {
    std::vector<int> out;
    for (int i : d.white()) {
        if (d.tau[static_cast<std::size_t>(i)] != i) continue;
        bool orth = true;
        for (int j : d.X)
            if (d.datum.cartan(i, j) != 0) orth = false;
        if (orth) out.push_back(i);
    }
    return out;
}

int ccond_exponent(const SatakeDiagram& d, const RestrictedData& r, int i) {
    const RootDatum& rd = d.datum;
    const auto n = static_cast<std::size_t>(rd.rank());
    IVec e(n, 0);
    e[static_cast<std::size_t>(i)] = 1;
    RhoData rho = rho_data(rd, d.X);
    Weight v = Weight::from_ints(r.theta[static_cast<std::size_t>(i)]) - Rat(2) * rho.rho;
    Rat x = rd.pair(Weight::from_ints(e), v);
    if (x.denominator() != 1) throw std::logic_error("non-integral c-condition exponent");
    return static_cast<int>(x.numerator());
}

std::vector<Scalar> default_sfun(const SatakeDiagram& d) {
    const auto n = static_cast<std::size_t>(d.size());
    std::vector<Scalar> s(n, Scalar(1));
    RhoData rho = rho_data(d.datum, d.X);
    for (int i : d.white()) {
        int t = d.tau[static_cast<std::size_t>(i)];
        if (t <= i) continue;
        // s(i)/s(τ(i)) = (−1)^{α_i(2ρ_X^∨)} with s(i) = 1.
        Rat e = Rat(2) * rho.alpha_on_rho_check[static_cast<std::size_t>(i)];
        if (e.denominator() != 1) throw std::logic_error("non-integral alpha_i(2 rho_X^v)");
        s[static_cast<std::size_t>(t)] = (e.numerator() % 2 == 0) ? Scalar(1) : Scalar(-1);
    }
    return s;
}

bool ParamSet::s_is_zero() const {
    return std::all_of(s.begin(), s.end(), [](const Scalar& x) { return x.is_zero(); });
}

ParamSet build_params(const SatakeDiagram& d, const RestrictedData& r, const std::map<int, Scalar>& c,
                      const std::map<int, Scalar>& s, const std::optional<std::vector<Scalar>>& sfun) {
    const RootDatum& rd = d.datum;
    const auto n = static_cast<std::size_t>(rd.rank());
    ParamSet p;
    p.c.assign(n, Scalar(0));
    p.s.assign(n, Scalar(0));
    for (const auto& [i, v] : c) {
        if (!d.is_white(i)) throw ParamError("ParameterSetC", "c given for non-white node " + node_str(i));
        p.c[static_cast<std::size_t>(i)] = v;
    }
    for (const auto& [i, v] : s) {
        if (!d.is_white(i)) throw ParamError("ParameterSetS", "s given for non-white node " + node_str(i));
        p.s[static_cast<std::size_t>(i)] = v;
    }
    p.sfun = sfun ? *sfun : default_sfun(d);
    if (p.sfun.size() != n) throw ParamError("sCond1", "s(.) has the wrong length");

    RhoData rho = rho_data(rd, d.X);
    for (int i = 0; i < static_cast<int>(n); ++i) {
        const Scalar& si = p.sfun[static_cast<std::size_t>(i)];
        int t = d.tau[static_cast<std::size_t>(i)];
        if ((!d.contains(i) || d.in_X(i) || t == i) && !si.is_one())
            throw ParamError("sCond1", "s(" + node_str(i) + ") must be 1");
        if (d.is_white(i) && t != i) {
            Rat e = Rat(2) * rho.alpha_on_rho_check[static_cast<std::size_t>(i)];
            Scalar want = (e.numerator() % 2 == 0) ? Scalar(1) : Scalar(-1);
            if (si / p.sfun[static_cast<std::size_t>(t)] != want)
                throw ParamError("sCond2", "s(" + node_str(i) + ")/s(" + node_str(t) + ") must be " + want.str());
        }
    }

    const std::vector<int> ins = ins_set(d);
    for (int i : d.white()) {
        const auto ui = static_cast<std::size_t>(i);
        int t = d.tau[ui];
        const auto ut = static_cast<std::size_t>(t);
        if (p.c[ui].is_zero()) throw ParamError("ParameterSetC", "c_" + node_str(i) + " must be nonzero");
        IVec e(n, 0);
        e[ui] = 1;
        int a_theta = rd.pair(e, r.theta[ui]);
        if (t != i && a_theta == 0 && p.c[ui] != p.c[ut])
            throw ParamError("ParameterSetC", "c_" + node_str(i) + " = c_" + node_str(t) + " is required");
        int ex = ccond_exponent(d, r, i);
        if (p.c[ut] != p.c[ui].bar().times_q_pow(ex))
            throw ParamError("ciCond", "c_" + node_str(t) + " must equal q^" + std::to_string(ex) + " * bar(c_" + node_str(i) + ")");
        if (!p.s[ui].is_zero()) {
            if (!std::binary_search(ins.begin(), ins.end(), i))
                throw ParamError("Ins", "s_" + node_str(i) + " != 0 but node " + node_str(i) + " is not in I_ns");
            for (int k : ins) {
                if (k == i) continue;
                int a = rd.cartan(k, i);
                if (a > 0 || a % 2 != 0)
                    throw ParamError("ParameterSetS", "a_" + node_str(k) + node_str(i) + " is not in -2N_0");
            }
        }
        if (p.s[ui].bar() != p.s[ui]) throw ParamError("siCond", "s_" + node_str(i) + " must be bar-invariant");
    }

    p.ctilde_sq.assign(n, Scalar(0));
    p.ctilde.assign(n, std::nullopt);
    for (int i : d.white()) {
        const auto ui = static_cast<std::size_t>(i);
        int t = d.tau[ui];
        const auto ut = static_cast<std::size_t>(t);
        p.ctilde_sq[ui] = p.c[ui] * p.c[ut] * p.sfun[ui] * p.sfun[ut];
        IVec e(n, 0);
        e[ui] = 1;
        if (t == i) {
            p.ctilde[ui] = p.c[ui];
        } else if (rd.pair(e, r.theta[ui]) == 0) {
            p.ctilde[ui] = p.c[ui] * p.sfun[ui];
        }
    }
    return p;
}

namespace {

int parse_index(const nlohmann::json& j, int n, const char* what) {
    int v = 0;
    if (j.is_number_integer()) {
        v = j.get<int>();
    } else if (j.is_string()) {
        try {
            v = std::stoi(j.get<std::string>());
        } catch (const std::exception&) {
            throw SpecParseError(std::string("bad ") + what + " index: " + j.dump());
        }
    } else {
        throw SpecParseError(std::string("bad ") + what + " index: " + j.dump());
    }
    if (v < 1 || v > n) throw SpecParseError(std::string(what) + " index out of range: " + std::to_string(v));
    return v - 1;
}

Scalar parse_scalar_field(const nlohmann::json& j) {
    try {
        if (j.is_number_integer()) return Scalar(j.get<std::int64_t>());
        if (j.is_string()) return Scalar::parse(j.get<std::string>());
    } catch (const std::exception& e) {
        throw SpecParseError(std::string("bad scalar ") + j.dump() + ": " + e.what());
    }
    throw SpecParseError("bad scalar " + j.dump());
}

}  // namespace

DiagramSpec parse_diagram_spec(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const std::exception& e) {
        throw SpecParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("type")) throw SpecParseError("spec needs \"type\"");
    RootDatum rd;
    try {
        std::string type = j["type"].get<std::string>();
        // "A" with "rank", or a full label such as "A1xA1".
        rd = RootDatum::from_label(type.size() == 1 ? type + std::to_string(j.at("rank").get<int>()) : type);
    } catch (const std::exception& e) {
        throw SpecParseError(std::string("bad root datum: ") + e.what());
    }
    const int n = rd.rank();
    std::vector<int> X;
    if (j.contains("X"))
        for (const auto& x : j["X"]) X.push_back(parse_index(x, n, "X"));
    std::vector<int> tau(static_cast<std::size_t>(n));
    std::iota(tau.begin(), tau.end(), 0);
    if (j.contains("tau")) {
        for (const auto& [k, v] : j["tau"].items()) {
            int a = parse_index(nlohmann::json(k), n, "tau");
            tau[static_cast<std::size_t>(a)] = parse_index(v, n, "tau");
        }
    }
    DiagramSpec spec;
    spec.diagram = SatakeDiagram::make(rd, X, tau, j.value("name", std::string()));
    if (j.contains("c"))
        for (const auto& [k, v] : j["c"].items()) spec.c[parse_index(nlohmann::json(k), n, "c")] = parse_scalar_field(v);
    if (j.contains("s"))
        for (const auto& [k, v] : j["s"].items()) spec.s[parse_index(nlohmann::json(k), n, "s")] = parse_scalar_field(v);
    return spec;
}

DiagramSpec load_diagram_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SpecParseError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_diagram_spec(ss.str());
}

std::string diagram_spec_json(const DiagramSpec& spec) {
    const SatakeDiagram& d = spec.diagram;
    nlohmann::ordered_json j;
    if (!d.name.empty()) j["name"] = d.name;
    if (d.datum.is_simple()) {
        j["type"] = std::string(1, d.datum.type());
        j["rank"] = d.datum.rank();
    } else {
        j["type"] = d.datum.label();
    }
    j["X"] = nlohmann::ordered_json::array();
    for (int x : d.X) j["X"].push_back(x + 1);
    j["tau"] = nlohmann::ordered_json::object();
    for (int i = 0; i < d.size(); ++i)
        if (d.tau[static_cast<std::size_t>(i)] != i) j["tau"][node_str(i)] = d.tau[static_cast<std::size_t>(i)] + 1;
    j["c"] = nlohmann::ordered_json::object();
    for (const auto& [i, v] : spec.c) j["c"][node_str(i)] = v.str();
    j["s"] = nlohmann::ordered_json::object();
    for (const auto& [i, v] : spec.s)
        if (!v.is_zero()) j["s"][node_str(i)] = v.str();
    return j.dump(2);
}

}  // namespace qsp
