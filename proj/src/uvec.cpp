#include "qsp/uvec.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>

#include "qsp/qnumbers.hpp"

namespace qsp {

namespace {

using U64 = unsigned long long;

U64 binom(int n, int k) {
    static std::vector<std::vector<U64>> table = [] {
        std::vector<std::vector<U64>> t(64, std::vector<U64>(64, 0));
        for (int a = 0; a < 64; ++a) {
            t[static_cast<std::size_t>(a)][0] = 1;
            for (int b = 1; b <= a; ++b)
                t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
                    t[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b - 1)] + t[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b)];
        }
        return t;
    }();
    return table[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

U64 multinom(const IVec& r) {
    U64 m = 1;
    int tot = 0;
    for (int x : r) {
        tot += x;
        m *= binom(tot, x);
    }
    return m;
}

// Lex rank increment for appending letter l when the remaining multiset is r (before removal).
U64 rank_step(IVec& r, int l) {
    U64 add = 0;
    for (int k = 0; k < l; ++k) {
        if (r[static_cast<std::size_t>(k)] == 0) continue;
        --r[static_cast<std::size_t>(k)];
        add += multinom(r);
        ++r[static_cast<std::size_t>(k)];
    }
    --r[static_cast<std::size_t>(l)];
    return add;
}

std::mutex& cache_mutex() {
    static std::mutex m;
    return m;
}

}  // namespace

IVec word_weight(const Word& w, std::size_t n) {
    IVec mu(n, 0);
    for (int l : w) ++mu.at(static_cast<std::size_t>(l));
    return mu;
}

int height(const IVec& mu) { return std::accumulate(mu.begin(), mu.end(), 0); }

std::size_t WordSpace::index(const Word& w) const {
    IVec r = weight;
    U64 rank = 0;
    for (int l : w) rank += rank_step(r, l);
    return static_cast<std::size_t>(rank);
}

const WordSpace& word_space(const RootDatum& rd, const IVec& mu) {
    static std::map<std::pair<std::string, IVec>, std::unique_ptr<WordSpace>> cache;
    std::lock_guard<std::mutex> lock(cache_mutex());
    auto& slot = cache[{rd.label(), mu}];
    if (!slot) {
        for (int x : mu)
            if (x < 0) throw std::invalid_argument("word_space: negative weight");
        slot = std::make_unique<WordSpace>();
        slot->weight = mu;
        Word w;
        for (std::size_t i = 0; i < mu.size(); ++i) w.insert(w.end(), static_cast<std::size_t>(mu[i]), static_cast<int>(i));
        do {
            slot->words.push_back(w);
        } while (std::next_permutation(w.begin(), w.end()));
    }
    return *slot;
}

UVec::UVec(const RootDatum& rd, IVec mu)
    : rd_(&RootDatum::interned(rd.label())), mu_(std::move(mu)), space_(&word_space(rd, mu_)), c_(space_->size()) {}

UVec UVec::one(const RootDatum& rd) {
    UVec u(rd, IVec(static_cast<std::size_t>(rd.rank()), 0));
    u.c_[0] = Scalar(1);
    return u;
}

namespace {

// coords(x E_j)[w] = Σ_{p: w_p = j} q^{(wt(w_{<p}), α_j)} coords(x)[w∖p].
UVec right_mul_letter(const UVec& x, int j) {
    const RootDatum& rd = x.datum();
    IVec mu = x.weight();
    ++mu.at(static_cast<std::size_t>(j));
    UVec out(rd, mu);
    const WordSpace& S = out.space();
    for (std::size_t t = 0; t < S.size(); ++t) {
        const Word& w = S.words[t];
        int e = 0;
        Scalar acc;
        for (std::size_t p = 0; p < w.size(); ++p) {
            if (w[p] == j) {
                Word sub;
                sub.reserve(w.size() - 1);
                sub.insert(sub.end(), w.begin(), w.begin() + static_cast<long>(p));
                sub.insert(sub.end(), w.begin() + static_cast<long>(p) + 1, w.end());
                const Scalar& v = x.at(sub);
                if (!v.is_zero()) acc += v.times_q_pow(e);
            }
            e += rd.form(w[p], j);
        }
        out[t] = acc;
    }
    return out;
}

}  // namespace

UVec UVec::monomial(const RootDatum& rd, const Word& w) {
    static std::map<std::pair<std::string, Word>, UVec> memo;
    {
        std::lock_guard<std::mutex> lock(cache_mutex());
        auto it = memo.find({rd.label(), w});
        if (it != memo.end()) return it->second;
    }
    UVec r;
    if (w.empty()) {
        r = one(rd);
    } else {
        Word prefix(w.begin(), w.end() - 1);
        r = right_mul_letter(monomial(rd, prefix), w.back());
    }
    std::lock_guard<std::mutex> lock(cache_mutex());
    memo.emplace(std::make_pair(rd.label(), w), r);
    return r;
}

bool UVec::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Scalar& s) { return s.is_zero(); });
}

UVec& UVec::operator+=(const UVec& o) {
    if (mu_ != o.mu_) throw std::invalid_argument("UVec weight mismatch");
    for (std::size_t k = 0; k < c_.size(); ++k)
        if (!o.c_[k].is_zero()) c_[k] += o.c_[k];
    return *this;
}

UVec& UVec::operator-=(const UVec& o) {
    if (mu_ != o.mu_) throw std::invalid_argument("UVec weight mismatch");
    for (std::size_t k = 0; k < c_.size(); ++k)
        if (!o.c_[k].is_zero()) c_[k] -= o.c_[k];
    return *this;
}

UVec& UVec::operator*=(const Scalar& k) {
    for (auto& x : c_)
        if (!x.is_zero()) x *= k;
    return *this;
}

UVec UVec::operator-() const {
    UVec r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

bool operator==(const UVec& a, const UVec& b) { return a.mu_ == b.mu_ && a.c_ == b.c_; }

UVec operator*(const UVec& x, const UVec& y) {
    const RootDatum& rd = x.datum();
    const std::size_t n = x.weight().size();
    IVec mu(n);
    for (std::size_t k = 0; k < n; ++k) mu[k] = x.weight()[k] + y.weight()[k];
    UVec out(rd, mu);
    if (x.is_zero() || y.is_zero()) return out;
    const WordSpace& S = out.space();
    std::vector<char> xz(x.coords().size()), yz(y.coords().size());
    for (std::size_t k = 0; k < xz.size(); ++k) xz[k] = x[k].is_zero();
    for (std::size_t k = 0; k < yz.size(); ++k) yz[k] = y[k].is_zero();

    for (std::size_t t = 0; t < S.size(); ++t) {
        const Word& w = S.words[t];
        const std::size_t h = w.size();
        // Laurent accumulation per exponent keeps the number of Scalar products down.
        std::map<std::pair<std::size_t, std::size_t>, std::map<int, long>> leaves;
        IVec rx = x.weight(), ry = y.weight();
        IVec placed(n, 0);  // weight of the letters assigned to x so far
        std::function<void(std::size_t, U64, U64, int)> dfs = [&](std::size_t p, U64 kx, U64 ky, int e) {
            if (p == h) {
                if (!xz[kx] && !yz[ky]) ++leaves[{kx, ky}][e];
                return;
            }
            const int l = w[p];
            const auto ul = static_cast<std::size_t>(l);
            if (rx[ul] > 0) {
                IVec save = rx;
                U64 add = rank_step(rx, l);
                ++placed[ul];
                dfs(p + 1, kx + add, ky, e);
                --placed[ul];
                rx = save;
            }
            if (ry[ul] > 0) {
                IVec save = ry;
                U64 add = rank_step(ry, l);
                int de = 0;
                for (std::size_t k = 0; k < n; ++k)
                    if (placed[k]) de += placed[k] * rd.form(static_cast<int>(k), l);
                dfs(p + 1, kx, ky + add, e + de);
                ry = save;
            }
        };
        dfs(0, 0, 0, 0);
        Scalar acc;
        for (const auto& [key, poly] : leaves) {
            int lo = poly.begin()->first;
            int hi = poly.rbegin()->first;
            std::vector<Int> cs(static_cast<std::size_t>(hi - lo + 1), Int(0));
            for (const auto& [e, m] : poly) cs[static_cast<std::size_t>(e - lo)] = Int(m);
            Scalar lp = Scalar::laurent(Poly(cs), lo);
            acc += lp * x[key.first] * y[key.second];
        }
        out[t] = acc;
    }
    return out;
}

UVec UVec::pow(int k) const {
    if (k < 0) throw std::invalid_argument("UVec::pow: negative exponent");
    UVec r = one(datum());
    for (int i = 0; i < k; ++i) r = r * *this;
    return r;
}

UVec skew_l(int i, const UVec& x) {
    IVec mu = x.weight();
    if (mu.at(static_cast<std::size_t>(i)) == 0) return UVec();
    --mu[static_cast<std::size_t>(i)];
    UVec out(x.datum(), mu);
    for (std::size_t t = 0; t < out.space().size(); ++t) {
        Word w = out.space().words[t];
        w.push_back(i);
        out[t] = x.at(w);
    }
    return out;
}

UVec skew_r(int i, const UVec& x) {
    IVec mu = x.weight();
    if (mu.at(static_cast<std::size_t>(i)) == 0) return UVec();
    --mu[static_cast<std::size_t>(i)];
    UVec out(x.datum(), mu);
    for (std::size_t t = 0; t < out.space().size(); ++t) {
        Word w{i};
        const Word& v = out.space().words[t];
        w.insert(w.end(), v.begin(), v.end());
        out[t] = x.at(w);
    }
    return out;
}

namespace {

struct SerreConstraint {
    std::vector<std::pair<std::size_t, Scalar>> terms;
    std::string label;
};

// Relations a · (Σ_r (−1)^r [n r]_i E_i^{n−r} E_j E_i^r) · b with n = 1 − 2(α_i,α_j)/(α_i,α_i).
std::vector<SerreConstraint> serre_constraints(const RootDatum& rd, const IVec& mu) {
    const WordSpace& S = word_space(rd, mu);
    std::vector<SerreConstraint> out;
    std::set<std::tuple<int, int, std::size_t, Word>> seen;
    const int nr = rd.rank();
    for (int i = 0; i < nr; ++i)
        for (int j = 0; j < nr; ++j) {
            if (i == j) continue;
            const int n = 1 - 2 * rd.form(i, j) / rd.form(i, i);
            const int di = rd.d(i);
            if (mu[static_cast<std::size_t>(i)] < n || mu[static_cast<std::size_t>(j)] < 1) continue;
            std::vector<Scalar> coef(static_cast<std::size_t>(n + 1));
            for (int r = 0; r <= n; ++r) {
                Scalar b = q_factorial(n, di) / (q_factorial(r, di) * q_factorial(n - r, di));
                coef[static_cast<std::size_t>(r)] = (r % 2 ? -b : b);
            }
            for (const Word& w : S.words) {
                for (std::size_t s = 0; s + static_cast<std::size_t>(n) + 1 <= w.size(); ++s) {
                    int ci = 0, cj = 0;
                    for (std::size_t k = s; k <= s + static_cast<std::size_t>(n); ++k) {
                        if (w[k] == i) ++ci;
                        else if (w[k] == j) ++cj;
                    }
                    if (ci != n || cj != 1) continue;
                    Word key(w.begin(), w.begin() + static_cast<long>(s));
                    key.push_back(-1);
                    key.insert(key.end(), w.begin() + static_cast<long>(s) + n + 1, w.end());
                    if (!seen.insert({i, j, s, key}).second) continue;
                    SerreConstraint c;
                    for (int r = 0; r <= n; ++r) {
                        Word v(w.begin(), w.begin() + static_cast<long>(s));
                        v.insert(v.end(), static_cast<std::size_t>(n - r), i);
                        v.push_back(j);
                        v.insert(v.end(), static_cast<std::size_t>(r), i);
                        v.insert(v.end(), w.begin() + static_cast<long>(s) + n + 1, w.end());
                        c.terms.emplace_back(S.index(v), coef[static_cast<std::size_t>(r)]);
                    }
                    Word shown = key;
                    std::string lab = "S(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") at ";
                    for (int l : shown) lab += l < 0 ? std::string("[*]") : std::to_string(l + 1);
                    c.label = lab;
                    out.push_back(std::move(c));
                }
            }
        }
    return out;
}

const std::vector<SerreConstraint>& cached_constraints(const RootDatum& rd, const IVec& mu) {
    static std::map<std::pair<std::string, IVec>, std::vector<SerreConstraint>> cache;
    {
        std::lock_guard<std::mutex> lock(cache_mutex());
        auto it = cache.find({rd.label(), mu});
        if (it != cache.end()) return it->second;
    }
    auto v = serre_constraints(rd, mu);
    std::lock_guard<std::mutex> lock(cache_mutex());
    return cache.emplace(std::make_pair(rd.label(), mu), std::move(v)).first->second;
}

long mulmod(long a, long b, long p) { return static_cast<long>((static_cast<__int128>(a) * b) % p); }

long powmod(long a, long e, long p) {
    long r = 1;
    a %= p;
    if (a < 0) a += p;
    while (e > 0) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

long poly_mod(const Poly& f, long q0, long p) {
    long acc = 0;
    for (int k = f.degree(); k >= 0; --k) {
        mpz_class c = f.coeff(k).to_mpz();
        mpz_class m = c % p;
        if (m < 0) m += p;
        acc = (mulmod(acc, q0, p) + m.get_si()) % p;
    }
    return acc;
}

// Row echelon rank mod p; rows are consumed.
long rank_mod(std::vector<std::vector<long>> rows, long p, std::vector<std::size_t>* pivot_cols = nullptr,
              std::vector<std::size_t>* pivot_rows = nullptr) {
    if (rows.empty()) return 0;
    const std::size_t m = rows[0].size();
    std::vector<std::vector<long>> basis;  // reduced rows
    std::vector<std::size_t> piv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        auto& v = rows[r];
        for (std::size_t b = 0; b < basis.size(); ++b) {
            long f = v[piv[b]];
            if (f == 0) continue;
            for (std::size_t k = 0; k < m; ++k)
                if (basis[b][k]) v[k] = ((v[k] - mulmod(f, basis[b][k], p)) % p + p) % p;
        }
        std::size_t c = 0;
        while (c < m && v[c] == 0) ++c;
        if (c == m) continue;
        long inv = powmod(v[c], p - 2, p);
        for (auto& x : v) x = mulmod(x, inv, p);
        basis.push_back(v);
        piv.push_back(c);
        if (pivot_rows) pivot_rows->push_back(r);
    }
    if (pivot_cols) *pivot_cols = piv;
    return static_cast<long>(basis.size());
}

}  // namespace

long eval_mod(const Scalar& s, long q0, long p) {
    if (s.is_zero()) return 0;
    long num = poly_mod(s.core_num(), q0, p);
    long den = poly_mod(s.core_den(), q0, p);
    if (den == 0) throw std::domain_error("eval_mod: denominator vanishes at the specialisation");
    long qs = s.shift() >= 0 ? powmod(q0, s.shift(), p) : powmod(powmod(q0, p - 2, p), -s.shift(), p);
    return mulmod(mulmod(num, powmod(den, p - 2, p), p), qs, p);
}

std::optional<std::string> image_violation(const UVec& c) {
    for (const auto& con : cached_constraints(c.datum(), c.weight())) {
        Scalar acc;
        for (const auto& [k, a] : con.terms)
            if (!c[k].is_zero()) acc += a * c[k];
        if (!acc.is_zero()) return con.label;
    }
    return std::nullopt;
}

long kostant_count(const RootDatum& rd, const IVec& mu) {
    const auto& roots = rd.positive_roots();
    std::map<std::pair<std::size_t, IVec>, long> memo;
    std::function<long(std::size_t, const IVec&)> go = [&](std::size_t k, const IVec& rest) -> long {
        if (std::all_of(rest.begin(), rest.end(), [](int x) { return x == 0; })) return 1;
        if (k == roots.size()) return 0;
        auto key = std::make_pair(k, rest);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        long total = go(k + 1, rest);
        IVec r = rest;
        for (;;) {
            bool ok = true;
            for (std::size_t t = 0; t < r.size(); ++t) {
                r[t] -= roots[k][t];
                if (r[t] < 0) ok = false;
            }
            if (!ok) break;
            total += go(k + 1, r);
        }
        memo[key] = total;
        return total;
    };
    return go(0, mu);
}

RankBounds coordinate_rank_bounds(const RootDatum& rd, const IVec& mu, long q0, long prime) {
    const WordSpace& S = word_space(rd, mu);
    std::vector<std::vector<long>> rows;
    rows.reserve(S.size());
    for (const Word& w : S.words) {
        UVec m = UVec::monomial(rd, w);
        std::vector<long> r(S.size());
        for (std::size_t k = 0; k < S.size(); ++k) r[k] = eval_mod(m[k], q0, prime);
        rows.push_back(std::move(r));
    }
    long lower = rank_mod(std::move(rows), prime);
    std::vector<std::vector<long>> cons;
    for (const auto& c : cached_constraints(rd, mu)) {
        std::vector<long> r(S.size(), 0);
        for (const auto& [k, a] : c.terms) r[k] = (r[k] + eval_mod(a, q0, prime)) % prime;
        cons.push_back(std::move(r));
    }
    long crank = rank_mod(std::move(cons), prime);
    return {lower, static_cast<long>(S.size()) - crank};
}

const WeightBasis& weight_basis(const RootDatum& rd, const IVec& mu) {
    static std::map<std::pair<std::string, IVec>, std::unique_ptr<WeightBasis>> cache;
    {
        std::lock_guard<std::mutex> lock(cache_mutex());
        auto it = cache.find({rd.label(), mu});
        if (it != cache.end()) return *it->second;
    }
    const long p = 2147483629, q0 = 7919;
    const WordSpace& S = word_space(rd, mu);
    const long target = kostant_count(rd, mu);
    auto wb = std::make_unique<WeightBasis>();
    wb->weight = mu;
    // Greedy selection over words, reducing mod p.
    std::vector<std::vector<long>> basis;
    std::vector<std::size_t> piv;
    for (const Word& w : S.words) {
        if (static_cast<long>(basis.size()) == target) break;
        UVec m = UVec::monomial(rd, w);
        std::vector<long> v(S.size());
        for (std::size_t k = 0; k < S.size(); ++k) v[k] = eval_mod(m[k], q0, p);
        for (std::size_t b = 0; b < basis.size(); ++b) {
            long f = v[piv[b]];
            if (f == 0) continue;
            for (std::size_t k = 0; k < S.size(); ++k)
                if (basis[b][k]) v[k] = ((v[k] - mulmod(f, basis[b][k], p)) % p + p) % p;
        }
        std::size_t c = 0;
        while (c < S.size() && v[c] == 0) ++c;
        if (c == S.size()) continue;
        long inv = powmod(v[c], p - 2, p);
        for (auto& x : v) x = mulmod(x, inv, p);
        basis.push_back(v);
        piv.push_back(c);
        wb->basis.push_back(w);
    }
    wb->pivots = piv;
    std::lock_guard<std::mutex> lock(cache_mutex());
    return *cache.emplace(std::make_pair(rd.label(), mu), std::move(wb)).first->second;
}

std::vector<std::pair<Word, Scalar>> expand_in_monomials(const UVec& x) {
    const RootDatum& rd = x.datum();
    const WeightBasis& wb = weight_basis(rd, x.weight());
    const std::size_t r = wb.basis.size();
    if (x.is_zero()) return {};
    // Solve Σ_b a_b coords(E_b)[pivot] = x[pivot].
    std::vector<std::vector<Scalar>> A(r, std::vector<Scalar>(r + 1));
    std::vector<UVec> rows;
    rows.reserve(r);
    for (const Word& b : wb.basis) rows.push_back(UVec::monomial(rd, b));
    for (std::size_t e = 0; e < r; ++e) {
        for (std::size_t b = 0; b < r; ++b) A[e][b] = rows[b][wb.pivots[e]];
        A[e][r] = x[wb.pivots[e]];
    }
    for (std::size_t col = 0; col < r; ++col) {
        std::size_t piv = col;
        while (piv < r && A[piv][col].is_zero()) ++piv;
        if (piv == r) throw std::logic_error("expand_in_monomials: singular pivot minor");
        std::swap(A[piv], A[col]);
        Scalar inv = A[col][col].inverse();
        for (std::size_t k = col; k <= r; ++k)
            if (!A[col][k].is_zero()) A[col][k] *= inv;
        for (std::size_t e = 0; e < r; ++e) {
            if (e == col || A[e][col].is_zero()) continue;
            Scalar f = A[e][col];
            for (std::size_t k = col; k <= r; ++k)
                if (!A[col][k].is_zero()) A[e][k] -= f * A[col][k];
        }
    }
    std::vector<std::pair<Word, Scalar>> out;
    UVec check(rd, x.weight());
    for (std::size_t b = 0; b < r; ++b) {
        if (A[b][r].is_zero()) continue;
        out.emplace_back(wb.basis[b], A[b][r]);
        check += A[b][r] * rows[b];
    }
    if (check != x) throw std::invalid_argument("expand_in_monomials: vector is not in the image of U+");
    return out;
}

}  // namespace qsp
