#include "qsp/poly.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qsp {

namespace {

const Int kZero{0};

Int max_norm(const Poly& p) {
    Int m{0};
    for (const auto& c : p.coeffs()) {
        Int a = c.abs();
        if (m < a) m = a;
    }
    return m;
}

Poly normalize_sign(Poly p) {
    if (!p.is_zero() && p.lead().sign() < 0) return -p;
    return p;
}

Poly primitive(const Poly& p) {
    if (p.is_zero()) return p;
    return normalize_sign(p.divexact(p.content()));
}

/// Pseudo-remainder of a by b.
Poly prem(Poly a, const Poly& b) {
    const int db = b.degree();
    const Int& lb = b.lead();
    while (!a.is_zero() && a.degree() >= db) {
        Int la = a.lead();
        int shift = a.degree() - db;
        a = a.scaled(lb) - b.scaled(la).shifted(shift);
    }
    return a;
}

Poly gcd_prs(Poly a, Poly b) {
    a = primitive(a);
    b = primitive(b);
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        Poly r = prem(a, b);
        a = std::move(b);
        b = primitive(r);
    }
    return primitive(a);
}

Poly interpolate(mpz_class h, const mpz_class& x) {
    std::vector<Int> digits;
    mpz_class half = x / 2;
    while (h != 0) {
        mpz_class g;
        mpz_fdiv_r(g.get_mpz_t(), h.get_mpz_t(), x.get_mpz_t());
        if (g > half) g -= x;
        digits.emplace_back(g);
        h = (h - g) / x;
    }
    return Poly(std::move(digits));
}

/// Heuristic gcd of primitive polynomials; empty result signals failure.
bool gcd_heuristic(const Poly& a, const Poly& b, Poly& out) {
    mpz_class na = max_norm(a).to_mpz();
    mpz_class nb = max_norm(b).to_mpz();
    mpz_class bound = 2 * std::min(na, nb) + 29;
    mpz_class sq = sqrt(bound);
    mpz_class la = a.lead().abs().to_mpz();
    mpz_class lb = b.lead().abs().to_mpz();
    mpz_class cap = 99 * sq;
    mpz_class ra = na / la, rb = nb / lb;
    mpz_class floor_x = 2 * std::min(ra, rb) + 2;
    mpz_class x = std::max(std::min(bound, cap), floor_x);
    for (int attempt = 0; attempt < 6; ++attempt) {
        Int xi(x);
        mpz_class fa = a.eval(xi).to_mpz();
        mpz_class fb = b.eval(xi).to_mpz();
        if (fa != 0 && fb != 0) {
            mpz_class h;
            mpz_gcd(h.get_mpz_t(), fa.get_mpz_t(), fb.get_mpz_t());
            Poly cand = primitive(interpolate(h, x));
            Poly qa, qb;
            if (!cand.is_zero() && Poly::try_divide(a, cand, qa) && Poly::try_divide(b, cand, qb)) {
                out = cand;
                return true;
            }
        }
        mpz_class s = sqrt(sqrt(x));
        x = 73794 * x * s / 27011;
    }
    return false;
}

}  // namespace

Poly Poly::monomial(const Int& v, int degree) {
    if (v.is_zero()) return {};
    std::vector<Int> c(static_cast<std::size_t>(degree) + 1, Int(0));
    c.back() = v;
    return Poly(std::move(c));
}

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const Int& Poly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return kZero;
    return c_[static_cast<std::size_t>(k)];
}

int Poly::valuation() const {
    for (std::size_t k = 0; k < c_.size(); ++k)
        if (!c_[k].is_zero()) return static_cast<int>(k);
    return 0;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Int(0));
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Int(0));
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Int> r(a.c_.size() + b.c_.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(r));
}

Poly Poly::scaled(const Int& k) const {
    if (k.is_zero()) return {};
    Poly r = *this;
    for (auto& c : r.c_) c *= k;
    return r;
}

Poly Poly::shifted(int k) const {
    if (is_zero() || k == 0) return *this;
    std::vector<Int> r(static_cast<std::size_t>(k), Int(0));
    r.insert(r.end(), c_.begin(), c_.end());
    return Poly(std::move(r));
}

Poly Poly::unshifted(int k) const {
    if (k == 0 || is_zero()) return *this;
    return Poly(std::vector<Int>(c_.begin() + k, c_.end()));
}

Poly Poly::reversed() const {
    std::vector<Int> r(c_.rbegin(), c_.rend());
    return Poly(std::move(r));
}

Int Poly::content() const {
    Int g{0};
    for (const auto& c : c_) {
        g = Int::gcd(g, c);
        if (g.is_one()) break;
    }
    return g;
}

Poly Poly::divexact(const Int& k) const {
    if (k.is_one()) return *this;
    Poly r = *this;
    for (auto& c : r.c_) c.divexact(k);
    return r;
}

bool Poly::try_divide(const Poly& a, const Poly& b, Poly& quot) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    if (a.is_zero()) {
        quot = Poly();
        return true;
    }
    if (a.degree() < b.degree()) return false;
    if (b.degree() == 0) {
        for (const auto& c : a.c_)
            if (!c.divisible_by(b.lead())) return false;
        quot = a.divexact(b.lead());
        return true;
    }
    std::vector<Int> r = a.c_;
    const int db = b.degree();
    std::vector<Int> q(static_cast<std::size_t>(a.degree() - db) + 1, Int(0));
    const Int& lb = b.lead();
    for (int k = a.degree() - db; k >= 0; --k) {
        Int& top = r[static_cast<std::size_t>(k + db)];
        if (top.is_zero()) continue;
        if (!top.divisible_by(lb)) return false;
        Int t = top;
        t.divexact(lb);
        for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(k + j)] -= t * b.c_[static_cast<std::size_t>(j)];
        q[static_cast<std::size_t>(k)] = std::move(t);
    }
    for (const auto& c : r)
        if (!c.is_zero()) return false;
    quot = Poly(std::move(q));
    return true;
}

Poly Poly::divexact(const Poly& b) const {
    Poly q;
    if (!try_divide(*this, b, q)) throw std::logic_error("inexact polynomial division");
    return q;
}

Poly Poly::gcd(const Poly& a, const Poly& b) {
    if (a.is_zero()) return normalize_sign(b);
    if (b.is_zero()) return normalize_sign(a);
    Int ca = a.content();
    Int cb = b.content();
    Int cg = Int::gcd(ca, cb);
    if (a.degree() == 0 || b.degree() == 0) return Poly::constant(cg);
    Poly pa = normalize_sign(a.divexact(ca));
    Poly pb = normalize_sign(b.divexact(cb));
    if (pa == pb) return pa.scaled(cg);
    Poly g;
    if (!gcd_heuristic(pa, pb, g)) g = gcd_prs(pa, pb);
    return g.scaled(cg);
}

Int Poly::eval(const Int& x) const {
    Int r{0};
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        r *= x;
        r += *it;
    }
    return r;
}

std::size_t Poly::hash() const {
    std::size_t h = c_.size();
    for (const auto& c : c_) h = h * 1000003u ^ c.hash();
    return h;
}

std::string Poly::str(const std::string& var) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Int& c = c_[static_cast<std::size_t>(k)];
        if (c.is_zero()) continue;
        Int a = c.abs();
        if (c.sign() < 0) os << (first ? "-" : "-");
        else if (!first) os << "+";
        if (k == 0 || !a.is_one()) {
            os << a.str();
            if (k > 0) os << "*";
        }
        if (k >= 1) os << var;
        if (k >= 2) os << "^" << k;
        first = false;
    }
    return os.str();
}

}  // namespace qsp
