#include "qsp/scalar.hpp"

#include <cctype>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace qsp {

namespace {

std::string laurent_text(const Poly& p, int shift, bool latex) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = p.degree(); k >= 0; --k) {
        const Int& c = p.coeff(k);
        if (c.is_zero()) continue;
        const int e = k + shift;
        Int a = c.abs();
        if (c.sign() < 0) os << "-";
        else if (!first) os << "+";
        if (e == 0 || !a.is_one()) {
            os << a.str();
            if (e != 0 && !latex) os << "*";
        }
        if (e != 0) {
            os << "q";
            if (e != 1) {
                if (latex) os << "^{" << e << "}";
                else os << "^" << e;
            }
        }
        first = false;
    }
    return os.str();
}

bool is_single_term(const Poly& p) {
    int nz = 0;
    for (const auto& c : p.coeffs()) nz += c.is_zero() ? 0 : 1;
    return nz <= 1;
}

class Parser {
public:
    explicit Parser(const std::string& s) : s_(s) {}

    Scalar parse() {
        Scalar v = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected character");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& why) const {
        throw std::invalid_argument("cannot parse scalar '" + s_ + "': " + why + " at position " + std::to_string(pos_));
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool peek(char c) {
        skip();
        return pos_ < s_.size() && s_[pos_] == c;
    }
    bool starts_factor() {
        skip();
        if (pos_ >= s_.size()) return false;
        char c = s_[pos_];
        return c == '(' || c == 'q' || std::isdigit(static_cast<unsigned char>(c));
    }

    Scalar expr() {
        Scalar v = term();
        for (;;) {
            if (peek('+')) {
                ++pos_;
                v += term();
            } else if (peek('-')) {
                ++pos_;
                v -= term();
            } else {
                return v;
            }
        }
    }

    Scalar term() {
        Scalar v = unary();
        for (;;) {
            if (peek('*')) {
                ++pos_;
                v *= unary();
            } else if (peek('/')) {
                ++pos_;
                Scalar d = unary();
                if (d.is_zero()) fail("division by zero");
                v /= d;
            } else if (starts_factor()) {
                v *= power();
            } else {
                return v;
            }
        }
    }

    Scalar unary() {
        if (peek('-')) {
            ++pos_;
            return -unary();
        }
        if (peek('+')) {
            ++pos_;
            return unary();
        }
        return power();
    }

    long exponent() {
        skip();
        bool paren = false;
        if (peek('(')) {
            paren = true;
            ++pos_;
        }
        skip();
        int sign = 1;
        if (peek('-')) {
            sign = -1;
            ++pos_;
        } else if (peek('+')) {
            ++pos_;
        }
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected integer exponent");
        long e = std::stol(s_.substr(start, pos_ - start)) * sign;
        if (paren) {
            if (!peek(')')) fail("expected ')'");
            ++pos_;
        }
        return e;
    }

    Scalar power() {
        Scalar base = atom();
        if (peek('^')) {
            ++pos_;
            long e = exponent();
            if (e < 0 && base.is_zero()) fail("zero to a negative power");
            return base.pow(static_cast<int>(e));
        }
        return base;
    }

    Scalar atom() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Scalar v = expr();
            if (!peek(')')) fail("expected ')'");
            ++pos_;
            return v;
        }
        if (c == 'q') {
            ++pos_;
            return Scalar::q_pow(1);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return Scalar(Int(s_.substr(start, pos_ - start)));
        }
        fail("unexpected character");
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

}  // namespace

Scalar Scalar::fraction(const Poly& num, const Poly& den) {
    if (den.is_zero()) throw std::domain_error("zero denominator");
    Scalar s;
    s.num_ = num;
    s.den_ = den;
    s.canonicalize();
    return s;
}

Scalar Scalar::q_pow(int k) {
    Scalar s(1);
    s.shift_ = k;
    return s;
}

Scalar Scalar::laurent(const Poly& p, int shift) {
    Scalar s;
    s.num_ = p;
    s.shift_ = shift;
    s.canonicalize();
    return s;
}

Scalar Scalar::parse(const std::string& text) { return Parser(text).parse(); }

void Scalar::canonicalize() {
    if (num_.is_zero()) {
        shift_ = 0;
        den_ = Poly::constant(Int(1));
        return;
    }
    if (int v = num_.valuation(); v > 0) {
        num_ = num_.unshifted(v);
        shift_ += v;
    }
    if (int w = den_.valuation(); w > 0) {
        den_ = den_.unshifted(w);
        shift_ -= w;
    }
    if (!den_.is_one()) {
        Poly g = Poly::gcd(num_, den_);
        if (!g.is_one()) {
            num_ = num_.divexact(g);
            den_ = den_.divexact(g);
        }
        if (den_.lead().sign() < 0) {
            num_ = -num_;
            den_ = -den_;
        }
    }
}

Poly Scalar::numerator() const { return shift_ > 0 ? num_.shifted(shift_) : num_; }

Poly Scalar::denominator() const { return shift_ < 0 ? den_.shifted(-shift_) : den_; }

Scalar Scalar::operator-() const {
    Scalar r = *this;
    r.num_ = -r.num_;
    return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    const int m = std::min(shift_, o.shift_);
    Poly a = num_.shifted(shift_ - m);
    Poly b = o.num_.shifted(o.shift_ - m);
    shift_ = m;
    if (den_ == o.den_) {
        num_ = a + b;
        canonicalize();
        return *this;
    }
    if (den_.is_one()) {
        num_ = a * o.den_ + b;
        den_ = o.den_;
        // gcd(num, den) = gcd(b, den) = 1 already
        if (num_.is_zero()) canonicalize();
        else if (int v = num_.valuation(); v > 0) {
            num_ = num_.unshifted(v);
            shift_ += v;
        }
        return *this;
    }
    if (o.den_.is_one()) {
        num_ = a + b * den_;
        if (num_.is_zero()) canonicalize();
        else if (int v = num_.valuation(); v > 0) {
            num_ = num_.unshifted(v);
            shift_ += v;
        }
        return *this;
    }
    Poly g = Poly::gcd(den_, o.den_);
    if (g.is_one()) {
        num_ = a * o.den_ + b * den_;
        den_ = den_ * o.den_;
        if (num_.is_zero()) canonicalize();
        else if (int v = num_.valuation(); v > 0) {
            num_ = num_.unshifted(v);
            shift_ += v;
        }
        return *this;
    }
    Poly da = den_.divexact(g);
    Poly db = o.den_.divexact(g);
    num_ = a * db + b * da;
    den_ = da * o.den_;
    if (num_.is_zero()) {
        canonicalize();
        return *this;
    }
    if (int v = num_.valuation(); v > 0) {
        num_ = num_.unshifted(v);
        shift_ += v;
    }
    Poly h = Poly::gcd(num_, g);
    if (!h.is_one()) {
        num_ = num_.divexact(h);
        den_ = den_.divexact(h);
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
    if (is_zero() || o.is_zero()) {
        *this = Scalar();
        return *this;
    }
    shift_ += o.shift_;
    if (den_.is_one() && o.den_.is_one()) {
        num_ = num_ * o.num_;
        return *this;
    }
    Poly n1 = num_, d1 = den_, n2 = o.num_, d2 = o.den_;
    if (!d2.is_one()) {
        Poly g = Poly::gcd(n1, d2);
        if (!g.is_one()) {
            n1 = n1.divexact(g);
            d2 = d2.divexact(g);
        }
    }
    if (!d1.is_one()) {
        Poly g = Poly::gcd(n2, d1);
        if (!g.is_one()) {
            n2 = n2.divexact(g);
            d1 = d1.divexact(g);
        }
    }
    num_ = n1 * n2;
    den_ = d1 * d2;
    if (den_.lead().sign() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    return *this;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero in Q(q)");
    Scalar r;
    r.shift_ = -shift_;
    r.num_ = den_;
    r.den_ = num_;
    if (r.den_.lead().sign() < 0) {
        r.num_ = -r.num_;
        r.den_ = -r.den_;
    }
    return r;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

Scalar Scalar::pow(int k) const {
    if (k < 0) return inverse().pow(-k);
    Scalar result(1);
    Scalar base = *this;
    while (k > 0) {
        if (k & 1) result *= base;
        k >>= 1;
        if (k) base *= base;
    }
    return result;
}

Scalar Scalar::times_q_pow(int k) const {
    Scalar r = *this;
    if (!r.is_zero()) r.shift_ += k;
    return r;
}

Scalar Scalar::bar() const {
    if (is_zero()) return *this;
    Scalar r;
    r.num_ = num_.reversed();
    r.den_ = den_.reversed();
    r.shift_ = -shift_ - num_.degree() + den_.degree();
    if (r.den_.lead().sign() < 0) {
        r.num_ = -r.num_;
        r.den_ = -r.den_;
    }
    return r;
}

std::size_t Scalar::hash() const {
    return num_.hash() * 31u ^ den_.hash() * 131u ^ static_cast<std::size_t>(shift_ + 1000);
}

std::string Scalar::str() const {
    if (den_.is_one()) return laurent_text(num_, shift_, false);
    Poly n = numerator();
    Poly d = denominator();
    std::string ns = n.str();
    std::string ds = d.str();
    if (!is_single_term(n)) ns = "(" + ns + ")";
    if (!is_single_term(d) || !d.lead().is_one()) ds = "(" + ds + ")";
    return ns + "/" + ds;
}

std::string Scalar::latex() const {
    if (den_.is_one()) return laurent_text(num_, shift_, true);
    return "\\frac{" + laurent_text(numerator(), 0, true) + "}{" + laurent_text(denominator(), 0, true) + "}";
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

Scalar bar_scalar(const Scalar& a) { return a.bar(); }

}  // namespace qsp
