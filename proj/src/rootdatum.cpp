#include "qsp/rootdatum.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qsp {

std::string rat_str(const Rat& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Weight Weight::from_ints(const IVec& v) {
    Weight w(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) w.c_[i] = Rat(v[i]);
    return w;
}

Weight Weight::simple(std::size_t n, int i) {
    Weight w(n);
    w.c_.at(static_cast<std::size_t>(i)) = Rat(1);
    return w;
}

Rat Weight::height() const { return std::accumulate(c_.begin(), c_.end(), Rat(0)); }

bool Weight::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rat& r) { return r == Rat(0); });
}

bool Weight::is_integral() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rat& r) { return r.denominator() == 1; });
}

bool Weight::is_nonnegative() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rat& r) { return r >= 0; });
}

IVec Weight::to_ints() const {
    IVec v(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].denominator() != 1) throw std::logic_error("weight is not integral: " + str());
        v[i] = static_cast<int>(c_[i].numerator());
    }
    return v;
}

Weight& Weight::operator+=(const Weight& o) {
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

Weight& Weight::operator-=(const Weight& o) {
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

Weight Weight::operator-() const {
    Weight r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

Weight operator*(const Rat& k, Weight w) {
    for (auto& x : w.c_) x *= k;
    return w;
}

std::string Weight::str() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == Rat(0)) continue;
        Rat a = c_[i] < 0 ? -c_[i] : c_[i];
        if (c_[i] < 0) os << "-";
        else if (!first) os << "+";
        if (a != Rat(1)) os << rat_str(a) << "*";
        os << "a" << (i + 1);
        first = false;
    }
    return first ? "0" : os.str();
}

RootDatum RootDatum::make(char type, int n) {
    auto bad = [&] { throw std::invalid_argument("unsupported root datum " + std::string(1, type) + std::to_string(n)); };
    if (n < 1) bad();
    RootDatum r;
    r.type_ = type;
    r.rank_ = n;
    r.label_ = std::string(1, type) + std::to_string(n);
    r.form_.assign(static_cast<std::size_t>(n), IVec(static_cast<std::size_t>(n), 0));
    auto set = [&](int i, int j, int v) {  // 1-based
        r.form_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = v;
        r.form_[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(i - 1)] = v;
    };
    switch (type) {
        case 'A':
            for (int i = 1; i <= n; ++i) set(i, i, 2);
            for (int i = 1; i < n; ++i) set(i, i + 1, -1);
            break;
        case 'B':
            if (n < 2) bad();
            for (int i = 1; i < n; ++i) set(i, i, 4);
            set(n, n, 2);
            for (int i = 1; i < n; ++i) set(i, i + 1, -2);
            break;
        case 'C':
            if (n < 2) bad();
            for (int i = 1; i < n; ++i) set(i, i, 2);
            set(n, n, 4);
            for (int i = 1; i < n - 1; ++i) set(i, i + 1, -1);
            set(n - 1, n, -2);
            break;
        case 'D':
            if (n < 4) bad();
            for (int i = 1; i <= n; ++i) set(i, i, 2);
            for (int i = 1; i < n - 1; ++i) set(i, i + 1, -1);
            set(n - 2, n, -1);
            break;
        case 'E':
            if (n < 6 || n > 8) bad();
            for (int i = 1; i <= n; ++i) set(i, i, 2);
            set(1, 3, -1);
            set(2, 4, -1);
            for (int i = 3; i < n; ++i) set(i, i + 1, -1);
            break;
        case 'F':
            if (n != 4) bad();
            set(1, 1, 4);
            set(2, 2, 4);
            set(3, 3, 2);
            set(4, 4, 2);
            set(1, 2, -2);
            set(2, 3, -2);
            set(3, 4, -1);
            break;
        case 'G':
            if (n != 2) bad();
            set(1, 1, 2);
            set(2, 2, 6);
            set(1, 2, -3);
            break;
        default:
            bad();
    }
    r.build_roots();
    return r;
}

const RootDatum& RootDatum::interned(const std::string& label) {
    static std::mutex mu;
    static std::map<std::string, std::unique_ptr<RootDatum>> table;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = table[label];
    if (!slot) slot = std::make_unique<RootDatum>(from_label(label));
    return *slot;
}

RootDatum RootDatum::from_label(const std::string& label) {
    auto x = label.find_first_of("xX");
    if (x != std::string::npos) return product(from_label(label.substr(0, x)), from_label(label.substr(x + 1)));
    if (label.size() < 2) throw std::invalid_argument("bad root datum label: " + label);
    int n = 0;
    try {
        std::size_t used = 0;
        n = std::stoi(label.substr(1), &used);
        if (used != label.size() - 1) throw std::invalid_argument(label);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad root datum label: " + label);
    }
    return make(static_cast<char>(std::toupper(static_cast<unsigned char>(label[0]))), n);
}

RootDatum RootDatum::product(const RootDatum& a, const RootDatum& b) {
    RootDatum r;
    r.type_ = a.type_;
    r.rank_ = a.rank_ + b.rank_;
    r.label_ = a.label_ + "x" + b.label_;
    const auto n = static_cast<std::size_t>(r.rank_);
    r.form_.assign(n, IVec(n, 0));
    for (int i = 0; i < a.rank_; ++i)
        for (int j = 0; j < a.rank_; ++j) r.form_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = a.form(i, j);
    for (int i = 0; i < b.rank_; ++i)
        for (int j = 0; j < b.rank_; ++j)
            r.form_[static_cast<std::size_t>(a.rank_ + i)][static_cast<std::size_t>(a.rank_ + j)] = b.form(i, j);
    r.build_roots();
    return r;
}

void RootDatum::build_roots() {
    std::set<IVec> seen;
    std::vector<IVec> frontier;
    for (int i = 0; i < rank_; ++i) {
        IVec e(static_cast<std::size_t>(rank_), 0);
        e[static_cast<std::size_t>(i)] = 1;
        seen.insert(e);
        frontier.push_back(e);
    }
    while (!frontier.empty()) {
        std::vector<IVec> next;
        for (const auto& v : frontier) {
            for (int i = 0; i < rank_; ++i) {
                IVec w = reflect(i, v);
                if (seen.insert(w).second) next.push_back(w);
            }
        }
        frontier = std::move(next);
    }
    positive_.clear();
    for (const auto& v : seen)
        if (std::all_of(v.begin(), v.end(), [](int x) { return x >= 0; })) positive_.push_back(v);
    std::sort(positive_.begin(), positive_.end(), [](const IVec& a, const IVec& b) {
        int ha = std::accumulate(a.begin(), a.end(), 0);
        int hb = std::accumulate(b.begin(), b.end(), 0);
        return ha != hb ? ha < hb : a < b;
    });
}

bool RootDatum::is_root(const IVec& v) const {
    bool neg = std::all_of(v.begin(), v.end(), [](int x) { return x <= 0; });
    IVec p = v;
    if (neg)
        for (auto& x : p) x = -x;
    return std::binary_search(positive_.begin(), positive_.end(), p, [](const IVec& a, const IVec& b) {
        int ha = std::accumulate(a.begin(), a.end(), 0);
        int hb = std::accumulate(b.begin(), b.end(), 0);
        return ha != hb ? ha < hb : a < b;
    });
}

Rat RootDatum::pair(const Weight& a, const Weight& b) const {
    Rat s(0);
    for (int i = 0; i < rank_; ++i) {
        if (a[static_cast<std::size_t>(i)] == Rat(0)) continue;
        Rat t(0);
        for (int j = 0; j < rank_; ++j) t += b[static_cast<std::size_t>(j)] * form(i, j);
        s += a[static_cast<std::size_t>(i)] * t;
    }
    return s;
}

int RootDatum::pair(const IVec& a, const IVec& b) const {
    int s = 0;
    for (int i = 0; i < rank_; ++i) {
        if (a[static_cast<std::size_t>(i)] == 0) continue;
        s += a[static_cast<std::size_t>(i)] * pair_simple(i, b);
    }
    return s;
}

int RootDatum::pair_simple(int i, const IVec& v) const {
    int s = 0;
    const IVec& row = form_[static_cast<std::size_t>(i)];
    for (int j = 0; j < rank_; ++j) s += row[static_cast<std::size_t>(j)] * v[static_cast<std::size_t>(j)];
    return s;
}

Weight RootDatum::reflect(int i, const Weight& w) const {
    if (i < 0 || i >= rank_) throw std::out_of_range("simple reflection index out of range");
    Rat coef(0);
    for (int j = 0; j < rank_; ++j) coef += w[static_cast<std::size_t>(j)] * form(i, j);
    coef = coef * 2 / form(i, i);
    Weight r = w;
    r[static_cast<std::size_t>(i)] -= coef;
    return r;
}

IVec RootDatum::reflect(int i, const IVec& v) const {
    if (i < 0 || i >= rank_) throw std::out_of_range("simple reflection index out of range");
    int num = 2 * pair_simple(i, v);
    IVec r = v;
    if (num % form(i, i) != 0) throw std::logic_error("non-integral reflection of an integral vector");
    r[static_cast<std::size_t>(i)] -= num / form(i, i);
    return r;
}

}  // namespace qsp
