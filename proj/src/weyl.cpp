#include "qsp/weyl.hpp"

#include <algorithm>
#include <stdexcept>

namespace qsp {

std::string word_str(const Word& w) {
    std::string s;
    for (std::size_t k = 0; k < w.size(); ++k) s += (w.size() > 9 && k ? "," : "") + std::to_string(w[k] + 1);
    return s;
}

bool is_negative(const IVec& v) {
    bool any = false;
    for (int x : v) {
        if (x > 0) return false;
        any = any || x < 0;
    }
    return any;
}

bool is_positive(const IVec& v) {
    bool any = false;
    for (int x : v) {
        if (x < 0) return false;
        any = any || x > 0;
    }
    return any;
}

WeylElem WeylElem::identity(const RootDatum& rd) {
    WeylElem w;
    w.rd_ = &RootDatum::interned(rd.label());
    const auto n = static_cast<std::size_t>(rd.rank());
    w.images_.assign(n, IVec(n, 0));
    for (std::size_t i = 0; i < n; ++i) w.images_[i][i] = 1;
    return w;
}

WeylElem WeylElem::simple(const RootDatum& rd, int i) {
    if (i < 0 || i >= rd.rank()) throw std::out_of_range("simple reflection index out of range");
    WeylElem w = identity(rd);
    for (auto& img : w.images_) img = rd.reflect(i, img);
    return w;
}

WeylElem WeylElem::from_word(const RootDatum& rd, const Word& word) {
    WeylElem w = identity(rd);
    // w = s_{a1} ⋯ s_{ak}: apply reflections from the right end outward.
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        if (*it < 0 || *it >= rd.rank()) throw std::out_of_range("word letter out of range");
        for (auto& img : w.images_) img = rd.reflect(*it, img);
    }
    return w;
}

IVec WeylElem::act(const IVec& v) const {
    IVec r(v.size(), 0);
    for (std::size_t j = 0; j < v.size(); ++j) {
        if (v[j] == 0) continue;
        for (std::size_t k = 0; k < r.size(); ++k) r[k] += v[j] * images_[j][k];
    }
    return r;
}

Weight WeylElem::act(const Weight& v) const {
    Weight r(v.size());
    for (std::size_t j = 0; j < v.size(); ++j) {
        if (v[j] == Rat(0)) continue;
        for (std::size_t k = 0; k < r.size(); ++k) r[k] += v[j] * images_[j][k];
    }
    return r;
}

WeylElem WeylElem::operator*(const WeylElem& o) const {
    WeylElem r;
    r.rd_ = rd_;
    r.images_.reserve(o.images_.size());
    for (const auto& img : o.images_) r.images_.push_back(act(img));
    return r;
}

WeylElem WeylElem::inverse() const {
    Word w = reduced_word();
    std::reverse(w.begin(), w.end());
    return from_word(*rd_, w);
}

bool WeylElem::is_identity() const { return *this == identity(*rd_); }

int WeylElem::length() const {
    int l = 0;
    for (const auto& b : rd_->positive_roots())
        if (is_negative(act(b))) ++l;
    return l;
}

bool WeylElem::has_right_descent(int i) const { return is_negative(image(i)); }

Word WeylElem::reduced_word() const {
    Word letters;
    WeylElem w = *this;
    for (;;) {
        int found = -1;
        for (int i = 0; i < rd_->rank(); ++i) {
            if (w.has_right_descent(i)) {
                found = i;
                break;
            }
        }
        if (found < 0) break;
        letters.push_back(found);
        w = w * simple(*rd_, found);
    }
    std::reverse(letters.begin(), letters.end());
    return letters;
}

WeylElem longest_element(const RootDatum& rd, const std::vector<int>& J) {
    WeylElem w = WeylElem::identity(rd);
    std::vector<int> js = J;
    std::sort(js.begin(), js.end());
    for (;;) {
        bool grew = false;
        for (int j : js) {
            if (!w.has_right_descent(j)) {
                w = w * WeylElem::simple(rd, j);
                grew = true;
                break;
            }
        }
        if (!grew) return w;
    }
}

RhoData rho_data(const RootDatum& rd, const std::vector<int>& J) {
    const auto n = static_cast<std::size_t>(rd.rank());
    RhoData out{Weight(n), Weight(n), std::vector<Rat>(n, Rat(0))};
    std::vector<bool> in(n, false);
    for (int j : J) in.at(static_cast<std::size_t>(j)) = true;
    for (const auto& b : rd.positive_roots()) {
        bool inside = true;
        for (std::size_t k = 0; k < n; ++k)
            if (b[k] != 0 && !in[k]) inside = false;
        if (!inside) continue;
        Weight bw = Weight::from_ints(b);
        out.rho += Rat(1, 2) * bw;
        out.rho_check += Rat(1, rd.pair(b, b)) * bw;
    }
    for (std::size_t j = 0; j < n; ++j) out.alpha_on_rho_check[j] = rd.pair(Weight::simple(n, static_cast<int>(j)), out.rho_check);
    return out;
}

std::vector<int> tau0(const RootDatum& rd) {
    std::vector<int> all(static_cast<std::size_t>(rd.rank()));
    for (int i = 0; i < rd.rank(); ++i) all[static_cast<std::size_t>(i)] = i;
    WeylElem w0 = longest_element(rd, all);
    std::vector<int> t(all.size(), -1);
    for (int i = 0; i < rd.rank(); ++i) {
        const IVec& img = w0.image(i);
        for (int j = 0; j < rd.rank(); ++j) {
            if (img[static_cast<std::size_t>(j)] == -1) {
                bool ok = true;
                for (int k = 0; k < rd.rank(); ++k)
                    if (k != j && img[static_cast<std::size_t>(k)] != 0) ok = false;
                if (ok) t[static_cast<std::size_t>(i)] = j;
            }
        }
        if (t[static_cast<std::size_t>(i)] < 0) throw std::logic_error("w0 does not map a simple root to a negative simple root");
    }
    return t;
}

namespace {

void collect_words(const WeylElem& w, Word& suffix, std::vector<Word>& out) {
    if (w.is_identity()) {
        Word word(suffix.rbegin(), suffix.rend());
        out.push_back(word);
        return;
    }
    for (int i = 0; i < w.datum().rank(); ++i) {
        if (w.has_right_descent(i)) {
            suffix.push_back(i);
            collect_words(w * WeylElem::simple(w.datum(), i), suffix, out);
            suffix.pop_back();
        }
    }
}

}  // namespace

std::vector<Word> all_reduced_words(const WeylElem& w) {
    std::vector<Word> out;
    Word suffix;
    collect_words(w, suffix, out);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace qsp
