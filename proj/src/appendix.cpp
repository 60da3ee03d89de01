#include "qsp/appendix.hpp"

#include <functional>
#include <map>
#include <stdexcept>

#include "qsp/pbw.hpp"
#include "qsp/qnumbers.hpp"

namespace qsp {

namespace {

using Pair = std::pair<PbwElem, PbwElem>;

struct Relation {
    std::string label;
    std::function<Pair(int)> sides;
    std::string reading;  // non-empty when the relation is read with a correction
};

// Expression helpers over one PBW basis. Node labels are 1-based, as in the diagrams.
struct Ctx {
    const RootDatum& rd;
    const PbwBasis& P;
    std::map<std::pair<Word, int>, PbwElem> tcache;

    explicit Ctx(const std::string& label) : rd(RootDatum::interned(label)), P(PbwBasis::of(rd)) {}

    PbwElem E(int i) const { return P.E(i - 1); }
    /// T_{w₁}⋯T_{w_k}(E_i).
    const PbwElem& T(const Word& w, int i) {
        auto key = std::make_pair(w, i);
        auto it = tcache.find(key);
        if (it != tcache.end()) return it->second;
        Word w0;
        for (int l : w) w0.push_back(l - 1);
        return tcache.emplace(key, P.from_alg(T_word(w0, AlgElem::E(rd, i - 1)))).first->second;
    }
    PbwElem mul(const PbwElem& a, const PbwElem& b) const { return P.mul(a, b); }
    PbwElem mul(const PbwElem& a, const PbwElem& b, const PbwElem& c) const { return P.mul(P.mul(a, b), c); }
    PbwElem mul(const PbwElem& a, const PbwElem& b, const PbwElem& c, const PbwElem& d) const {
        return P.mul(P.mul(P.mul(a, b), c), d);
    }
    PbwElem pow(const PbwElem& a, int n) const { return P.pow(a, n); }
    PbwElem qc(const PbwElem& a, const PbwElem& b, const Scalar& c) const { return P.qcomm(a, b, c); }
    PbwElem ir(int i, const PbwElem& x) const { return P.skew_l(i - 1, x); }
};

Scalar qp(int k) { return Scalar::q_pow(k); }
Scalar br(int n, int d = 1) { return braced(n, d); }
const Scalar& qd() {
    static const Scalar s = q_diff(1);
    return s;
}

Word cat(Word a, const Word& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

Word range(int from, int to) {
    Word w;
    if (from <= to)
        for (int k = from; k <= to; ++k) w.push_back(k);
    else
        for (int k = from; k >= to; --k) w.push_back(k);
    return w;
}

// x^n y = a y x^n − b (x^{n−1} z): the common shape of the commutation relations.
struct Group {
    std::string name;
    std::string algebra;
    std::function<std::vector<Relation>(Ctx&)> build;
};

std::vector<Relation> ai2_comm(Ctx& c) {
    return {
        {"E2^n E1", [&c](int n) {
             return Pair{c.mul(c.pow(c.E(2), n), c.E(1)),
                         qp(n) * c.mul(c.E(1), c.pow(c.E(2), n)) - qp(1) * br(n) * c.mul(c.pow(c.E(2), n - 1), c.T({1}, 2))};
         }, ""},
        {"E1^n E2", [&c](int n) {
             return Pair{c.mul(c.pow(c.E(1), n), c.E(2)),
                         qp(n) * c.mul(c.E(2), c.pow(c.E(1), n)) - qp(1) * br(n) * c.mul(c.pow(c.E(1), n - 1), c.T({2}, 1))};
         }, ""},
        {"T1(E2)^n E1", [&c](int n) {
             return Pair{c.mul(c.pow(c.T({1}, 2), n), c.E(1)), qp(-n) * c.mul(c.E(1), c.pow(c.T({1}, 2), n))};
         }, ""},
        {"T2(E1)^n E2", [&c](int n) {
             return Pair{c.mul(c.pow(c.T({2}, 1), n), c.E(2)), qp(-n) * c.mul(c.E(2), c.pow(c.T({2}, 1), n))};
         }, ""},
    };
}

std::vector<Relation> ai2_ir(Ctx& c) {
    const Scalar f = Scalar(1) - qp(-2);
    return {
        {"1r(E2^n)", [&c](int n) { return Pair{c.ir(1, c.pow(c.E(2), n)), PbwElem()}; }, ""},
        {"1r(T2(E1)^n)", [&c](int n) { return Pair{c.ir(1, c.pow(c.T({2}, 1), n)), PbwElem()}; }, ""},
        {"2r(E1^n)", [&c](int n) { return Pair{c.ir(2, c.pow(c.E(1), n)), PbwElem()}; }, ""},
        {"2r(T1(E2)^n)", [&c](int n) { return Pair{c.ir(2, c.pow(c.T({1}, 2), n)), PbwElem()}; }, ""},
        {"1r(E1^n)", [&c](int n) { return Pair{c.ir(1, c.pow(c.E(1), n)), br(n) * c.pow(c.E(1), n - 1)}; }, ""},
        {"2r(E2^n)", [&c](int n) { return Pair{c.ir(2, c.pow(c.E(2), n)), br(n) * c.pow(c.E(2), n - 1)}; }, ""},
        {"1r(T1(E2)^n)", [&c, f](int n) {
             return Pair{c.ir(1, c.pow(c.T({1}, 2), n)), f * br(n) * c.mul(c.E(2), c.pow(c.T({1}, 2), n - 1))};
         }, ""},
        {"2r(T2(E1)^n)", [&c, f](int n) {
             return Pair{c.ir(2, c.pow(c.T({2}, 1), n)), f * br(n) * c.mul(c.E(1), c.pow(c.T({2}, 1), n - 1))};
         }, ""},
    };
}

struct AII5 {
    PbwElem a, b, cc, d;
    explicit AII5(Ctx& c) {
        const Scalar m2 = qp(-2);
        a = c.qc(c.E(4), c.T({3, 5}, 4), m2);
        b = c.T({1, 3}, 2);
        cc = c.qc(c.T({3}, 4), c.T({1, 2, 3, 5}, 4), m2);
        d = c.qc(c.T({2, 3}, 4), c.T({1, 2, 3, 5}, 4), m2);
    }
};

std::vector<Relation> aii5_comm(Ctx& c) {
    auto g = std::make_shared<AII5>(c);
    return {
        {"[E4,T35(E4)]^n T13(E2)", [&c, g](int n) {
             return Pair{c.mul(c.pow(g->a, n), g->b),
                         qp(n) * c.mul(g->b, c.pow(g->a, n)) - qp(1) * br(n) * c.mul(c.pow(g->a, n - 1), g->cc)};
         }, ""},
        {"[T23(E4),T1235(E4)]^n T13(E2)", [&c, g](int n) {
             return Pair{c.mul(c.pow(g->d, n), g->b), qp(-n) * c.mul(g->b, c.pow(g->d, n))};
         }, ""},
    };
}

std::vector<Relation> aii5_ir(Ctx& c) {
    auto g = std::make_shared<AII5>(c);
    return {
        {"2r([T23(E4),T1235(E4)]^n)", [&c, g](int n) {
             return Pair{c.ir(2, c.pow(g->d, n)), qp(-1) * qd() * br(n) * c.mul(g->cc, c.pow(g->d, n - 1))};
         }, ""},
    };
}

std::vector<Relation> aiii3_e3(Ctx& c) {
    return {
        {"T13(E2)^n E3", [&c](int n) {
             return Pair{c.mul(c.pow(c.T({1, 3}, 2), n), c.E(3)), qp(-n) * c.mul(c.E(3), c.pow(c.T({1, 3}, 2), n))};
         }, ""},
        {"(T1(E2)T3(E2))^n E3", [&c](int n) {
             PbwElem x = c.mul(c.T({1}, 2), c.T({3}, 2));
             return Pair{c.mul(c.pow(x, n), c.E(3)),
                         c.mul(c.E(3), c.pow(x, n)) -
                             qp(1) * br(n) * c.mul(c.pow(x, n - 1), c.T({3}, 2), c.T({1, 3}, 2))};
         }, ""},
        {"E2^n E3", [&c](int n) {
             return Pair{c.mul(c.pow(c.E(2), n), c.E(3)),
                         qp(n) * c.mul(c.E(3), c.pow(c.E(2), n)) - qp(1) * br(n) * c.mul(c.pow(c.E(2), n - 1), c.T({3}, 2))};
         }, ""},
    };
}

std::vector<Relation> aiii3_1r(Ctx& c) {
    return {
        {"1r(T13(E2)^n)", [&c](int n) {
             return Pair{c.ir(1, c.pow(c.T({1, 3}, 2), n)),
                         qp(-1) * qd() * br(n) * c.mul(c.T({3}, 2), c.pow(c.T({1, 3}, 2), n - 1))};
         }, ""},
        {"1r((T1(E2)T3(E2))^n)", [&c](int n) {
             PbwElem x = c.mul(c.T({1}, 2), c.T({3}, 2));
             return Pair{c.ir(1, c.pow(x, n)), qp(-1) * qd() * br(n) * c.mul(c.E(2), c.T({3}, 2), c.pow(x, n - 1))};
         }, ""},
    };
}

std::vector<Relation> aiii3_e2(Ctx& c) {
    return {
        {"(T2(E3)T2(E1))^n E2", [&c](int n) {
             PbwElem x = c.mul(c.T({2}, 3), c.T({2}, 1));
             return Pair{c.mul(c.pow(x, n), c.E(2)), qp(-2 * n) * c.mul(c.E(2), c.pow(x, n))};
         }, ""},
        {"T213(E2)^n E2", [&c](int n) {
             const PbwElem& t = c.T({2, 1, 3}, 2);
             return Pair{c.mul(c.pow(t, n), c.E(2)),
                         c.mul(c.E(2), c.pow(t, n)) - qd() * br(n) * c.mul(c.pow(t, n - 1), c.T({2}, 3), c.T({2}, 1))};
         }, ""},
        {"(E1E3)^n E2", [&c](int n) {
             PbwElem x = c.mul(c.E(1), c.E(3));
             PbwElem mid = c.mul(c.E(3), c.T({2}, 1)) + c.mul(c.E(1), c.T({2}, 3));
             return Pair{c.mul(c.pow(x, n), c.E(2)),
                         qp(2 * n) * c.mul(c.E(2), c.pow(x, n)) - qp(1) * br(n) * c.mul(c.pow(x, n - 1), mid) -
                             qp(2) * br(n) * br(n) * c.mul(c.pow(x, n - 1), c.T({2, 1, 3}, 2))};
         },
         "the lower-case e_1 in the middle term is read as E_1 and the open bracket is closed after T_2(E_3)"},
    };
}

std::vector<Relation> aiii3_2r(Ctx& c) {
    return {
        {"2r(T213(E2)^n)", [&c](int n) {
             const PbwElem& t = c.T({2, 1, 3}, 2);
             return Pair{c.ir(2, c.pow(t, n)), qp(-2) * qd() * qd() * br(n) * c.mul(c.E(1), c.E(3), c.pow(t, n - 1))};
         }, ""},
        {"2r(T2(E3)^n T2(E1)^n)", [&c](int n) {
             const PbwElem &a = c.T({2}, 3), &b = c.T({2}, 1);
             PbwElem rhs = qp(-1) * qd() * br(n) * c.mul(c.E(3), c.pow(a, n - 1), c.pow(b, n)) +
                           qp(-1) * qd() * br(n) * c.mul(c.E(1), c.pow(a, n), c.pow(b, n - 1)) +
                           qd() * br(n) * br(n) * c.mul(c.T({2, 1, 3}, 2), c.pow(c.mul(b, a), n - 1));
             return Pair{c.ir(2, c.mul(c.pow(a, n), c.pow(b, n))), rhs};
         }, ""},
    };
}

// AIII_n, nodes 1, 2, n−1, n white, X = {3, …, n−2}.
struct AIIIn {
    int n;
    Word wX;
    explicit AIIIn(int nn) : n(nn) {
        // w_X for the A_{n−4} chain 3..n−2: s_3 (s_4 s_3) (s_5 s_4 s_3) ⋯
        for (int top = 3; top <= n - 2; ++top)
            for (int k = top; k >= 3; --k) wX.push_back(k);
    }
    Word w(const Word& prefix) const { return cat(prefix, wX); }
};

std::vector<Relation> aiiin_rels(Ctx& c, int n) {
    auto A = std::make_shared<AIIIn>(n);
    auto X1 = [&c, A, n]() -> PbwElem { return c.T(A->w({1, n, n - 1}), 2); };
    auto X2 = [&c, A, n]() -> PbwElem { return c.T(A->w({1, 2, n}), n - 1); };
    auto X3 = [&c, n]() -> PbwElem { return c.T(range(n, 3), 2); };
    auto X4 = [&c, n]() -> PbwElem { return c.T(range(1, n - 2), n - 1); };
    auto X5 = [&c, A, n]() -> PbwElem { return c.T(A->w({n - 1}), 2); };
    auto X6 = [&c, A, n]() -> PbwElem { return c.T(A->w({2}), n - 1); };
    auto X7 = [&c, A, n]() -> PbwElem { return c.T(A->w({2, n}), n - 1); };
    auto simple = [&c, n](std::function<PbwElem()> x, int e) {
        return [&c, n, x, e](int k) {
            return Pair{c.mul(c.pow(x(), k), c.E(n)), qp(e * k) * c.mul(c.E(n), c.pow(x(), k))};
        };
    };
    auto shifted = [&c, n](std::function<PbwElem()> x, std::function<PbwElem()> z) {
        return [&c, n, x, z](int k) {
            return Pair{c.mul(c.pow(x(), k), c.E(n)),
                        qp(k) * c.mul(c.E(n), c.pow(x(), k)) - qp(1) * br(k) * c.mul(c.pow(x(), k - 1), z())};
        };
    };
    return {
        {"T_{1,n,n-1}T_wX(E2)^k En", simple(X1, -1), ""},
        {"T_{1,2,n}T_wX(E_{n-1})^k En", simple(X2, -1), ""},
        {"T_{n..3}(E2)^k En", simple(X3, -1), ""},
        {"T_{1..n-2}(E_{n-1})^k En", shifted(X4, X2), ""},
        {"T_{n-1}T_wX(E2)^k En", shifted(X5, X3), ""},
        {"T_2T_wX(E_{n-1})^k En", shifted(X6, X7), ""},
        {"T_{2,n}T_wX(E_{n-1}) T_{n-1}T_wX(E2)^k", [&c, X5, X6, X7, X3](int k) {
             return Pair{c.mul(X7(), c.pow(X5(), k)),
                         qp(-k) * c.mul(c.pow(X5(), k), X7()) +
                             qp(1 - k) * qd() * br(k) * c.mul(c.pow(X5(), k - 1), X6(), X3())};
         }, ""},
        {"T_{1,2,n}T_wX(E_{n-1})^k T_{n..3}(E2)", [&c, X2, X3](int k) {
             return Pair{c.mul(c.pow(X2(), k), X3()), (qp(-k) + qd() * qp(1 - k) * br(k)) * c.mul(X3(), c.pow(X2(), k))};
         }, ""},
    };
}

std::vector<Relation> aiiin_1r(Ctx& c, int n) {
    auto A = std::make_shared<AIIIn>(n);
    return {
        {"1r(T_{1..n-2}(E_{n-1})^k)", [&c, n](int k) {
             return Pair{c.ir(1, c.pow(c.T(range(1, n - 2), n - 1), k)),
                         qp(-1) * qd() * br(k) * c.mul(c.T(range(2, n - 2), n - 1), c.pow(c.T(range(1, n - 2), n - 1), k - 1))};
         }, ""},
        {"1r(T_{1,2,n}T_wX(E_{n-1})^k)", [&c, A, n](int k) {
             const PbwElem& x = c.T(A->w({1, 2, n}), n - 1);
             return Pair{c.ir(1, c.pow(x, k)), qp(-1) * qd() * br(k) * c.mul(c.T(A->w({2, n}), n - 1), c.pow(x, k - 1))};
         }, ""},
        {"1r(T_{1,n,n-1}T_wX(E2)^k)", [&c, A, n](int k) {
             const PbwElem& x = c.T(A->w({1, n, n - 1}), 2);
             return Pair{c.ir(1, c.pow(x, k)), qp(-1) * qd() * br(k) * c.mul(c.T(A->w({n, n - 1}), 2), c.pow(x, k - 1))};
         }, ""},
    };
}

std::vector<Relation> aiiin_relsb(Ctx& c, int n) {
    auto A = std::make_shared<AIIIn>(n);
    auto Y = [&c, A, n]() -> PbwElem { return c.T(A->wX, n - 1); };
    auto Y1 = [&c, n]() -> PbwElem { return c.T(range(2, n - 1), n); };
    auto Y2 = [&c, n]() -> PbwElem { return c.T(range(n - 1, 2), 1); };
    auto Y3 = [&c, A, n]() -> PbwElem { return c.T(cat(range(2, n - 1), A->w({1, 2, n})), n - 1); };
    auto Y4 = [&c, A, n]() -> PbwElem { return c.T(cat(range(n - 1, 2), A->w({1, n, n - 1})), 2); };
    auto commute = [&c, Y](std::function<PbwElem()> x, int e) {
        return [&c, x, e, Y](int k) { return Pair{c.mul(c.pow(x(), k), Y()), qp(e * k) * c.mul(Y(), c.pow(x(), k))}; };
    };
    auto E1 = [&c]() { return c.E(1); };
    return {
        {"T_{2..n-1}(En)^k T_wX(E_{n-1})", commute(Y1, 0), ""},
        {"T_{n-1..2}(E1)^k T_wX(E_{n-1})", commute(Y2, -1), ""},
        {"T_{2..n-1}T_{1,2,n}T_wX(E_{n-1})^k T_wX(E_{n-1})", commute(Y3, 0), ""},
        {"T_{n-1..2}T_{1,n,n-1}T_wX(E2)^k T_wX(E_{n-1})", [&c, Y, Y4, n](int k) {
             return Pair{c.mul(c.pow(Y4(), k), Y()),
                         c.mul(Y(), c.pow(Y4(), k)) -
                             qd() * br(k) * c.mul(c.pow(Y4(), k - 1), c.T(range(3, n - 1), n), c.T(range(n - 1, 2), 1))};
         }, ""},
        {"E1^k T_wX(E_{n-1})", commute(E1, 0), ""},
        {"En^k T_wX(E_{n-1})", [&c, A, Y, n](int k) {
             return Pair{c.mul(c.pow(c.E(n), k), Y()),
                         qp(k) * c.mul(Y(), c.pow(c.E(n), k)) -
                             qp(1) * br(k) * c.mul(c.pow(c.E(n), k - 1), c.T(cat(A->wX, {n - 1}), n))};
         }, ""},
    };
}

std::vector<Relation> aiiin_2r(Ctx& c, int n) {
    auto A = std::make_shared<AIIIn>(n);
    return {
        {"2r(T_{2..n-1}(En)^k)", [&c, n](int k) {
             return Pair{c.ir(2, c.pow(c.T(range(2, n - 1), n), k)),
                         qp(-1) * qd() * br(k) * c.mul(c.T(range(3, n - 1), n), c.pow(c.T(range(2, n - 1), n), k - 1))};
         }, ""},
        {"2r(T_{2..n-1}T_{1,2,n}T_wX(E_{n-1})^k)", [&c, A, n](int k) {
             const PbwElem& x = c.T(cat(range(2, n - 1), A->w({1, 2, n})), n - 1);
             return Pair{c.ir(2, c.pow(x, k)),
                         qp(-2) * qd() * qd() * br(k) * c.mul(c.E(1), c.T(range(3, n - 1), n), c.pow(x, k - 1))};
         }, ""},
    };
}

// CI_2 on the datum with α₁ long: q₁ = q², q₂ = q.
std::vector<Relation> ci2_e1(Ctx& c) {
    return {
        {"E2^n E1", [&c](int n) {
             PbwElem rhs = qp(2 * n) * c.mul(c.E(1), c.pow(c.E(2), n)) -
                           qp(2) * br(n) * c.mul(c.pow(c.E(2), n - 1), c.T({1}, 2));
             if (n >= 2) rhs -= qp(3) * br(n) * br(n - 1) * c.mul(c.pow(c.E(2), n - 2), c.T({1, 2}, 1));
             return Pair{c.mul(c.pow(c.E(2), n), c.E(1)), rhs};
         },
         "the last term is read with E_2^{n-2}; the printed exponent n-1 gives a term of the wrong weight"},
        {"T1(E2)^n E1", [&c](int n) {
             return Pair{c.mul(c.pow(c.T({1}, 2), n), c.E(1)), qp(-2 * n) * c.mul(c.E(1), c.pow(c.T({1}, 2), n))};
         }, ""},
        {"T12(E1)^n E1", [&c](int n) {
             const PbwElem& t = c.T({1, 2}, 1);
             Scalar f = (qp(2) - Scalar(1)) / q_number(2, 1);
             return Pair{c.mul(c.pow(t, n), c.E(1)),
                         c.mul(c.E(1), c.pow(t, n)) - f * br(n, 2) * c.mul(c.pow(t, n - 1), c.pow(c.T({1}, 2), 2))};
         }, ""},
    };
}

std::vector<Relation> ci2_1r(Ctx& c) {
    const Scalar Q2 = q_diff(2);
    return {
        {"1r(T1(E2)^{n+1})", [&c, Q2](int n) {
             const PbwElem& t = c.T({1}, 2);
             PbwElem rhs = qp(-2) * Q2 * br(n + 1) * c.mul(c.E(2), c.pow(t, n)) +
                           qp(-1) * Q2 * br(n + 1) * br(n) * c.mul(c.T({1, 2}, 1), c.pow(t, n - 1));
             return Pair{c.ir(1, c.pow(t, n + 1)), rhs};
         }, ""},
        {"1r(T12(E1)^n)", [&c](int n) {
             const PbwElem& t = c.T({1, 2}, 1);
             return Pair{c.ir(1, c.pow(t, n)), qp(-3) * qd() * qd() * br(n, 2) * c.mul(c.pow(c.E(2), 2), c.pow(t, n - 1))};
         }, ""},
    };
}

std::vector<Relation> ci2_e2(Ctx& c) {
    return {
        {"E1^n E2", [&c](int n) {
             return Pair{c.mul(c.pow(c.E(1), n), c.E(2)),
                         qp(2 * n) * c.mul(c.E(2), c.pow(c.E(1), n)) -
                             qp(2) * br(n, 2) * c.mul(c.pow(c.E(1), n - 1), c.T({2, 1}, 2))};
         }, ""},
        {"T2(E1)^n E2", [&c](int n) {
             return Pair{c.mul(c.pow(c.T({2}, 1), n), c.E(2)), qp(-2 * n) * c.mul(c.E(2), c.pow(c.T({2}, 1), n))};
         }, ""},
        {"T21(E2)^n E2", [&c](int n) {
             const PbwElem& t = c.T({2, 1}, 2);
             return Pair{c.mul(c.pow(t, n), c.E(2)),
                         c.mul(c.E(2), c.pow(t, n)) - q_number(2, 1) * br(n) * c.mul(c.pow(t, n - 1), c.T({2}, 1))};
         }, ""},
    };
}

std::vector<Relation> ci2_2r(Ctx& c) {
    const Scalar Q2 = q_diff(2);
    return {
        {"2r(T2(E1)^n)", [&c](int n) {
             return Pair{c.ir(2, c.pow(c.T({2}, 1), n)), qd() * br(n, 2) * c.mul(c.T({2, 1}, 2), c.pow(c.T({2}, 1), n - 1))};
         }, ""},
        {"2r(T21(E2)^n)", [&c, Q2](int n) {
             const PbwElem& t = c.T({2, 1}, 2);
             return Pair{c.ir(2, c.pow(t, n)), qp(-2) * Q2 * br(n) * c.mul(c.E(1), c.pow(t, n - 1))};
         }, ""},
    };
}

std::vector<Group> groups(int family_n) {
    const std::string an = "A" + std::to_string(family_n);
    return {
        {"AI2-comm", "A2", ai2_comm},
        {"AI2-ir", "A2", ai2_ir},
        {"AII5-comm", "A5", aii5_comm},
        {"AII5-ir", "A5", aii5_ir},
        {"AIII3-E3", "A3", aiii3_e3},
        {"AIII3-1r", "A3", aiii3_1r},
        {"AIII3-E2", "A3", aiii3_e2},
        {"AIII3-2r", "A3", aiii3_2r},
        {"AIIIn-rels", an, [family_n](Ctx& c) { return aiiin_rels(c, family_n); }},
        {"AIIIn-1r", an, [family_n](Ctx& c) { return aiiin_1r(c, family_n); }},
        {"AIIIn-relsb", an, [family_n](Ctx& c) { return aiiin_relsb(c, family_n); }},
        {"AIIIn-2r", an, [family_n](Ctx& c) { return aiiin_2r(c, family_n); }},
        {"CI2-E1", "B2", ci2_e1},
        {"CI2-1r", "B2", ci2_1r},
        {"CI2-E2", "B2", ci2_e2},
        {"CI2-2r", "B2", ci2_2r},
    };
}

}  // namespace

std::vector<std::string> appendix_lemmas() {
    std::vector<std::string> out;
    for (const auto& g : groups(4)) out.push_back(g.name);
    return out;
}

CheckReport appendix_lemma(const std::string& lemma, int bound, int family_n) {
    if (family_n < 4) throw std::invalid_argument("the AIII_n family starts at n = 4");
    for (const auto& g : groups(family_n)) {
        if (g.name != lemma) continue;
        CheckReport rep;
        rep.name = g.name + (g.name.rfind("AIIIn", 0) == 0 ? " (n = " + std::to_string(family_n) + ")" : "");
        Ctx ctx(g.algebra);
        for (const auto& rel : g.build(ctx)) {
            int bad = 0;
            for (int n = 1; n <= bound && !bad; ++n) {
                auto [l, r] = rel.sides(n);
                if (l != r) bad = n;
            }
            std::string line = rel.label + (bad ? ": fails at n = " + std::to_string(bad) : ": ok for n = 1.." + std::to_string(bound));
            if (!rel.reading.empty()) line += " [" + rel.reading + "]";
            if (bad)
                rep.fail(line);
            else
                rep.note(line);
        }
        return rep;
    }
    throw std::invalid_argument("unknown lemma group: " + lemma);
}

CheckReport appendix_identity_suite(int bound, int family_n) {
    CheckReport rep;
    rep.name = "appendix";
    for (const auto& name : appendix_lemmas()) rep.merge(appendix_lemma(name, bound, family_n));
    return rep;
}

}  // namespace qsp
