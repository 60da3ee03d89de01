#include "doctest.h"

#include "qsp/pbw.hpp"

using namespace qsp;

namespace {

std::vector<Word> all_words(int rank, int len) {
    std::vector<Word> out{{}};
    for (int l = 0; l < len; ++l) {
        std::vector<Word> next;
        for (const auto& w : out)
            for (int i = 0; i < rank; ++i) {
                Word v = w;
                v.push_back(i);
                next.push_back(v);
            }
        out = next;
    }
    return out;
}

}  // namespace

TEST_CASE("PBW normal forms agree with coordinates") {
    for (const char* lab : {"A2", "B2", "A3", "G2"}) {
        INFO(lab);
        const RootDatum& rd = RootDatum::interned(lab);
        const PbwBasis& P = PbwBasis::of(rd);
        const int len = rd.rank() == 3 ? 4 : 5;
        for (const Word& w : all_words(rd.rank(), len)) {
            PbwElem x = P.from_alg(AlgElem::E_word(rd, w));
            const IVec mu = word_weight(w, static_cast<std::size_t>(rd.rank()));
            CHECK(P.to_uvec(x, mu) == UVec::monomial(rd, w));
            for (int i = 0; i < rd.rank(); ++i) {
                if (mu[static_cast<std::size_t>(i)] == 0) continue;
                IVec nu = mu;
                nu[static_cast<std::size_t>(i)] -= 1;
                CHECK(P.to_uvec(P.skew_l(i, x), nu) == skew_l(i, UVec::monomial(rd, w)));
            }
        }
    }
}

TEST_CASE("PBW products and Serre relations") {
    const RootDatum& rd = RootDatum::interned("B2");
    const PbwBasis& P = PbwBasis::of(rd);
    PbwElem x = P.from_alg(AlgElem::E_word(rd, {1, 0, 1})), y = P.from_alg(AlgElem::E_word(rd, {0, 1}));
    CHECK(P.to_uvec(P.mul(x, y), {2, 3}) == UVec::monomial(rd, {1, 0, 1}) * UVec::monomial(rd, {0, 1}));
    // (α₁, α₂) = −2 with α₁ long, so E₂ satisfies the cubic Serre relation
    const Scalar b = Scalar::q_pow(2) + Scalar(1) + Scalar::q_pow(-2);
    AlgElem s = AlgElem::E_word(rd, {1, 1, 1, 0}) - b * AlgElem::E_word(rd, {1, 1, 0, 1}) +
                b * AlgElem::E_word(rd, {1, 0, 1, 1}) - AlgElem::E_word(rd, {0, 1, 1, 1});
    CHECK(P.from_alg(s).is_zero());
    // another reduced word gives another basis, but the same elements
    PbwBasis P2(rd, {1, 0, 1, 0});
    PbwElem z = P2.from_alg(AlgElem::E_word(rd, {1, 0, 1, 0, 1}));
    CHECK(P2.to_uvec(z, {2, 3}) == UVec::monomial(rd, {1, 0, 1, 0, 1}));
}
