#include "doctest.h"

#include <tuple>

#include "qsp/qnumbers.hpp"
#include "qsp/quasir.hpp"

using namespace qsp;

TEST_CASE("rank one R low terms") {
    const RootDatum& rd = RootDatum::interned("A1");
    RSeries R = rank_one_R(rd, 0, 4);
    CHECK(R.weights().size() == 5);
    // r = 1 and r = 2 terms written out by hand
    RSeries expect = RSeries::one(rd, 2);
    expect.add_pure(-q_diff(1) * UVec::monomial(rd, {0}), UVec::monomial(rd, {0}));
    Scalar c2 = Scalar::q_pow(-1) * q_diff(1) * q_diff(1) / q_factorial(2);
    expect.add_pure(c2 * UVec::monomial(rd, {0, 0}), UVec::monomial(rd, {0, 0}));
    CHECK_FALSE(expect.first_difference(R).has_value());
    CHECK(R.tensor({1}).str() == "(-q+q^-1) F(1) (x) E(1)");
}

TEST_CASE("R factorisation is independent of the reduced word") {
    const std::vector<std::tuple<const char*, Word, Word>> cases = {
        {"A2", {0, 1, 0}, {1, 0, 1}}, {"B2", {0, 1, 0, 1}, {1, 0, 1, 0}}};
    for (const auto& [lab, w1, w2] : cases) {
        INFO(lab);
        const RootDatum& rd = RootDatum::interned(lab);
        RSeries a = R_factored(rd, w1, 6), b = R_factored(rd, w2, 6);
        CHECK_FALSE(a.first_difference(b).has_value());
        CHECK(a.weights().size() > 4);
    }
    const RootDatum& a2 = RootDatum::interned("A2");
    CHECK_THROWS_AS(R_factored(a2, {0, 1}, 4), std::invalid_argument);
    CHECK_THROWS_AS(R_factored(a2, {0, 0, 1}, 4), std::invalid_argument);
}

TEST_CASE("R intertwines the bar involutions") {
    const RootDatum& a1 = RootDatum::interned("A1");
    CHECK(verify_R_intertwiner(R_factored(a1, {0}, 6), 0, 6).pass);
    const RootDatum& a2 = RootDatum::interned("A2");
    RSeries R = R_factored(a2, {0, 1, 0}, 5);
    for (int i : {0, 1}) CHECK(verify_R_intertwiner(R, i, 5).pass);
    // the mirrored identity already fails at degree one
    CHECK_FALSE(verify_R_intertwiner(R_factored(a1, {0}, 6), 0, 6, RSide::DeltaRight).pass);
    // a truncated factor product is not the quasi R-matrix
    CHECK_FALSE(verify_R_intertwiner(rank_one_R(a2, 0, 5) * rank_one_R(a2, 1, 5), 0, 5).pass);
}
