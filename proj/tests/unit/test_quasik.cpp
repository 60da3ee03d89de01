#include "doctest.h"

#include "qsp/catalogue.hpp"
#include "qsp/qnumbers.hpp"
#include "qsp/quasik.hpp"

using namespace qsp;

namespace {

QSPData load(const std::string& name) { return QSPData::from_spec(catalogue_spec(name)); }

}  // namespace

TEST_CASE("catalogue diagrams validate") {
    for (const auto& name : catalogue_names()) {
        INFO(name);
        DiagramSpec s = catalogue_spec(name);
        CHECK(validate_satake(s.diagram).valid);
        CHECK_NOTHROW(QSPData::from_spec(s));
    }
}

TEST_CASE("oracle low components") {
    const Scalar q = Scalar::q_pow(1);
    QSPData ai1 = load("AI1");
    KSeries K = solve_qkm(ai1, 4);
    const Scalar c1 = ai1.params.c[0];
    UVec expect = (q_diff(1) * c1 * q * q / (Scalar(1) + q * q)) * UVec::monomial(ai1.datum(), {0, 0});
    CHECK(K.at({2}) == expect);
    CHECK(K.at({1}).is_zero());
    CHECK(K.at({0}) == UVec::one(ai1.datum()));

    QSPData a11 = load("AIII11");
    KSeries K2 = solve_qkm(a11, 4);
    CHECK(K2.at({1, 1}) == (q_diff(1) * a11.params.c[0]) * UVec::monomial(a11.datum(), {0, 1}));
    CHECK(solve_qkm(a11, 0).weights().size() == 1);
}

TEST_CASE("rank one closed forms") {
    for (const char* name : {"AI1", "AII3", "AIII11", "AIV2", "AIV3"}) {
        INFO(name);
        QSPData d = load(name);
        const int h = 6;
        CHECK_FALSE(rank_one_qkm(d, h).first_difference(solve_qkm(d, h)).has_value());
    }
}

TEST_CASE("derivations vanish on X") {
    for (const char* name : {"AII3", "AIV3", "BII3"}) {
        QSPData d = load(name);
        CHECK(derivation_vanishing_check(d, solve_qkm(d, 6)).pass);
    }
}

TEST_CASE("intertwiner AI1 with s") {
    DiagramSpec spec = catalogue_spec("AI1");
    QSPData d0 = QSPData::from_spec(spec);
    CHECK(intertwiner_check(d0, solve_qkm(d0, 6), 6).pass);
    QSPData ds = QSPData::make(spec.diagram, spec.c, {{0, Scalar(1)}});
    KSeries K = solve_qkm(ds, 6);
    CHECK(K.has({1}));
    CHECK(intertwiner_check(ds, K, 6).pass);
    // a wrong series must be caught
    KSeries bad = K;
    bad.set({2}, Scalar(2) * K.at({2}));
    CHECK_FALSE(intertwiner_check(ds, bad, 6).pass);
}

TEST_CASE("theorem A rank two") {
    for (const char* name : {"AI2", "AIII3"}) {
        INFO(name);
        QSPData d = load(name);
        CheckReport r = check_theoremA(d, 6);
        INFO(r.str());
        CHECK(r.pass);
    }
}

TEST_CASE("a partial product short of the longest word differs from the oracle") {
    QSPData d = load("AIII3");
    const Word& full = d.restricted.w0_tilde;
    Word w(full.begin(), full.end() - 1);
    CHECK(partial_qkm(d, w, 6).first_difference(solve_qkm(d, 6)).has_value());
    CHECK(last_factor_check(d, 6).pass);
}
