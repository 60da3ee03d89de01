#include <doctest.h>

#include "qsp/catalogue.hpp"
#include "qsp/satake.hpp"

using namespace qsp;

namespace {

SatakeDiagram diag(const std::string& label, std::vector<int> X1, std::vector<std::pair<int, int>> swaps1) {
    RootDatum rd = RootDatum::from_label(label);
    std::vector<int> X;
    for (int x : X1) X.push_back(x - 1);
    std::vector<int> tau(static_cast<std::size_t>(rd.rank()));
    for (int i = 0; i < rd.rank(); ++i) tau[static_cast<std::size_t>(i)] = i;
    for (auto [a, b] : swaps1) {
        tau[static_cast<std::size_t>(a - 1)] = b - 1;
        tau[static_cast<std::size_t>(b - 1)] = a - 1;
    }
    return SatakeDiagram::make(rd, X, tau);
}

Weight half_sum(std::size_t n, std::vector<int> nodes1) {
    Weight w(n);
    for (int i : nodes1) w[static_cast<std::size_t>(i - 1)] += Rat(1, 2);
    return w;
}

}  // namespace

TEST_CASE("validate_satake") {
    CHECK(validate_satake(diag("A3", {}, {{1, 3}})).valid);
    CHECK(validate_satake(diag("E6", {}, {})).valid);
    CHECK(validate_satake(diag("A5", {1, 3, 5}, {})).valid);

    auto bad = validate_satake(diag("A2", {2}, {}));
    CHECK_FALSE(bad.valid);
    bool found = false;
    for (const auto& c : bad.checks)
        if (c.property == 3 && !c.ok) {
            found = true;
            CHECK(c.detail.find("j = 1") != std::string::npos);
            CHECK(c.detail.find("-1/2") != std::string::npos);
        }
    CHECK(found);

    // τ must be a diagram automorphism.
    CHECK_FALSE(validate_satake(diag("B3", {}, {{1, 3}})).valid);
    // Property 2: w_X(α_j) = −α_τ(j) fails for X = {1,2} in A3 with τ = id.
    CHECK_FALSE(validate_satake(diag("A3", {1, 2}, {})).valid);
}

TEST_CASE("restricted data AIII3 and AII5") {
    auto d = diag("A3", {}, {{1, 3}});
    auto r = restricted_data(d);
    CHECK(r.reps == std::vector<int>{0, 1});
    CHECK(r.alpha_tilde[0] == half_sum(3, {1, 3}));
    CHECK(r.alpha_tilde[1] == Weight::simple(3, 1));
    CHECK(r.coxeter.at({0, 1}) == 4);
    CHECK(r.restricted_type == "B2");
    CHECK(r.w0_tilde.size() == 4);
    CHECK(r.w0_tilde_elem == longest_element(d.datum, {0, 1, 2}));

    auto a = diag("A5", {1, 3, 5}, {});
    auto ra = restricted_data(a);
    CHECK(ra.s_tilde[1] == WeylElem::from_word(a.datum, {1, 0, 2, 1}));
    CHECK(ra.s_tilde[3] == WeylElem::from_word(a.datum, {3, 2, 4, 3}));
    CHECK(ra.coxeter.at({1, 3}) == 3);
    CHECK(ra.restricted_type == "A2");
    CHECK(a.rank() == 2);
    CHECK(ra.tilde_reduced_words(ra.w0_tilde_elem).size() == 2);

    auto ai = diag("A2", {}, {});
    auto rai = restricted_data(ai);
    for (int i = 0; i < 2; ++i) CHECK(rai.s_tilde[static_cast<std::size_t>(i)] == WeylElem::simple(ai.datum, i));
    CHECK(rai.restricted_type == "A2");
}

TEST_CASE("restricted types") {
    CHECK(restricted_data(diag("A2", {}, {{1, 2}})).restricted_type == "BC1");
    CHECK(restricted_data(diag("A4", {}, {{1, 4}, {2, 3}})).restricted_type == "BC2");
    CHECK(restricted_data(diag("A4", {2, 3}, {{1, 4}, {2, 3}})).restricted_type == "BC1");
    CHECK(restricted_data(diag("A1xA1", {}, {{1, 2}})).restricted_type == "A1");
    CHECK(restricted_data(diag("G2", {}, {})).restricted_type == "G2");
    CHECK(restricted_data(diag("C2", {}, {})).restricted_type == "B2");
    CHECK(restricted_data(diag("D4", {}, {})).restricted_type == "D4");
    CHECK(restricted_data(diag("E6", {}, {})).restricted_type == "E6");
    CHECK(restricted_data(diag("E6", {}, {{1, 6}, {3, 5}})).restricted_type == "F4");
}

TEST_CASE("restricted invariants") {
    for (auto d : {diag("A3", {}, {{1, 3}}), diag("A5", {1, 3, 5}, {}), diag("A4", {}, {{1, 4}, {2, 3}}),
                   diag("B3", {2, 3}, {}), diag("D5", {4, 5}, {}), diag("C3", {1, 3}, {})}) {
        REQUIRE(validate_satake(d).valid);
        auto r = restricted_data(d);
        const auto n = static_cast<std::size_t>(d.size());
        for (int i : r.reps) {
            const auto& s = r.s_tilde[static_cast<std::size_t>(i)];
            CHECK((s * s).is_identity());
            std::vector<int> J = d.X;
            J.push_back(i);
            J.push_back(d.tau[static_cast<std::size_t>(i)]);
            CHECK(r.w_X * longest_element(d.datum, J) == longest_element(d.datum, J) * r.w_X);
            // Θ(α̃) = −α̃.
            CHECK(r.theta_of(r.alpha_tilde[static_cast<std::size_t>(i)]) == -r.alpha_tilde[static_cast<std::size_t>(i)]);
            // Integrality against a generating set of Q(Σ).
            for (int j : r.reps) {
                Rat x = Rat(2) * d.datum.pair(r.alpha_tilde[static_cast<std::size_t>(j)], r.alpha_tilde[static_cast<std::size_t>(i)]) /
                        d.datum.pair(r.alpha_tilde[static_cast<std::size_t>(i)], r.alpha_tilde[static_cast<std::size_t>(i)]);
                CHECK(x.denominator() == 1);
            }
        }
        // Θ² = id.
        for (std::size_t j = 0; j < n; ++j) {
            IVec e(n, 0);
            e[j] = 1;
            CHECK(r.theta_of(r.theta_of(e)) == e);
        }
        CHECK(r.is_tilde_reduced(r.w0_tilde));
        // Length additivity for short words, and faithfulness on α̃.
        auto ball = r.tilde_ball(3);
        for (const auto& [w, ww] : ball)
            for (const auto& [v, vw] : ball) {
                Word cat = ww;
                cat.insert(cat.end(), vw.begin(), vw.end());
                bool additive = (w * v).length() == w.length() + v.length();
                CHECK(additive == r.is_tilde_reduced(cat));
            }
        for (const auto& [w, ww] : r.tilde_ball(4)) {
            if (ww.empty()) continue;
            bool fixes_all = true;
            for (int i : r.reps)
                fixes_all = fixes_all && w.act(r.alpha_tilde[static_cast<std::size_t>(i)]) == r.alpha_tilde[static_cast<std::size_t>(i)];
            CHECK_FALSE(fixes_all);
        }
    }
}

TEST_CASE("subdiagram and rank") {
    auto d = diag("A4", {2, 3}, {{1, 4}, {2, 3}});
    REQUIRE(validate_satake(d).valid);
    auto s = subdiagram(d, 0);
    CHECK(s.nodes == std::vector<int>{0, 1, 2, 3});
    CHECK(s.X == std::vector<int>{1, 2});
    CHECK(s.rank() == 1);

    auto e = diag("A5", {1, 3, 5}, {});
    auto s2 = subdiagram(e, 1);
    CHECK(s2.nodes == std::vector<int>{0, 1, 2});
    CHECK(s2.X == std::vector<int>{0, 2});
    CHECK(validate_satake(s2).valid);
    CHECK_THROWS(subdiagram(e, 0));
}

TEST_CASE("parameters") {
    auto ai1 = diag("A1", {}, {});
    auto r1 = restricted_data(ai1);
    CHECK(ccond_exponent(ai1, r1, 0) == -2);
    auto p = build_params(ai1, r1, {{0, Scalar::q_pow(-1)}}, {});
    CHECK(p.ctilde[0].has_value());
    CHECK(*p.ctilde[0] == Scalar::q_pow(-1));
    CHECK_THROWS_AS(build_params(ai1, r1, {{0, Scalar(1)}}, {}), ParamError);
    try {
        build_params(ai1, r1, {{0, Scalar(1)}}, {});
    } catch (const ParamError& e) {
        CHECK(e.equation == "ciCond");
    }
    // s_1 must be bar-invariant.
    try {
        build_params(ai1, r1, {{0, Scalar::q_pow(-1)}}, {{0, Scalar::q_pow(1)}});
        CHECK(false);
    } catch (const ParamError& e) {
        CHECK(e.equation == "siCond");
    }
    CHECK_NOTHROW(build_params(ai1, r1, {{0, Scalar::q_pow(-1)}}, {{0, Scalar(3)}}));

    // AIII₁₁: c₁ = c₂ and no admissible s ≠ 0.
    auto a11 = diag("A1xA1", {}, {{1, 2}});
    auto r11 = restricted_data(a11);
    CHECK(ins_set(a11).empty());
    CHECK_NOTHROW(build_params(a11, r11, {{0, Scalar(1)}, {1, Scalar(1)}}, {}));
    try {
        build_params(a11, r11, {{0, Scalar(1)}, {1, Scalar(2)}}, {});
        CHECK(false);
    } catch (const ParamError& e) {
        CHECK(e.equation == "ParameterSetC");
    }
    try {
        build_params(a11, r11, {{0, Scalar(1)}, {1, Scalar(1)}}, {{0, Scalar(1)}});
        CHECK(false);
    } catch (const ParamError& e) {
        CHECK(e.equation == "Ins");
    }

    // AIV with n = 2: the definitions give c₂ = q·bar(c₁) and s(1) = s(2).
    auto a2 = diag("A2", {}, {{1, 2}});
    auto r2 = restricted_data(a2);
    CHECK(ccond_exponent(a2, r2, 0) == 1);
    auto sf2 = default_sfun(a2);
    CHECK(sf2[0] == sf2[1]);
    CHECK_NOTHROW(build_params(a2, r2, {{0, Scalar(1)}, {1, Scalar::q_pow(1)}}, {}));
    // With n = 3 they give c₃ = q²·bar(c₁) and s(1) = −s(3).
    auto a3 = diag("A3", {2}, {{1, 3}});
    auto r3 = restricted_data(a3);
    CHECK(ccond_exponent(a3, r3, 0) == 2);
    CHECK(ccond_exponent(a3, r3, 2) == 2);
    auto sf3 = default_sfun(a3);
    CHECK(sf3[0] == -sf3[2]);
    CHECK_NOTHROW(build_params(a3, r3, {{0, Scalar::q_pow(-1)}, {2, Scalar::q_pow(3)}}, {}));
}

TEST_CASE("diagram spec json") {
    auto spec = parse_diagram_spec(R"({"type":"A","rank":5,"X":[1,3,5],"tau":{},"c":{"2":"q^-1","4":"q^-1"}})");
    CHECK(spec.diagram.X == std::vector<int>{0, 2, 4});
    CHECK(spec.c.at(1) == Scalar::q_pow(-1));
    auto again = parse_diagram_spec(diagram_spec_json(spec));
    CHECK(again.diagram.X == spec.diagram.X);
    CHECK(again.diagram.tau == spec.diagram.tau);
    CHECK(again.c == spec.c);
    auto prod = parse_diagram_spec(R"({"type":"A1xA1","tau":{"1":2,"2":1}})");
    CHECK(prod.diagram.tau == std::vector<int>{1, 0});
    CHECK_THROWS_AS(parse_diagram_spec("{"), SpecParseError);
    CHECK_THROWS_AS(parse_diagram_spec(R"({"type":"A","rank":2,"X":[3]})"), SpecParseError);
}

TEST_CASE("length additivity over restricted words") {
    for (const char* name : {"AI2", "AII5", "AIII3", "CI2", "G", "AIII5"}) {
        INFO(name);
        RestrictedData r = restricted_data(catalogue_spec(name).diagram);
        CheckReport rep = length_additivity_check(r, 3);
        INFO(rep.str());
        CHECK(rep.pass);
    }
}
