#include "doctest.h"

#include "qsp/weyl.hpp"

using namespace qsp;

TEST_CASE("root systems") {
    CHECK(RootDatum::make('A', 3).positive_roots().size() == 6);
    CHECK(RootDatum::make('B', 3).positive_roots().size() == 9);
    CHECK(RootDatum::make('C', 4).positive_roots().size() == 16);
    CHECK(RootDatum::make('D', 5).positive_roots().size() == 20);
    CHECK(RootDatum::make('E', 6).positive_roots().size() == 36);
    CHECK(RootDatum::make('E', 7).positive_roots().size() == 63);
    CHECK(RootDatum::make('E', 8).positive_roots().size() == 120);
    CHECK(RootDatum::make('F', 4).positive_roots().size() == 24);
    CHECK(RootDatum::make('G', 2).positive_roots().size() == 6);
    auto b2 = RootDatum::make('B', 2);
    // a_ij = 2(α_i,α_j)/(α_j,α_j)
    CHECK(b2.cartan(0, 1) == -2);
    CHECK(b2.cartan(1, 0) == -1);
    CHECK(b2.d(0) == 2);
    CHECK(b2.d(1) == 1);
    auto g2 = RootDatum::make('G', 2);
    CHECK(g2.cartan(0, 1) == -1);
    CHECK(g2.cartan(1, 0) == -3);
}

TEST_CASE("weyl group") {
    auto a2 = RootDatum::make('A', 2);
    CHECK(a2.reflect(0, IVec{0, 1}) == IVec{1, 1});
    auto a3 = RootDatum::make('A', 3);
    WeylElem w0 = longest_element(a3, {0, 1, 2});
    CHECK(w0.length() == 6);
    CHECK(w0.act(IVec{1, 0, 0}) == IVec{0, 0, -1});
    CHECK(tau0(a3) == std::vector<int>{2, 1, 0});
    CHECK(tau0(RootDatum::make('B', 2)) == std::vector<int>{0, 1});
    CHECK(tau0(RootDatum::make('D', 5)) == std::vector<int>{0, 1, 2, 4, 3});
    CHECK(tau0(RootDatum::make('E', 6)) == std::vector<int>{5, 1, 4, 3, 2, 0});
    for (char t : {'A', 'B', 'C', 'D', 'E', 'F', 'G'}) {
        int n = t == 'E' ? 6 : (t == 'F' ? 4 : (t == 'G' ? 2 : 4));
        auto rd = RootDatum::make(t, n);
        std::vector<int> all;
        for (int i = 0; i < n; ++i) all.push_back(i);
        WeylElem w = longest_element(rd, all);
        CHECK(static_cast<std::size_t>(w.length()) == rd.positive_roots().size());
        Word r = w.reduced_word();
        CHECK(WeylElem::from_word(rd, r) == w);
        CHECK(static_cast<int>(r.size()) == w.length());
        CHECK((w * w.inverse()).is_identity());
    }
    CHECK(all_reduced_words(longest_element(a2, {0, 1})).size() == 2);
    CHECK(all_reduced_words(longest_element(a3, {0, 1, 2})).size() == 16);
}

TEST_CASE("rho check") {
    auto a2 = RootDatum::make('A', 2);
    auto r = rho_data(a2, {1});
    CHECK(r.alpha_on_rho_check[0] == Rat(-1, 2));
    CHECK(r.alpha_on_rho_check[1] == Rat(1));
    auto b2 = RootDatum::make('B', 2);
    auto rb = rho_data(b2, {0, 1});
    // ρ^∨ pairs to 1 with every simple root
    CHECK(rb.alpha_on_rho_check[0] == Rat(1));
    CHECK(rb.alpha_on_rho_check[1] == Rat(1));
}
