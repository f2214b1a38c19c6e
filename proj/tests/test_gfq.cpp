#include <doctest.h>

#include "dmf/gfq.hpp"
#include "oracles.hpp"

using namespace dmf;

TEST_CASE("field construction picks the canonical modulus") {
    FieldSpec f3(3, 1);
    CHECK(f3.q() == 3);
    CHECK(f3.modulus() == std::vector<std::uint8_t>{0, 1});  // placeholder T

    FieldSpec f4(2, 2);
    CHECK(f4.q() == 4);
    CHECK(f4.modulus() == std::vector<std::uint8_t>{1, 1, 1});  // x^2+x+1

    CHECK_THROWS_AS(FieldSpec(4, 1), std::invalid_argument);
    CHECK_THROWS_AS(FieldSpec(2, 5), std::invalid_argument);  // q = 32 > 16
    CHECK_THROWS_AS(FieldSpec(1, 1), std::invalid_argument);
}

TEST_CASE("canonical modulus is the lex-least irreducible (brute-force scan)") {
    // independent route: enumerate (c_0, ..., c_{e-1}) in lex order, test by
    // brute factor scan, take the first hit
    for (auto [p, e] : {std::pair{2, 2}, {2, 3}, {2, 4}, {3, 2}}) {
        FieldSpec F(p, e);
        std::vector<int> c(size_t(e), 0);
        std::vector<int> found;
        for (;;) {
            std::vector<int> m(c.begin(), c.end());
            m.push_back(1);
            if (oracles::brute_irreducible(p, m)) { found = m; break; }
            int i = e - 1;
            while (i >= 0 && c[size_t(i)] == p - 1) { c[size_t(i)] = 0; --i; }
            REQUIRE(i >= 0);
            ++c[size_t(i)];
        }
        std::vector<std::uint8_t> got(found.begin(), found.end());
        CHECK(F.modulus() == got);
    }
}

TEST_CASE("arithmetic examples") {
    FieldSpec f3(3, 1);
    CHECK(f3.add(1, 2) == 0);
    FieldSpec f5(5, 1);
    CHECK(f5.inv(2) == 3);
    FieldSpec f4(2, 2);
    // x encodes as 2; x*x = x+1 encodes as 3
    CHECK(f4.mul(2, 2) == 3);
    CHECK_THROWS_AS(f4.inv(0), std::domain_error);
    CHECK_THROWS_AS(f4.element(4), std::invalid_argument);
}

TEST_CASE("exhaustive field axioms for every supported q <= 9") {
    for (auto [p, e] : {std::pair{2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}}) {
        FieldSpec F(p, e);
        int q = F.q();
        for (int a = 0; a < q; ++a) {
            for (int b = 0; b < q; ++b) {
                CHECK(F.add(Fq(a), Fq(b)) == F.add(Fq(b), Fq(a)));
                CHECK(F.mul(Fq(a), Fq(b)) == F.mul(Fq(b), Fq(a)));
                for (int c = 0; c < q; ++c) {
                    CHECK(F.add(F.add(Fq(a), Fq(b)), Fq(c)) ==
                          F.add(Fq(a), F.add(Fq(b), Fq(c))));
                    CHECK(F.mul(F.mul(Fq(a), Fq(b)), Fq(c)) ==
                          F.mul(Fq(a), F.mul(Fq(b), Fq(c))));
                    CHECK(F.mul(Fq(a), F.add(Fq(b), Fq(c))) ==
                          F.add(F.mul(Fq(a), Fq(b)), F.mul(Fq(a), Fq(c))));
                }
            }
            CHECK(F.add(Fq(a), F.neg(Fq(a))) == 0);
            if (a) {
                CHECK(F.mul(Fq(a), F.inv(Fq(a))) == 1);
                CHECK(F.pow(Fq(a), q - 1) == 1);
            }
        }
    }
}

TEST_CASE("frobenius is the identity on F_q") {
    for (auto [p, e] : {std::pair{3, 1}, {2, 2}, {3, 2}, {2, 4}, {13, 1}}) {
        FieldSpec F(p, e);
        for (int a = 0; a < F.q(); ++a) {
            CHECK(F.frobenius(Fq(a), 1) == Fq(a));
            CHECK(F.frobenius(Fq(a), 3) == Fq(a));
        }
    }
}
