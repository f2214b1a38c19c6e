#include <doctest.h>

#include <random>

#include "dmf/skewring.hpp"
#include "oracles.hpp"

using namespace dmf;

namespace {

RingSpec spec33() { return RingSpec(FieldSpec(3, 1), 3); }

SkewPolynomial rand_skew(const RingSpec& spec, std::mt19937_64& rng, int max_deg) {
    SkewPolynomial f(spec);
    int d = int(rng() % std::uint64_t(max_deg + 1));
    for (int i = 0; i <= d; ++i) {
        if (rng() % 3 == 0) continue;
        CoefficientElement c = CoefficientElement::zero(spec);
        Monomial m{std::vector<std::int32_t>(size_t(spec.ngens())), 0};
        for (auto& e : m.gexp) e = std::int32_t(rng() % 2);
        m.dexp = std::int64_t(rng() % 3) - 1;
        c.add_term(m, Rat::constant(Fq(1 + rng() % std::uint64_t(spec.q() - 1))));
        f.set_coeff(i, c);
    }
    return f;
}

}  // namespace

TEST_CASE("commutation rule and unit") {
    RingSpec spec = spec33();
    auto g1 = CoefficientElement::gen_g(spec, 1);
    auto tau = SkewPolynomial::tau(spec);
    auto c = SkewPolynomial::constant(g1);
    auto prod = skew_mul(tau, c);
    CHECK(prod.deg() == 1);
    CHECK(prod.coeff(1) == g1.frobenius_pow(1));  // tau c = c^q tau

    std::mt19937_64 rng(1);
    auto f = rand_skew(spec, rng, 4);
    auto one = SkewPolynomial::constant(CoefficientElement::one(spec));
    CHECK(skew_mul(f, one) == f);
    CHECK(skew_mul(one, f) == f);
}

TEST_CASE("squaring phi_T matches the expanded commutation product") {
    // q=3, s=2: (T + g tau + D tau^2)^2 expanded by hand
    RingSpec spec = spec33();
    const FieldSpec& F = spec.field();
    auto g = CoefficientElement::gen_g(spec, 1);
    auto D = CoefficientElement::gen_delta(spec);
    auto Tc = [&](int j) {  // T^{q^j} as a ring scalar
        return CoefficientElement::from_poly(spec, poly_qpower(F, Poly::T(), j));
    };
    SkewPolynomial phi(spec);
    phi.set_coeff(0, Tc(0));
    phi.set_coeff(1, g);
    phi.set_coeff(2, D);

    auto sq = skew_mul(phi, phi);
    CHECK(sq.deg() == 4);
    CHECK(sq.coeff(0) == Tc(0) * Tc(0));
    CHECK(sq.coeff(1) == Tc(0) * g + g * Tc(1));
    CHECK(sq.coeff(2) == Tc(0) * D + g * g.frobenius_pow(1) + D * Tc(2));
    CHECK(sq.coeff(3) == g * D.frobenius_pow(1) + D * g.frobenius_pow(2));
    CHECK(sq.coeff(4) == D * D.frobenius_pow(2));  // Delta'^{1+9}

    // independent oracle: honest dense composition
    CHECK(oracles::naive_compose(phi, phi) == sq);
}

TEST_CASE("skew_mul against the dense composition oracle (random)") {
    RingSpec spec = spec33();
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 10; ++trial) {
        auto f = rand_skew(spec, rng, 2);
        auto g = rand_skew(spec, rng, 2);
        CHECK(skew_mul(f, g) == oracles::naive_compose(f, g));
    }
}

TEST_CASE("associativity, distributivity, degree additivity") {
    RingSpec spec = spec33();
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        auto a = rand_skew(spec, rng, 3);
        auto b = rand_skew(spec, rng, 3);
        auto c = rand_skew(spec, rng, 3);
        CHECK(skew_mul(skew_mul(a, b), c) == skew_mul(a, skew_mul(b, c)));
        CHECK(skew_mul(a, b + c) == skew_mul(a, b) + skew_mul(a, c));
        if (!a.is_zero() && !b.is_zero())
            CHECK(skew_mul(a, b).deg() == a.deg() + b.deg());
    }
}

TEST_CASE("formal inverse coefficients") {
    RingSpec spec = spec33();
    auto one = SkewPolynomial::constant(CoefficientElement::one(spec));
    auto inv1 = formal_inverse_coeffs(one, 4);
    REQUIRE(inv1.size() == 5);
    CHECK(inv1[0].is_one());
    for (size_t i = 1; i < inv1.size(); ++i) CHECK(inv1[i].is_zero());

    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 10; ++trial) {
        auto f = rand_skew(spec, rng, 3);
        f.set_coeff(0, CoefficientElement::one(spec));
        const int kmax = 6;
        auto b = formal_inverse_coeffs(f, kmax);

        // left inverse: sum_{i+j=k} a_i b_j^{q^i} = [k = 0]
        for (int k = 0; k <= kmax; ++k) {
            CoefficientElement acc = CoefficientElement::zero(spec);
            for (const auto& [i, a] : f.coeffs())
                if (i <= k) acc += a * b[size_t(k - i)].frobenius_pow(i);
            if (k == 0) CHECK(acc.is_one());
            else CHECK(acc.is_zero());
        }
        // right inverse: sum_{i+j=k} b_i a_j^{q^i} = [k = 0]
        for (int k = 0; k <= kmax; ++k) {
            CoefficientElement acc = CoefficientElement::zero(spec);
            for (int i = 0; i <= k; ++i)
                acc += b[size_t(i)] * f.coeff(k - i).frobenius_pow(i);
            if (k == 0) CHECK(acc.is_one());
            else CHECK(acc.is_zero());
        }

        // involution up to the requested bound
        SkewPolynomial binv(spec);
        for (int i = 0; i <= kmax; ++i) binv.set_coeff(i, b[size_t(i)]);
        auto back = formal_inverse_coeffs(binv, kmax);
        for (int i = 0; i <= kmax; ++i) CHECK(back[size_t(i)] == f.coeff(i));
    }

    auto bad = SkewPolynomial::tau(spec);
    CHECK_THROWS_AS(formal_inverse_coeffs(bad, 2), std::domain_error);
}
