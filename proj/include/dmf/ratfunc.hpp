#pragma once

#include <utility>
#include <vector>

#include "dmf/gfq.hpp"

namespace dmf {

/// Univariate polynomial in T over F_q.  Coefficients ascending, index i is
/// the T^i coefficient; canonical form strips trailing zeros (zero = empty).
struct Poly {
    std::vector<Fq> c;

    bool is_zero() const { return c.empty(); }
    int deg() const { return int(c.size()) - 1; }  // -1 for zero
    Fq lead() const { return c.empty() ? Fq(0) : c.back(); }

    bool operator==(const Poly& o) const { return c == o.c; }

    static Poly zero() { return {}; }
    static Poly one() { return Poly{{Fq(1)}}; }
    static Poly T() { return Poly{{Fq(0), Fq(1)}}; }
    static Poly constant(Fq a) { return a ? Poly{{a}} : Poly{}; }
};

void poly_normalize(Poly& a);

Poly poly_add(const FieldSpec& F, const Poly& a, const Poly& b);
Poly poly_sub(const FieldSpec& F, const Poly& a, const Poly& b);
Poly poly_neg(const FieldSpec& F, const Poly& a);
Poly poly_mul(const FieldSpec& F, const Poly& a, const Poly& b);
Poly poly_scale(const FieldSpec& F, Fq c, const Poly& a);

/// quotient and remainder; throws std::domain_error when b = 0
std::pair<Poly, Poly> poly_divmod(const FieldSpec& F, const Poly& a, const Poly& b);

/// monic gcd (gcd(0,0) = 0)
Poly poly_gcd(const FieldSpec& F, Poly a, Poly b);

Fq poly_eval(const FieldSpec& F, const Poly& a, Fq x);

/// all q^d monic polynomials of degree d, ordered by the integer-encoded
/// coefficient tuple (c_0, ..., c_{d-1}), ascending
std::vector<Poly> monic_enumerate(const FieldSpec& F, int d);

/// [k] = T^{q^k} - T; requires k >= 1
Poly bracket(const FieldSpec& F, int k);

/// f(T)^{q^j}, computed as the substitution T -> T^{q^j}
Poly poly_qpower(const FieldSpec& F, const Poly& a, int j);

/// Reduced rational function: den monic and nonzero, gcd(num, den) = 1,
/// zero is 0/1.  Construct through rat_make so the invariants hold.
struct Rat {
    Poly num;
    Poly den = Poly::one();

    bool is_zero() const { return num.is_zero(); }
    bool operator==(const Rat& o) const { return num == o.num && den == o.den; }

    static Rat zero() { return {}; }
    static Rat one() { return Rat{Poly::one(), Poly::one()}; }
    static Rat constant(Fq a) { return Rat{Poly::constant(a), Poly::one()}; }
    static Rat from_poly(Poly p) { return Rat{std::move(p), Poly::one()}; }
};

Rat rat_make(const FieldSpec& F, Poly num, Poly den);
Rat rat_add(const FieldSpec& F, const Rat& a, const Rat& b);
Rat rat_sub(const FieldSpec& F, const Rat& a, const Rat& b);
Rat rat_neg(const FieldSpec& F, const Rat& a);
Rat rat_mul(const FieldSpec& F, const Rat& a, const Rat& b);
Rat rat_inv(const FieldSpec& F, const Rat& a);  // throws on 0
Rat rat_qpower(const FieldSpec& F, const Rat& a, int j);

}  // namespace dmf
