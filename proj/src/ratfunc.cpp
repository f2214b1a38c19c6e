#include "dmf/ratfunc.hpp"

#include <stdexcept>

namespace dmf {

void poly_normalize(Poly& a) {
    while (!a.c.empty() && a.c.back() == 0) a.c.pop_back();
}

Poly poly_add(const FieldSpec& F, const Poly& a, const Poly& b) {
    Poly out;
    out.c.resize(std::max(a.c.size(), b.c.size()), 0);
    for (size_t i = 0; i < out.c.size(); ++i) {
        Fq x = i < a.c.size() ? a.c[i] : Fq(0);
        Fq y = i < b.c.size() ? b.c[i] : Fq(0);
        out.c[i] = F.add(x, y);
    }
    poly_normalize(out);
    return out;
}

Poly poly_neg(const FieldSpec& F, const Poly& a) {
    Poly out = a;
    for (auto& x : out.c) x = F.neg(x);
    return out;
}

Poly poly_sub(const FieldSpec& F, const Poly& a, const Poly& b) {
    return poly_add(F, a, poly_neg(F, b));
}

Poly poly_mul(const FieldSpec& F, const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly::zero();
    Poly out;
    out.c.assign(a.c.size() + b.c.size() - 1, 0);
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (!a.c[i]) continue;
        for (size_t j = 0; j < b.c.size(); ++j)
            if (b.c[j]) out.c[i + j] = F.add(out.c[i + j], F.mul(a.c[i], b.c[j]));
    }
    poly_normalize(out);
    return out;
}

Poly poly_scale(const FieldSpec& F, Fq c, const Poly& a) {
    if (!c) return Poly::zero();
    Poly out = a;
    for (auto& x : out.c) x = F.mul(c, x);
    poly_normalize(out);
    return out;
}

std::pair<Poly, Poly> poly_divmod(const FieldSpec& F, const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    Poly rem = a;
    if (a.deg() < b.deg()) return {Poly::zero(), rem};
    Poly quot;
    quot.c.assign(a.deg() - b.deg() + 1, 0);
    Fq li = F.inv(b.lead());
    for (int i = rem.deg(); i >= b.deg(); --i) {
        if (size_t(i) >= rem.c.size() || !rem.c[i]) continue;
        Fq q = F.mul(rem.c[i], li);
        quot.c[i - b.deg()] = q;
        for (int k = 0; k <= b.deg(); ++k)
            rem.c[i - b.deg() + k] = F.sub(rem.c[i - b.deg() + k], F.mul(q, b.c[k]));
    }
    poly_normalize(quot);
    poly_normalize(rem);
    return {quot, rem};
}

Poly poly_gcd(const FieldSpec& F, Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = poly_divmod(F, a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.is_zero() && a.lead() != 1) a = poly_scale(F, F.inv(a.lead()), a);
    return a;
}

Fq poly_eval(const FieldSpec& F, const Poly& a, Fq x) {
    Fq v = 0;
    for (int i = a.deg(); i >= 0; --i) v = F.add(F.mul(v, x), a.c[i]);
    return v;
}

std::vector<Poly> monic_enumerate(const FieldSpec& F, int d) {
    if (d < 0) throw std::domain_error("monic_enumerate: negative degree");
    long long count = 1;
    for (int i = 0; i < d; ++i) count *= F.q();
    std::vector<Poly> out;
    out.reserve(size_t(count));
    for (long long idx = 0; idx < count; ++idx) {
        Poly a;
        a.c.assign(size_t(d) + 1, 0);
        long long v = idx;
        for (int i = 0; i < d; ++i) { a.c[i] = Fq(v % F.q()); v /= F.q(); }
        a.c[d] = 1;
        out.push_back(std::move(a));
    }
    return out;
}

Poly bracket(const FieldSpec& F, int k) {
    if (k < 1) throw std::domain_error("bracket [k] requires k >= 1");
    long long e = 1;
    for (int i = 0; i < k; ++i) e *= F.q();
    Poly out;
    out.c.assign(size_t(e) + 1, 0);
    out.c[1] = F.neg(1);
    out.c[size_t(e)] = 1;
    return out;
}

Poly poly_qpower(const FieldSpec& F, const Poly& a, int j) {
    if (j == 0 || a.is_zero()) return a;
    long long Q = 1;
    for (int i = 0; i < j; ++i) Q *= F.q();
    Poly out;
    out.c.assign(size_t(a.deg()) * Q + 1, 0);
    for (size_t i = 0; i < a.c.size(); ++i)
        if (a.c[i]) out.c[i * Q] = a.c[i];  // coefficients are Frobenius-fixed
    return out;
}

Rat rat_make(const FieldSpec& F, Poly num, Poly den) {
    if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
    if (num.is_zero()) return Rat::zero();
    Poly g = poly_gcd(F, num, den);
    if (g.deg() > 0) {
        num = poly_divmod(F, num, g).first;
        den = poly_divmod(F, den, g).first;
    }
    if (den.lead() != 1) {
        Fq li = F.inv(den.lead());
        num = poly_scale(F, li, num);
        den = poly_scale(F, li, den);
    }
    return Rat{std::move(num), std::move(den)};
}

Rat rat_add(const FieldSpec& F, const Rat& a, const Rat& b) {
    Poly num = poly_add(F, poly_mul(F, a.num, b.den), poly_mul(F, b.num, a.den));
    return rat_make(F, std::move(num), poly_mul(F, a.den, b.den));
}

Rat rat_neg(const FieldSpec& F, const Rat& a) {
    return Rat{poly_neg(F, a.num), a.den};
}

Rat rat_sub(const FieldSpec& F, const Rat& a, const Rat& b) {
    return rat_add(F, a, rat_neg(F, b));
}

Rat rat_mul(const FieldSpec& F, const Rat& a, const Rat& b) {
    if (a.is_zero() || b.is_zero()) return Rat::zero();
    // fast path: polynomial * polynomial needs no gcd
    if (a.den.deg() == 0 && b.den.deg() == 0)
        return Rat{poly_mul(F, a.num, b.num), Poly::one()};
    return rat_make(F, poly_mul(F, a.num, b.num), poly_mul(F, a.den, b.den));
}

Rat rat_inv(const FieldSpec& F, const Rat& a) {
    if (a.is_zero()) throw std::domain_error("division by zero rational function");
    return rat_make(F, a.den, a.num);
}

Rat rat_qpower(const FieldSpec& F, const Rat& a, int j) {
    // gcd and monicity survive the substitution T -> T^{q^j}
    return Rat{poly_qpower(F, a.num, j), poly_qpower(F, a.den, j)};
}

}  // namespace dmf
