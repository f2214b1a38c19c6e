#include "dmf/specialize.hpp"

namespace dmf {

namespace {

using Elt = ExtField::Elt;

Elt reduce(std::vector<int> a, const std::vector<std::uint8_t>& mod, int p) {
    const int n = int(mod.size()) - 1;
    for (int i = int(a.size()) - 1; i >= n; --i) {
        int c = ((a[i] % p) + p) % p;
        a[i] = 0;
        if (c)
            for (int k = 0; k < n; ++k) a[i - n + k] -= c * int(mod[k]);
    }
    Elt out(size_t(n), 0);
    for (int i = 0; i < n && i < int(a.size()); ++i)
        out[size_t(i)] = std::uint8_t(((a[i] % p) + p) % p);
    return out;
}

bool ppoly_divides(const std::vector<std::uint8_t>& b, std::vector<int> a, int p) {
    const int db = int(b.size()) - 1;
    int lead = b.back() % p;
    int li = 1;
    while ((lead * li) % p != 1) ++li;
    for (int i = int(a.size()) - 1; i >= db; --i) {
        int c = ((a[i] % p) + p) % p;
        c = (c * li) % p;
        if (!c) continue;
        for (int k = 0; k <= db; ++k) a[i - db + k] -= c * int(b[k]);
        a[i] = 0;
    }
    for (int i = 0; i < db; ++i)
        if (((a[i] % p) + p) % p) return false;
    return true;
}

bool irreducible(const std::vector<std::uint8_t>& m, int p) {
    const int n = int(m.size()) - 1;
    for (int d = 1; 2 * d <= n; ++d) {
        long long count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (long long idx = 0; idx < count; ++idx) {
            std::vector<std::uint8_t> b(size_t(d) + 1, 0);
            long long v = idx;
            for (int i = 0; i < d; ++i) { b[size_t(i)] = std::uint8_t(v % p); v /= p; }
            b[size_t(d)] = 1;
            std::vector<int> a(m.begin(), m.end());
            if (ppoly_divides(b, a, p)) return false;
        }
    }
    return true;
}

std::vector<std::uint8_t> least_irreducible(int p, int n) {
    if (n == 1) return {0, 1};
    std::vector<int> c(size_t(n), 0);
    for (;;) {
        std::vector<std::uint8_t> m(size_t(n) + 1, 0);
        for (int i = 0; i < n; ++i) m[size_t(i)] = std::uint8_t(c[size_t(i)]);
        m[size_t(n)] = 1;
        if (irreducible(m, p)) return m;
        int i = n - 1;
        while (i >= 0 && c[size_t(i)] == p - 1) { c[size_t(i)] = 0; --i; }
        if (i < 0) throw std::logic_error("no irreducible modulus found");
        ++c[size_t(i)];
    }
}

}  // namespace

ExtField::ExtField(const FieldSpec& base, int m)
    : p_(base.p()), n_(base.e() * m), base_(base) {
    if (m < 1 || m > 4) throw std::invalid_argument("extension degree m must be in 1..4");
    modulus_ = least_irreducible(p_, n_);
    if (base.e() == 1) {
        root_ = zero();  // embedding is the constant one
        return;
    }
    // find a root of the base modulus among the p^n elements
    long long total = 1;
    for (int i = 0; i < n_; ++i) total *= p_;
    const auto& bm = base.modulus();
    for (long long v = 0; v < total; ++v) {
        Elt x(size_t(n_), 0);
        long long w = v;
        for (int i = 0; i < n_; ++i) { x[size_t(i)] = std::uint8_t(w % p_); w /= p_; }
        // evaluate base modulus at x
        Elt acc = zero();
        for (int i = int(bm.size()) - 1; i >= 0; --i) {
            acc = mul(acc, x);
            acc[0] = std::uint8_t((acc[0] + bm[size_t(i)]) % p_);
        }
        if (is_zero(acc)) { root_ = x; return; }
    }
    throw std::logic_error("embedding root not found");
}

ExtField::Elt ExtField::one() const {
    Elt x = zero();
    x[0] = 1;
    return x;
}

bool ExtField::is_zero(const Elt& a) const {
    for (auto v : a)
        if (v) return false;
    return true;
}

Elt ExtField::add(const Elt& a, const Elt& b) const {
    Elt out(size_t(n_), 0);
    for (int i = 0; i < n_; ++i) out[size_t(i)] = std::uint8_t((a[size_t(i)] + b[size_t(i)]) % p_);
    return out;
}

Elt ExtField::sub(const Elt& a, const Elt& b) const {
    Elt out(size_t(n_), 0);
    for (int i = 0; i < n_; ++i)
        out[size_t(i)] = std::uint8_t((a[size_t(i)] + p_ - b[size_t(i)]) % p_);
    return out;
}

Elt ExtField::neg(const Elt& a) const { return sub(zero(), a); }

Elt ExtField::mul(const Elt& a, const Elt& b) const {
    std::vector<int> out(size_t(2 * n_ - 1), 0);
    for (int i = 0; i < n_; ++i) {
        if (!a[size_t(i)]) continue;
        for (int j = 0; j < n_; ++j)
            out[size_t(i + j)] += int(a[size_t(i)]) * int(b[size_t(j)]);
    }
    return reduce(std::move(out), modulus_, p_);
}

Elt ExtField::pow(Elt a, long long e) const {
    long long ord = 1;
    for (int i = 0; i < n_; ++i) ord *= p_;
    ord -= 1;
    if (e < 0) e = ord + e % ord;
    Elt r = one();
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

Elt ExtField::inv(const Elt& a) const {
    if (is_zero(a)) throw bad_specialization("inverse of zero in extension field");
    long long ord = 1;
    for (int i = 0; i < n_; ++i) ord *= p_;
    return pow(a, ord - 2);
}

Elt ExtField::embed(Fq a) const {
    // decode digits of a over F_p and evaluate at the embedding root
    Elt acc = zero();
    std::vector<int> digits;
    int v = a;
    for (int i = 0; i < base_.e(); ++i) { digits.push_back(v % p_); v /= p_; }
    for (int i = int(digits.size()) - 1; i >= 0; --i) {
        acc = mul(acc, root_);
        acc[0] = std::uint8_t((acc[0] + digits[size_t(i)]) % p_);
    }
    return acc;
}

Elt ExtField::random(std::mt19937_64& rng) const {
    Elt x(size_t(n_), 0);
    for (int i = 0; i < n_; ++i) x[size_t(i)] = std::uint8_t(rng() % std::uint64_t(p_));
    return x;
}

SpecializationPoint random_point(const RingSpec& spec, const ExtField& K,
                                 std::mt19937_64& rng) {
    SpecializationPoint pt;
    pt.K = &K;
    pt.T = K.random(rng);
    for (int i = 0; i < spec.ngens(); ++i) pt.g.push_back(K.random(rng));
    do {
        pt.delta = K.random(rng);
    } while (K.is_zero(pt.delta));
    return pt;
}

namespace {

Elt eval_poly(const ExtField& K, const Poly& p, const Elt& x) {
    Elt acc = K.zero();
    for (int i = p.deg(); i >= 0; --i) {
        acc = K.mul(acc, x);
        acc = K.add(acc, K.embed(p.c[size_t(i)]));
    }
    return acc;
}

}  // namespace

ExtField::Elt specialize(const CoefficientElement& x, const SpecializationPoint& pt) {
    const ExtField& K = *pt.K;
    if (K.is_zero(pt.delta)) throw bad_specialization("Delta' specialized to zero");
    Elt total = K.zero();
    for (const auto& [m, c] : x.terms()) {
        Elt den = eval_poly(K, c.den, pt.T);
        if (K.is_zero(den))
            throw bad_specialization("denominator vanishes at the chosen T");
        Elt v = K.mul(eval_poly(K, c.num, pt.T), K.inv(den));
        for (size_t i = 0; i < m.gexp.size(); ++i)
            if (m.gexp[i]) v = K.mul(v, K.pow(pt.g[i], m.gexp[i]));
        if (m.dexp) v = K.mul(v, K.pow(pt.delta, m.dexp));
        total = K.add(total, v);
    }
    return total;
}

}  // namespace dmf
