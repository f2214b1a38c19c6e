#include "dmf/gfq.hpp"

#include <stdexcept>
#include <string>

namespace dmf {

namespace {

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// dense F_p[x] helpers on ascending coefficient vectors
using PPoly = std::vector<std::uint8_t>;

PPoly ppoly_mod(PPoly a, const PPoly& m, int p) {
    const int dm = int(m.size()) - 1;
    for (int i = int(a.size()) - 1; i >= dm; --i) {
        int c = a[i];
        if (c == 0) continue;
        a[i] = 0;
        for (int k = 0; k < dm; ++k) {
            int v = int(a[i - dm + k]) - c * int(m[k]);
            a[i - dm + k] = std::uint8_t(((v % p) + p) % p);
        }
    }
    a.resize(dm);
    return a;
}

PPoly ppoly_mulmod(const PPoly& a, const PPoly& b, const PPoly& m, int p) {
    PPoly out(a.size() + b.size(), 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j)
            out[i + j] = std::uint8_t((out[i + j] + int(a[i]) * int(b[j])) % p);
    }
    return ppoly_mod(std::move(out), m, p);
}

// divisibility of a by b over F_p, both with nonzero leading coefficient
bool ppoly_divides(const PPoly& b, PPoly a, int p) {
    const int db = int(b.size()) - 1;
    // make b monic
    int lead = b.back();
    int li = 1;
    while ((lead * li) % p != 1) ++li;
    for (int i = int(a.size()) - 1; i >= db; --i) {
        int c = (int(a[i]) * li) % p;
        if (c == 0) continue;
        for (int k = 0; k <= db; ++k) {
            int v = int(a[i - db + k]) - c * int(b[k]);
            a[i - db + k] = std::uint8_t(((v % p) + p) % p);
        }
    }
    for (int i = 0; i < db; ++i)
        if (a[i]) return false;
    return true;
}

bool irreducible(const PPoly& m, int p) {
    const int e = int(m.size()) - 1;
    // trial division by every monic of degree 1 .. e-1
    for (int d = 1; d < e; ++d) {
        long long count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (long long idx = 0; idx < count; ++idx) {
            PPoly b(d + 1, 0);
            long long v = idx;
            for (int i = 0; i < d; ++i) { b[i] = std::uint8_t(v % p); v /= p; }
            b[d] = 1;
            if (ppoly_divides(b, m, p)) return false;
        }
    }
    return true;
}

PPoly least_irreducible(int p, int e) {
    if (e == 1) return PPoly{0, 1};  // T
    // lexicographic scan on (c_0, ..., c_{e-1}), c_0 most significant
    std::vector<int> c(e, 0);
    for (;;) {
        PPoly m(e + 1, 0);
        for (int i = 0; i < e; ++i) m[i] = std::uint8_t(c[i]);
        m[e] = 1;
        if (irreducible(m, p)) return m;
        int i = e - 1;
        while (i >= 0 && c[i] == p - 1) { c[i] = 0; --i; }
        if (i < 0) throw std::logic_error("no irreducible polynomial found");
        ++c[i];
    }
}

PPoly decode(int v, int p, int e) {
    PPoly d(e, 0);
    for (int i = 0; i < e; ++i) { d[i] = std::uint8_t(v % p); v /= p; }
    return d;
}

int encode(const PPoly& d, int p) {
    int v = 0;
    for (int i = int(d.size()) - 1; i >= 0; --i) v = v * p + d[i];
    return v;
}

}  // namespace

FieldSpec::FieldSpec(int p, int e) : p_(p), e_(e) {
    if (!is_prime(p)) throw std::invalid_argument("field_new: p = " + std::to_string(p) + " is not prime");
    if (e < 1) throw std::invalid_argument("field_new: extension degree must be >= 1");
    long long q = 1;
    for (int i = 0; i < e; ++i) q *= p;
    if (q > 16) throw std::invalid_argument("field_new: q = p^e exceeds the supported range (q <= 16)");
    q_ = int(q);
    modulus_ = least_irreducible(p, e);

    for (int a = 0; a < q_; ++a) {
        PPoly da = decode(a, p, e);
        PPoly na(e, 0);
        for (int i = 0; i < e; ++i) na[i] = std::uint8_t((p - da[i]) % p);
        neg_[a] = std::uint8_t(encode(na, p));
        for (int b = 0; b < q_; ++b) {
            PPoly db = decode(b, p, e);
            PPoly s(e, 0);
            for (int i = 0; i < e; ++i) s[i] = std::uint8_t((da[i] + db[i]) % p);
            add_[a * q_ + b] = std::uint8_t(encode(s, p));
            mul_[a * q_ + b] = std::uint8_t(encode(ppoly_mulmod(da, db, modulus_, p), p));
        }
    }
    inv_[0] = 0;
    for (int a = 1; a < q_; ++a)
        for (int b = 1; b < q_; ++b)
            if (mul_[a * q_ + b] == 1) { inv_[a] = std::uint8_t(b); break; }
}

Fq FieldSpec::element(int value) const {
    if (value < 0 || value >= q_)
        throw std::invalid_argument("element encoding out of range [0, q)");
    return Fq(value);
}

Fq FieldSpec::inv(Fq a) const {
    if (a == 0) throw std::domain_error("division by zero in F_q");
    return inv_[a];
}

Fq FieldSpec::pow(Fq a, long long n) const {
    if (n < 0) {
        a = inv(a);
        n = -n;
    }
    Fq r = 1, b = a;
    while (n) {
        if (n & 1) r = mul(r, b);
        b = mul(b, b);
        n >>= 1;
    }
    return r;
}

Fq FieldSpec::frobenius(Fq a, int j) const {
    Fq r = a;
    for (int i = 0; i < j; ++i) r = pow(r, q_);
    return r;
}

void require_same_field(const FieldSpec& a, const FieldSpec& b) {
    if (a != b) throw std::invalid_argument("incompatible fields");
}

}  // namespace dmf
