#include "dmf/coeffring.hpp"

#include <stdexcept>

namespace dmf {

RingSpec::RingSpec(FieldSpec field, int r) {
    if (r < 3) throw std::invalid_argument("rank must be >= 3");
    data_ = std::make_shared<const Data>(Data{std::move(field), r});
}

long long RingSpec::qpow(long long j) const {
    if (j < 0) throw std::domain_error("negative q-power exponent");
    long long v = 1;
    for (long long i = 0; i < j; ++i) {
        if (v > (1LL << 56)) throw std::overflow_error("q^j overflows the exponent range");
        v *= q();
    }
    return v;
}

void require_same_spec(const RingSpec& a, const RingSpec& b) {
    if (a != b) throw std::invalid_argument("coefficient ring spec mismatch");
}

CoefficientElement CoefficientElement::one(const RingSpec& spec) {
    return from_rat(spec, Rat::one());
}

CoefficientElement CoefficientElement::from_rat(const RingSpec& spec, Rat c) {
    CoefficientElement x(spec);
    if (!c.is_zero())
        x.terms_.emplace(Monomial{std::vector<std::int32_t>(spec.ngens(), 0), 0}, std::move(c));
    return x;
}

CoefficientElement CoefficientElement::from_poly(const RingSpec& spec, Poly p) {
    return from_rat(spec, Rat::from_poly(std::move(p)));
}

CoefficientElement CoefficientElement::gen_g(const RingSpec& spec, int i) {
    if (i < 1 || i > spec.s() - 1)
        throw std::invalid_argument("g'_i index out of range 1..s-1");
    Monomial m{std::vector<std::int32_t>(spec.ngens(), 0), 0};
    m.gexp[i - 1] = 1;
    CoefficientElement x(spec);
    x.terms_.emplace(std::move(m), Rat::one());
    return x;
}

CoefficientElement CoefficientElement::gen_delta(const RingSpec& spec, std::int64_t m) {
    Monomial mo{std::vector<std::int32_t>(spec.ngens(), 0), m};
    CoefficientElement x(spec);
    x.terms_.emplace(std::move(mo), Rat::one());
    return x;
}

bool CoefficientElement::is_one() const {
    if (terms_.size() != 1) return false;
    const auto& [m, c] = *terms_.begin();
    if (m.dexp != 0) return false;
    for (auto e : m.gexp)
        if (e) return false;
    return c == Rat::one();
}

void CoefficientElement::add_term(const Monomial& m, const Rat& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second = rat_add(spec_.field(), it->second, c);
        if (it->second.is_zero()) terms_.erase(it);
    }
}

const Rat* CoefficientElement::find(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? nullptr : &it->second;
}

CoefficientElement CoefficientElement::operator+(const CoefficientElement& o) const {
    require_same_spec(spec_, o.spec_);
    CoefficientElement out = *this;
    for (const auto& [m, c] : o.terms_) out.add_term(m, c);
    return out;
}

CoefficientElement& CoefficientElement::operator+=(const CoefficientElement& o) {
    require_same_spec(spec_, o.spec_);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

CoefficientElement CoefficientElement::operator-() const {
    CoefficientElement out = *this;
    for (auto& [m, c] : out.terms_) c = rat_neg(spec_.field(), c);
    return out;
}

CoefficientElement CoefficientElement::operator-(const CoefficientElement& o) const {
    return *this + (-o);
}

CoefficientElement CoefficientElement::operator*(const CoefficientElement& o) const {
    require_same_spec(spec_, o.spec_);
    const FieldSpec& F = spec_.field();
    CoefficientElement out(spec_);
    for (const auto& [m1, c1] : terms_) {
        for (const auto& [m2, c2] : o.terms_) {
            Monomial m = m1;
            m.dexp += m2.dexp;
            for (size_t i = 0; i < m.gexp.size(); ++i) m.gexp[i] += m2.gexp[i];
            out.add_term(m, rat_mul(F, c1, c2));
        }
    }
    return out;
}

CoefficientElement CoefficientElement::scale(const Rat& c) const {
    const FieldSpec& F = spec_.field();
    CoefficientElement out(spec_);
    if (c.is_zero()) return out;
    for (const auto& [m, v] : terms_) out.terms_.emplace(m, rat_mul(F, v, c));
    return out;
}

CoefficientElement CoefficientElement::mul_monomial(const Monomial& mo, const Rat& c) const {
    const FieldSpec& F = spec_.field();
    CoefficientElement out(spec_);
    if (c.is_zero()) return out;
    for (const auto& [m1, v] : terms_) {
        Monomial m = m1;
        m.dexp += mo.dexp;
        for (size_t i = 0; i < m.gexp.size(); ++i) m.gexp[i] += mo.gexp[i];
        out.terms_.emplace(std::move(m), rat_mul(F, v, c));
    }
    return out;
}

CoefficientElement CoefficientElement::frobenius_pow(int j) const {
    if (j < 0) throw std::domain_error("frobenius_pow requires j >= 0");
    if (j == 0) return *this;
    const FieldSpec& F = spec_.field();
    long long Q = spec_.qpow(j);
    CoefficientElement out(spec_);
    for (const auto& [m1, c] : terms_) {
        Monomial m = m1;
        m.dexp *= Q;
        for (auto& e : m.gexp) {
            long long v = (long long)e * Q;
            if (v > INT32_MAX) throw std::overflow_error("monomial exponent overflow");
            e = std::int32_t(v);
        }
        out.terms_.emplace(std::move(m), rat_qpower(F, c, j));
    }
    return out;
}

CoefficientElement CoefficientElement::invert_unit() const {
    if (terms_.size() != 1) throw std::domain_error("not invertible in the coefficient ring");
    const auto& [m, c] = *terms_.begin();
    for (auto e : m.gexp)
        if (e) throw std::domain_error("not invertible in the coefficient ring");
    Monomial mi = m;
    mi.dexp = -mi.dexp;
    CoefficientElement out(spec_);
    out.terms_.emplace(std::move(mi), rat_inv(spec_.field(), c));
    return out;
}

long long CoefficientElement::monomial_weight(const Monomial& m) const {
    long long w = 0;
    long long qp = 1;
    for (size_t i = 0; i < m.gexp.size(); ++i) {
        qp *= spec_.q();  // q^{i+1}
        w += (long long)m.gexp[i] * (qp - 1);
    }
    long long qs = spec_.qpow(spec_.s());
    w += m.dexp * (qs - 1);
    return w;
}

bool CoefficientElement::is_homogeneous(long long w) const {
    for (const auto& [m, c] : terms_)
        if (monomial_weight(m) != w) return false;
    return true;
}

std::optional<long long> CoefficientElement::homogeneous_weight() const {
    std::optional<long long> w;
    for (const auto& [m, c] : terms_) {
        long long mw = monomial_weight(m);
        if (!w) w = mw;
        else if (*w != mw) return std::nullopt;
    }
    return w;
}

}  // namespace dmf
