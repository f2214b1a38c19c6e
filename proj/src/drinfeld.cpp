#include "dmf/drinfeld.hpp"

#include <stdexcept>

namespace dmf {

TruncatedSeries ReciprocalPolynomial::as_series(const RingSpec& spec, long long prec) const {
    TruncatedSeries f(spec, prec);
    for (const auto& [n, c] : coeffs) {
        if (n < prec) f.add_coeff(n, c);
    }
    return f;
}

GenericModule::GenericModule(RingSpec spec) : spec_(std::move(spec)), phi_T_(spec_) {
    phi_T_.set_coeff(0, CoefficientElement::from_poly(spec_, Poly::T()));
    for (int i = 1; i <= spec_.s() - 1; ++i)
        phi_T_.set_coeff(i, CoefficientElement::gen_g(spec_, i));
    phi_T_.set_coeff(spec_.s(), CoefficientElement::gen_delta(spec_));
}

SkewPolynomial GenericModule::phi_a(const Poly& a) const {
    if (a.is_zero()) throw std::domain_error("phi_a requires a != 0");
    SkewPolynomial out(spec_);
    for (int i = a.deg(); i >= 0; --i) {
        out = skew_mul(phi_T_, out);
        if (a.c[size_t(i)])
            out.add_coeff(0, CoefficientElement::from_rat(
                                 spec_, Rat::constant(a.c[size_t(i)])));
    }
    return out;
}

CoefficientElement GenericModule::delta_d(int d) const {
    if (d < 0) throw std::domain_error("delta_d requires d >= 0");
    long long qs = spec_.qpow(spec_.s());
    long long qsd = 1;
    for (int i = 0; i < d; ++i) qsd *= qs;
    long long e = (qsd - 1) / (qs - 1);
    return CoefficientElement::gen_delta(spec_, e);
}

ReciprocalPolynomial GenericModule::s_a(const Poly& a) const {
    if (a.is_zero()) throw std::domain_error("s_a requires a != 0");
    ReciprocalPolynomial out;
    out.a = a;
    out.d = a.deg();
    // Delta'_a = sgn(a) * Delta'_{(d)}
    CoefficientElement da = delta_d(out.d).scale(Rat::constant(a.lead()));
    CoefficientElement dai = da.invert_unit();
    SkewPolynomial ph = phi_a(a);
    long long top = spec_.qpow((long long)spec_.s() * out.d);
    for (const auto& [i, c] : ph.coeffs())
        out.coeffs.emplace(top - spec_.qpow(i), c * dai);
    return out;
}

TruncatedSeries GenericModule::t_a_series(const Poly& a, long long M) const {
    if (a.is_zero()) throw std::domain_error("t_a requires a != 0");
    if (M < 1) throw std::domain_error("t_a requires M >= 1");
    int d = a.deg();
    long long e = spec_.qpow((long long)spec_.s() * d);
    if (e >= M) return TruncatedSeries::zero(spec_, M);
    CoefficientElement dai =
        delta_d(d).scale(Rat::constant(a.lead())).invert_unit();
    TruncatedSeries inv = s_a(a).as_series(spec_, M - e).invert();
    return inv.shift_up(e).scale(dai);
}

TruncatedSeries GenericModule::t_a_qpow_minus_one(const Poly& a, int m, long long M) const {
    if (a.is_zero()) throw std::domain_error("t_a requires a != 0");
    if (m == 0) return TruncatedSeries::constant(CoefficientElement::one(spec_), M);
    int d = a.deg();
    long long qm = spec_.qpow(m);
    long long e = spec_.qpow((long long)spec_.s() * d);
    long long shift = e * (qm - 1);
    if (shift >= M) return TruncatedSeries::zero(spec_, M);
    long long inner = M - shift;
    // S_a^{1-q^m} = S_a * (S_a^{-1})^{q^m}
    ReciprocalPolynomial sa = s_a(a);
    TruncatedSeries inv = sa.as_series(spec_, (inner + qm - 1) / qm).invert();
    TruncatedSeries part = sa.as_series(spec_, inner) * inv.frobenius_pow(m);
    CoefficientElement da = delta_d(d).scale(Rat::constant(a.lead()));
    CoefficientElement c = da.frobenius_pow(m).invert_unit() * da;  // Delta'_a^{1-q^m}
    return part.shift_up(shift).scale(c);
}

std::vector<CoefficientElement> GenericModule::betas(int k_max) const {
    if (k_max < 0) throw std::domain_error("betas requires k_max >= 0");
    std::lock_guard<std::mutex> lock(mutex_);
    if (beta_cache_.empty()) beta_cache_.push_back(CoefficientElement::one(spec_));
    const FieldSpec& F = spec_.field();
    for (int k = int(beta_cache_.size()); k <= k_max; ++k) {
        CoefficientElement acc = CoefficientElement::zero(spec_);
        for (int i = 0; i < k; ++i)
            acc += beta_cache_[size_t(i)] * g_prime(k - i).frobenius_pow(i);
        Rat inv_br = rat_inv(F, Rat::from_poly(bracket(F, k)));
        beta_cache_.push_back((-acc).scale(inv_br));
    }
    return std::vector<CoefficientElement>(beta_cache_.begin(),
                                           beta_cache_.begin() + k_max + 1);
}

CoefficientElement GenericModule::eisenstein_prime(int k) const {
    if (k == 0) return -CoefficientElement::one(spec_);
    return -betas(k)[size_t(k)];
}

CoefficientElement GenericModule::g_prime(int i) const {
    if (i < 0) throw std::domain_error("g_prime index must be >= 0");
    if (i == 0) return CoefficientElement::from_poly(spec_, Poly::T());
    if (i < spec_.s()) return CoefficientElement::gen_g(spec_, i);
    if (i == spec_.s()) return CoefficientElement::gen_delta(spec_);
    return CoefficientElement::zero(spec_);
}

}  // namespace dmf
