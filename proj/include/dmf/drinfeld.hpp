#pragma once

#include <map>
#include <mutex>
#include <vector>

#include "dmf/skewring.hpp"
#include "dmf/tseries.hpp"

namespace dmf {

/// S_a(X): the reversed, Delta'_a-normalized operator polynomial of a monic
/// index a of degree d.  Support lies in {q^{(r-1)d} - q^i} u {0}; the
/// constant coefficient is 1 and the top one is a / Delta'_{(d)}.
struct ReciprocalPolynomial {
    Poly a;
    int d = 0;
    std::map<long long, CoefficientElement> coeffs;  // X-exponent -> coefficient

    TruncatedSeries as_series(const RingSpec& spec, long long prec) const;
};

/// The generic Drinfeld module of rank s = r - 1 over the coefficient ring:
/// phi'_T = T + g'_1 tau + ... + g'_{s-1} tau^{s-1} + Delta' tau^s,
/// together with its derived objects.  Built once; the beta cache extends
/// lazily under a lock, so shared use from worker threads is safe.
class GenericModule {
public:
    explicit GenericModule(RingSpec spec);

    const RingSpec& spec() const { return spec_; }
    const SkewPolynomial& phi_T() const { return phi_T_; }

    /// phi'_a by Horner's rule in the skew ring; tau-degree is s * deg(a)
    SkewPolynomial phi_a(const Poly& a) const;

    /// Delta'_{(d)} = Delta'^{(q^{sd}-1)/(q^s-1)}
    CoefficientElement delta_d(int d) const;

    ReciprocalPolynomial s_a(const Poly& a) const;

    /// t_a = Delta'_{(d)}^{-1} t^{q^{sd}} / S_a(t) at precision M
    TruncatedSeries t_a_series(const Poly& a, long long M) const;

    /// t_a^{q^m - 1} at precision M (unit-part inversion, no general powering)
    TruncatedSeries t_a_qpow_minus_one(const Poly& a, int m, long long M) const;

    /// beta'_0 .. beta'_{k_max} of the generic module; beta'_0 = 1 and
    /// beta'_k = -( sum_{0<=i<k} beta'_i g'_{k-i}^{q^i} ) / [k]
    /// with g'_0 = T and g'_j = 0 for j > s.  Cached.
    std::vector<CoefficientElement> betas(int k_max) const;

    /// E'_{q^k-1} = -beta'_k (k >= 1); E'_0 = -1
    CoefficientElement eisenstein_prime(int k) const;

    /// g'_i with the universal conventions g'_0 = T, g'_s = Delta',
    /// g'_j = 0 for j > s
    CoefficientElement g_prime(int i) const;

private:
    RingSpec spec_;
    SkewPolynomial phi_T_;
    mutable std::mutex mutex_;
    mutable std::vector<CoefficientElement> beta_cache_;
};

}  // namespace dmf
