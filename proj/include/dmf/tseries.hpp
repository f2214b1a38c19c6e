#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "dmf/coeffring.hpp"

namespace dmf {

/// thrown by eq_mod when asked to compare beyond a guaranteed precision
struct insufficient_precision : std::logic_error {
    using std::logic_error::logic_error;
};

/// Power series in t over the coefficient ring, carried modulo t^prec.
/// Precision is data: every operation computes the exact precision of its
/// result, and comparisons refuse to look past it.  Exponents are sparse;
/// terms at or above prec are never stored.
class TruncatedSeries {
public:
    TruncatedSeries(RingSpec spec, long long prec);

    static TruncatedSeries zero(const RingSpec& spec, long long prec) {
        return TruncatedSeries(spec, prec);
    }
    static TruncatedSeries constant(const CoefficientElement& c, long long prec);
    static TruncatedSeries monomial(const CoefficientElement& c, long long n, long long prec);

    const RingSpec& spec() const { return spec_; }
    long long prec() const { return prec_; }
    const std::map<long long, CoefficientElement>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// coefficient of t^n (zero element when absent); n must be < prec
    CoefficientElement coeff(long long n) const;
    void set_coeff(long long n, CoefficientElement c);
    void add_coeff(long long n, const CoefficientElement& c);

    TruncatedSeries operator+(const TruncatedSeries& o) const;
    TruncatedSeries operator-(const TruncatedSeries& o) const;
    TruncatedSeries operator-() const;
    TruncatedSeries operator*(const TruncatedSeries& o) const;

    TruncatedSeries scale(const CoefficientElement& c) const;
    TruncatedSeries pow(long long n) const;  // n >= 0

    /// multiplicative inverse mod t^prec; the constant term must be a unit
    TruncatedSeries invert() const;

    /// f^{q^j}: exponents and precision stretch by q^j (exact in char p)
    TruncatedSeries frobenius_pow(int j) const;

    /// multiply by the exact monomial t^e (e >= 0): precision grows by e
    TruncatedSeries shift_up(long long e) const;

    TruncatedSeries truncate(long long new_prec) const;

    /// min stored exponent; nullopt means "no terms below prec"
    std::optional<long long> order() const;
    std::vector<long long> support() const;

    /// exact comparison below t^M; throws insufficient_precision when M
    /// exceeds either operand's guarantee
    bool eq_mod(const TruncatedSeries& o, long long M) const;

    size_t nterms() const { return terms_.size(); }

private:
    RingSpec spec_;
    long long prec_;
    std::map<long long, CoefficientElement> terms_;
};

}  // namespace dmf
