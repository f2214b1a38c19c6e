#pragma once

#include <map>
#include <vector>

#include "dmf/coeffring.hpp"

namespace dmf {

/// Twisted polynomial sum c_i tau^i over the coefficient ring, with the
/// commutation rule tau c = c^q tau.  Under tau^n ~ z^{q^n} multiplication
/// is composition of F_q-linear polynomials.
class SkewPolynomial {
public:
    explicit SkewPolynomial(RingSpec spec) : spec_(std::move(spec)) {}

    static SkewPolynomial zero(const RingSpec& spec) { return SkewPolynomial(spec); }
    static SkewPolynomial constant(const CoefficientElement& c);
    static SkewPolynomial tau(const RingSpec& spec, int i = 1);

    const RingSpec& spec() const { return spec_; }
    const std::map<int, CoefficientElement>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    int deg() const { return coeffs_.empty() ? -1 : coeffs_.rbegin()->first; }

    CoefficientElement coeff(int i) const;
    void set_coeff(int i, CoefficientElement c);
    void add_coeff(int i, const CoefficientElement& c);

    SkewPolynomial operator+(const SkewPolynomial& o) const;
    SkewPolynomial operator-(const SkewPolynomial& o) const;
    SkewPolynomial scale(const CoefficientElement& c) const;  // left multiply by tau^0 constant

    bool operator==(const SkewPolynomial& o) const { return coeffs_ == o.coeffs_; }

private:
    RingSpec spec_;
    std::map<int, CoefficientElement> coeffs_;
};

/// (sum a_i tau^i)(sum b_j tau^j) = sum_k ( sum_{i+j=k} a_i b_j^{q^i} ) tau^k
SkewPolynomial skew_mul(const SkewPolynomial& f, const SkewPolynomial& g);

/// First k_max+1 coefficients of the two-sided inverse of f in the skew power
/// series ring; requires constant coefficient 1.  Triangular recursion from
/// sum_{i+j=k} a_i b_j^{q^i} = [k = 0].
std::vector<CoefficientElement> formal_inverse_coeffs(const SkewPolynomial& f, int k_max);

}  // namespace dmf
