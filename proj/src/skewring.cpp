#include "dmf/skewring.hpp"

#include <stdexcept>

namespace dmf {

SkewPolynomial SkewPolynomial::constant(const CoefficientElement& c) {
    SkewPolynomial f(c.spec());
    if (!c.is_zero()) f.coeffs_.emplace(0, c);
    return f;
}

SkewPolynomial SkewPolynomial::tau(const RingSpec& spec, int i) {
    SkewPolynomial f(spec);
    f.coeffs_.emplace(i, CoefficientElement::one(spec));
    return f;
}

CoefficientElement SkewPolynomial::coeff(int i) const {
    auto it = coeffs_.find(i);
    return it == coeffs_.end() ? CoefficientElement::zero(spec_) : it->second;
}

void SkewPolynomial::set_coeff(int i, CoefficientElement c) {
    if (c.is_zero()) coeffs_.erase(i);
    else coeffs_.insert_or_assign(i, std::move(c));
}

void SkewPolynomial::add_coeff(int i, const CoefficientElement& c) {
    if (c.is_zero()) return;
    auto it = coeffs_.find(i);
    if (it == coeffs_.end()) {
        coeffs_.emplace(i, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
}

SkewPolynomial SkewPolynomial::operator+(const SkewPolynomial& o) const {
    require_same_spec(spec_, o.spec_);
    SkewPolynomial out = *this;
    for (const auto& [i, c] : o.coeffs_) out.add_coeff(i, c);
    return out;
}

SkewPolynomial SkewPolynomial::operator-(const SkewPolynomial& o) const {
    require_same_spec(spec_, o.spec_);
    SkewPolynomial out = *this;
    for (const auto& [i, c] : o.coeffs_) out.add_coeff(i, -c);
    return out;
}

SkewPolynomial SkewPolynomial::scale(const CoefficientElement& c) const {
    SkewPolynomial out(spec_);
    for (const auto& [i, v] : coeffs_) out.add_coeff(i, c * v);
    return out;
}

SkewPolynomial skew_mul(const SkewPolynomial& f, const SkewPolynomial& g) {
    require_same_spec(f.spec(), g.spec());
    SkewPolynomial out(f.spec());
    for (const auto& [i, a] : f.coeffs()) {
        for (const auto& [j, b] : g.coeffs())
            out.add_coeff(i + j, a * b.frobenius_pow(i));
    }
    return out;
}

std::vector<CoefficientElement> formal_inverse_coeffs(const SkewPolynomial& f, int k_max) {
    if (k_max < 0) throw std::domain_error("formal_inverse_coeffs: k_max >= 0 required");
    if (!f.coeff(0).is_one())
        throw std::domain_error("formal inverse requires constant tau-coefficient 1");
    const RingSpec& spec = f.spec();
    std::vector<CoefficientElement> b;
    b.reserve(size_t(k_max) + 1);
    b.push_back(CoefficientElement::one(spec));
    for (int k = 1; k <= k_max; ++k) {
        // 0 = sum_{i+j=k} a_i b_j^{q^i}  =>  b_k = - sum_{i>=1} a_i b_{k-i}^{q^i}
        CoefficientElement acc = CoefficientElement::zero(spec);
        for (const auto& [i, a] : f.coeffs()) {
            if (i < 1 || i > k) continue;
            acc += a * b[size_t(k - i)].frobenius_pow(i);
        }
        b.push_back(-acc);
    }
    return b;
}

}  // namespace dmf
