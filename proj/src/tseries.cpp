#include "dmf/tseries.hpp"

#include <algorithm>

namespace dmf {

TruncatedSeries::TruncatedSeries(RingSpec spec, long long prec)
    : spec_(std::move(spec)), prec_(prec) {
    if (prec < 1) throw std::domain_error("series precision must be >= 1");
}

TruncatedSeries TruncatedSeries::constant(const CoefficientElement& c, long long prec) {
    return monomial(c, 0, prec);
}

TruncatedSeries TruncatedSeries::monomial(const CoefficientElement& c, long long n, long long prec) {
    TruncatedSeries f(c.spec(), prec);
    if (n < 0) throw std::domain_error("negative t-exponent");
    if (!c.is_zero() && n < prec) f.terms_.emplace(n, c);
    return f;
}

CoefficientElement TruncatedSeries::coeff(long long n) const {
    if (n >= prec_) throw insufficient_precision("coefficient beyond series precision");
    auto it = terms_.find(n);
    return it == terms_.end() ? CoefficientElement::zero(spec_) : it->second;
}

void TruncatedSeries::set_coeff(long long n, CoefficientElement c) {
    if (n < 0) throw std::domain_error("negative t-exponent");
    if (n >= prec_) return;  // truncation law
    if (c.is_zero()) terms_.erase(n);
    else terms_.insert_or_assign(n, std::move(c));
}

void TruncatedSeries::add_coeff(long long n, const CoefficientElement& c) {
    if (n < 0) throw std::domain_error("negative t-exponent");
    if (n >= prec_ || c.is_zero()) return;
    auto it = terms_.find(n);
    if (it == terms_.end()) {
        terms_.emplace(n, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
    require_same_spec(spec_, o.spec_);
    TruncatedSeries out = truncate(std::min(prec_, o.prec_));
    for (const auto& [n, c] : o.terms_) out.add_coeff(n, c);
    return out;
}

TruncatedSeries TruncatedSeries::operator-() const {
    TruncatedSeries out(spec_, prec_);
    for (const auto& [n, c] : terms_) out.terms_.emplace(n, -c);
    return out;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& o) const {
    return *this + (-o);
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
    require_same_spec(spec_, o.spec_);
    TruncatedSeries out(spec_, std::min(prec_, o.prec_));
    for (const auto& [n1, c1] : terms_) {
        if (n1 >= out.prec_) break;
        for (const auto& [n2, c2] : o.terms_) {
            if (n1 + n2 >= out.prec_) break;
            out.add_coeff(n1 + n2, c1 * c2);
        }
    }
    return out;
}

TruncatedSeries TruncatedSeries::scale(const CoefficientElement& c) const {
    TruncatedSeries out(spec_, prec_);
    if (c.is_zero()) return out;
    for (const auto& [n, v] : terms_) out.add_coeff(n, v * c);
    return out;
}

TruncatedSeries TruncatedSeries::pow(long long n) const {
    if (n < 0) throw std::domain_error("series pow requires n >= 0");
    TruncatedSeries out = constant(CoefficientElement::one(spec_), prec_);
    TruncatedSeries base = *this;
    while (n) {
        if (n & 1) out = out * base;
        if (n >>= 1) base = base * base;
    }
    return out;
}

TruncatedSeries TruncatedSeries::invert() const {
    auto it = terms_.find(0);
    if (it == terms_.end())
        throw std::domain_error("series not invertible: zero constant term");
    CoefficientElement c0i = it->second.invert_unit();
    // u = 1 - f/c0 has positive order nu; 1/(1-u) = sum u^i, Horner form
    TruncatedSeries g = scale(c0i);
    TruncatedSeries u = constant(CoefficientElement::one(spec_), prec_) - g;
    TruncatedSeries acc = constant(CoefficientElement::one(spec_), prec_);
    if (!u.is_zero()) {
        long long nu = *u.order();
        long long steps = (prec_ - 1) / nu + 1;
        for (long long i = 0; i < steps; ++i)
            acc = constant(CoefficientElement::one(spec_), prec_) + u * acc;
    }
    return acc.scale(c0i);
}

TruncatedSeries TruncatedSeries::frobenius_pow(int j) const {
    if (j < 0) throw std::domain_error("frobenius_pow requires j >= 0");
    if (j == 0) return *this;
    long long Q = spec_.qpow(j);
    TruncatedSeries out(spec_, prec_ * Q);
    for (const auto& [n, c] : terms_)
        out.terms_.emplace(n * Q, c.frobenius_pow(j));
    return out;
}

TruncatedSeries TruncatedSeries::shift_up(long long e) const {
    if (e < 0) throw std::domain_error("shift_up requires e >= 0");
    TruncatedSeries out(spec_, prec_ + e);
    for (const auto& [n, c] : terms_) out.terms_.emplace(n + e, c);
    return out;
}

TruncatedSeries TruncatedSeries::truncate(long long new_prec) const {
    TruncatedSeries out(spec_, new_prec);
    for (const auto& [n, c] : terms_) {
        if (n >= new_prec) break;
        out.terms_.emplace(n, c);
    }
    return out;
}

std::optional<long long> TruncatedSeries::order() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.begin()->first;
}

std::vector<long long> TruncatedSeries::support() const {
    std::vector<long long> out;
    out.reserve(terms_.size());
    for (const auto& [n, c] : terms_) out.push_back(n);
    return out;
}

bool TruncatedSeries::eq_mod(const TruncatedSeries& o, long long M) const {
    require_same_spec(spec_, o.spec_);
    if (M > prec_ || M > o.prec_)
        throw insufficient_precision("eq_mod beyond guaranteed precision");
    auto i = terms_.begin();
    auto j = o.terms_.begin();
    while (i != terms_.end() && i->first < M && j != o.terms_.end() && j->first < M) {
        if (i->first != j->first || !(i->second == j->second)) return false;
        ++i;
        ++j;
    }
    bool done_i = (i == terms_.end()) || i->first >= M;
    bool done_j = (j == o.terms_.end()) || j->first >= M;
    return done_i && done_j;
}

}  // namespace dmf
