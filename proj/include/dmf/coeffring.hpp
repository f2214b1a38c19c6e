#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "dmf/ratfunc.hpp"

namespace dmf {

/// Shared description of the coefficient ring
/// F_q(T)[g'_1, ..., g'_{s-1}][Delta'^{+-1}] with s = r - 1.
/// Cheap to copy (shared payload); equality compares (p, e, r).
class RingSpec {
public:
    RingSpec(FieldSpec field, int r);

    const FieldSpec& field() const { return data_->field; }
    int r() const { return data_->r; }
    int s() const { return data_->r - 1; }
    int q() const { return data_->field.q(); }
    /// number of g' generators (g'_1 .. g'_{s-1})
    int ngens() const { return data_->r - 2; }

    /// q^j as a 64-bit integer, with overflow checking
    long long qpow(long long j) const;

    bool operator==(const RingSpec& o) const {
        return field() == o.field() && r() == o.r();
    }
    bool operator!=(const RingSpec& o) const { return !(*this == o); }

private:
    struct Data {
        FieldSpec field;
        int r;
    };
    std::shared_ptr<const Data> data_;
};

void require_same_spec(const RingSpec& a, const RingSpec& b);

/// Monomial g'_1^{gexp[0]} ... g'_{s-1}^{gexp[s-2]} * Delta'^{dexp};
/// dexp may be negative (Laurent localization at Delta').
struct Monomial {
    std::vector<std::int32_t> gexp;
    std::int64_t dexp = 0;

    bool operator==(const Monomial& o) const = default;
    /// canonical term order: dexp first, then gexp lexicographic
    bool operator<(const Monomial& o) const {
        if (dexp != o.dexp) return dexp < o.dexp;
        return gexp < o.gexp;
    }
};

/// Element of the coefficient ring: finite sum of monomials with nonzero
/// rational-function coefficients.  Zero coefficients are stripped on every
/// write, so equality of canonical forms is structural equality.
class CoefficientElement {
public:
    explicit CoefficientElement(RingSpec spec) : spec_(std::move(spec)) {}

    static CoefficientElement zero(const RingSpec& spec) { return CoefficientElement(spec); }
    static CoefficientElement one(const RingSpec& spec);
    static CoefficientElement from_rat(const RingSpec& spec, Rat c);
    static CoefficientElement from_poly(const RingSpec& spec, Poly p);
    /// g'_i, valid for 1 <= i <= s-1
    static CoefficientElement gen_g(const RingSpec& spec, int i);
    /// Delta'^m (m may be negative)
    static CoefficientElement gen_delta(const RingSpec& spec, std::int64_t m = 1);

    const RingSpec& spec() const { return spec_; }
    const std::map<Monomial, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    size_t nterms() const { return terms_.size(); }

    bool operator==(const CoefficientElement& o) const { return terms_ == o.terms_; }
    bool operator!=(const CoefficientElement& o) const { return !(*this == o); }

    CoefficientElement operator+(const CoefficientElement& o) const;
    CoefficientElement operator-(const CoefficientElement& o) const;
    CoefficientElement operator-() const;
    CoefficientElement operator*(const CoefficientElement& o) const;
    CoefficientElement& operator+=(const CoefficientElement& o);

    /// multiply by a scalar from F_q(T)
    CoefficientElement scale(const Rat& c) const;
    /// multiply by a single monomial (shifting all exponents)
    CoefficientElement mul_monomial(const Monomial& m, const Rat& c) const;

    /// x^{q^j}: every exponent times q^j, every coefficient to the q^j
    CoefficientElement frobenius_pow(int j) const;

    /// inverse of a unit c * Delta'^m; throws std::domain_error otherwise
    CoefficientElement invert_unit() const;

    /// grading: wt(g'_i) = q^i - 1, wt(Delta') = q^s - 1, wt(F_q(T)) = 0
    long long monomial_weight(const Monomial& m) const;
    bool is_homogeneous(long long w) const;
    /// the common weight when homogeneous and nonzero
    std::optional<long long> homogeneous_weight() const;

    /// direct term access used by series code
    void add_term(const Monomial& m, const Rat& c);
    const Rat* find(const Monomial& m) const;

private:
    RingSpec spec_;
    std::map<Monomial, Rat> terms_;
};

}  // namespace dmf
