#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace dmf {

/// Element of F_q encoded as value = sum digits[i] * p^i with digits in the
/// power basis of the field generator. q <= 16, so a byte suffices.
using Fq = std::uint8_t;

/// F_q for q = p^e <= 16.  The modulus is the lexicographically least monic
/// irreducible of degree e over F_p (coefficient tuples compared ascending,
/// constant coefficient first), so the representation is canonical across
/// runs and serializations.  All arithmetic is table-driven.
class FieldSpec {
public:
    FieldSpec(int p, int e);

    int p() const { return p_; }
    int e() const { return e_; }
    int q() const { return q_; }

    /// modulus coefficients, ascending, monic of degree e (for e = 1 this is
    /// the placeholder T, i.e. {0, 1})
    const std::vector<std::uint8_t>& modulus() const { return modulus_; }

    Fq zero() const { return 0; }
    Fq one() const { return 1; }
    /// checked conversion from an integer encoding in [0, q)
    Fq element(int value) const;

    Fq add(Fq a, Fq b) const { return add_[idx(a, b)]; }
    Fq sub(Fq a, Fq b) const { return add_[idx(a, neg_[b])]; }
    Fq neg(Fq a) const { return neg_[a]; }
    Fq mul(Fq a, Fq b) const { return mul_[idx(a, b)]; }
    Fq inv(Fq a) const;          // throws on a = 0
    Fq pow(Fq a, long long n) const;
    Fq frobenius(Fq a, int j) const;   // a^{q^j}; the identity map on F_q

    bool operator==(const FieldSpec& o) const {
        return p_ == o.p_ && e_ == o.e_;
    }
    bool operator!=(const FieldSpec& o) const { return !(*this == o); }

private:
    int idx(Fq a, Fq b) const { return int(a) * q_ + int(b); }

    int p_, e_, q_;
    std::vector<std::uint8_t> modulus_;
    std::array<std::uint8_t, 256> add_{}, mul_{};
    std::array<std::uint8_t, 16> neg_{}, inv_{};
};

/// checks compatibility of two field specs, throws std::invalid_argument
void require_same_field(const FieldSpec& a, const FieldSpec& b);

}  // namespace dmf
