#pragma once

#include <random>
#include <stdexcept>
#include <vector>

#include "dmf/coeffring.hpp"

namespace dmf {

/// thrown when a random point hits a zero denominator or Delta' = 0;
/// the caller retries with a fresh point
struct bad_specialization : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Extension field F_{q^m} = F_{p^{e*m}} used only for probabilistic
/// identity checking.  No tables (p^{em} can reach 65536); schoolbook
/// arithmetic modulo the canonical (lex-least) irreducible.
class ExtField {
public:
    using Elt = std::vector<std::uint8_t>;  // digits over F_p, size n

    ExtField(const FieldSpec& base, int m);

    int p() const { return p_; }
    int n() const { return n_; }

    Elt zero() const { return Elt(size_t(n_), 0); }
    Elt one() const;
    bool is_zero(const Elt& a) const;

    Elt add(const Elt& a, const Elt& b) const;
    Elt sub(const Elt& a, const Elt& b) const;
    Elt neg(const Elt& a) const;
    Elt mul(const Elt& a, const Elt& b) const;
    Elt pow(Elt a, long long e) const;
    Elt inv(const Elt& a) const;

    /// image of a base-field element under the embedding F_q -> F_{q^m}
    Elt embed(Fq a) const;

    Elt random(std::mt19937_64& rng) const;

private:
    int p_, n_;
    std::vector<std::uint8_t> modulus_;
    FieldSpec base_;
    Elt root_;  // root of the base modulus, basis of the embedding
};

/// assignment of extension-field values to T, g'_1..g'_{s-1}, Delta'
struct SpecializationPoint {
    const ExtField* K = nullptr;
    ExtField::Elt T;
    std::vector<ExtField::Elt> g;
    ExtField::Elt delta;  // must be nonzero
};

SpecializationPoint random_point(const RingSpec& spec, const ExtField& K,
                                 std::mt19937_64& rng);

/// exact evaluation; throws bad_specialization on a vanishing denominator
/// or zero Delta'
ExtField::Elt specialize(const CoefficientElement& x, const SpecializationPoint& pt);

}  // namespace dmf
