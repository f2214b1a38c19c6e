#pragma once

#include <string>

#include "dmf/drinfeld.hpp"

namespace dmf {

/// A computed t-expansion together with its claimed modular weight.
/// The grading contract: the coefficient of t^n is homogeneous of weight
/// claimed_weight - n, and for the type-0 forms every stored exponent is
/// congruent to claimed_weight mod (q-1).
struct ExpansionResult {
    TruncatedSeries series;
    long long claimed_weight = 0;
    std::string label;

    bool weights_ok() const;
    bool exponents_congruent() const;
};

/// G_{q^k-1}(t) = sum_{0<=i<k} beta'_i t^{q^k - q^i}
TruncatedSeries goss_special(const GenericModule& mod, int k, long long M);

/// E_{q^k-1} = E'_{q^k-1} - sum_{a monic} G_{q^k-1}(t_a), truncated soundly:
/// degree d contributes only when (q^k - q^{k-1}) q^{(r-1)d} < M
ExpansionResult eisenstein_A_expansion(const GenericModule& mod, int k, long long M,
                                       int threads = 1);

/// the (k+1)-term closed form sum_{0<=i<=k} E'_{q^i-1} t^{q^k-q^i}
ExpansionResult eisenstein_closed(const GenericModule& mod, int k, long long M);

/// Sigma(j,d) = sum over monic a of degree d of S_a^{1-q^j}
TruncatedSeries sigma(const GenericModule& mod, int j, int d, long long M,
                      int threads = 1);

/// Theta(j,d) = sum over monic a of degree d of t_a^{q^j-1}
///            = Delta'_{(d)}^{1-q^j} t^{q^{(r-1)d}(q^j-1)} Sigma(j,d)
TruncatedSeries theta(const GenericModule& mod, int j, int d, long long M,
                      int threads = 1);

/// Eisenstein value of the Tate lattice: E_{q^i-1}(L) =
/// -t^{q^i-1} - sum_{d>=1} Delta'_{(d)}^{1-q^i} t^{q^{(r-1)d}(q^i-1)} Sigma(i,d);
/// i = 0 is the constant -1
TruncatedSeries tate_eisenstein(const GenericModule& mod, int i, long long M,
                                int threads = 1);

/// g_k by the Tate recursion
/// g_k = sum_{1<=i<=k} E_{q^i-1}(L) g_{k-i}^{q^i}
///     - sum_{0<=i<=k} g'_i E_{q^{k-i}-1}(L)^{q^i}
ExpansionResult g_series(const GenericModule& mod, int k, long long M,
                         int threads = 1);

/// the closed form
/// g_k = g'_k + sum_{1<=i<=k-1} (g'_i t^{q^k-q^i} - g'_i^q t^{q^k-q^{i+1}+q-1})
///     - [1] t^{q^k-1}
ExpansionResult g_closed(const GenericModule& mod, int k, long long M);

/// Pi(d) = product of S_a over monic a of degree d (brute product)
TruncatedSeries pi_product(const GenericModule& mod, int d, long long M,
                           int threads = 1);

/// the d=1 closed form Pi(1) = S_T^q - S_T W^{q-1}, W = Delta'^{-1} t^{q^{r-1}-1}
TruncatedSeries pi1_closed(const GenericModule& mod, long long M);

/// H(t) = prod_{d>=1} Pi(d)^{q^r-1}, including every d whose factor can
/// meet t^M, i.e. (q-1)(q^{(r-1)d}-1) < M.  The form itself is h = h'^q t H.
TruncatedSeries h_normalized(const GenericModule& mod, long long M, int threads = 1);

/// invert(Pi(1)): the closed-form head of the h-expansion
TruncatedSeries h_closed(const GenericModule& mod, long long M, int threads = 1);

/// -Delta'^q t^{q-1} H^{q-1}: the product route to Delta = g_r
TruncatedSeries delta_product_route(const GenericModule& mod, long long M,
                                    int threads = 1);

/// Theorem bound table.  Every N used by the verifier is resolved here,
/// never inlined at call sites.
namespace bounds {
long long eisenstein(const RingSpec& spec, int k);
long long g_theorem(const RingSpec& spec);
long long theta_order(const RingSpec& spec, int j, int d);
long long sigma_order(const RingSpec& spec, int j, int d);  // q>2 or d>1
long long tate(const RingSpec& spec, int i);
long long pi1_exact_order(const RingSpec& spec);
long long pi2_exact_order(const RingSpec& spec);
long long h_congruence(const RingSpec& spec);
/// crude documented bound for non-special E_k (not constructed here)
long long nonspecial_crude(const RingSpec& spec);
}  // namespace bounds

}  // namespace dmf
