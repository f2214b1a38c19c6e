#include "dmf/expansions.hpp"

#include <functional>
#include <stdexcept>
#include <thread>

namespace dmf {

namespace {

/// Deterministic parallel fold: items are processed in blocks, each block
/// reduced left-to-right, blocks combined in index order.  Exact commutative
/// arithmetic makes the result identical for every thread count.
TruncatedSeries parallel_sum(size_t n,
                             const std::function<TruncatedSeries(size_t)>& item,
                             TruncatedSeries init, int threads) {
    if (threads < 1) threads = 1;
    if (threads == 1 || n <= 1) {
        for (size_t i = 0; i < n; ++i) init = init + item(i);
        return init;
    }
    size_t nblocks = std::min<size_t>(size_t(threads), n);
    std::vector<TruncatedSeries> partial(nblocks, TruncatedSeries::zero(init.spec(), init.prec()));
    std::vector<std::thread> pool;
    for (size_t b = 0; b < nblocks; ++b) {
        pool.emplace_back([&, b] {
            size_t lo = n * b / nblocks, hi = n * (b + 1) / nblocks;
            TruncatedSeries acc = TruncatedSeries::zero(init.spec(), init.prec());
            for (size_t i = lo; i < hi; ++i) acc = acc + item(i);
            partial[b] = std::move(acc);
        });
    }
    for (auto& t : pool) t.join();
    for (auto& p : partial) init = init + p;
    return init;
}

TruncatedSeries parallel_product(size_t n,
                                 const std::function<TruncatedSeries(size_t)>& item,
                                 TruncatedSeries init, int threads) {
    if (threads < 1) threads = 1;
    if (threads == 1 || n <= 1) {
        for (size_t i = 0; i < n; ++i) init = init * item(i);
        return init;
    }
    size_t nblocks = std::min<size_t>(size_t(threads), n);
    std::vector<TruncatedSeries> partial(nblocks, init);
    std::vector<std::thread> pool;
    TruncatedSeries one =
        TruncatedSeries::constant(CoefficientElement::one(init.spec()), init.prec());
    for (size_t b = 0; b < nblocks; ++b) {
        pool.emplace_back([&, b] {
            size_t lo = n * b / nblocks, hi = n * (b + 1) / nblocks;
            TruncatedSeries acc = one;
            for (size_t i = lo; i < hi; ++i) acc = acc * item(i);
            partial[b] = std::move(acc);
        });
    }
    for (auto& t : pool) t.join();
    for (auto& p : partial) init = init * p;
    return init;
}

long long ceil_div(long long a, long long b) { return (a + b - 1) / b; }

}  // namespace

bool ExpansionResult::weights_ok() const {
    for (const auto& [n, c] : series.terms())
        if (!c.is_homogeneous(claimed_weight - n)) return false;
    return true;
}

bool ExpansionResult::exponents_congruent() const {
    long long m = series.spec().q() - 1;
    if (m == 1) return true;
    for (const auto& [n, c] : series.terms())
        if ((n - claimed_weight) % m != 0) return false;
    return true;
}

TruncatedSeries goss_special(const GenericModule& mod, int k, long long M) {
    if (k < 1) throw std::domain_error("goss_special requires k >= 1");
    const RingSpec& spec = mod.spec();
    auto beta = mod.betas(k - 1);
    long long qk = spec.qpow(k);
    TruncatedSeries out(spec, M);
    for (int i = 0; i < k; ++i)
        out.add_coeff(qk - spec.qpow(i), beta[size_t(i)]);
    return out;
}

ExpansionResult eisenstein_A_expansion(const GenericModule& mod, int k, long long M,
                                       int threads) {
    if (k < 1) throw std::domain_error("eisenstein requires k >= 1");
    if (M < 1) throw std::domain_error("precision must be >= 1");
    const RingSpec& spec = mod.spec();
    auto beta = mod.betas(k);
    long long qk = spec.qpow(k);
    long long goss_order = qk - spec.qpow(k - 1);

    TruncatedSeries acc =
        TruncatedSeries::constant(-beta[size_t(k)], M);  // E'_{q^k-1}
    // degree d contributes G(t_a) = o(t_a^{q^k - q^{k-1}}), of order
    // >= (q^k - q^{k-1}) q^{(r-1)d}; stop as soon as that clears t^M
    for (int d = 0;; ++d) {
        long long ta_order = spec.qpow((long long)spec.s() * d);
        if (goss_order * ta_order >= M) break;
        auto as = monic_enumerate(spec.field(), d);
        acc = parallel_sum(
            as.size(),
            [&](size_t ai) {
                TruncatedSeries g = TruncatedSeries::zero(spec, M);
                for (int i = 0; i < k; ++i) {
                    // beta'_i t_a^{q^k - q^i} = beta'_i (t_a^{q^{k-i}-1})^{q^i}
                    long long inner = ceil_div(M, spec.qpow(i));
                    TruncatedSeries p =
                        mod.t_a_qpow_minus_one(as[ai], k - i, inner).frobenius_pow(i);
                    g = g + p.truncate(M).scale(beta[size_t(i)]);
                }
                return -g;
            },
            acc, threads);
    }
    return ExpansionResult{std::move(acc), qk - 1,
                           "E_" + std::to_string(qk - 1)};
}

ExpansionResult eisenstein_closed(const GenericModule& mod, int k, long long M) {
    if (k < 1) throw std::domain_error("eisenstein requires 1 <= k");
    const RingSpec& spec = mod.spec();
    auto beta = mod.betas(k);
    long long qk = spec.qpow(k);
    TruncatedSeries out(spec, M);
    for (int i = 0; i <= k; ++i)
        out.add_coeff(qk - spec.qpow(i), -beta[size_t(i)]);  // E'_{q^i-1} = -beta'_i
    return ExpansionResult{std::move(out), qk - 1, "E_" + std::to_string(qk - 1)};
}

TruncatedSeries sigma(const GenericModule& mod, int j, int d, long long M,
                      int threads) {
    if (j < 1 || d < 1) throw std::domain_error("sigma requires j, d >= 1");
    const RingSpec& spec = mod.spec();
    long long qj = spec.qpow(j);
    auto as = monic_enumerate(spec.field(), d);
    return parallel_sum(
        as.size(),
        [&](size_t ai) {
            // S_a^{1-q^j} = S_a * (S_a^{-1})^{q^j}
            ReciprocalPolynomial sa = mod.s_a(as[ai]);
            TruncatedSeries inv = sa.as_series(spec, ceil_div(M, qj)).invert();
            return (sa.as_series(spec, M) * inv.frobenius_pow(j)).truncate(M);
        },
        TruncatedSeries::zero(spec, M), threads);
}

TruncatedSeries theta(const GenericModule& mod, int j, int d, long long M,
                      int threads) {
    if (j < 1 || d < 1) throw std::domain_error("theta requires j, d >= 1");
    const RingSpec& spec = mod.spec();
    long long shift = spec.qpow((long long)spec.s() * d) * (spec.qpow(j) - 1);
    if (shift >= M) return TruncatedSeries::zero(spec, M);
    CoefficientElement dd = mod.delta_d(d);
    CoefficientElement c = dd.frobenius_pow(j).invert_unit() * dd;  // Delta_{(d)}^{1-q^j}
    return sigma(mod, j, d, M - shift, threads).shift_up(shift).scale(c).truncate(M);
}

TruncatedSeries tate_eisenstein(const GenericModule& mod, int i, long long M,
                                int threads) {
    if (i < 0) throw std::domain_error("tate_eisenstein requires i >= 0");
    const RingSpec& spec = mod.spec();
    if (i == 0)
        return TruncatedSeries::constant(-CoefficientElement::one(spec), M);
    long long qi = spec.qpow(i);
    TruncatedSeries out =
        TruncatedSeries::monomial(-CoefficientElement::one(spec), qi - 1, M);
    for (int d = 1;; ++d) {
        long long shift = spec.qpow((long long)spec.s() * d) * (qi - 1);
        if (shift >= M) break;
        CoefficientElement dd = mod.delta_d(d);
        CoefficientElement c = dd.frobenius_pow(i).invert_unit() * dd;
        TruncatedSeries part =
            sigma(mod, i, d, M - shift, threads).shift_up(shift).scale(c);
        out = out - part.truncate(M);
    }
    return out;
}

ExpansionResult g_series(const GenericModule& mod, int k, long long M, int threads) {
    const RingSpec& spec = mod.spec();
    if (k < 1 || k > spec.r())
        throw std::domain_error("g_series requires 1 <= k <= r");
    std::vector<TruncatedSeries> E;  // E_{q^i-1}(L), i = 0..k
    E.reserve(size_t(k) + 1);
    for (int i = 0; i <= k; ++i) E.push_back(tate_eisenstein(mod, i, M, threads));
    std::vector<TruncatedSeries> g;
    g.push_back(TruncatedSeries::constant(mod.g_prime(0), M));  // g_0 = T
    for (int kk = 1; kk <= k; ++kk) {
        TruncatedSeries acc = TruncatedSeries::zero(spec, M);
        for (int i = 1; i <= kk; ++i)
            acc = acc + (E[size_t(i)] * g[size_t(kk - i)].frobenius_pow(i)).truncate(M);
        for (int i = 0; i <= kk; ++i) {
            CoefficientElement gp = mod.g_prime(i);
            if (gp.is_zero()) continue;
            acc = acc - E[size_t(kk - i)].frobenius_pow(i).truncate(M).scale(gp);
        }
        g.push_back(std::move(acc));
    }
    long long w = spec.qpow(k) - 1;
    return ExpansionResult{std::move(g[size_t(k)]), w, "g_" + std::to_string(k)};
}

ExpansionResult g_closed(const GenericModule& mod, int k, long long M) {
    const RingSpec& spec = mod.spec();
    if (k < 1 || k > spec.r())
        throw std::domain_error("g_closed requires 1 <= k <= r");
    long long qk = spec.qpow(k);
    long long q = spec.q();
    TruncatedSeries out = TruncatedSeries::constant(mod.g_prime(k), M);  // g'_r = 0 at k = r
    for (int i = 1; i <= k - 1; ++i) {
        CoefficientElement gp = mod.g_prime(i);
        out.add_coeff(qk - spec.qpow(i), gp);
        out.add_coeff(qk - spec.qpow(i + 1) + q - 1, -gp.frobenius_pow(1));
    }
    out.add_coeff(qk - 1, -CoefficientElement::from_poly(spec, bracket(spec.field(), 1)));
    return ExpansionResult{std::move(out), qk - 1, "g_" + std::to_string(k)};
}

TruncatedSeries pi_product(const GenericModule& mod, int d, long long M, int threads) {
    if (d < 1) throw std::domain_error("pi requires d >= 1");
    const RingSpec& spec = mod.spec();
    auto as = monic_enumerate(spec.field(), d);
    return parallel_product(
        as.size(),
        [&](size_t ai) { return mod.s_a(as[ai]).as_series(spec, M); },
        TruncatedSeries::constant(CoefficientElement::one(spec), M), threads);
}

TruncatedSeries pi1_closed(const GenericModule& mod, long long M) {
    const RingSpec& spec = mod.spec();
    long long q = spec.q();
    TruncatedSeries st = mod.s_a(Poly::T()).as_series(spec, M);
    TruncatedSeries stq =
        mod.s_a(Poly::T()).as_series(spec, ceil_div(M, q)).frobenius_pow(1).truncate(M);
    // W^{q-1} = Delta'^{1-q} t^{(q-1)(q^{r-1}-1)}
    TruncatedSeries wq1 = TruncatedSeries::monomial(
        CoefficientElement::gen_delta(spec, 1 - q),
        (q - 1) * (spec.qpow(spec.s()) - 1), M);
    return stq - st * wq1;
}

TruncatedSeries h_normalized(const GenericModule& mod, long long M, int threads) {
    const RingSpec& spec = mod.spec();
    long long q = spec.q();
    long long qr = spec.qpow(spec.r());
    TruncatedSeries out =
        TruncatedSeries::constant(CoefficientElement::one(spec), M);
    for (int d = 1;; ++d) {
        // Pi(d)^{q^r-1} = 1 + o(t^{(q-1)(q^{(r-1)d}-1)})
        if ((q - 1) * (spec.qpow((long long)spec.s() * d) - 1) >= M) break;
        TruncatedSeries pd = pi_product(mod, d, M, threads);
        TruncatedSeries pd_qr =
            pi_product(mod, d, ceil_div(M, qr), threads).frobenius_pow(spec.r());
        out = out * (pd_qr.truncate(M) * pd.invert());  // Pi(d)^{q^r} / Pi(d)
    }
    return out;
}

TruncatedSeries h_closed(const GenericModule& mod, long long M, int threads) {
    return pi_product(mod, 1, M, threads).invert();
}

TruncatedSeries delta_product_route(const GenericModule& mod, long long M, int threads) {
    const RingSpec& spec = mod.spec();
    long long q = spec.q();
    if (M <= q - 1) return TruncatedSeries::zero(spec, M);
    TruncatedSeries H = h_normalized(mod, M - (q - 1), threads);
    // H^{q-1} = H^q / H
    TruncatedSeries hq =
        h_normalized(mod, ceil_div(M - (q - 1), q), threads).frobenius_pow(1);
    TruncatedSeries hq1 = hq.truncate(M - (q - 1)) * H.invert();
    return hq1.shift_up(q - 1).scale(-CoefficientElement::gen_delta(spec, q)).truncate(M);
}

namespace bounds {

long long eisenstein(const RingSpec& spec, int k) {
    long long q = spec.q();
    if (q == 2) return spec.qpow(k - 1) * (spec.qpow(spec.r()) - 1);
    return 3 * (q - 1) * spec.qpow(k + spec.r() - 2);
}

long long g_theorem(const RingSpec& spec) {
    long long q = spec.q();
    if (q == 2) return 3 * spec.qpow(spec.r() - 1) - 1;
    return 3 * (q - 1) * spec.qpow(spec.r() - 1);
}

long long theta_order(const RingSpec& spec, int j, int d) {
    long long q = spec.q();
    if (q == 2 && d == 1) return spec.qpow(spec.r() + j - 1) - 1;
    long long sd = (long long)spec.s() * d;
    return 3 * spec.qpow(sd + j) - 2 * spec.qpow(sd + j - 1) - spec.qpow(sd);
}

long long sigma_order(const RingSpec& spec, int j, int d) {
    long long sd = (long long)spec.s() * d;
    return 2 * (spec.qpow(sd + j) - spec.qpow(sd + j - 1));
}

long long tate(const RingSpec& spec, int i) {
    long long q = spec.q();
    if (q == 2)
        return spec.qpow(spec.r() + i) - spec.qpow(spec.r() - 1) - 1;
    return 3 * spec.qpow(spec.r() + i - 1) -
           (2 * spec.qpow(i - 1) + 1) * spec.qpow(spec.r() - 1);
}

long long pi1_exact_order(const RingSpec& spec) {
    return (spec.q() - 1) * (spec.qpow(spec.r() - 1) - 1);
}

long long pi2_exact_order(const RingSpec& spec) {
    return (spec.q() - 1) * (spec.qpow(2 * spec.r() - 1) - spec.qpow(spec.r()));
}

long long h_congruence(const RingSpec& spec) { return pi2_exact_order(spec); }

long long nonspecial_crude(const RingSpec& spec) {
    return spec.qpow(spec.r()) - spec.qpow(spec.r() - 2);
}

}  // namespace bounds

}  // namespace dmf
