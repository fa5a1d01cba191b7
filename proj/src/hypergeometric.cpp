#include "ffhg/hypergeometric.hpp"

#include <numeric>

namespace ffhg {

CycInt f_eta(const PrimeContext& ctx, const MulChar& eta, i64 z) {
    if (&eta.ctx() != &ctx) throw Error("f_eta: context mismatch");
    if (eta.is_trivial()) throw Error("f_eta: eta must be nontrivial");
    MulChar phi_etabar = MulChar::quadratic(ctx) * eta.conj();
    int m = std::lcm(eta.conductor(), phi_etabar.conductor());
    if (!conductor_allowed(m)) throw ConductorTooLarge("f_eta conductor " + std::to_string(m));
    i64 p = ctx.p();
    i64 zr = ctx.reduce(z);
    std::vector<long long> counts(m, 0);
    for (i64 x = 0; x < p; ++x) {
        if (x == 0 || x == 1 || x == zr) continue;
        int e0 = eta.exp_in(m, x);
        int e1 = phi_etabar.exp_in(m, x - 1 + p);
        int e2 = phi_etabar.exp_in(m, x - zr + p);
        counts[(e0 + e1 + e2) % m]++;
    }
    return CycInt::from_root_counts(m, counts);
}

CycInt power_twisted_sum(const PrimeContext& ctx, const MulChar& chi, int e, i64 z) {
    if (&chi.ctx() != &ctx) throw Error("power_twisted_sum: context mismatch");
    int m = chi.conductor();
    i64 p = ctx.p();
    i64 zr = ctx.reduce(z);
    std::vector<long long> counts(m, 0);
    for (i64 x = 0; x < p; ++x) {
        if ((e > 0 && x == 0) || x == 1 || x == zr) continue;
        long long dl = (e > 0) ? (long long)e * ctx.dlog(x) : 0;
        dl += ctx.dlog(x - 1 + p) + ctx.dlog(x - zr + p);
        counts[((long long)chi.t() * (dl % m)) % m]++;
    }
    return CycInt::from_root_counts(m, counts);
}

CycInt s_eta(const PrimeContext& ctx, const MulChar& eta_prime, i64 z) {
    int order = eta_prime.order();
    if (order % 2 != 0) throw OddOrder("s_eta: character order " + std::to_string(order) + " is odd");
    return power_twisted_sum(ctx, eta_prime, order / 2 - 1, z);
}

HGValue hg2f1(const PrimeContext& ctx, const MulChar& a, const MulChar& b, const MulChar& c, i64 z) {
    if (&a.ctx() != &ctx || &b.ctx() != &ctx || &c.ctx() != &ctx) throw Error("hg2f1: context mismatch");
    int m = std::lcm(std::lcm(a.conductor(), b.conductor()), c.conductor());
    if (!conductor_allowed(m)) throw ConductorTooLarge("hg2f1 conductor " + std::to_string(m));
    i64 p = ctx.p();
    i64 zr = ctx.reduce(z);
    if (zr == 0) return HGValue::zero(p, m);

    MulChar abar = a.conj();
    MulChar c_bbar = c * b.conj();
    i64 zinv = ctx.inv(zr);
    std::vector<long long> counts(m, 0);
    for (i64 x = 0; x < p; ++x) {
        if (x == 0 || x == 1 || x == zinv) continue;
        int e0 = b.exp_in(m, x);
        int e1 = c_bbar.exp_in(m, 1 - x + p);
        int e2 = abar.exp_in(m, ctx.reduce(1 - ctx.mul(zr, x) + p));
        counts[(e0 + e1 + e2) % m]++;
    }
    CycInt num = CycInt::from_root_counts(m, counts);
    if (b.sign_at_minus_one() * c.sign_at_minus_one() < 0) num = -num;
    return HGValue(std::move(num), p, 1);
}

HGValue hg_n1fn(const PrimeContext& ctx, const std::vector<MulChar>& numerator_chars,
                const std::vector<MulChar>& denominator_chars, i64 z) {
    std::size_t n = denominator_chars.size();
    if (n < 1 || numerator_chars.size() != n + 1)
        throw Error("hg_n1fn: need n+1 numerator and n denominator characters with n >= 1");
    if (n == 1) return hg2f1(ctx, numerator_chars[0], numerator_chars[1], denominator_chars[0], z);

    i64 p = ctx.p();
    int m = 1;
    for (const auto& ch : numerator_chars) m = std::lcm(m, ch.conductor());
    for (const auto& ch : denominator_chars) m = std::lcm(m, ch.conductor());
    if (!conductor_allowed(m)) throw ConductorTooLarge("hg_n1fn conductor " + std::to_string(m));

    // Level-1 numerator table over all arguments; denominator p throughout.
    std::vector<CycInt> vals(p, CycInt(m));
    for (i64 w = 0; w < p; ++w)
        vals[w] = hg2f1(ctx, numerator_chars[0], numerator_chars[1], denominator_chars[0], w).num().embedded(m);

    // Each level folds sum_y A_k(y) (B_k conj(A_k))(1-y) F(z y), with the
    // B_k conj(A_k)(-1)/p prefactor the full character-sum definition forces.
    for (std::size_t k = 2; k <= n; ++k) {
        const MulChar& ak = numerator_chars[k];
        MulChar prod = denominator_chars[k - 1] * ak.conj();
        int sign = prod.sign_at_minus_one();
        std::vector<CycInt> next(p, CycInt(m));
        for (i64 w = 0; w < p; ++w) {
            CycInt acc(m);
            for (i64 y = 2; y < p; ++y) {
                int e = ak.exp_in(m, y);
                int e2 = prod.exp_in(m, 1 - y + p);
                const CycInt& inner = vals[ctx.mul(w, y)];
                if (inner.is_zero()) continue;
                acc += CycInt::zeta_pow(m, e + e2) * inner;
            }
            next[w] = sign > 0 ? acc : -acc;
        }
        vals = std::move(next);
    }
    return HGValue(vals[ctx.reduce(z)], p, (int)n);
}

std::complex<double> hg2f1_float_oracle(const PrimeContext& ctx, const MulChar& a, const MulChar& b,
                                        const MulChar& c, i64 z) {
    i64 p = ctx.p();
    i64 q1 = p - 1;
    i64 zr = ctx.reduce(z);
    if (zr == 0) return {0.0, 0.0};

    std::vector<std::complex<double>> root(q1);
    for (i64 k = 0; k < q1; ++k) root[k] = std::polar(1.0, 2.0 * M_PI * (double)k / (double)q1);
    auto chi = [&](i64 s, i64 x) -> std::complex<double> { return root[(s * ctx.dlog(x)) % q1]; };

    // Complex Jacobi sum J(chi_u, chi_v).
    auto jac = [&](i64 u, i64 v) {
        std::complex<double> acc = 0;
        for (i64 x = 2; x < p; ++x) acc += root[(u * ctx.dlog(x) + v * ctx.dlog(p + 1 - x)) % q1];
        return acc;
    };
    // binom(chi_u, chi_v) = chi_v(-1)/p J(chi_u, conj(chi_v)).
    auto binom = [&](i64 u, i64 v) { return chi(v, p - 1) * jac(u, (q1 - v) % q1) / (double)p; };

    i64 sa = (i64)a.t() * (q1 / a.conductor());
    i64 sb = (i64)b.t() * (q1 / b.conductor());
    i64 sc = (i64)c.t() * (q1 / c.conductor());

    std::complex<double> acc = 0;
    for (i64 s = 0; s < q1; ++s)
        acc += binom((sa + s) % q1, s) * binom((sb + s) % q1, (sc + s) % q1) * chi(s, zr);
    return acc * ((double)p / (double)q1);
}

} // namespace ffhg
