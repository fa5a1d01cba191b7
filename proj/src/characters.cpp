#include "ffhg/characters.hpp"

#include <numeric>

namespace ffhg {

MulChar::MulChar(const PrimeContext& ctx, int conductor, int t) : ctx_(&ctx), n_(conductor), t_(t) {
    if (!conductor_allowed(n_)) throw ConductorTooLarge("character conductor " + std::to_string(n_) + " (exact mode supports divisors of 24)");
    if ((ctx.p() - 1) % n_ != 0) throw OrderNotDividing("character conductor must divide p-1");
    t_ %= n_;
    if (t_ < 0) t_ += n_;
}

int MulChar::order() const { return n_ / (int)std::gcd((long long)n_, (long long)t_); }

MulChar MulChar::pow(long long j) const {
    long long e = (t_ * (j % n_)) % n_;
    return MulChar(*ctx_, n_, (int)e);
}

MulChar operator*(const MulChar& a, const MulChar& b) {
    if (a.ctx_ != b.ctx_) throw Error("character product across different contexts");
    int m = std::lcm(a.n_, b.n_);
    if (!conductor_allowed(m)) throw ConductorTooLarge("character product conductor " + std::to_string(m));
    long long t = ((long long)a.t_ * (m / a.n_) + (long long)b.t_ * (m / b.n_)) % m;
    return MulChar(*a.ctx_, m, (int)t);
}

int MulChar::exp_at(i64 x) const {
    i64 r = ctx_->reduce(x);
    if (r == 0) return -1;
    return (int)(((long long)t_ * ctx_->dlog(r)) % n_);
}

int MulChar::exp_in(int m, i64 x) const {
    int e = exp_at(x);
    return e < 0 ? -1 : e * (m / n_);
}

CycInt MulChar::eval(i64 x) const {
    int e = exp_at(x);
    if (e < 0) return CycInt(n_);
    return CycInt::zeta_pow(n_, e);
}

int MulChar::sign_at_minus_one() const {
    int e = exp_at(ctx_->p() - 1);
    if (e == 0) return 1;
    if (2 * e == n_) return -1;
    throw Error("sign_at_minus_one: unexpected exponent");
}

MulChar char_from_ideal(const PrimeContext& ctx, int order) {
    if (order == 1) return MulChar::trivial(ctx);
    i64 p = ctx.p();
    i64 r = ctx.root(order);
    // g^((p-1)/N) and r_N both generate mu_N in F_p; find u with r_N = G^u,
    // then psi(g) = zeta_N^(u^-1).
    i64 base = ctx.pow(ctx.generator(), (p - 1) / order);
    i64 v = 1;
    int u = -1;
    for (int k = 1; k <= order; ++k) {
        v = ctx.mul(v, base);
        if (v == r) { u = k; break; }
    }
    if (u < 0 || std::gcd((long long)u, (long long)order) != 1)
        throw Error("char_from_ideal: stored root is not primitive of the requested order");
    int t = (int)mod_inv(u, order);
    return MulChar(ctx, order, t);
}

CycInt jacobi_sum(const MulChar& a, const MulChar& b) {
    if (&a.ctx() != &b.ctx()) throw Error("jacobi_sum: characters from different contexts");
    const PrimeContext& ctx = a.ctx();
    int m = std::lcm(a.conductor(), b.conductor());
    if (!conductor_allowed(m)) throw ConductorTooLarge("jacobi_sum conductor " + std::to_string(m));
    i64 p = ctx.p();
    std::vector<long long> counts(m, 0);
    // Terms at x in {0, 1} vanish under the chi(0) = 0 convention.
    for (i64 x = 2; x < p; ++x) {
        int ea = a.exp_in(m, x);
        int eb = b.exp_in(m, p + 1 - x);
        counts[(ea + eb) % m]++;
    }
    return CycInt::from_root_counts(m, counts);
}

HGValue greene_binomial(const MulChar& a, const MulChar& b) {
    CycInt j = jacobi_sum(a, b.conj());
    CycInt num = b.sign_at_minus_one() == 1 ? j : -j;
    return HGValue(std::move(num), a.ctx().p(), 1);
}

} // namespace ffhg
