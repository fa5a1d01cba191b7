#pragma once

#include "ffhg/cyclotomic.hpp"
#include "ffhg/field_core.hpp"
#include "ffhg/hg_value.hpp"

namespace ffhg {

// Multiplicative character of F_p^x with values in mu_N, represented by the
// pair (N, t) against the context's fixed generator: chi(g) = zeta_N^t.
// Evaluation goes through the dlog table; chi(0) = 0 by convention.
class MulChar {
public:
    MulChar(const PrimeContext& ctx, int conductor, int t);

    static MulChar trivial(const PrimeContext& ctx) { return MulChar(ctx, 1, 0); }
    static MulChar quadratic(const PrimeContext& ctx) { return MulChar(ctx, 2, 1); }

    const PrimeContext& ctx() const { return *ctx_; }
    int conductor() const { return n_; }
    int t() const { return t_; }
    int order() const;
    bool is_trivial() const { return order() == 1; }

    MulChar pow(long long j) const;
    MulChar conj() const { return pow(-1); }
    friend MulChar operator*(const MulChar& a, const MulChar& b);

    /// Exponent e with chi(x) = zeta_N^e, or -1 when x = 0 mod p.
    int exp_at(i64 x) const;
    /// Same value expressed in conductor M (N | M): chi(x) = zeta_M^e.
    int exp_in(int m, i64 x) const;

    CycInt eval(i64 x) const;
    /// chi(-1) as +-1.
    int sign_at_minus_one() const;

private:
    const PrimeContext* ctx_;
    int n_;
    int t_;
};

/// The canonical character psi of exact order N attached to the prime ideal
/// (p, zeta_N - r_N): psi(x) = zeta_N^k where x^((p-1)/N) = r_N^k mod p.
MulChar char_from_ideal(const PrimeContext& ctx, int order);

/// sum over x of A(x) B(1-x), exact, in Z[zeta_lcm].
CycInt jacobi_sum(const MulChar& a, const MulChar& b);

/// Normalized Jacobi sum B(-1) J(A, conj(B)) / p.
HGValue greene_binomial(const MulChar& a, const MulChar& b);

} // namespace ffhg
