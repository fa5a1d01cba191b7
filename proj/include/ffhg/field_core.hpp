#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "ffhg/errors.hpp"

namespace ffhg {

using i64 = std::int64_t;

/// Deterministic Miller-Rabin, valid for all n below 3.3 * 10^24.
bool is_prime(i64 n);

i64 mod_pow(i64 base, i64 exp, i64 m);
i64 mod_inv(i64 a, i64 m);

/// Which quadratic subfield generator to read off a stored cyclotomic root.
enum class Subfield {
    SqrtMinus2,   // zeta8 + zeta8^3, needs r_8
    IFromZeta12,  // zeta12^3, needs r_12
    SqrtMinus3,   // 2*zeta12^2 - 1, needs r_12
};

// An odd prime p together with the smallest primitive root g, a full
// discrete-log table for F_p^x, and canonical roots r_N of the cyclotomic
// polynomials Phi_N mod p. The pair (p, r_N) pins the prime ideal
// (p, zeta_N - r_N) that every exact character construction refers to.
// Immutable after construction; safe to share across threads.
class PrimeContext {
public:
    PrimeContext(i64 p, const std::set<int>& orders, const std::map<int, i64>& root_overrides = {});

    i64 p() const { return p_; }
    i64 generator() const { return g_; }

    /// k in [0, p-1) with g^k = x; throws ZeroArgument on x = 0.
    i64 dlog(i64 x) const;

    /// Legendre symbol via dlog parity; 0 at x = 0.
    int quadratic_character(i64 x) const;

    bool has_root(int order) const { return roots_.count(order) != 0; }
    i64 root(int order) const;

    /// Residue of a quadratic subfield generator under zeta_N -> r_N.
    i64 derived_root(Subfield target) const;

    const std::map<int, i64>& roots() const { return roots_; }

    i64 reduce(i64 x) const { i64 r = x % p_; return r < 0 ? r + p_ : r; }
    i64 mul(i64 a, i64 b) const { return (a % p_) * (b % p_) % p_; }
    i64 pow(i64 base, i64 exp) const { return mod_pow(reduce(base), exp, p_); }
    i64 inv(i64 a) const { return mod_inv(reduce(a), p_); }

    bool is_square(i64 x) const { return quadratic_character(x) >= 0; }
    /// Smaller of the two square roots; throws NoSquareRoot.
    i64 sqrt(i64 x) const;

private:
    i64 p_;
    i64 g_;
    std::vector<std::int32_t> dlog_;
    std::map<int, i64> roots_;
};

PrimeContext make_prime_context(i64 p, const std::set<int>& orders);

std::vector<i64> prime_factors(i64 n);

} // namespace ffhg
