#include "ffhg/field_core.hpp"

#include <algorithm>
#include <numeric>

namespace ffhg {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod_u(u64 a, u64 b, u64 m) { return (u128)a * b % m; }

u64 powmod_u(u64 base, u64 exp, u64 m) {
    u64 r = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) r = mulmod_u(r, base, m);
        base = mulmod_u(base, base, m);
        exp >>= 1;
    }
    return r;
}

} // namespace

bool is_prime(i64 n) {
    if (n < 2) return false;
    for (i64 q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    // First 13 prime bases: deterministic below 3.317e24.
    for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41}) {
        u64 x = powmod_u(a, d, n);
        if (x == 1 || x == (u64)n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u(x, x, n);
            if (x == (u64)n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

i64 mod_pow(i64 base, i64 exp, i64 m) { return (i64)powmod_u((u64)((base % m + m) % m), (u64)exp, (u64)m); }

i64 mod_inv(i64 a, i64 m) {
    i64 t = 0, nt = 1, r = m, nr = (a % m + m) % m;
    while (nr != 0) {
        i64 q = r / nr;
        i64 tmp = t - q * nt; t = nt; nt = tmp;
        tmp = r - q * nr; r = nr; nr = tmp;
    }
    if (r != 1) throw Error("mod_inv: argument not invertible");
    return t < 0 ? t + m : t;
}

std::vector<i64> prime_factors(i64 n) {
    std::vector<i64> fs;
    for (i64 q = 2; q * q <= n; ++q) {
        if (n % q == 0) {
            fs.push_back(q);
            while (n % q == 0) n /= q;
        }
    }
    if (n > 1) fs.push_back(n);
    return fs;
}

PrimeContext::PrimeContext(i64 p, const std::set<int>& orders, const std::map<int, i64>& root_overrides) : p_(p) {
    if (p < 3 || !is_prime(p)) throw NotPrime("make_prime_context: " + std::to_string(p) + " is not an odd prime");
    if (p > 10'000'000) throw Error("p exceeds desk scale (the dlog table is O(p) memory)");
    for (int n : orders) {
        if (n < 1 || (p - 1) % n != 0)
            throw OrderNotDividing("order " + std::to_string(n) + " does not divide p-1 for p=" + std::to_string(p));
    }

    const auto factors = prime_factors(p - 1);
    for (i64 g = 2; g < p; ++g) {
        bool primitive = true;
        for (i64 q : factors) {
            if (mod_pow(g, (p - 1) / q, p) == 1) { primitive = false; break; }
        }
        if (primitive) { g_ = g; break; }
    }

    dlog_.assign(p, -1);
    i64 x = 1;
    for (i64 k = 0; k < p - 1; ++k) {
        dlog_[x] = (std::int32_t)k;
        x = x * g_ % p;
    }

    for (int n : orders) {
        // Roots of Phi_N mod p are exactly the elements of order N; they are
        // the powers g^(k(p-1)/N) with gcd(k, N) = 1. Pick the smallest residue.
        i64 base = mod_pow(g_, (p - 1) / n, p);
        i64 best = -1;
        i64 r = 1;
        for (int k = 1; k <= n; ++k) {
            r = r * base % p;
            if (std::gcd((i64)k, (i64)n) == 1 && (best == -1 || r < best)) best = r;
        }
        roots_[n] = best;
    }

    for (const auto& [n, r] : root_overrides) {
        if (roots_.count(n) == 0) throw OrderNotDividing("root override for order " + std::to_string(n) + " not in the requested orders");
        i64 rr = reduce(r);
        if (rr == 0) throw Error("root override must be nonzero");
        i64 ord = (p - 1) / std::gcd((i64)dlog_[rr], p - 1);
        if (ord != n)
            throw Error("override " + std::to_string(r) + " is not a root of Phi_" + std::to_string(n) + " mod " + std::to_string(p));
        roots_[n] = rr;
    }
}

PrimeContext make_prime_context(i64 p, const std::set<int>& orders) { return PrimeContext(p, orders); }

i64 PrimeContext::dlog(i64 x) const {
    i64 r = reduce(x);
    if (r == 0) throw ZeroArgument("dlog of zero");
    return dlog_[r];
}

int PrimeContext::quadratic_character(i64 x) const {
    i64 r = reduce(x);
    if (r == 0) return 0;
    return (dlog_[r] & 1) ? -1 : 1;
}

i64 PrimeContext::root(int order) const {
    auto it = roots_.find(order);
    if (it == roots_.end())
        throw MissingRoot("no stored root of order " + std::to_string(order) + " for p=" + std::to_string(p_));
    return it->second;
}

i64 PrimeContext::derived_root(Subfield target) const {
    switch (target) {
    case Subfield::SqrtMinus2: {
        i64 r8 = root(8);
        return reduce(r8 + mod_pow(r8, 3, p_));
    }
    case Subfield::IFromZeta12:
        return mod_pow(root(12), 3, p_);
    case Subfield::SqrtMinus3:
        return reduce(2 * mod_pow(root(12), 2, p_) - 1);
    }
    throw Error("derived_root: bad target");
}

i64 PrimeContext::sqrt(i64 x) const {
    i64 r = reduce(x);
    if (r == 0) return 0;
    i64 k = dlog_[r];
    if (k & 1) throw NoSquareRoot("sqrt: " + std::to_string(r) + " is a nonsquare mod " + std::to_string(p_));
    i64 s = mod_pow(g_, k / 2, p_);
    return std::min(s, p_ - s);
}

} // namespace ffhg
