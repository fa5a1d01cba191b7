#pragma once

#include <gmpxx.h>

#include <span>
#include <string>
#include <vector>

#include "ffhg/errors.hpp"

namespace ffhg {

/// Conductors with exact arithmetic support (divisors of 24).
bool conductor_allowed(int n);

// Exact element of Z[zeta_N], N | 24, stored as the canonical coordinate
// vector in the power basis {1, zeta, ..., zeta^(phi(N)-1)} reduced mod
// Phi_N. Coefficients are arbitrary-precision integers. Pure value type.
class CycInt {
public:
    CycInt() : CycInt(1) {}
    explicit CycInt(int conductor);

    static CycInt from_int(long long v, int conductor = 1);
    static CycInt from_mpz(const mpz_class& v, int conductor = 1);
    static CycInt zeta(int conductor);
    /// zeta_N^k for any integer k (reduced mod N).
    static CycInt zeta_pow(int conductor, long long k);
    /// sum_k counts[k] * zeta_N^k from an exponent histogram of length N.
    static CycInt from_root_counts(int conductor, std::span<const long long> counts);

    int conductor() const { return n_; }
    const std::vector<mpz_class>& coeffs() const { return c_; }
    const mpz_class& coeff(std::size_t i) const { return c_[i]; }

    bool is_zero() const;
    bool is_rational() const;
    /// Coefficient of 1; throws NotRational if higher coordinates are nonzero.
    mpz_class rational_part() const;

    CycInt operator-() const;
    CycInt& operator+=(const CycInt& o);
    CycInt& operator-=(const CycInt& o);
    friend CycInt operator+(CycInt a, const CycInt& b) { return a += b; }
    friend CycInt operator-(CycInt a, const CycInt& b) { return a -= b; }
    friend CycInt operator*(const CycInt& a, const CycInt& b);
    friend bool operator==(const CycInt& a, const CycInt& b);

    /// Image under zeta_N -> zeta_M^(M/N); injective ring homomorphism.
    CycInt embedded(int m) const;
    /// Image under the Galois automorphism zeta -> zeta^j, gcd(j, N) = 1.
    CycInt galois(long long j) const;
    /// Complex conjugate (the j = -1 automorphism).
    CycInt conj() const;
    /// a * conj(a); asserts the product is a rational integer.
    mpz_class abs_square() const;

    /// True if every coefficient is divisible by d; divides in place if so.
    bool divide_if_divisible(const mpz_class& d);

    /// Canonical rendering "c0 + c1*z + c2*z^2 + ..." (all phi(N) terms).
    std::string str() const;
    static CycInt parse(const std::string& text, int conductor);

    /// (real, imag) under zeta_N -> exp(2*pi*i/N).
    std::pair<double, double> complex_approx() const;

private:
    int n_;
    std::vector<mpz_class> c_;
};

/// Embed both operands into lcm of conductors, then multiply.
CycInt mul_embedded(const CycInt& a, const CycInt& b);
/// Exact equality after embedding into a common conductor.
bool eq_embedded(const CycInt& a, const CycInt& b);

} // namespace ffhg
