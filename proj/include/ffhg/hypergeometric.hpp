#pragma once

#include <complex>
#include <vector>

#include "ffhg/characters.hpp"
#include "ffhg/hg_value.hpp"

namespace ffhg {

/// F_eta(z) = sum over x of eta(x) (phi conj(eta))(x-1) (phi conj(eta))(x-z).
CycInt f_eta(const PrimeContext& ctx, const MulChar& eta, i64 z);

/// sum over x of chi(x^e (x-1)(x-z)); the building block behind the S-sums
/// and the superelliptic count decompositions (e is the curve's x-exponent).
CycInt power_twisted_sum(const PrimeContext& ctx, const MulChar& chi, int e, i64 z);

/// S_eta'(z) with e = order/2 - 1; order must be even (>= 4 in intended use).
CycInt s_eta(const PrimeContext& ctx, const MulChar& eta_prime, i64 z);

/// Exact 2F1(A, B; C; z) = eps(z) BC(-1)/p sum_x B(x) (C conj(B))(1-x) conj(A)(1-zx).
HGValue hg2f1(const PrimeContext& ctx, const MulChar& a, const MulChar& b, const MulChar& c, i64 z);

/// Inductive n+1Fn; numerator_chars = A_0..A_n, denominator_chars = B_1..B_n.
/// Denominator is p^n. Desk scale: cost O(n p^2).
HGValue hg_n1fn(const PrimeContext& ctx, const std::vector<MulChar>& numerator_chars,
                const std::vector<MulChar>& denominator_chars, i64 z);

/// Greene's full definition evaluated in complex floating point over all
/// p-1 characters; the independent oracle for the exact path.
std::complex<double> hg2f1_float_oracle(const PrimeContext& ctx, const MulChar& a, const MulChar& b,
                                        const MulChar& c, i64 z);

} // namespace ffhg
