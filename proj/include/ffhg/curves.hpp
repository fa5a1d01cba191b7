#pragma once

#include <string>

#include "ffhg/field_core.hpp"

namespace ffhg {

enum class CurveFamily { Elliptic, CFamily, DFamily };

// One of the supported curve families:
//   Elliptic: c y^2 = x^3 + a2 x^2 + a4 x + a6
//   CFamily:  y^N = c x^(N/2-1)(x-1)(x-a)        (N even)
//             y^(2N) = c x (x-1)^(N-1) (x-a)^(N-1)  (N odd)
//   DFamily:  c y^2 = x^(N/2+1) + c d x
struct CurveSpec {
    CurveFamily family = CurveFamily::Elliptic;
    int N = 0;
    i64 a = 0, c = 1, d = 0;
    i64 a2 = 0, a4 = 0, a6 = 0;

    static CurveSpec elliptic(i64 c, i64 a2, i64 a4, i64 a6);
    static CurveSpec c_family(int n, i64 a, i64 c);
    static CurveSpec d_family(int n, i64 c, i64 d);

    std::string str() const;
};

struct TraceRecord {
    i64 p = 0;
    CurveSpec curve;
    i64 count = 0;  // F_p-points under the family's counting convention
    i64 trace = 0;  // p + 1 - count
};

/// Point count of a nonsingular Weierstrass curve; asserts the Hasse bound.
TraceRecord count_elliptic(const PrimeContext& ctx, const CurveSpec& spec);

/// Brute-force count of c y^2 = x^(N/2+1) + c d x with the convention of one
/// point at infinity for N = 0 mod 4 and 1 + phi(c) points for N = 2 mod 4.
TraceRecord count_D(const PrimeContext& ctx, int n, i64 c, i64 d);

/// Jacobi-sum formula for the same count; the cyclotomic character sum must
/// reduce to a rational integer (NotRational flags an arithmetic bug).
i64 jacobi_formula_D(const PrimeContext& ctx, int n, i64 c, i64 d);

/// Direct count of the C-family counting quantity (affine points plus the
/// resolved boundary term: +1 when the y-exponent is 0 mod 4, +1+2 phi(c)
/// when it is 2 mod 4).
i64 count_C(const PrimeContext& ctx, int n, i64 a, i64 c);

/// Checks the quotient morphism on (up to sample_size, 0 = all) affine
/// points of C_{N,a,c}; requires a to be a square mod p.
bool morphism_check(const PrimeContext& ctx, int n, i64 a, i64 c, i64 sample_size);

} // namespace ffhg
