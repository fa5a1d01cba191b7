#pragma once

#include <string>

#include "ffhg/curves.hpp"
#include "ffhg/cyclotomic.hpp"
#include "ffhg/field_core.hpp"

namespace ffhg {

// Element x + y*omega of Z[i], Z[sqrt(-2)] or Z[zeta6], tagged by the ring
// discriminant D in {-1, -2, -3} (omega = i, sqrt(-2), zeta6 respectively).
struct QuadInt {
    int D = -1;
    i64 x = 0, y = 0;

    i64 norm() const;
    i64 trace() const { return D == -3 ? 2 * x + y : 2 * x; }
    QuadInt conj() const;
    QuadInt neg() const { return {D, -x, -y}; }
    friend QuadInt operator*(const QuadInt& a, const QuadInt& b);
    friend bool operator==(const QuadInt& a, const QuadInt& b) = default;

    /// x + y*w rendering, e.g. "3+2*w", "0-1*w".
    std::string str() const;

    /// Image in Z[zeta_m] (minimal conductors 4, 8, 6 respectively).
    CycInt to_cyc(int conductor) const;
};

/// Kronecker symbol (a | n), n any integer.
int kronecker(i64 a, i64 n);

/// Representation p = x^2 + |D| y^2 (for D = -3, converted to Eisenstein
/// coordinates with x^2 + xy + y^2 = p). Deterministic: descends from the
/// smallest square root of D mod p.
QuadInt cornacchia(i64 p, int D);

enum class HeckeCurve {
    QuarticTwist,   // y^2 = x^3 - x       over Z[i]
    OcticTwist,     // y^2 = x^3 + 4x^2 + 2x over Z[sqrt(-2)]
    SexticTwist,    // y^2 = x^3 + 1       over Z[zeta6]
    DuodecicTwist,  // y^2 = x^3 - 3x      over Z[i]
};

CurveSpec curve_for(HeckeCurve tag);
std::string hecke_tag_name(HeckeCurve tag);

// Value of a CM Hecke character at the prime above p pinned by ideal_root
// (the residue of omega). Generator of the ideal, unit-normalized so that
// norm = p, membership x + y*ideal_root = 0 mod p, and trace = a_p hold.
struct HeckeValue {
    QuadInt value;
    i64 p = 0;
    i64 ideal_root = 0;
    HeckeCurve tag = HeckeCurve::QuarticTwist;

    bool norm_is_p() const { return value.norm() == p; }
    bool in_ideal() const {
        i64 v = (value.x + value.y * ideal_root) % p;
        return (v + p) % p == 0;
    }

    /// Checks norm, ideal membership and the trace identity against a
    /// brute-force point count; throws NormalizationMismatch on failure.
    void validate(const PrimeContext& ctx) const;
};

HeckeValue hecke_zi(const PrimeContext& ctx);
HeckeValue hecke_z2(const PrimeContext& ctx);
HeckeValue hecke_z6(const PrimeContext& ctx);
HeckeValue hecke_zi_twisted(const PrimeContext& ctx);

/// The two explicit descriptions of the Z[i] character applied to a given
/// generator: unique-fourth-root form and the parity form. Both transform
/// the same way under change of generator, so their agreement is testable.
QuadInt zi_remark_fourth_root(const QuadInt& gen);
QuadInt zi_remark_parity(const QuadInt& gen);

/// Associate of gen congruent to 1 mod (1+i)^3.
QuadInt zi_primary_associate(const QuadInt& gen);

} // namespace ffhg
