#include "ffhg/hecke.hpp"

#include <array>
#include <cmath>
#include <sstream>

namespace ffhg {

i64 QuadInt::norm() const {
    switch (D) {
    case -1: return x * x + y * y;
    case -2: return x * x + 2 * y * y;
    case -3: return x * x + x * y + y * y;
    }
    throw Error("QuadInt: bad ring tag");
}

QuadInt QuadInt::conj() const {
    if (D == -3) return {D, x + y, -y};
    return {D, x, -y};
}

QuadInt operator*(const QuadInt& a, const QuadInt& b) {
    if (a.D != b.D) throw Error("QuadInt: ring mismatch");
    switch (a.D) {
    case -1: return {-1, a.x * b.x - a.y * b.y, a.x * b.y + a.y * b.x};
    case -2: return {-2, a.x * b.x - 2 * a.y * b.y, a.x * b.y + a.y * b.x};
    case -3: return {-3, a.x * b.x - a.y * b.y, a.x * b.y + a.y * b.x + a.y * b.y};
    }
    throw Error("QuadInt: bad ring tag");
}

std::string QuadInt::str() const {
    std::ostringstream os;
    os << x << (y < 0 ? "-" : "+") << (y < 0 ? -y : y) << "*w";
    return os.str();
}

CycInt QuadInt::to_cyc(int conductor) const {
    CycInt base(1);
    switch (D) {
    case -1: {
        CycInt v = CycInt::from_int(x, 4) + CycInt::from_int(y, 4) * CycInt::zeta(4);
        return v.embedded(conductor);
    }
    case -2: {
        CycInt sqrtm2 = CycInt::zeta(8) + CycInt::zeta_pow(8, 3);
        CycInt v = CycInt::from_int(x, 8) + CycInt::from_int(y, 8) * sqrtm2;
        return v.embedded(conductor);
    }
    case -3: {
        CycInt v = CycInt::from_int(x, 6) + CycInt::from_int(y, 6) * CycInt::zeta(6);
        return v.embedded(conductor);
    }
    }
    throw Error("QuadInt: bad ring tag");
}

int kronecker(i64 a, i64 n) {
    if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
    int result = 1;
    if (n < 0) {
        n = -n;
        if (a < 0) result = -result;
    }
    int twos = 0;
    while (n % 2 == 0) { n /= 2; ++twos; }
    if (twos) {
        if (a % 2 == 0) return 0;
        i64 am8 = ((a % 8) + 8) % 8;
        if (twos % 2 == 1 && (am8 == 3 || am8 == 5)) result = -result;
    }
    a = ((a % n) + n) % n;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            if (n % 8 == 3 || n % 8 == 5) result = -result;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) result = -result;
        a %= n;
    }
    return n == 1 ? result : 0;
}

QuadInt cornacchia(i64 p, int D) {
    int ad = -D;
    if (ad < 1 || ad > 3) throw Error("cornacchia: D must be -1, -2 or -3");
    bool ok = (D == -1 && p % 4 == 1) || (D == -2 && (p % 8 == 1 || p % 8 == 3)) || (D == -3 && p % 3 == 1);
    if (!ok) throw NotRepresentable(std::to_string(p) + " is not of the form x^2+" + std::to_string(ad) + "y^2");

    i64 t = -1;
    for (i64 s = 1; s < p; ++s) {
        if (s * s % p == (p - ad) % p) { t = s; break; }
    }
    if (t < 0) throw NotRepresentable("no square root of " + std::to_string(-ad) + " mod " + std::to_string(p));

    i64 r0 = p, r1 = t;
    while (r1 * r1 > p) {
        i64 r2 = r0 % r1;
        r0 = r1;
        r1 = r2;
    }
    i64 x = r1;
    i64 rem = p - x * x;
    if (rem % ad != 0) throw NotRepresentable("cornacchia descent failed for " + std::to_string(p));
    i64 ysq = rem / ad;
    i64 y = (i64)std::sqrt((double)ysq);
    while (y * y < ysq) ++y;
    while (y * y > ysq) --y;
    if (x * x + ad * y * y != p) throw NotRepresentable("cornacchia descent failed for " + std::to_string(p));

    if (D == -3) return {-3, x - y, 2 * y};  // x + y sqrt(-3) = (x-y) + 2y zeta6
    return {D, x, y};
}

namespace {

const QuadInt kI{-1, 0, 1};
const QuadInt kZeta6{-3, 0, 1};

// Divisibility of a by m in Z[i].
bool zi_divides(const QuadInt& m, const QuadInt& a) {
    i64 n = m.norm();
    i64 re = a.x * m.x + a.y * m.y;
    i64 im = a.y * m.x - a.x * m.y;
    return re % n == 0 && im % n == 0;
}

// Divisibility of a by m in Z[zeta6].
bool eis_divides(const QuadInt& m, const QuadInt& a) {
    i64 n = m.norm();
    i64 re = a.x * (m.x + m.y) + a.y * m.y;
    i64 im = a.y * m.x - a.x * m.y;
    return re % n == 0 && im % n == 0;
}

i64 mod_reduce(i64 v, i64 p) { return ((v % p) + p) % p; }

} // namespace

QuadInt zi_primary_associate(const QuadInt& gen) {
    const QuadInt onepi3{-1, -2, 2};  // (1+i)^3
    QuadInt v = gen;
    for (int k = 0; k < 4; ++k) {
        if (zi_divides(onepi3, {-1, v.x - 1, v.y})) return v;
        v = v * kI;
    }
    throw NormalizationMismatch("no associate congruent to 1 mod (1+i)^3");
}

QuadInt zi_remark_fourth_root(const QuadInt& gen) {
    const QuadInt onepi3{-1, -2, 2};
    QuadInt ik{-1, 1, 0};
    for (int k = 0; k < 4; ++k) {
        if (zi_divides(onepi3, {-1, gen.x - ik.x, gen.y - ik.y})) return ik * gen;
        ik = ik * kI;
    }
    throw NormalizationMismatch("generator not congruent to any fourth root of unity mod (1+i)^3");
}

QuadInt zi_remark_parity(const QuadInt& gen) {
    i64 a = gen.x, b = gen.y;
    if (((a % 2) + 2) % 2 == 1) {
        // a odd, b even
        int sign = (((b / 2) % 2) != 0 ? -1 : 1) * kronecker(-1, a);
        return sign > 0 ? gen : gen.neg();
    }
    // a even, b odd
    int sign = (((a / 2) % 2) != 0 ? -1 : 1) * kronecker(-1, b);
    QuadInt rotated = gen * kI;
    return sign > 0 ? rotated : rotated.neg();
}

CurveSpec curve_for(HeckeCurve tag) {
    switch (tag) {
    case HeckeCurve::QuarticTwist: return CurveSpec::elliptic(1, 0, -1, 0);
    case HeckeCurve::OcticTwist: return CurveSpec::elliptic(1, 4, 2, 0);
    case HeckeCurve::SexticTwist: return CurveSpec::elliptic(1, 0, 0, 1);
    case HeckeCurve::DuodecicTwist: return CurveSpec::elliptic(1, 0, -3, 0);
    }
    throw Error("curve_for: bad tag");
}

std::string hecke_tag_name(HeckeCurve tag) {
    switch (tag) {
    case HeckeCurve::QuarticTwist: return "zi";
    case HeckeCurve::OcticTwist: return "z2";
    case HeckeCurve::SexticTwist: return "z6";
    case HeckeCurve::DuodecicTwist: return "zi-twisted";
    }
    return "?";
}

void HeckeValue::validate(const PrimeContext& ctx) const {
    if (!norm_is_p())
        throw NormalizationMismatch("hecke " + hecke_tag_name(tag) + " at p=" + std::to_string(p) + ": norm != p");
    if (!in_ideal())
        throw NormalizationMismatch("hecke " + hecke_tag_name(tag) + " at p=" + std::to_string(p) + ": value not in the ideal");
    TraceRecord rec = count_elliptic(ctx, curve_for(tag));
    if (rec.trace != value.trace())
        throw NormalizationMismatch("hecke " + hecke_tag_name(tag) + " at p=" + std::to_string(p) + ": trace " +
                                    std::to_string(value.trace()) + " != a_p " + std::to_string(rec.trace));
}

HeckeValue hecke_zi(const PrimeContext& ctx) {
    i64 p = ctx.p();
    if (p % 4 != 1) throw CongruenceViolation("hecke_zi needs p = 1 mod 4");
    i64 r4 = ctx.root(4);
    QuadInt g0 = cornacchia(p, -1);
    // Candidates a+bi and b+ai with all signs; membership picks the associate
    // class generating (p, i - r4).
    std::array<QuadInt, 8> cands = {{{-1, g0.x, g0.y}, {-1, g0.x, -g0.y}, {-1, -g0.x, g0.y}, {-1, -g0.x, -g0.y},
                                     {-1, g0.y, g0.x}, {-1, g0.y, -g0.x}, {-1, -g0.y, g0.x}, {-1, -g0.y, -g0.x}}};
    for (const QuadInt& cand : cands) {
        if (mod_reduce(cand.x + cand.y * r4, p) == 0)
            return HeckeValue{zi_primary_associate(cand), p, r4, HeckeCurve::QuarticTwist};
    }
    throw NormalizationMismatch("hecke_zi: no generator found in the ideal");
}

HeckeValue hecke_z2(const PrimeContext& ctx) {
    i64 p = ctx.p();
    if (p % 8 != 1) throw CongruenceViolation("hecke_z2 needs p = 1 mod 8");
    i64 s = ctx.derived_root(Subfield::SqrtMinus2);
    QuadInt g0 = cornacchia(p, -2);
    std::array<QuadInt, 4> cands = {{{-2, g0.x, g0.y}, {-2, g0.x, -g0.y}, {-2, -g0.x, g0.y}, {-2, -g0.x, -g0.y}}};
    for (const QuadInt& cand : cands) {
        if (mod_reduce(cand.x + cand.y * s, p) != 0) continue;
        int unit = (cand.y % 2 == 0) ? ((((cand.y / 2) % 2) != 0) ? -1 : 1) : -1;
        int sign = kronecker(-2, cand.x) * unit;
        QuadInt value = sign > 0 ? cand : cand.neg();
        return HeckeValue{value, p, s, HeckeCurve::OcticTwist};
    }
    throw NormalizationMismatch("hecke_z2: no generator found in the ideal");
}

HeckeValue hecke_z6(const PrimeContext& ctx) {
    i64 p = ctx.p();
    if (p % 6 != 1) throw CongruenceViolation("hecke_z6 needs p = 1 mod 6");
    i64 r6 = ctx.root(6);
    QuadInt g0 = cornacchia(p, -3);
    const QuadInt two_sqrtm3{-3, -2, 4};  // 2 sqrt(-3) = 2(2 zeta6 - 1)
    for (QuadInt base : {g0, g0.conj()}) {
        QuadInt v = base;
        for (int k = 0; k < 6; ++k) {
            if (mod_reduce(v.x + v.y * r6, p) == 0) {
                // Unit-normalize to the associate congruent to 1 mod 2 sqrt(-3).
                QuadInt w = v;
                for (int j = 0; j < 6; ++j) {
                    if (eis_divides(two_sqrtm3, {-3, w.x - 1, w.y}))
                        return HeckeValue{w, p, r6, HeckeCurve::SexticTwist};
                    w = w * kZeta6;
                }
                throw NormalizationMismatch("hecke_z6: no associate congruent to 1 mod 2 sqrt(-3)");
            }
            v = v * kZeta6;
        }
    }
    throw NormalizationMismatch("hecke_z6: no generator found in the ideal");
}

HeckeValue hecke_zi_twisted(const PrimeContext& ctx) {
    i64 p = ctx.p();
    if (p % 12 != 1) throw CongruenceViolation("hecke_zi_twisted needs p = 1 mod 12");
    i64 w = ctx.derived_root(Subfield::IFromZeta12);
    QuadInt g0 = cornacchia(p, -1);
    std::array<QuadInt, 8> cands = {{{-1, g0.x, g0.y}, {-1, g0.x, -g0.y}, {-1, -g0.x, g0.y}, {-1, -g0.x, -g0.y},
                                     {-1, g0.y, g0.x}, {-1, g0.y, -g0.x}, {-1, -g0.y, g0.x}, {-1, -g0.y, -g0.x}}};
    for (const QuadInt& cand : cands) {
        if (mod_reduce(cand.x + cand.y * w, p) != 0) continue;
        QuadInt primary = zi_primary_associate(cand);
        // Twist by the inverse of the fourth root i^k = 3^((p-1)/4) mod the ideal.
        i64 target = ctx.pow(3, (p - 1) / 4);
        int k = -1;
        i64 wk = 1;
        for (int j = 0; j < 4; ++j) {
            if (wk == target) { k = j; break; }
            wk = ctx.mul(wk, w);
        }
        if (k < 0) throw NormalizationMismatch("hecke_zi_twisted: 3^((p-1)/4) is not a fourth root of unity mod p");
        QuadInt value = primary;
        for (int j = 0; j < (4 - k) % 4; ++j) value = value * kI;
        return HeckeValue{value, p, w, HeckeCurve::DuodecicTwist};
    }
    throw NormalizationMismatch("hecke_zi_twisted: no generator found in the ideal");
}

} // namespace ffhg
