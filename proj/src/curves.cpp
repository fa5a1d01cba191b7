#include "ffhg/curves.hpp"

#include <numeric>
#include <sstream>

#include "ffhg/characters.hpp"

namespace ffhg {

CurveSpec CurveSpec::elliptic(i64 c, i64 a2, i64 a4, i64 a6) {
    CurveSpec s;
    s.family = CurveFamily::Elliptic;
    s.c = c; s.a2 = a2; s.a4 = a4; s.a6 = a6;
    return s;
}

CurveSpec CurveSpec::c_family(int n, i64 a, i64 c) {
    CurveSpec s;
    s.family = CurveFamily::CFamily;
    s.N = n; s.a = a; s.c = c;
    return s;
}

CurveSpec CurveSpec::d_family(int n, i64 c, i64 d) {
    CurveSpec s;
    s.family = CurveFamily::DFamily;
    s.N = n; s.c = c; s.d = d;
    return s;
}

std::string CurveSpec::str() const {
    std::ostringstream os;
    auto term = [&os](i64 coeff, const char* var) {
        if (coeff == 0) return;
        if (coeff == 1) os << "+";
        else if (coeff == -1) os << "-";
        else os << (coeff > 0 ? "+" : "") << coeff;
        os << var;
    };
    switch (family) {
    case CurveFamily::Elliptic:
        if (c != 1) os << c;
        os << "y^2=x^3";
        term(a2, "x^2");
        term(a4, "x");
        if (a6) os << (a6 > 0 ? "+" : "") << a6;
        break;
    case CurveFamily::CFamily:
        os << "C{N=" << N << ";a=" << a << ";c=" << c << "}";
        break;
    case CurveFamily::DFamily:
        os << "D{N=" << N << ";c=" << c << ";d=" << d << "}";
        break;
    }
    return os.str();
}

TraceRecord count_elliptic(const PrimeContext& ctx, const CurveSpec& spec) {
    if (spec.family != CurveFamily::Elliptic) throw BadParams("count_elliptic: not an elliptic spec");
    i64 p = ctx.p();
    i64 a = ctx.reduce(spec.a2), b = ctx.reduce(spec.a4), c6 = ctx.reduce(spec.a6);
    if (ctx.reduce(spec.c) == 0) throw BadParams("count_elliptic: c = 0");
    // Discriminant of the cubic x^3 + a x^2 + b x + c.
    i64 disc = ctx.reduce(18 * a % p * b % p * c6 % p - 4 * ctx.pow(a, 3) % p * c6 % p +
                          ctx.mul(ctx.mul(a, a), ctx.mul(b, b)) - 4 * ctx.pow(b, 3) % p - 27 * ctx.mul(c6, c6) % p + 5 * p);
    if (disc == 0) throw SingularCurve("curve is singular mod " + std::to_string(p));

    int phic = ctx.quadratic_character(spec.c);
    i64 count = 1;  // infinity
    for (i64 x = 0; x < p; ++x) {
        i64 fx = ctx.reduce(ctx.mul(ctx.mul(x, x), x) + ctx.mul(a, ctx.mul(x, x)) + ctx.mul(b, x) + c6);
        count += 1 + phic * ctx.quadratic_character(fx);
    }
    TraceRecord rec{p, spec, count, p + 1 - count};
    if (rec.trace * rec.trace > 4 * p) throw Error("Hasse bound violated (arithmetic bug)");
    return rec;
}

TraceRecord count_D(const PrimeContext& ctx, int n, i64 c, i64 d) {
    i64 p = ctx.p();
    if (n < 2 || n % 2 != 0 || (p - 1) % n != 0) throw BadParams("count_D: N must be even and divide p-1");
    i64 cr = ctx.reduce(c), dr = ctx.reduce(d);
    if (cr == 0 || dr == 0) throw BadParams("count_D: p | c or p | d");

    int phic = ctx.quadratic_character(cr);
    i64 cd = ctx.mul(cr, dr);
    i64 count = (n % 4 == 0) ? 1 : 1 + phic;
    for (i64 x = 0; x < p; ++x) {
        i64 fx = ctx.reduce(ctx.pow(x, n / 2 + 1) + ctx.mul(cd, x));
        count += 1 + phic * ctx.quadratic_character(fx);
    }
    TraceRecord rec{p, CurveSpec::d_family(n, cr, dr), count, p + 1 - count};
    return rec;
}

i64 jacobi_formula_D(const PrimeContext& ctx, int n, i64 c, i64 d) {
    i64 p = ctx.p();
    if (n < 2 || n % 2 != 0 || (p - 1) % n != 0) throw BadParams("jacobi_formula_D: N must be even and divide p-1");
    i64 cr = ctx.reduce(c), dr = ctx.reduce(d);
    if (cr == 0 || dr == 0) throw BadParams("jacobi_formula_D: p | c or p | d");

    MulChar psi = char_from_ideal(ctx, n);
    MulChar phi = MulChar::quadratic(ctx);
    i64 mcd = ctx.reduce(-ctx.mul(cr, dr) + p);
    CycInt sum(n);
    for (int j = 1; j < n; j += 2) {
        MulChar psij = psi.pow(j);
        sum += CycInt::zeta_pow(n, psij.exp_in(n, mcd)) * jacobi_sum(phi, psij).embedded(n);
    }
    mpz_class rat = sum.rational_part();  // Galois-stable sum; NotRational = bug
    i64 base = p + 1 + (n % 4 == 2 ? ctx.quadratic_character(cr) : 0);
    return base + ctx.quadratic_character(dr) * (i64)rat.get_si();
}

namespace {

// Number of y with y^M = v over F_p.
i64 root_count(const PrimeContext& ctx, i64 m, i64 v) {
    if (v == 0) return 1;
    i64 g = std::gcd(m, ctx.p() - 1);
    return ctx.dlog(v) % g == 0 ? g : 0;
}

} // namespace

i64 count_C(const PrimeContext& ctx, int n, i64 a, i64 c) {
    i64 p = ctx.p();
    if (n != 3 && n != 4 && n != 6 && n != 8 && n != 12) throw BadParams("count_C: N must be one of 3,4,6,8,12");
    i64 ar = ctx.reduce(a), cr = ctx.reduce(c);
    if (ar == 0 || ar == 1 || cr == 0) throw BadParams("count_C: need a != 0,1 and c != 0 mod p");

    bool even = n % 2 == 0;
    i64 yexp = even ? n : 2 * n;
    i64 count = 0;
    for (i64 x = 0; x < p; ++x) {
        i64 fx;
        if (even) {
            fx = ctx.mul(ctx.mul(ctx.pow(x, n / 2 - 1), ctx.reduce(x - 1 + p)), ctx.reduce(x - ar + p));
        } else {
            fx = ctx.mul(x, ctx.pow(ctx.mul(ctx.reduce(x - 1 + p), ctx.reduce(x - ar + p)), n - 1));
        }
        count += root_count(ctx, yexp, ctx.mul(cr, fx));
    }
    count += (yexp % 4 == 0) ? 1 : 1 + 2 * ctx.quadratic_character(cr);
    return count;
}

bool morphism_check(const PrimeContext& ctx, int n, i64 a, i64 c, i64 sample_size) {
    i64 p = ctx.p();
    i64 ar = ctx.reduce(a), cr = ctx.reduce(c);
    if (ar == 0 || ar == 1 || cr == 0) throw BadParams("morphism_check: need a != 0,1 and c != 0 mod p");
    i64 b = ctx.sqrt(ar);  // NoSquareRoot when a is a nonsquare

    bool even = n % 2 == 0;
    i64 yexp = even ? n : 2 * n;
    i64 checked = 0;
    for (i64 x = 0; x < p && (sample_size == 0 || checked < sample_size); ++x) {
        if (even && x == 0) continue;  // map has x in the denominator
        i64 fx;
        if (even) {
            fx = ctx.mul(cr, ctx.mul(ctx.mul(ctx.pow(x, n / 2 - 1), ctx.reduce(x - 1 + p)), ctx.reduce(x - ar + p)));
        } else {
            fx = ctx.mul(cr, ctx.mul(x, ctx.pow(ctx.mul(ctx.reduce(x - 1 + p), ctx.reduce(x - ar + p)), n - 1)));
        }
        for (i64 y = 0; y < p && (sample_size == 0 || checked < sample_size); ++y) {
            if (ctx.pow(y, yexp) != fx) continue;
            if (!even && y == 0) continue;  // map has y in the denominator
            ++checked;
            if (even) {
                i64 xinv = ctx.inv(x);
                i64 bigx = ctx.mul(ctx.mul(y, y), xinv);
                i64 bigy = ctx.mul(ctx.mul(y, ctx.reduce(x + b)), xinv);
                i64 lhs = ctx.mul(cr, ctx.mul(bigy, bigy));
                i64 rhs = ctx.reduce(ctx.pow(bigx, n / 2 + 1) + ctx.mul(ctx.mul(cr, ctx.mul(ctx.reduce(1 + b), ctx.reduce(1 + b))), bigx));
                if (lhs != rhs) return false;
            } else {
                i64 half = (n - 1) / 2;
                i64 u = ctx.mul(ctx.reduce(x - 1 + p), ctx.reduce(x - ar + p));
                i64 bigx = ctx.mul(u, ctx.inv(ctx.mul(y, y)));
                i64 bigy = ctx.mul(ctx.mul(ctx.reduce(x + b), ctx.pow(u, half)), ctx.inv(ctx.pow(y, n)));
                i64 lhs = ctx.mul(cr, ctx.mul(bigy, bigy));
                i64 rhs = ctx.reduce(ctx.mul(cr, ctx.pow(bigx, n)) + ctx.mul(ctx.reduce(1 + b), ctx.reduce(1 + b)));
                if (lhs != rhs) return false;
            }
        }
    }
    return true;
}

} // namespace ffhg
