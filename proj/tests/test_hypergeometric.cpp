#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>
#include <numeric>

#include "ffhg/hecke.hpp"
#include "ffhg/hypergeometric.hpp"

using namespace ffhg;

namespace {

// Independent oracle: literal triple-product CycInt summation.
CycInt f_eta_naive(const PrimeContext& ctx, const MulChar& eta, i64 z) {
    MulChar pe = MulChar::quadratic(ctx) * eta.conj();
    int m = std::lcm(eta.conductor(), pe.conductor());
    CycInt acc(m);
    i64 p = ctx.p();
    for (i64 x = 0; x < p; ++x) {
        CycInt t = mul_embedded(mul_embedded(eta.eval(x), pe.eval(ctx.reduce(x - 1 + p))),
                                pe.eval(ctx.reduce(x - z + p)));
        acc += t.embedded(m);
    }
    return acc;
}

CycInt s_eta_naive(const PrimeContext& ctx, const MulChar& chi, int e, i64 z) {
    CycInt acc(chi.conductor());
    i64 p = ctx.p();
    for (i64 x = 0; x < p; ++x) {
        i64 arg = ctx.mul(ctx.pow(x, e), ctx.mul(ctx.reduce(x - 1 + p), ctx.reduce(x - z + p)));
        if (e == 0) arg = ctx.mul(ctx.reduce(x - 1 + p), ctx.reduce(x - z + p));
        acc += chi.eval(arg);
    }
    return acc;
}

} // namespace

TEST_CASE("f_eta against the naive oracle and F(1) = J") {
    PrimeContext ctx(13, {4});
    MulChar eta = char_from_ideal(ctx, 4);
    for (i64 z = 0; z < 13; ++z) CHECK(f_eta(ctx, eta, z) == f_eta_naive(ctx, eta, z));
    // F_eta(1) = J(eta, conj(eta)^2)
    CHECK(eq_embedded(f_eta(ctx, eta, 1), jacobi_sum(eta, eta.pow(-2))));
}

TEST_CASE("order-2 case: F_phi(z) = -1 - phi(z)") {
    for (i64 p : {5, 13, 17, 19}) {
        PrimeContext ctx(p, {});
        MulChar phi = MulChar::quadratic(ctx);
        for (i64 z = 2; z < p; ++z) {
            CycInt v = f_eta(ctx, phi, z);
            CHECK(v == CycInt::from_int(-1 - ctx.quadratic_character(z), 2));
        }
    }
}

TEST_CASE("s_eta") {
    PrimeContext ctx(13, {4, 6, 12});
    MulChar eta = char_from_ideal(ctx, 4);
    CHECK(s_eta(ctx, eta, 4) == s_eta_naive(ctx, eta, 1, 4));
    CHECK_THROWS_AS(s_eta(ctx, char_from_ideal(ctx, 6).pow(2), 4), OddOrder);

    // reduction to F: F_eta(z) = conj(eta)(1-z)^2 S_eta(z) for even order
    for (int n : {4, 6, 12}) {
        MulChar e2 = char_from_ideal(ctx, n);
        int m = e2.conductor();
        for (i64 z = 2; z < 13; ++z) {
            CycInt ru = CycInt::zeta_pow(m, 2 * e2.conj().exp_in(m, 1 - z + 13));
            CHECK(f_eta(ctx, e2, z) == ru * s_eta(ctx, e2, z));
        }
    }
}

TEST_CASE("quartic S-sum closed form") {
    // S_eta(b^2) = 2 phi(1+b) eta(-1) J(phi, eta) whenever 1-b^2 is a square
    PrimeContext ctx(13, {4});
    MulChar phi = MulChar::quadratic(ctx);
    MulChar eta = char_from_ideal(ctx, 4);
    CycInt j = jacobi_sum(phi, eta).embedded(4);
    for (i64 b = 2; b < 12; ++b) {
        i64 bsq = ctx.mul(b, b);
        if (ctx.quadratic_character(1 - bsq + 13) != 1) continue;
        CycInt lhs = s_eta(ctx, eta, bsq);
        CHECK(lhs == CycInt::from_int(2 * ctx.quadratic_character(1 + b) * eta.sign_at_minus_one(), 4) * j);
    }
}

TEST_CASE("hg2f1 structure") {
    PrimeContext ctx(13, {4, 12});
    MulChar phi = MulChar::quadratic(ctx);
    MulChar psi = char_from_ideal(ctx, 4);

    // z = 0 vanishes through the eps(z) factor
    CHECK(hg2f1(ctx, psi.conj(), psi, phi, 0).is_zero());
    // nonsquare z vanishes for the theorem shape
    for (i64 z = 2; z < 13; ++z)
        if (ctx.quadratic_character(z) == -1) CHECK(hg2f1(ctx, psi.conj(), psi, phi, z).is_zero());

    // 2F1(phi eta, eta; phi; z) = phi.eta(-1)/p F_eta(z) for z != 0
    for (int n : {4, 12}) {
        MulChar eta = char_from_ideal(ctx, n);
        MulChar pe = phi * eta;
        int s = pe.sign_at_minus_one();
        for (i64 z = 1; z < 13; ++z) {
            CycInt f = f_eta(ctx, eta, z);
            HGValue expect(s > 0 ? f : -f, 13, 1);
            CHECK(hg2f1(ctx, pe, eta, phi, z) == expect);
        }
    }
}

TEST_CASE("hg2f1 theorem-shape value at p=13, a=4") {
    PrimeContext ctx(13, {4});
    MulChar phi = MulChar::quadratic(ctx);
    MulChar psi = char_from_ideal(ctx, 4);
    HGValue lhs = hg2f1(ctx, psi.conj(), psi, phi, 4);
    // -(2/p) phi(1+b) chi(p) with b = 2, chi = 3+2i
    HeckeValue chi = hecke_zi(ctx);
    CHECK(chi.value == QuadInt{-1, 3, 2});
    CycInt rhs = CycInt::from_int(-2 * ctx.quadratic_character(3), 4) * chi.value.to_cyc(4);
    CHECK(lhs == HGValue(rhs, 13, 1));
}

TEST_CASE("inductive n+1Fn") {
    PrimeContext ctx(13, {4});
    MulChar phi = MulChar::quadratic(ctx);
    MulChar psi = char_from_ideal(ctx, 4);
    MulChar eps = MulChar::trivial(ctx);

    // n = 1 reduces to hg2f1 on all inputs
    for (i64 z = 0; z < 13; ++z) {
        CHECK(hg_n1fn(ctx, {psi.conj(), psi}, {phi}, z) == hg2f1(ctx, psi.conj(), psi, phi, z));
        CHECK(hg_n1fn(ctx, {phi, eps}, {psi}, z) == hg2f1(ctx, phi, eps, psi, z));
    }

    // z = 0 vanishes at every level
    CHECK(hg_n1fn(ctx, {phi, phi, phi}, {eps, eps}, 0).is_zero());

    // 3F2(phi,phi,phi; eps,eps; z) against the full all-characters
    // definition in floating point: p/(p-1) sum_chi binom(phi chi, chi)
    // binom(phi chi, chi) binom(phi chi, chi) chi(z). Independent of the
    // inductive path.
    auto float3f2 = [](const PrimeContext& c, i64 z) {
        i64 p = c.p(), q1 = p - 1;
        std::vector<std::complex<double>> root(q1);
        for (i64 k = 0; k < q1; ++k) root[k] = std::polar(1.0, 2.0 * M_PI * (double)k / (double)q1);
        i64 half = q1 / 2;  // exponent of phi
        auto jac = [&](i64 u, i64 v) {
            std::complex<double> acc = 0;
            for (i64 x = 2; x < p; ++x) acc += root[(u * c.dlog(x) + v * c.dlog(p + 1 - x)) % q1];
            return acc;
        };
        auto binom = [&](i64 u, i64 v) {
            return root[(v * c.dlog(p - 1)) % q1] * jac(u, (q1 - v) % q1) / (double)p;
        };
        std::complex<double> acc = 0;
        for (i64 s = 0; s < q1; ++s) {
            std::complex<double> b1 = binom((half + s) % q1, s);
            std::complex<double> b2 = binom((half + s) % q1, s);  // B = eps: binom(phi chi, chi)
            acc += b1 * b2 * b2 * root[(s * c.dlog(z)) % q1];
        }
        return acc * ((double)p / (double)q1);
    };
    for (i64 p : {13, 19}) {
        PrimeContext c(p, {});
        for (i64 z : {(i64)1, (i64)5}) {
            HGValue exact = hg_n1fn(c, {MulChar::quadratic(c), MulChar::quadratic(c), MulChar::quadratic(c)},
                                    {MulChar::trivial(c), MulChar::trivial(c)}, z);
            auto [re, im] = exact.complex_approx();
            std::complex<double> ex(re, im);
            CHECK(std::abs(ex - float3f2(c, z)) < 1e-6);
        }
    }
}

TEST_CASE("float oracle agreement") {
    PrimeContext ctx(13, {4});
    MulChar phi = MulChar::quadratic(ctx);
    MulChar psi = char_from_ideal(ctx, 4);
    for (i64 z = 0; z < 13; ++z) {
        HGValue exact = hg2f1(ctx, psi.conj(), psi, phi, z);
        auto [re, im] = exact.complex_approx();
        std::complex<double> approx = hg2f1_float_oracle(ctx, psi.conj(), psi, phi, z);
        CHECK(std::abs(std::complex<double>(re, im) - approx) < 1e-9);
    }
    CHECK(std::abs(hg2f1_float_oracle(ctx, psi, psi, phi, 0)) < 1e-12);

    // trivial characters, z = 1: both paths agree
    MulChar eps = MulChar::trivial(ctx);
    HGValue exact = hg2f1(ctx, eps, eps, eps, 1);
    auto [re, im] = exact.complex_approx();
    CHECK(std::abs(std::complex<double>(re, im) - hg2f1_float_oracle(ctx, eps, eps, eps, 1)) < 1e-9);
}

TEST_CASE("reflection invariance kills nonsquare arguments") {
    // hg2f1(phi eta, eta; phi; z) = phi(z) hg2f1(...) so phi(z) = -1 forces 0
    for (i64 p : {17, 29}) {
        PrimeContext ctx(p, {4, (p - 1) % 8 == 0 ? 8 : 4});
        MulChar phi = MulChar::quadratic(ctx);
        MulChar eta = char_from_ideal(ctx, 4);
        for (i64 z = 2; z < p; ++z)
            if (ctx.quadratic_character(z) == -1) CHECK(hg2f1(ctx, phi * eta, eta, phi, z).is_zero());
    }
}
