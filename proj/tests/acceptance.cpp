// Acceptance suite: runs every criterion at full scale and prints one
// pass/fail line per criterion. Exit status 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "ffhg/verifier.hpp"

using namespace ffhg;

namespace {

struct Summary {
    long long attempted = 0;
    long long mismatched = 0;
    std::string first_failure;

    void absorb(const VerificationReport& rep) {
        if (rep.skipped) return;
        attempted += rep.attempted;
        mismatched += (long long)rep.mismatches.size();
        if (first_failure.empty() && !rep.mismatches.empty())
            first_failure = "p=" + std::to_string(rep.p) + " " + rep.object + " " + rep.mismatches.front().input +
                            ": " + rep.mismatches.front().lhs + " != " + rep.mismatches.front().rhs;
    }
    bool ok() const { return mismatched == 0; }
};

std::vector<i64> primes_upto(i64 limit, int residue, int modulus) {
    std::vector<i64> out;
    for (i64 p = 3; p <= limit; ++p)
        if (is_prime(p) && p % modulus == residue) out.push_back(p);
    return out;
}

Summary run_theorem(int id, i64 limit) {
    int m = id == 1 ? 4 : (id == 2 ? 8 : (id == 3 ? 6 : 12));
    Summary sum;
    for (i64 p : primes_upto(limit, 1, m)) {
        PrimeContext ctx(p, {m});
        sum.absorb(verify_theorem(ctx, id));
    }
    return sum;
}

Summary run_lemma(const std::string& tag, i64 limit) {
    Summary sum;
    for (i64 p = 3; p <= limit; ++p) {
        if (!is_prime(p)) continue;
        PrimeContext ctx(p, orders_for_campaign(p, {}, {tag}));
        for (const auto& rep : verify_lemmas(ctx, {tag})) sum.absorb(rep);
    }
    return sum;
}

} // namespace

int main() {
    int failures = 0;
    auto criterion = [&](int id, const std::string& desc, const std::function<Summary()>& run) {
        auto start = std::chrono::steady_clock::now();
        Summary sum;
        std::string error;
        try {
            sum = run();
        } catch (const std::exception& ex) {
            error = ex.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        bool pass = error.empty() && sum.ok() && sum.attempted > 0;
        if (!pass) ++failures;
        std::printf("[%s] criterion %2d: %s (cases=%lld, mismatches=%lld, %.1fs)%s%s\n", pass ? "PASS" : "FAIL", id,
                    desc.c_str(), sum.attempted, sum.mismatched, secs,
                    error.empty() && sum.first_failure.empty() ? "" : " :: ",
                    !error.empty() ? error.c_str() : sum.first_failure.c_str());
        std::fflush(stdout);
    };

    criterion(1, "quartic evaluation, p = 1 mod 4 up to 2000, all a, exact", [] { return run_theorem(1, 2000); });
    criterion(2, "octic evaluation, p = 1 mod 8 up to 2000, all a, exact", [] { return run_theorem(2, 2000); });
    criterion(3, "sextic evaluations (both identities), p = 1 mod 6 up to 1000, exact", [] { return run_theorem(3, 1000); });
    criterion(4, "duodecic evaluation, p = 1 mod 12 up to 2000, all a, exact", [] { return run_theorem(4, 2000); });

    criterion(5, "point-count formula cross-check, N in {4,6,8,12}, 20 pairs each, p up to 500",
              [] { return run_lemma("dnc", 500); });

    criterion(6, "F-sum proposition and reduction lemma, all orders and z, p up to 500", [] {
        Summary sum;
        for (i64 p = 3; p <= 500; ++p) {
            if (!is_prime(p)) continue;
            PrimeContext ctx(p, orders_for_campaign(p, {}, {"prop", "reduce"}));
            for (const auto& rep : verify_lemmas(ctx, {"prop", "reduce"})) sum.absorb(rep);
        }
        return sum;
    });

    criterion(7, "Jacobi-sum property suite (norms, Galois, reflections), p up to 1000", [] {
        Summary sum;
        for (i64 p = 3; p <= 1000; ++p) {
            if (!is_prime(p)) continue;
            PrimeContext ctx(p, orders_for_campaign(p, {}, {"prop"}));
            sum.absorb(verify_jacobi_properties(ctx));
        }
        return sum;
    });

    criterion(8, "Hecke layer: norm, ideal membership, trace identity, p up to 10000", [] {
        Summary sum;
        for (i64 p = 3; p <= 10000; ++p) {
            if (!is_prime(p)) continue;
            if (p % 4 != 1 && p % 6 != 1) continue;
            std::set<int> orders;
            for (int n : {4, 6, 8, 12})
                if ((p - 1) % n == 0) orders.insert(n);
            PrimeContext ctx(p, orders);
            sum.absorb(verify_hecke_layer(ctx));
        }
        return sum;
    });

    criterion(9, "Jacobi-Hecke bridges for N in {4,6,8,12}, p up to 2000", [] {
        Summary sum;
        for (i64 p = 3; p <= 2000; ++p) {
            if (!is_prime(p)) continue;
            if (p % 4 != 1 && p % 6 != 1) continue;
            std::set<int> orders;
            for (int n : {4, 6, 8, 12})
                if ((p - 1) % n == 0) orders.insert(n);
            PrimeContext ctx(p, orders);
            sum.absorb(verify_bridges(ctx));
        }
        return sum;
    });

    criterion(10, "float-oracle agreement within 1e-6, all a, p in {13,17,29,37,41,61,73}", [] {
        Summary sum;
        for (i64 p : {13, 17, 29, 37, 41, 61, 73}) {
            PrimeContext ctx(p, {4});
            sum.absorb(verify_oracle_agreement(ctx, 1e-6));
        }
        return sum;
    });

    criterion(11, "closed-form S-sums (octic and duodecic), all b, p up to 1000",
              [] { return run_lemma("closed-forms", 1000); });

    criterion(12, "determinism: repeated verify runs are byte-identical", [] {
        ScanOptions opts;
        opts.pmin = 2;
        opts.pmax = 150;
        opts.theorems = {1, 2, 3, 4};
        opts.lemmas = {"dnc", "hello", "hello-again", "d81", "closed-forms"};
        std::ostringstream a, b, c;
        scan(opts, a);
        scan(opts, b);
        opts.jobs = 2;
        scan(opts, c);
        Summary sum;
        sum.attempted = 3;
        if (a.str() != b.str() || a.str() != c.str() || a.str().empty()) {
            sum.mismatched = 1;
            sum.first_failure = "scan output differs between runs";
        }
        return sum;
    });

    if (failures == 0) std::printf("acceptance: all criteria passed\n");
    else std::printf("acceptance: %d criteria FAILED\n", failures);
    return failures == 0 ? 0 : 1;
}
