#pragma once

#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include "ffhg/field_core.hpp"
#include "ffhg/hg_value.hpp"

namespace ffhg {

struct Mismatch {
    std::string input;
    std::string lhs;
    std::string rhs;
};

struct VerificationReport {
    std::string object;  // "theorem1".."theorem4", lemma tag, "bridges", ...
    i64 p = 0;
    i64 root_witness = 0;
    long long attempted = 0;
    long long verified = 0;
    std::vector<Mismatch> mismatches;
    long long elapsed_us = 0;
    bool skipped = false;
    std::string note;

    bool ok() const { return mismatches.empty(); }
    void check(bool good, const std::string& input, const std::string& lhs, const std::string& rhs);
};

/// Exhaustive per-prime verification of one of the four evaluation theorems.
/// Throws CongruenceViolation if p fails the theorem's congruence.
VerificationReport verify_theorem(const PrimeContext& ctx, int id);

/// Lemma campaigns by tag; inapplicable tags yield a skipped report.
/// Known tags: prop, reduce, dnc, hello, hello-again, d81, main8,
/// u-expansion, closed-forms.
std::vector<VerificationReport> verify_lemmas(const PrimeContext& ctx, const std::set<std::string>& tags);
const std::vector<std::string>& known_lemma_tags();

/// Jacobi-sum property suite: |J|^2 = p, Galois equivariance, the order-8
/// and order-12 reflection identities, J(phi,phi) = -phi(-1), F_eta(1).
VerificationReport verify_jacobi_properties(const PrimeContext& ctx);

/// Jacobi--Hecke bridge identities for every order admissible at p.
VerificationReport verify_bridges(const PrimeContext& ctx);

/// Norm, ideal membership and trace identity for every Hecke character
/// admissible at p (a_p by brute-force count).
VerificationReport verify_hecke_layer(const PrimeContext& ctx);

/// Exact 2F1 against the all-characters floating-point definition, all a.
VerificationReport verify_oracle_agreement(const PrimeContext& ctx, double tolerance);

struct EvalResult {
    HGValue lhs;
    bool has_rhs = false;
    HGValue rhs;
    std::string rhs_desc;
};

/// The 2F1 of the theorem shape for a character of the given order at a,
/// plus the theorem right-hand side where the congruence admits one.
EvalResult eval_theorem_shape(const PrimeContext& ctx, int order, i64 a);

struct ScanOptions {
    i64 pmin = 2;
    i64 pmax = 0;
    std::vector<int> theorems;
    std::set<std::string> lemmas;
    int jobs = 1;
    std::string format = "csv";  // csv | json
    bool real_timing = false;
};

/// Runs the campaign over all primes in [pmin, pmax], streaming rows ordered
/// by prime. Returns 0 when everything verified, 2 on any mismatch.
int scan(const ScanOptions& opts, std::ostream& out);

/// Orders a context must carry to serve the given campaign at prime p.
std::set<int> orders_for_campaign(i64 p, const std::vector<int>& theorems, const std::set<std::string>& lemmas);

} // namespace ffhg
