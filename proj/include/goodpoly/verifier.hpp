#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "goodpoly/polytope.hpp"
#include "goodpoly/symfunc.hpp"

namespace goodpoly {

// Saturation check: holds iff every integer point of Newton(f) is in
// Supp(f).
struct SnpReport {
    bool holds = false;
    std::vector<Vec> missing_points; // in Newton(f) ∩ Z^m but not in Supp(f)
};

struct ConditionAReport {
    bool holds = false;
    std::optional<std::int64_t> failing_degree;
    std::optional<Vec> missing_point; // cancelled inside the failing bracket
};

struct ConditionBReport {
    bool holds = false;
    std::vector<Partition> chain; // the bracket maxima when holds
    std::string reason;
};

struct ConditionBPrimeReport {
    bool holds = false;
    std::optional<Partition> lambda_min, lambda_max; // interval ends when holds
};

struct GoodnessReport {
    ConditionAReport condition_a;
    bool condition_a_prime = false;
    ConditionBReport condition_b;
    ConditionBPrimeReport condition_b_prime;
    bool good = false; // condition_a && condition_b
};

LatticePolytope newton_polytope(const SparsePolynomial& f);

SnpReport check_snp(const SparsePolynomial& f);

// (a): the support of each bracket equals the union of the supports of its
// Schur summands, i.e. no monomial cancels inside a bracket.
ConditionAReport check_condition_a(const SchurCombination& f);

// (a'): within every bracket all coefficients share one sign.
bool check_condition_a_prime(const SchurCombination& f);

// (b): every bracket has a member dominating all others, and the collected
// maxima form the canonical box-addition chain from the first to the last.
ConditionBReport check_condition_b(const SchurCombination& f);

// (b'): the appearing partitions are exactly a containment interval.
ConditionBPrimeReport check_condition_b_prime(const SchurCombination& f);

// Aggregates the four checks; also asserts (a') => (a) and (b') => (b),
// which hold mathematically, so a violation signals a bug here.
GoodnessReport check_good(const SchurCombination& f);

// Newton(s_alpha) ⊆ Newton(s_beta), decided through dominance.
bool rado_containment(const Partition& alpha, const Partition& beta);

// p ∈ Newton(s_lambda): |p| = |lambda| and sort_decreasing(p) ⊴ lambda.
bool schur_membership(const Vec& p, const Partition& lambda);

// Newton(F) for a combination passing condition (b): the hull of the
// S_m-orbits of the coarse subchain between the chain endpoints.
LatticePolytope newton_of_combination(const SchurCombination& f);

struct VerifyReport {
    GoodnessReport goodness;
    std::optional<SnpReport> snp;
    std::optional<IdpReport> idp;
    // Set when the combination is good but SNP or IDP fails; that can only
    // mean an implementation bug, never a property of the input.
    bool theorem_violation = false;
};

// Runs the goodness checks and then certifies SNP of the expansion and IDP
// of the Newton polytope up to t_max. SNP/IDP are reported even for
// combinations that are not good.
VerifyReport verify_good_theorem(const SchurCombination& f, std::int64_t t_max);

} // namespace goodpoly
