#include "goodpoly/verifier.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace goodpoly {

LatticePolytope newton_polytope(const SparsePolynomial& f) {
    if (f.is_zero())
        throw std::invalid_argument("the zero polynomial has no Newton polytope");
    return LatticePolytope(f.m, support(f));
}

SnpReport check_snp(const SparsePolynomial& f) {
    LatticePolytope p = newton_polytope(f);
    SnpReport report;
    for (const auto& q : lattice_points(p))
        if (f.coeff(q) == 0) report.missing_points.push_back(q);
    report.holds = report.missing_points.empty();
    return report;
}

ConditionAReport check_condition_a(const SchurCombination& f) {
    for (const auto& bracket : brackets(f)) {
        SparsePolynomial sum(f.m);
        std::set<Vec> expected;
        for (const auto& term : bracket.terms) {
            SparsePolynomial s = expand_schur(term.partition, f.m);
            for (const auto& [e, c] : s.terms) expected.insert(e);
            sum.add_scaled(s, term.coeff);
        }
        for (const auto& e : expected)
            if (sum.coeff(e) == 0)
                return {false, bracket.degree, e};
    }
    return {true, std::nullopt, std::nullopt};
}

bool check_condition_a_prime(const SchurCombination& f) {
    for (const auto& bracket : brackets(f)) {
        bool has_pos = false, has_neg = false;
        for (const auto& term : bracket.terms) {
            if (term.coeff > 0) has_pos = true;
            if (term.coeff < 0) has_neg = true;
        }
        if (has_pos && has_neg) return false;
    }
    return true;
}

ConditionBReport check_condition_b(const SchurCombination& f) {
    ConditionBReport report;
    for (const auto& bracket : brackets(f)) {
        const Partition* maximum = nullptr;
        for (const auto& candidate : bracket.terms) {
            bool dominates_all = true;
            for (const auto& other : bracket.terms)
                if (!dominates(candidate.partition, other.partition)) {
                    dominates_all = false;
                    break;
                }
            if (dominates_all) {
                maximum = &candidate.partition;
                break;
            }
        }
        if (!maximum) {
            report.reason = "bracket of degree " + std::to_string(bracket.degree) +
                            " has no dominance maximum";
            return report;
        }
        report.chain.push_back(*maximum);
    }
    if (report.chain.empty()) {
        report.holds = true;
        return report;
    }
    BoxChain chain{report.chain};
    ChainCheck check = check_chain(chain, report.chain.front(), report.chain.back());
    if (!check.ok) {
        report.reason = "bracket maxima do not form a box-addition chain (step " +
                        std::to_string(check.failing_index.value_or(0)) + ")";
        report.chain.clear();
        return report;
    }
    report.holds = true;
    return report;
}

namespace {

// All partitions nu with lo <= nu <= hi componentwise.
std::vector<Partition> containment_interval(const Partition& lo, const Partition& hi) {
    std::size_t m = lo.length();
    std::vector<Partition> out;
    Vec cur(m);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == m) {
            out.push_back(Partition(cur));
            return;
        }
        std::int64_t top = hi[i];
        if (i > 0) top = std::min(top, cur[i - 1]);
        for (std::int64_t v = lo[i]; v <= top; ++v) {
            cur[i] = v;
            rec(i + 1);
        }
    };
    rec(0);
    return out;
}

} // namespace

ConditionBPrimeReport check_condition_b_prime(const SchurCombination& f) {
    if (f.terms.empty()) return {false, std::nullopt, std::nullopt};
    std::size_t m = f.m;
    Vec lo = f.terms.front().partition.parts;
    Vec hi = lo;
    std::set<Partition> appearing;
    for (const auto& term : f.terms) {
        appearing.insert(term.partition);
        for (std::size_t i = 0; i < m; ++i) {
            lo[i] = std::min(lo[i], term.partition[i]);
            hi[i] = std::max(hi[i], term.partition[i]);
        }
    }
    Partition lambda_min(lo), lambda_max(hi);
    // Every appearing partition lies in the interval by construction of the
    // componentwise bounds, so only interval ⊆ appearing needs testing.
    for (const auto& nu : containment_interval(lambda_min, lambda_max))
        if (!appearing.count(nu)) return {false, std::nullopt, std::nullopt};
    return {true, lambda_min, lambda_max};
}

GoodnessReport check_good(const SchurCombination& f) {
    GoodnessReport report;
    report.condition_a = check_condition_a(f);
    report.condition_a_prime = check_condition_a_prime(f);
    report.condition_b = check_condition_b(f);
    report.condition_b_prime = check_condition_b_prime(f);
    report.good = report.condition_a.holds && report.condition_b.holds;
    if (report.condition_a_prime && !report.condition_a.holds)
        throw std::logic_error("(a') held but (a) failed: implementation bug");
    if (report.condition_b_prime.holds && !report.condition_b.holds)
        throw std::logic_error("(b') held but (b) failed: implementation bug");
    return report;
}

bool rado_containment(const Partition& alpha, const Partition& beta) {
    if (alpha.size() != beta.size())
        throw std::invalid_argument("rado_containment requires equal sizes");
    return dominates(beta, alpha);
}

bool schur_membership(const Vec& p, const Partition& lambda) {
    for (auto x : p)
        if (x < 0) throw std::invalid_argument("schur_membership requires nonnegative entries");
    if (p.size() != lambda.length()) return false;
    if (vec_sum(p) != lambda.size()) return false;
    return dominates(lambda, sort_decreasing(p));
}

LatticePolytope newton_of_combination(const SchurCombination& f) {
    ConditionBReport b = check_condition_b(f);
    if (!b.holds || b.chain.empty())
        throw std::invalid_argument("newton_of_combination requires condition (b)");
    std::set<Vec> gens;
    for (const auto& lambda : subchain(b.chain.front(), b.chain.back()))
        for (const auto& point : sm_orbit(lambda)) gens.insert(point);
    return LatticePolytope(f.m, {gens.begin(), gens.end()});
}

VerifyReport verify_good_theorem(const SchurCombination& f, std::int64_t t_max) {
    if (f.terms.empty())
        throw std::invalid_argument("combination expands to the zero polynomial");
    VerifyReport report;
    report.goodness = check_good(f);
    SparsePolynomial expansion = expand_combination(f);
    report.snp = check_snp(expansion);
    LatticePolytope newton = report.goodness.condition_b.holds
                                 ? newton_of_combination(f)
                                 : newton_polytope(expansion);
    report.idp = idp_check(newton, t_max);
    report.theorem_violation =
        report.goodness.good && (!report.snp->holds || !report.idp->holds);
    return report;
}

} // namespace goodpoly
