#pragma once

#include <optional>
#include <string>

#include "goodpoly/symfunc.hpp"

namespace goodpoly {

enum class FamilyKind {
    dual_grothendieck,
    chain_sum,
    alternating_chain_sum,
    example_g2_310,
};

struct FamilySpec {
    FamilyKind kind = FamilyKind::chain_sum;
    std::optional<Partition> lambda; // dual_grothendieck
    std::optional<Partition> alpha;  // chain sums
    std::optional<Partition> beta;
    std::size_t m = 0;
};

// g_lambda = sum f_lambda^mu s_mu, with f_lambda^mu counted by row-bounded
// skew tableaux. The appearing mu form the interval (lambda_1) <= mu <=
// lambda; partitions needing more than m rows cannot occur since mu <=
// lambda.
SchurCombination dual_grothendieck(const Partition& lambda, std::size_t m);

// Unit coefficients along the canonical chain from alpha to beta; one term
// per bracket, hence always good.
SchurCombination chain_sum(const Partition& alpha, const Partition& beta);

// As chain_sum with coefficient (-1)^i on step i.
SchurCombination alternating_chain_sum(const Partition& alpha, const Partition& beta);

// The fixed nine-term inflated combination on partitions between (3,1,0)
// and (3,3,3) in three variables. Stored as data: the general coefficient
// rule lives outside this library.
SchurCombination example_g2_310();

SchurCombination materialize(const FamilySpec& spec);

FamilyKind family_kind_from_string(const std::string& name);
std::string family_kind_to_string(FamilyKind kind);

} // namespace goodpoly
