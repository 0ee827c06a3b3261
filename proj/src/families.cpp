#include "goodpoly/families.hpp"

#include <functional>
#include <stdexcept>

#include "goodpoly/tableaux.hpp"

namespace goodpoly {

namespace {

// All partitions mu <= lambda componentwise, padded to lambda's length.
std::vector<Partition> subpartitions(const Partition& lambda) {
    std::size_t m = lambda.length();
    std::vector<Partition> out;
    Vec cur(m);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == m) {
            out.push_back(Partition(cur));
            return;
        }
        std::int64_t top = lambda[i];
        if (i > 0) top = std::min(top, cur[i - 1]);
        for (std::int64_t v = 0; v <= top; ++v) {
            cur[i] = v;
            rec(i + 1);
        }
    };
    rec(0);
    return out;
}

} // namespace

SchurCombination dual_grothendieck(const Partition& lambda, std::size_t m) {
    std::size_t nonzero = 0;
    for (auto x : lambda.parts)
        if (x > 0) ++nonzero;
    if (nonzero > m)
        throw std::invalid_argument("dual_grothendieck requires at most m parts");
    Partition padded = lambda;
    padded.parts.resize(m, 0);
    std::vector<SchurTerm> terms;
    for (const auto& mu : subpartitions(padded)) {
        Int f = skew_row_bounded_count(padded, mu);
        if (f != 0) terms.push_back({f, mu});
    }
    return SchurCombination(m, std::move(terms));
}

SchurCombination chain_sum(const Partition& alpha, const Partition& beta) {
    std::vector<SchurTerm> terms;
    for (const auto& step : generate_chain(alpha, beta).steps)
        terms.push_back({Int(1), step});
    return SchurCombination(alpha.length(), std::move(terms));
}

SchurCombination alternating_chain_sum(const Partition& alpha, const Partition& beta) {
    std::vector<SchurTerm> terms;
    Int sign = 1;
    for (const auto& step : generate_chain(alpha, beta).steps) {
        terms.push_back({sign, step});
        sign = -sign;
    }
    return SchurCombination(alpha.length(), std::move(terms));
}

SchurCombination example_g2_310() {
    std::vector<SchurTerm> terms = {
        {Int(1), Partition{3, 1, 0}},   {Int(-3), Partition{3, 2, 0}},
        {Int(-6), Partition{3, 1, 1}},  {Int(3), Partition{3, 3, 0}},
        {Int(18), Partition{3, 2, 1}},  {Int(-18), Partition{3, 3, 1}},
        {Int(-4), Partition{3, 2, 2}},  {Int(44), Partition{3, 3, 2}},
        {Int(-55), Partition{3, 3, 3}},
    };
    return SchurCombination(3, std::move(terms));
}

SchurCombination materialize(const FamilySpec& spec) {
    switch (spec.kind) {
        case FamilyKind::dual_grothendieck:
            if (!spec.lambda) throw std::invalid_argument("dual_grothendieck needs lambda");
            return dual_grothendieck(*spec.lambda, spec.m);
        case FamilyKind::chain_sum:
            if (!spec.alpha || !spec.beta)
                throw std::invalid_argument("chain_sum needs alpha and beta");
            return chain_sum(*spec.alpha, *spec.beta);
        case FamilyKind::alternating_chain_sum:
            if (!spec.alpha || !spec.beta)
                throw std::invalid_argument("alternating_chain_sum needs alpha and beta");
            return alternating_chain_sum(*spec.alpha, *spec.beta);
        case FamilyKind::example_g2_310:
            return example_g2_310();
    }
    throw std::invalid_argument("unknown family kind");
}

FamilyKind family_kind_from_string(const std::string& name) {
    if (name == "dual_grothendieck") return FamilyKind::dual_grothendieck;
    if (name == "chain_sum") return FamilyKind::chain_sum;
    if (name == "alternating_chain_sum") return FamilyKind::alternating_chain_sum;
    if (name == "example_g2_310") return FamilyKind::example_g2_310;
    throw std::invalid_argument("unknown family kind: " + name);
}

std::string family_kind_to_string(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::dual_grothendieck: return "dual_grothendieck";
        case FamilyKind::chain_sum: return "chain_sum";
        case FamilyKind::alternating_chain_sum: return "alternating_chain_sum";
        case FamilyKind::example_g2_310: return "example_g2_310";
    }
    return "unknown";
}

} // namespace goodpoly
