#include "goodpoly/random.hpp"

#include <algorithm>

namespace goodpoly {

Partition random_partition(Rng& rng, std::size_t m, std::int64_t max_size) {
    Vec parts(m, 0);
    std::int64_t budget = static_cast<std::int64_t>(rng.below(max_size + 1));
    std::int64_t prev = budget;
    for (std::size_t i = 0; i < m && budget > 0; ++i) {
        std::int64_t cap = std::min(prev, budget);
        std::int64_t v = static_cast<std::int64_t>(rng.below(cap + 1));
        if (i == 0 && v == 0) v = cap; // keep the top row nonempty when possible
        parts[i] = v;
        budget -= v;
        prev = v;
    }
    return Partition(std::move(parts));
}

Partition random_subpartition(Rng& rng, const Partition& beta) {
    Vec parts(beta.length(), 0);
    std::int64_t prev = beta.length() ? beta[0] : 0;
    for (std::size_t i = 0; i < beta.length(); ++i) {
        std::int64_t cap = std::min(prev, beta[i]);
        parts[i] = static_cast<std::int64_t>(rng.below(cap + 1));
        prev = parts[i];
    }
    return Partition(std::move(parts));
}

SchurCombination random_good_combination(Rng& rng, std::size_t m,
                                         std::int64_t max_size,
                                         std::int64_t max_coeff) {
    Partition beta = random_partition(rng, m, max_size);
    Partition alpha = random_subpartition(rng, beta);
    std::vector<SchurTerm> terms;
    for (const auto& step : generate_chain(alpha, beta).steps)
        terms.push_back({Int(1 + rng.below(max_coeff)), step});
    return SchurCombination(m, std::move(terms));
}

SchurCombination random_combination(Rng& rng, std::size_t m,
                                    std::int64_t max_size,
                                    std::int64_t max_coeff,
                                    std::size_t max_terms) {
    std::size_t count = 1 + rng.below(max_terms);
    std::vector<SchurTerm> terms;
    for (std::size_t i = 0; i < count; ++i) {
        Int c(1 + rng.below(max_coeff));
        if (rng.below(2)) c = -c;
        terms.push_back({c, random_partition(rng, m, max_size)});
    }
    return SchurCombination(m, std::move(terms));
}

} // namespace goodpoly
