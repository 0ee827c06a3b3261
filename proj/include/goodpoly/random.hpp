#pragma once

#include <cstdint>

#include "goodpoly/symfunc.hpp"

namespace goodpoly {

// Deterministic, platform-independent generator (splitmix64). Standard
// library distributions are implementation-defined, which would break the
// byte-identical-output guarantee for seeded runs.
struct Rng {
    std::uint64_t state;

    explicit Rng(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }
};

// Random partition of length m with |lambda| <= max_size.
Partition random_partition(Rng& rng, std::size_t m, std::int64_t max_size);

// Random partition alpha <= beta componentwise.
Partition random_subpartition(Rng& rng, const Partition& beta);

// Random chain combination: positive coefficients in [1, max_coeff] on the
// canonical chain between a random pair alpha <= beta with |beta| <=
// max_size. Good by construction.
SchurCombination random_good_combination(Rng& rng, std::size_t m,
                                         std::int64_t max_size,
                                         std::int64_t max_coeff);

// Random combination with signed coefficients on up to max_terms random
// partitions; no structure imposed.
SchurCombination random_combination(Rng& rng, std::size_t m,
                                    std::int64_t max_size,
                                    std::int64_t max_coeff,
                                    std::size_t max_terms);

} // namespace goodpoly
