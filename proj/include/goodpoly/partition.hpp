#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <vector>

namespace goodpoly {

// Exponent vectors, lattice points and tableau contents share one
// representation: a fixed-length vector of 64-bit integers.
using Vec = std::vector<std::int64_t>;

std::int64_t vec_sum(const Vec& v);
bool is_weakly_decreasing(const Vec& v);

// A partition with explicit trailing zeros: a weakly decreasing vector of
// nonnegative integers whose length is the ambient variable count m.
struct Partition {
    Vec parts;

    Partition() = default;
    explicit Partition(Vec p);
    Partition(std::initializer_list<std::int64_t> p);

    std::size_t length() const { return parts.size(); }
    std::int64_t size() const { return vec_sum(parts); } // |lambda|
    std::int64_t operator[](std::size_t i) const { return parts[i]; }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) {
        return a.parts <=> b.parts;
    }
};

// beta ⊵ alpha: prefix sums of beta weakly dominate those of alpha.
// Both partitions must have the same length and the same size.
bool dominates(const Partition& beta, const Partition& alpha);

// beta ≥ alpha componentwise. Same length required.
bool contains(const Partition& beta, const Partition& alpha);

// A saturated chain of partitions where each step adds a single box in the
// northmost admissible row.
struct BoxChain {
    std::vector<Partition> steps;
};

// The canonical chain from alpha up to beta: every step adds one box to the
// smallest row index r with step[r] < beta[r] and (r == 0 or
// step[r] < step[r-1]). Requires contains(beta, alpha).
BoxChain generate_chain(const Partition& alpha, const Partition& beta);

struct ChainCheck {
    bool ok = false;
    // Index of the first offending step when ok is false.
    std::optional<std::size_t> failing_index;
};

// Validates a chain against the canonical one from alpha to beta.
ChainCheck check_chain(const BoxChain& chain, const Partition& alpha,
                       const Partition& beta);

// The coarse subchain lambda^(0)=alpha, lambda^(i)=(beta_1..beta_i,
// alpha_{i+1}..alpha_m), lambda^(m)=beta. Duplicate entries are kept.
std::vector<Partition> subchain(const Partition& alpha, const Partition& beta);

// Rearranges a nonnegative vector into weakly decreasing order.
Partition sort_decreasing(const Vec& p);

// All distinct permutations of lambda's entries, sorted lexicographically.
std::vector<Vec> sm_orbit(const Partition& lambda);

} // namespace goodpoly
