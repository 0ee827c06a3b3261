#include "goodpoly/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace goodpoly {

std::int64_t vec_sum(const Vec& v) {
    return std::accumulate(v.begin(), v.end(), std::int64_t{0});
}

bool is_weakly_decreasing(const Vec& v) {
    for (std::size_t i = 1; i < v.size(); ++i)
        if (v[i] > v[i - 1]) return false;
    return true;
}

namespace {

void validate_partition(const Vec& p) {
    for (auto x : p)
        if (x < 0) throw std::invalid_argument("partition entries must be nonnegative");
    if (!is_weakly_decreasing(p))
        throw std::invalid_argument("partition entries must be weakly decreasing");
}

void require_same_length(const Partition& a, const Partition& b) {
    if (a.length() != b.length())
        throw std::invalid_argument("partitions must have the same length");
}

} // namespace

Partition::Partition(Vec p) : parts(std::move(p)) { validate_partition(parts); }

Partition::Partition(std::initializer_list<std::int64_t> p) : parts(p) {
    validate_partition(parts);
}

bool dominates(const Partition& beta, const Partition& alpha) {
    require_same_length(beta, alpha);
    if (beta.size() != alpha.size())
        throw std::invalid_argument("dominance requires partitions of equal size");
    std::int64_t sb = 0, sa = 0;
    for (std::size_t j = 0; j < beta.length(); ++j) {
        sb += beta[j];
        sa += alpha[j];
        if (sb < sa) return false;
    }
    return true;
}

bool contains(const Partition& beta, const Partition& alpha) {
    require_same_length(beta, alpha);
    for (std::size_t i = 0; i < beta.length(); ++i)
        if (beta[i] < alpha[i]) return false;
    return true;
}

BoxChain generate_chain(const Partition& alpha, const Partition& beta) {
    if (!contains(beta, alpha))
        throw std::invalid_argument("generate_chain requires alpha <= beta componentwise");
    BoxChain chain;
    chain.steps.push_back(alpha);
    Vec cur = alpha.parts;
    while (cur != beta.parts) {
        for (std::size_t r = 0; r < cur.size(); ++r) {
            if (cur[r] < beta[r] && (r == 0 || cur[r] < cur[r - 1])) {
                ++cur[r];
                break;
            }
        }
        chain.steps.push_back(Partition(cur));
    }
    return chain;
}

ChainCheck check_chain(const BoxChain& chain, const Partition& alpha,
                       const Partition& beta) {
    if (chain.steps.empty()) return {false, std::size_t{0}};
    if (alpha.length() != beta.length() || !contains(beta, alpha))
        return {false, std::size_t{0}};
    BoxChain canonical = generate_chain(alpha, beta);
    std::size_t upto = std::min(chain.steps.size(), canonical.steps.size());
    for (std::size_t i = 0; i < upto; ++i)
        if (chain.steps[i] != canonical.steps[i]) return {false, i};
    if (chain.steps.size() != canonical.steps.size())
        return {false, upto};
    return {true, std::nullopt};
}

std::vector<Partition> subchain(const Partition& alpha, const Partition& beta) {
    if (!contains(beta, alpha))
        throw std::invalid_argument("subchain requires alpha <= beta componentwise");
    std::size_t m = alpha.length();
    std::vector<Partition> out;
    out.reserve(m + 1);
    for (std::size_t i = 0; i <= m; ++i) {
        Vec v(m);
        for (std::size_t j = 0; j < m; ++j) v[j] = j < i ? beta[j] : alpha[j];
        out.push_back(Partition(std::move(v)));
    }
    return out;
}

Partition sort_decreasing(const Vec& p) {
    for (auto x : p)
        if (x < 0) throw std::invalid_argument("sort_decreasing requires nonnegative entries");
    Vec v = p;
    std::sort(v.begin(), v.end(), std::greater<>());
    return Partition(std::move(v));
}

std::vector<Vec> sm_orbit(const Partition& lambda) {
    Vec v = lambda.parts;
    std::sort(v.begin(), v.end());
    std::vector<Vec> orbit;
    do {
        orbit.push_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
    std::sort(orbit.begin(), orbit.end());
    return orbit;
}

} // namespace goodpoly
