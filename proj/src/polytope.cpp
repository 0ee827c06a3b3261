#include "goodpoly/polytope.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <set>
#include <stdexcept>
#include <thread>

namespace goodpoly {

LatticePolytope::LatticePolytope(std::size_t m_, std::vector<Vec> gens)
    : m(m_) {
    if (gens.empty())
        throw std::invalid_argument("a polytope needs at least one generator");
    for (const auto& g : gens)
        if (g.size() != m)
            throw std::invalid_argument("generator length does not match dimension");
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    generators = std::move(gens);
}

namespace detail {

bool convex_feasible(const std::vector<Vec>& gens, const RatVec& q) {
    const std::size_t rows = q.size() + 1;       // coordinates + the sum-to-one row
    const std::size_t cols = gens.size();        // one structural column per generator
    const std::size_t total = cols + rows;       // plus one artificial per row

    // Tableau T[r] = structural columns, artificial columns, rhs.
    std::vector<std::vector<Rat>> T(rows, std::vector<Rat>(total + 1));
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t j = 0; j < cols; ++j)
            T[r][j] = r + 1 < rows ? Rat(gens[j][r]) : Rat(1);
        T[r][total] = r + 1 < rows ? q[r] : Rat(1);
        if (T[r][total] < 0)
            for (auto& x : T[r]) x = -x;
        T[r][cols + r] = 1;
    }
    std::vector<std::size_t> basis(rows);
    for (std::size_t r = 0; r < rows; ++r) basis[r] = cols + r;

    auto is_artificial = [&](std::size_t j) { return j >= cols; };

    // Phase-1: minimize the sum of artificials, Bland's rule throughout.
    std::size_t guard = 64 * (total + 1) * (rows + 1);
    for (;;) {
        if (guard-- == 0)
            throw std::logic_error("phase-1 simplex failed to terminate");
        std::optional<std::size_t> entering;
        for (std::size_t j = 0; j < cols && !entering; ++j) {
            // reduced cost = c_j - z_j with c_j = 0, z_j summed over rows
            // whose basic variable is artificial (cost 1).
            Rat z = 0;
            for (std::size_t r = 0; r < rows; ++r)
                if (is_artificial(basis[r])) z += T[r][j];
            if (z > 0) entering = j;
        }
        if (!entering) break;
        std::size_t e = *entering;

        std::optional<std::size_t> leaving;
        Rat best;
        for (std::size_t r = 0; r < rows; ++r) {
            if (T[r][e] <= 0) continue;
            Rat ratio = T[r][total] / T[r][e];
            if (!leaving || ratio < best ||
                (ratio == best && basis[r] < basis[*leaving])) {
                leaving = r;
                best = ratio;
            }
        }
        if (!leaving)
            throw std::logic_error("phase-1 simplex cannot be unbounded");
        std::size_t l = *leaving;

        Rat pivot = T[l][e];
        for (auto& x : T[l]) x /= pivot;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == l || T[r][e] == 0) continue;
            Rat factor = T[r][e];
            for (std::size_t j = 0; j <= total; ++j) T[r][j] -= factor * T[l][j];
        }
        basis[l] = e;
    }

    Rat residue = 0;
    for (std::size_t r = 0; r < rows; ++r)
        if (is_artificial(basis[r])) residue += T[r][total];
    return residue == 0;
}

namespace {

// Repeatedly drops generators that are the average of two current ones;
// each removal leaves the hull unchanged, and no vertex is ever dropped.
std::vector<Vec> midpoint_reduce(std::vector<Vec> gens) {
    std::set<Vec> current(gens.begin(), gens.end());
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& v : std::vector<Vec>(current.begin(), current.end())) {
            bool removable = false;
            for (const auto& u : current) {
                if (u == v) continue;
                Vec w(v.size());
                for (std::size_t i = 0; i < v.size(); ++i) w[i] = 2 * v[i] - u[i];
                if (w != v && w != u && current.count(w)) {
                    removable = true;
                    break;
                }
            }
            if (removable) {
                current.erase(v);
                changed = true;
            }
        }
    }
    return {current.begin(), current.end()};
}

} // namespace

HullOracle::HullOracle(const LatticePolytope& p)
    : m(p.m), gens(midpoint_reduce(p.generators)) {
    lo = hi = gens[0];
    sum_lo = sum_hi = vec_sum(gens[0]);
    for (const auto& g : gens) {
        for (std::size_t i = 0; i < m; ++i) {
            lo[i] = std::min(lo[i], g[i]);
            hi[i] = std::max(hi[i], g[i]);
        }
        std::int64_t s = vec_sum(g);
        sum_lo = std::min(sum_lo, s);
        sum_hi = std::max(sum_hi, s);
    }
}

bool HullOracle::contains(const RatVec& q) const {
    if (q.size() != m)
        throw std::invalid_argument("point length does not match dimension");
    Rat s = 0;
    for (std::size_t i = 0; i < m; ++i) {
        if (q[i] < lo[i] || q[i] > hi[i]) return false;
        s += q[i];
    }
    if (s < sum_lo || s > sum_hi) return false;
    return convex_feasible(gens, q);
}

bool HullOracle::contains(const Vec& q) const {
    return contains(RatVec(q.begin(), q.end()));
}

} // namespace detail

bool contains_point(const LatticePolytope& p, const RatVec& q) {
    if (q.size() != p.m)
        throw std::invalid_argument("point length does not match dimension");
    detail::HullOracle oracle(p);
    return oracle.contains(q);
}

bool contains_point(const LatticePolytope& p, const Vec& q) {
    return contains_point(p, RatVec(q.begin(), q.end()));
}

std::vector<Vec> vertices(const LatticePolytope& p) {
    detail::HullOracle oracle(p);
    std::vector<Vec> out;
    for (std::size_t i = 0; i < oracle.gens.size(); ++i) {
        std::vector<Vec> others;
        others.reserve(oracle.gens.size() - 1);
        for (std::size_t j = 0; j < oracle.gens.size(); ++j)
            if (j != i) others.push_back(oracle.gens[j]);
        if (others.empty() ||
            !detail::convex_feasible(others, RatVec(oracle.gens[i].begin(),
                                                    oracle.gens[i].end())))
            out.push_back(oracle.gens[i]);
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

std::vector<Vec> box_candidates(const detail::HullOracle& oracle) {
    std::vector<Vec> out;
    Vec cur(oracle.m);
    std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t i,
                                                             std::int64_t sum) {
        if (i == oracle.m) {
            if (sum >= oracle.sum_lo && sum <= oracle.sum_hi) out.push_back(cur);
            return;
        }
        // remaining coordinates can still move the sum by at most this much
        for (std::int64_t v = oracle.lo[i]; v <= oracle.hi[i]; ++v) {
            cur[i] = v;
            rec(i + 1, sum + v);
        }
    };
    rec(0, 0);
    return out;
}

std::size_t thread_count() {
    if (const char* env = std::getenv("GOODPOLY_THREADS")) {
        long n = std::atol(env);
        if (n > 1) return static_cast<std::size_t>(n);
    }
    return 1;
}

// Scans candidates against the oracle, skipping points known to lie in the
// hull, and returns the members in candidate order.
std::vector<Vec> scan_members(const detail::HullOracle& oracle,
                              const std::vector<Vec>& candidates,
                              const std::set<Vec>& known_inside) {
    auto test = [&](const Vec& q) {
        return known_inside.count(q) > 0 || oracle.contains(q);
    };
    std::size_t threads = std::min(thread_count(), candidates.size());
    if (threads <= 1) {
        std::vector<Vec> out;
        for (const auto& q : candidates)
            if (test(q)) out.push_back(q);
        return out;
    }
    std::vector<std::vector<Vec>> chunk_out(threads);
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) {
        pool.emplace_back([&, t]() {
            for (std::size_t i = t; i < candidates.size(); i += threads)
                if (test(candidates[i])) chunk_out[t].push_back(candidates[i]);
        });
    }
    for (auto& th : pool) th.join();
    std::vector<Vec> out;
    for (auto& c : chunk_out) out.insert(out.end(), c.begin(), c.end());
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

std::vector<Vec> lattice_points(const LatticePolytope& p) {
    detail::HullOracle oracle(p);
    std::set<Vec> known(p.generators.begin(), p.generators.end());
    return scan_members(oracle, box_candidates(oracle), known);
}

LatticePolytope dilate(const LatticePolytope& p, std::int64_t t) {
    if (t < 1) throw std::invalid_argument("dilate requires t >= 1");
    std::vector<Vec> gens = p.generators;
    for (auto& g : gens)
        for (auto& x : g) x *= t;
    return LatticePolytope(p.m, std::move(gens));
}

std::vector<Vec> minkowski_power_points(const std::vector<Vec>& points,
                                        std::int64_t t) {
    if (t < 1) throw std::invalid_argument("minkowski power requires t >= 1");
    std::set<Vec> acc(points.begin(), points.end());
    for (std::int64_t step = 2; step <= t; ++step) {
        std::set<Vec> next;
        for (const auto& a : acc)
            for (const auto& b : points) {
                Vec s(a.size());
                for (std::size_t i = 0; i < a.size(); ++i) s[i] = a[i] + b[i];
                next.insert(std::move(s));
            }
        acc = std::move(next);
    }
    return {acc.begin(), acc.end()};
}

IdpReport idp_check(const LatticePolytope& p, std::int64_t t_max) {
    if (t_max < 2) throw std::invalid_argument("idp_check requires t_max >= 2");
    std::vector<Vec> base = lattice_points(p);
    for (std::int64_t t = 2; t <= t_max; ++t) {
        std::vector<Vec> decomposable = minkowski_power_points(base, t);
        std::set<Vec> skip(decomposable.begin(), decomposable.end());
        LatticePolytope scaled = dilate(p, t);
        detail::HullOracle oracle(scaled);
        for (const auto& q : box_candidates(oracle)) {
            if (skip.count(q)) continue; // a sum of t points of P lies in tP
            if (oracle.contains(q)) return {false, t_max, IdpWitness{t, q}};
        }
    }
    return {true, t_max, std::nullopt};
}

std::size_t dimension(const LatticePolytope& p) {
    if (p.generators.size() <= 1) return 0;
    const Vec& origin = p.generators[0];
    std::vector<RatVec> rows;
    for (std::size_t i = 1; i < p.generators.size(); ++i) {
        RatVec r(p.m);
        for (std::size_t j = 0; j < p.m; ++j)
            r[j] = Rat(p.generators[i][j] - origin[j]);
        rows.push_back(std::move(r));
    }
    // Gaussian elimination; rank of the translated generator set.
    std::size_t rank = 0;
    for (std::size_t col = 0; col < p.m && rank < rows.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][col] == 0) continue;
            Rat factor = rows[r][col] / rows[rank][col];
            for (std::size_t j = col; j < p.m; ++j)
                rows[r][j] -= factor * rows[rank][j];
        }
        ++rank;
    }
    return rank;
}

std::int64_t default_t_max(const LatticePolytope& p) {
    return std::max<std::int64_t>(2, static_cast<std::int64_t>(dimension(p)) - 1);
}

} // namespace goodpoly
