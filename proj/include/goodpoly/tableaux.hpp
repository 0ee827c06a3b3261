#pragma once

#include <functional>
#include <vector>

#include "goodpoly/numeric.hpp"
#include "goodpoly/partition.hpp"

namespace goodpoly {

// A semistandard filling stored row by row: rows weakly increase left to
// right, columns strictly increase top to bottom.
struct Tableau {
    std::vector<std::vector<int>> rows;

    bool empty() const { return rows.empty(); }
    friend bool operator==(const Tableau&, const Tableau&) = default;
};

// Letter counts of a tableau: counts[i] is the number of entries i+1.
struct Content {
    Vec counts;

    friend bool operator==(const Content&, const Content&) = default;
};

bool is_valid_ssyt(const Tableau& t);

// Visits every SSYT of the given shape with entries in {1,..,m}, in
// lexicographic order of the row reading word. Restartable: each call
// replays the same sequence.
void for_each_ssyt(const Partition& shape, int m,
                   const std::function<void(const Tableau&)>& fn);

// Materialized variant of for_each_ssyt. Shapes with more than m nonzero
// parts yield no tableaux.
std::vector<Tableau> enumerate_ssyt(const Partition& shape, int m);

Content content_of(const Tableau& t, int m);

// Number of SSYT of the given shape and content. Requires
// |shape| == sum(content).
Int kostka(const Partition& shape, const Content& content);

// Number of SSYT of skew shape lambda/mu whose row-i entries lie in
// [1, i-1] (rows 1-indexed). Returns 0 when mu is not contained in lambda.
Int skew_row_bounded_count(const Partition& lambda, const Partition& mu);

// Splits t into t_parts tableaux: T_j collects the columns j' of t with
// j' ≡ j (mod t_parts), preserving column order. The contents of the parts
// sum to the content of t.
std::vector<Tableau> column_split(const Tableau& t, int t_parts);

} // namespace goodpoly
