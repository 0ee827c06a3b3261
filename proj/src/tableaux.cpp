#include "goodpoly/tableaux.hpp"

#include <algorithm>
#include <stdexcept>

namespace goodpoly {

bool is_valid_ssyt(const Tableau& t) {
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        const auto& row = t.rows[r];
        if (r + 1 < t.rows.size() && t.rows[r + 1].size() > row.size()) return false;
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (row[c] < 1) return false;
            if (c > 0 && row[c] < row[c - 1]) return false;
            if (r > 0 && row[c] <= t.rows[r - 1][c]) return false;
        }
    }
    return true;
}

namespace {

std::vector<std::size_t> nonzero_shape(const Partition& shape) {
    std::vector<std::size_t> rows;
    for (auto x : shape.parts)
        if (x > 0) rows.push_back(static_cast<std::size_t>(x));
    return rows;
}

// Depth-first fill in row reading order. col_len[c] bounds each entry from
// above: the cells below (r, c) must still fit strictly increasing values.
void fill_cells(const std::vector<std::size_t>& rows,
                const std::vector<int>& col_len, int m, Tableau& t,
                std::size_t r, std::size_t c,
                const std::function<void(const Tableau&)>& fn) {
    if (r == rows.size()) {
        fn(t);
        return;
    }
    std::size_t nr = r, nc = c + 1;
    if (nc == rows[r]) {
        nr = r + 1;
        nc = 0;
    }
    int lo = 1;
    if (c > 0) lo = std::max(lo, t.rows[r][c - 1]);
    if (r > 0) lo = std::max(lo, t.rows[r - 1][c] + 1);
    int hi = m - (col_len[c] - 1 - static_cast<int>(r));
    for (int v = lo; v <= hi; ++v) {
        t.rows[r][c] = v;
        fill_cells(rows, col_len, m, t, nr, nc, fn);
    }
    t.rows[r][c] = 0;
}

} // namespace

void for_each_ssyt(const Partition& shape, int m,
                   const std::function<void(const Tableau&)>& fn) {
    if (m < 1) throw std::invalid_argument("for_each_ssyt requires m >= 1");
    auto rows = nonzero_shape(shape);
    Tableau t;
    if (rows.empty()) {
        fn(t);
        return;
    }
    if (rows.size() > static_cast<std::size_t>(m)) return; // first column cannot fit
    std::vector<int> col_len(rows[0], 0);
    for (auto len : rows)
        for (std::size_t c = 0; c < len; ++c) ++col_len[c];
    t.rows.resize(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) t.rows[r].assign(rows[r], 0);
    fill_cells(rows, col_len, m, t, 0, 0, fn);
}

std::vector<Tableau> enumerate_ssyt(const Partition& shape, int m) {
    std::vector<Tableau> out;
    for_each_ssyt(shape, m, [&](const Tableau& t) { out.push_back(t); });
    return out;
}

Content content_of(const Tableau& t, int m) {
    if (m < 1) throw std::invalid_argument("content_of requires m >= 1");
    Content c;
    c.counts.assign(static_cast<std::size_t>(m), 0);
    for (const auto& row : t.rows)
        for (int v : row) {
            if (v < 1 || v > m) throw std::invalid_argument("tableau entry out of range");
            ++c.counts[static_cast<std::size_t>(v - 1)];
        }
    return c;
}

Int kostka(const Partition& shape, const Content& content) {
    if (shape.size() != vec_sum(content.counts))
        throw std::invalid_argument("kostka requires |shape| == sum(content)");
    int m = static_cast<int>(content.counts.size());
    Int count = 0;
    // Counted by direct enumeration, no determinant shortcut.
    for_each_ssyt(shape, m, [&](const Tableau& t) {
        if (content_of(t, m) == content) ++count;
    });
    return count;
}

Int skew_row_bounded_count(const Partition& lambda, const Partition& mu) {
    Vec mu_padded = mu.parts;
    mu_padded.resize(std::max(lambda.length(), mu.length()), 0);
    Vec lam = lambda.parts;
    lam.resize(mu_padded.size(), 0);
    for (std::size_t i = 0; i < lam.size(); ++i)
        if (mu_padded[i] > lam[i]) return 0;

    // Cells of lambda/mu in row reading order, row r filled from [1, r]
    // (0-indexed rows). A cell in row 0 has the empty alphabet [1, 0], so
    // any skew shape with a nonempty first row counts zero fillings.
    struct Cell {
        std::size_t r, c;
    };
    std::vector<Cell> cells;
    for (std::size_t r = 0; r < lam.size(); ++r)
        for (std::int64_t c = mu_padded[r]; c < lam[r]; ++c)
            cells.push_back({r, static_cast<std::size_t>(c)});

    std::vector<std::vector<int>> grid(lam.size());
    for (std::size_t r = 0; r < lam.size(); ++r)
        grid[r].assign(static_cast<std::size_t>(lam[r]), 0);

    auto in_skew = [&](std::size_t r, std::size_t c) {
        return static_cast<std::int64_t>(c) >= mu_padded[r] &&
               static_cast<std::int64_t>(c) < lam[r];
    };

    Int count = 0;
    std::function<void(std::size_t)> rec = [&](std::size_t idx) {
        if (idx == cells.size()) {
            ++count;
            return;
        }
        auto [r, c] = cells[idx];
        int lo = 1;
        if (c > 0 && in_skew(r, c - 1)) lo = std::max(lo, grid[r][c - 1]);
        if (r > 0 && in_skew(r - 1, c)) lo = std::max(lo, grid[r - 1][c] + 1);
        int hi = static_cast<int>(r); // row r+1 (1-indexed) is bounded by r
        for (int v = lo; v <= hi; ++v) {
            grid[r][c] = v;
            rec(idx + 1);
        }
        grid[r][c] = 0;
    };
    rec(0);
    return count;
}

std::vector<Tableau> column_split(const Tableau& t, int t_parts) {
    if (t_parts < 1) throw std::invalid_argument("column_split requires t_parts >= 1");
    if (!is_valid_ssyt(t)) throw std::invalid_argument("column_split requires a valid SSYT");
    std::vector<Tableau> parts(static_cast<std::size_t>(t_parts));
    std::size_t width = t.rows.empty() ? 0 : t.rows[0].size();
    for (std::size_t c = 0; c < width; ++c) {
        Tableau& target = parts[c % static_cast<std::size_t>(t_parts)];
        for (std::size_t r = 0; r < t.rows.size(); ++r) {
            if (c >= t.rows[r].size()) break;
            if (target.rows.size() <= r) target.rows.resize(r + 1);
            target.rows[r].push_back(t.rows[r][c]);
        }
    }
    for (const auto& part : parts)
        if (!is_valid_ssyt(part))
            throw std::logic_error("column_split produced an invalid tableau");
    return parts;
}

} // namespace goodpoly
