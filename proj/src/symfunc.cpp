#include "goodpoly/symfunc.hpp"

#include <algorithm>
#include <stdexcept>

#include "goodpoly/tableaux.hpp"

namespace goodpoly {

void SparsePolynomial::add_term(const Vec& exponent, const Int& coeff) {
    if (exponent.size() != m)
        throw std::invalid_argument("exponent length does not match variable count");
    if (coeff == 0) return;
    auto [it, inserted] = terms.emplace(exponent, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms.erase(it);
    }
}

Int SparsePolynomial::coeff(const Vec& exponent) const {
    auto it = terms.find(exponent);
    return it == terms.end() ? Int(0) : it->second;
}

SparsePolynomial& SparsePolynomial::operator+=(const SparsePolynomial& other) {
    return add_scaled(other, 1);
}

SparsePolynomial& SparsePolynomial::add_scaled(const SparsePolynomial& other,
                                               const Int& scale) {
    if (other.m != m)
        throw std::invalid_argument("variable counts do not match");
    if (scale == 0) return *this;
    for (const auto& [e, c] : other.terms) add_term(e, c * scale);
    return *this;
}

namespace {

bool term_order(const SchurTerm& a, const SchurTerm& b) {
    auto da = a.partition.size(), db = b.partition.size();
    if (da != db) return da < db;
    return b.partition < a.partition; // reverse lex within a degree
}

} // namespace

SchurCombination::SchurCombination(std::size_t m_, std::vector<SchurTerm> raw)
    : m(m_) {
    std::map<Partition, Int> merged;
    for (auto& t : raw) {
        if (t.partition.length() != m)
            throw std::invalid_argument("partition length does not match variable count");
        merged[t.partition] += t.coeff;
    }
    for (auto& [p, c] : merged)
        if (c != 0) terms.push_back({c, p});
    std::sort(terms.begin(), terms.end(), term_order);
}

SparsePolynomial expand_schur(const Partition& lambda, std::size_t m) {
    SparsePolynomial f(m);
    for_each_ssyt(lambda, static_cast<int>(m), [&](const Tableau& t) {
        f.add_term(content_of(t, static_cast<int>(m)).counts, 1);
    });
    return f;
}

SparsePolynomial expand_combination(const SchurCombination& f) {
    SparsePolynomial out(f.m);
    for (const auto& term : f.terms)
        out.add_scaled(expand_schur(term.partition, f.m), term.coeff);
    return out;
}

std::vector<Vec> support(const SparsePolynomial& f) {
    std::vector<Vec> out;
    out.reserve(f.terms.size());
    for (const auto& [e, c] : f.terms) out.push_back(e);
    return out;
}

std::vector<Bracket> brackets(const SchurCombination& f) {
    std::vector<Bracket> out;
    for (const auto& term : f.terms) {
        std::int64_t d = term.partition.size();
        if (out.empty() || out.back().degree != d) out.push_back({d, {}});
        out.back().terms.push_back(term);
    }
    return out;
}

bool is_symmetric(const SparsePolynomial& f) {
    std::map<Vec, Int> seen_reps;
    for (const auto& [e, c] : f.terms) {
        Vec rep = e;
        std::sort(rep.begin(), rep.end(), std::greater<>());
        auto it = f.terms.find(rep);
        if (it == f.terms.end() || it->second != c) return false;
        seen_reps.emplace(std::move(rep), c);
    }
    for (const auto& [rep, c] : seen_reps) {
        for (const auto& perm : sm_orbit(Partition(rep)))
            if (f.coeff(perm) != c) return false;
    }
    return true;
}

SchurCombination to_schur_basis(const SparsePolynomial& f) {
    if (!is_symmetric(f))
        throw std::invalid_argument("to_schur_basis requires a symmetric polynomial");
    SparsePolynomial rest = f;
    std::vector<SchurTerm> terms;
    while (!rest.is_zero()) {
        // The lex-greatest exponent of a symmetric polynomial is weakly
        // decreasing and dominance-maximal in its degree, so peeling it is
        // exact by the unitriangularity of the Kostka expansion.
        Vec top = rest.terms.rbegin()->first;
        Int c = rest.terms.rbegin()->second;
        Partition lambda(top);
        terms.push_back({c, lambda});
        rest.add_scaled(expand_schur(lambda, f.m), -c);
    }
    return SchurCombination(f.m, std::move(terms));
}

} // namespace goodpoly
