#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "goodpoly/numeric.hpp"
#include "goodpoly/partition.hpp"

namespace goodpoly {

// Sparse multivariate polynomial with exact integer coefficients. Terms are
// keyed by exponent vector in lexicographic order; zero coefficients are
// never stored.
struct SparsePolynomial {
    std::size_t m = 0;
    std::map<Vec, Int> terms;

    SparsePolynomial() = default;
    explicit SparsePolynomial(std::size_t m_) : m(m_) {}

    bool is_zero() const { return terms.empty(); }
    void add_term(const Vec& exponent, const Int& coeff);
    Int coeff(const Vec& exponent) const;

    SparsePolynomial& operator+=(const SparsePolynomial& other);
    SparsePolynomial& add_scaled(const SparsePolynomial& other, const Int& scale);

    friend bool operator==(const SparsePolynomial&, const SparsePolynomial&) = default;
};

struct SchurTerm {
    Int coeff;
    Partition partition;

    friend bool operator==(const SchurTerm&, const SchurTerm&) = default;
};

// Formal linear combination sum C_mu s_mu with distinct partitions of
// length m and nonzero integer coefficients. Terms are kept sorted by
// (degree, reverse lex), so each bracket lists its dominance order from the
// top when one exists.
struct SchurCombination {
    std::size_t m = 0;
    std::vector<SchurTerm> terms;

    SchurCombination() = default;
    explicit SchurCombination(std::size_t m_) : m(m_) {}
    SchurCombination(std::size_t m_, std::vector<SchurTerm> raw);

    friend bool operator==(const SchurCombination&, const SchurCombination&) = default;
};

// The sub-sum of a combination over partitions of one fixed size.
struct Bracket {
    std::int64_t degree = 0;
    std::vector<SchurTerm> terms;
};

// The Schur polynomial s_lambda(x_1..x_m): the coefficient of x^alpha is
// the Kostka count of SSYT with shape lambda and content alpha.
SparsePolynomial expand_schur(const Partition& lambda, std::size_t m);

SparsePolynomial expand_combination(const SchurCombination& f);

// Supp(f): exponent vectors with nonzero coefficient, in lex order.
std::vector<Vec> support(const SparsePolynomial& f);

// Terms grouped by |mu|, ascending degree.
std::vector<Bracket> brackets(const SchurCombination& f);

// Inverse of expand_combination on symmetric polynomials; rejects
// non-symmetric input. Works by peeling the lex-greatest exponent, which
// for a symmetric polynomial is always a partition.
SchurCombination to_schur_basis(const SparsePolynomial& f);

// True iff coefficients are constant on S_m-orbits of exponent vectors.
bool is_symmetric(const SparsePolynomial& f);

} // namespace goodpoly
