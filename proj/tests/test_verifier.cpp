#include <doctest.h>

#include <algorithm>
#include <set>

#include "goodpoly/families.hpp"
#include "goodpoly/random.hpp"
#include "goodpoly/verifier.hpp"
#include "testutil.hpp"

using namespace goodpoly;
using testutil::partitions_of;
using testutil::partitions_up_to;

TEST_CASE("newton_polytope") {
    auto f = expand_schur(Partition{3, 1, 0}, 3);
    auto p = newton_polytope(f);
    CHECK(p.generators.size() == 12);
    CHECK(vertices(p).size() == 6);

    SparsePolynomial one(3);
    one.add_term({0, 0, 0}, 1);
    CHECK(newton_polytope(one).generators == std::vector<Vec>{{0, 0, 0}});

    CHECK_THROWS_AS(newton_polytope(SparsePolynomial(3)), std::invalid_argument);
}

TEST_CASE("check_snp on a single Schur polynomial") {
    CHECK(check_snp(expand_schur(Partition{3, 1, 0}, 3)).holds);
}

TEST_CASE("check_snp catches the cancelled orbit") {
    SchurCombination f(3, {{Int(1), Partition{3, 1, 0}}, {Int(-1), Partition{2, 2, 0}}});
    auto report = check_snp(expand_combination(f));
    CHECK_FALSE(report.holds);
    std::set<Vec> missing(report.missing_points.begin(), report.missing_points.end());
    CHECK(missing == std::set<Vec>{{2, 2, 0}, {2, 0, 2}, {0, 2, 2}});
}

TEST_CASE("check_snp on the six-term wrong-order chain") {
    SchurCombination f(3, {{Int(1), Partition{6, 4, 0}}, {Int(1), Partition{6, 4, 1}},
                           {Int(1), Partition{6, 4, 2}}, {Int(1), Partition{6, 4, 3}},
                           {Int(1), Partition{6, 5, 3}}, {Int(1), Partition{6, 6, 3}}});
    auto report = check_snp(expand_combination(f));
    CHECK_FALSE(report.holds);
    CHECK(std::count(report.missing_points.begin(), report.missing_points.end(),
                     Vec{6, 5, 2}) == 1);
}

TEST_CASE("check_snp on the short wrong-order chain holds") {
    SchurCombination f(3, {{Int(1), Partition{3, 1, 0}}, {Int(1), Partition{3, 1, 1}},
                           {Int(1), Partition{3, 2, 1}}});
    CHECK(check_snp(expand_combination(f)).holds);
}

TEST_CASE("check_condition_a") {
    CHECK(check_condition_a(example_g2_310()).holds);

    SchurCombination cancelling(3, {{Int(1), Partition{3, 1, 0}},
                                    {Int(-1), Partition{2, 2, 0}}});
    auto report = check_condition_a(cancelling);
    CHECK_FALSE(report.holds);
    CHECK(report.failing_degree == 4);
    REQUIRE(report.missing_point.has_value());
    CHECK(sort_decreasing(*report.missing_point) == Partition{2, 2, 0});

    CHECK(check_condition_a(SchurCombination(3, {{Int(7), Partition{2, 1, 0}}})).holds);
}

TEST_CASE("check_condition_a_prime") {
    CHECK(check_condition_a_prime(example_g2_310()));
    CHECK_FALSE(check_condition_a_prime(
        SchurCombination(2, {{Int(1), Partition{2, 0}}, {Int(-1), Partition{1, 1}}})));
    CHECK(check_condition_a_prime(SchurCombination(2)));
}

TEST_CASE("check_condition_b") {
    auto good = check_condition_b(example_g2_310());
    CHECK(good.holds);
    std::vector<Partition> expected = {Partition{3, 1, 0}, Partition{3, 2, 0},
                                       Partition{3, 3, 0}, Partition{3, 3, 1},
                                       Partition{3, 3, 2}, Partition{3, 3, 3}};
    CHECK(good.chain == expected);

    // (4,1,1) and (3,3,0) are dominance-incomparable, so the bracket has no
    // maximum.
    SchurCombination incomparable(3, {{Int(1), Partition{4, 1, 1}},
                                      {Int(1), Partition{3, 3, 0}}});
    auto bad = check_condition_b(incomparable);
    CHECK_FALSE(bad.holds);
    CHECK(bad.reason.find("no dominance maximum") != std::string::npos);

    auto single = check_condition_b(SchurCombination(3, {{Int(2), Partition{2, 1, 0}}}));
    CHECK(single.holds);
    CHECK(single.chain == std::vector<Partition>{Partition{2, 1, 0}});

    // maxima exist but skip a degree, so they cannot chain
    SchurCombination gap(3, {{Int(1), Partition{2, 0, 0}}, {Int(1), Partition{2, 2, 0}}});
    CHECK_FALSE(check_condition_b(gap).holds);
}

TEST_CASE("check_condition_b_prime") {
    auto dg = check_condition_b_prime(dual_grothendieck(Partition{2, 1}, 2));
    CHECK(dg.holds);
    CHECK(dg.lambda_min == Partition{2, 0});
    CHECK(dg.lambda_max == Partition{2, 1});

    // The nine appearing partitions fill the interval [(3,1,0),(3,3,3)]
    // exactly.
    auto ex = check_condition_b_prime(example_g2_310());
    CHECK(ex.holds);
    CHECK(ex.lambda_min == Partition{3, 1, 0});
    CHECK(ex.lambda_max == Partition{3, 3, 3});

    auto single = check_condition_b_prime(
        SchurCombination(3, {{Int(4), Partition{2, 1, 0}}}));
    CHECK(single.holds);
    CHECK(single.lambda_min == single.lambda_max);

    // an interval with one member removed
    SchurCombination holey(2, {{Int(1), Partition{2, 0}}, {Int(1), Partition{2, 2}}});
    CHECK_FALSE(check_condition_b_prime(holey).holds);
}

TEST_CASE("check_good") {
    CHECK(check_good(example_g2_310()).good);
    CHECK_FALSE(check_good(SchurCombination(3, {{Int(1), Partition{3, 1, 0}},
                                                {Int(-1), Partition{2, 2, 0}}}))
                    .good);
    CHECK(check_good(SchurCombination(3, {{Int(1), Partition{3, 1, 0}}})).good);
}

TEST_CASE("rado_containment") {
    CHECK(rado_containment(Partition{2, 1, 1}, Partition{3, 1, 0}));
    CHECK(rado_containment(Partition{2, 1}, Partition{2, 1}));
    CHECK_FALSE(rado_containment(Partition{3, 1, 0}, Partition{2, 2, 0}));
    CHECK_THROWS_AS(rado_containment(Partition{2, 0}, Partition{1, 0}),
                    std::invalid_argument);
}

TEST_CASE("rado containment agrees with hull containment") {
    for (std::int64_t n = 1; n <= 6; ++n) {
        auto ps = partitions_of(n, 3);
        for (const auto& alpha : ps)
            for (const auto& beta : ps) {
                LatticePolytope hull(3, sm_orbit(beta));
                bool geometric = true;
                for (const auto& point : sm_orbit(alpha))
                    if (!contains_point(hull, point)) {
                        geometric = false;
                        break;
                    }
                CHECK(rado_containment(alpha, beta) == geometric);
            }
    }
}

TEST_CASE("schur_membership") {
    CHECK(schur_membership({2, 1, 1}, Partition{3, 1, 0}));
    CHECK(schur_membership({3, 1, 0}, Partition{3, 1, 0}));
    CHECK_FALSE(schur_membership({4, 0, 0}, Partition{3, 1, 0}));
    CHECK_FALSE(schur_membership({1, 1, 0}, Partition{3, 1, 0})); // wrong size
    CHECK_THROWS_AS(schur_membership({-1, 1, 0}, Partition{3, 1, 0}),
                    std::invalid_argument);
}

TEST_CASE("schur polynomials have saturated orbit hulls") {
    for (const auto& lambda : partitions_up_to(6, 3)) {
        auto pts = lattice_points(LatticePolytope(3, sm_orbit(lambda)));
        auto supp = support(expand_schur(lambda, 3));
        CHECK(pts == supp);
        for (const auto& p : pts) CHECK(schur_membership(p, lambda));
    }
}

TEST_CASE("newton_of_combination") {
    auto p = newton_of_combination(example_g2_310());
    std::set<Vec> expected;
    for (const auto& lambda :
         {Partition{3, 1, 0}, Partition{3, 3, 0}, Partition{3, 3, 3}})
        for (const auto& v : sm_orbit(lambda)) expected.insert(v);
    CHECK(std::set<Vec>(p.generators.begin(), p.generators.end()) == expected);

    auto single = newton_of_combination(SchurCombination(3, {{Int(1), Partition{2, 1, 0}}}));
    auto orbit = sm_orbit(Partition{2, 1, 0});
    CHECK(std::set<Vec>(single.generators.begin(), single.generators.end()) ==
          std::set<Vec>(orbit.begin(), orbit.end()));

    SchurCombination bad(3, {{Int(1), Partition{4, 1, 1}}, {Int(1), Partition{3, 3, 0}}});
    CHECK_THROWS_AS(newton_of_combination(bad), std::invalid_argument);
}

TEST_CASE("the nine-term example spans all three dimensions") {
    // degree varies across brackets, so the hull leaves the sum hyperplane
    CHECK(dimension(newton_of_combination(example_g2_310())) == 3);
    CHECK(dimension(newton_polytope(expand_schur(Partition{3, 1, 0}, 3))) == 2);
}

TEST_CASE("newton_of_combination agrees with the expanded polytope") {
    auto from_chain = newton_of_combination(example_g2_310());
    auto from_expansion = newton_polytope(expand_combination(example_g2_310()));
    for (std::int64_t x = 0; x <= 3; ++x)
        for (std::int64_t y = 0; y <= 3; ++y)
            for (std::int64_t z = 0; z <= 3; ++z)
                CHECK(contains_point(from_chain, Vec{x, y, z}) ==
                      contains_point(from_expansion, Vec{x, y, z}));
}

TEST_CASE("chain sum over a small chain matches orbit hull generators") {
    auto f = chain_sum(Partition{1, 0}, Partition{2, 1});
    auto p = newton_of_combination(f);
    std::set<Vec> expected;
    for (const auto& lambda : {Partition{1, 0}, Partition{2, 0}, Partition{2, 1}})
        for (const auto& v : sm_orbit(lambda)) expected.insert(v);
    CHECK(std::set<Vec>(p.generators.begin(), p.generators.end()) == expected);
}

TEST_CASE("verify_good_theorem") {
    auto good = verify_good_theorem(example_g2_310(), 2);
    CHECK(good.goodness.good);
    CHECK(good.snp->holds);
    CHECK(good.idp->holds);
    CHECK_FALSE(good.theorem_violation);

    SchurCombination wrong_order(3, {{Int(1), Partition{3, 1, 0}},
                                     {Int(1), Partition{3, 1, 1}},
                                     {Int(1), Partition{3, 2, 1}}});
    auto partial = verify_good_theorem(wrong_order, 2);
    CHECK_FALSE(partial.goodness.good);
    CHECK(partial.snp->holds);
    CHECK_FALSE(partial.theorem_violation);

    auto single = verify_good_theorem(SchurCombination(3, {{Int(1), Partition{2, 1, 0}}}), 2);
    CHECK(single.goodness.good);
    CHECK(single.snp->holds);
    CHECK(single.idp->holds);

    CHECK_THROWS_AS(verify_good_theorem(SchurCombination(3), 2), std::invalid_argument);
}

TEST_CASE("SNP does not imply IDP for arbitrary combinations") {
    // 2s_(1,0,0) + 3s_(1,1,1): the support is {e1, e2, e3, (1,1,1)}, all
    // lattice points of its hull, yet (1,1,1) lies in the doubled hull and
    // is not a sum of two support points.
    SchurCombination f(3, {{Int(2), Partition{1, 0, 0}}, {Int(3), Partition{1, 1, 1}}});
    auto expansion = expand_combination(f);
    CHECK(check_snp(expansion).holds);
    auto idp = idp_check(newton_polytope(expansion), 2);
    CHECK_FALSE(idp.holds);
    REQUIRE(idp.witness.has_value());
    CHECK(idp.witness->point == Vec{1, 1, 1});
    CHECK_FALSE(check_good(f).good); // degree 2 bracket is missing, (b) fails
}

TEST_CASE("random good combinations satisfy the theorem") {
    Rng rng(20230901);
    for (int trial = 0; trial < 25; ++trial) {
        auto f = random_good_combination(rng, 3, 7, 9);
        auto report = verify_good_theorem(f, 2);
        CHECK(report.goodness.good);
        CHECK_FALSE(report.theorem_violation);
    }
}

TEST_CASE("support of the nine-term example is the union over its chain") {
    auto f = example_g2_310();
    auto chain = check_condition_b(f).chain;
    std::set<Vec> from_chain;
    for (const auto& lambda : chain)
        for (const auto& e : support(expand_schur(lambda, 3))) from_chain.insert(e);
    auto supp = support(expand_combination(f));
    CHECK(std::set<Vec>(supp.begin(), supp.end()) == from_chain);
}

TEST_CASE("chain polytope equals the expanded polytope on good combinations") {
    Rng rng(5150);
    for (int trial = 0; trial < 15; ++trial) {
        auto f = random_good_combination(rng, 3, 6, 4);
        auto from_chain = newton_of_combination(f);
        auto from_expansion = newton_polytope(expand_combination(f));
        CHECK(lattice_points(from_chain) == lattice_points(from_expansion));
        CHECK(vertices(from_chain) == vertices(from_expansion));
    }
}

TEST_CASE("every full interval combination is good with the canonical chain") {
    // exhaustive over all containment pairs with |top| <= 7 in three
    // variables: unit coefficients on the whole interval satisfy (b') and
    // must come out good with chain endpoints (bottom, top)
    auto all = partitions_up_to(7, 3);
    for (const auto& bottom : all) {
        for (const auto& top : all) {
            if (!contains(top, bottom)) continue;
            std::vector<SchurTerm> terms;
            for (const auto& nu : partitions_up_to(top.size(), 3))
                if (contains(nu, bottom) && contains(top, nu))
                    terms.push_back({Int(1), nu});
            SchurCombination f(3, std::move(terms));
            auto report = check_good(f);
            REQUIRE(report.condition_b_prime.holds);
            CHECK(report.condition_b_prime.lambda_min == bottom);
            CHECK(report.condition_b_prime.lambda_max == top);
            CHECK(report.good);
            CHECK(report.condition_b.chain.front() == bottom);
            CHECK(report.condition_b.chain.back() == top);
        }
    }
}

TEST_CASE("corollary implications hold on random combinations") {
    Rng rng(424242);
    for (int trial = 0; trial < 60; ++trial) {
        auto f = random_combination(rng, 3, 6, 5, 5);
        if (f.terms.empty()) continue;
        auto report = check_good(f); // throws internally if an implication breaks
        if (report.condition_a_prime) CHECK(report.condition_a.holds);
        if (report.condition_b_prime.holds) {
            CHECK(report.condition_b.holds);
            CHECK(report.condition_b.chain.front() == *report.condition_b_prime.lambda_min);
            CHECK(report.condition_b.chain.back() == *report.condition_b_prime.lambda_max);
        }
    }
}
