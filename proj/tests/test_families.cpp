#include <doctest.h>

#include <set>

#include "goodpoly/families.hpp"
#include "goodpoly/random.hpp"
#include "goodpoly/tableaux.hpp"
#include "goodpoly/verifier.hpp"
#include "testutil.hpp"

using namespace goodpoly;
using testutil::partitions_up_to;

TEST_CASE("dual_grothendieck small cases") {
    CHECK(dual_grothendieck(Partition{2, 1}, 2) ==
          SchurCombination(2, {{Int(1), Partition{2, 0}}, {Int(1), Partition{2, 1}}}));

    CHECK(dual_grothendieck(Partition{4}, 1) ==
          SchurCombination(1, {{Int(1), Partition{4}}}));

    auto g22 = dual_grothendieck(Partition{2, 2}, 2);
    std::set<Partition> appearing;
    for (const auto& t : g22.terms) appearing.insert(t.partition);
    CHECK(appearing == std::set<Partition>{Partition{2, 0}, Partition{2, 1},
                                           Partition{2, 2}});

    CHECK_THROWS_AS(dual_grothendieck(Partition{2, 1}, 1), std::invalid_argument);
}

TEST_CASE("dual_grothendieck coefficients are the skew counts") {
    Partition lambda{3, 2, 0};
    auto g = dual_grothendieck(lambda, 3);
    for (const auto& term : g.terms)
        CHECK(term.coeff == skew_row_bounded_count(lambda, term.partition));
}

TEST_CASE("dual_grothendieck appearing set is the containment interval") {
    for (const auto& lambda : partitions_up_to(7, 3)) {
        auto g = dual_grothendieck(lambda, 3);
        std::set<Partition> appearing;
        for (const auto& t : g.terms) {
            CHECK(t.coeff > 0);
            appearing.insert(t.partition);
        }
        std::set<Partition> interval;
        Partition bottom{lambda.parts[0], 0, 0};
        for (const auto& mu : partitions_up_to(lambda.size(), 3))
            if (contains(mu, bottom) && contains(lambda, mu)) interval.insert(mu);
        CHECK(appearing == interval);
        CHECK(check_good(g).good);
    }
}

TEST_CASE("dual_grothendieck recovered chain matches the canonical one") {
    for (const auto& lambda : partitions_up_to(6, 3)) {
        auto report = check_condition_b(dual_grothendieck(lambda, 3));
        REQUIRE(report.holds);
        Partition bottom{lambda.parts[0], 0, 0};
        CHECK(report.chain == generate_chain(bottom, lambda).steps);
    }
}

TEST_CASE("chain_sum") {
    auto f = chain_sum(Partition{3, 1, 0}, Partition{3, 3, 3});
    CHECK(f.terms.size() == 6);
    for (const auto& t : f.terms) CHECK(t.coeff == 1);
    CHECK(check_good(f).good);

    CHECK(chain_sum(Partition{2, 1}, Partition{2, 1}) ==
          SchurCombination(2, {{Int(1), Partition{2, 1}}}));
}

TEST_CASE("alternating_chain_sum") {
    auto f = alternating_chain_sum(Partition{3, 1, 0}, Partition{3, 3, 3});
    REQUIRE(f.terms.size() == 6);
    Int sign = 1;
    for (const auto& t : f.terms) {
        CHECK(t.coeff == sign);
        sign = -sign;
    }
    CHECK(check_condition_a(f).holds);
    CHECK(check_good(f).good);

    CHECK(alternating_chain_sum(Partition{2, 1}, Partition{2, 1}) ==
          SchurCombination(2, {{Int(1), Partition{2, 1}}}));
}

TEST_CASE("chain sums satisfy the theorem") {
    auto report = verify_good_theorem(chain_sum(Partition{1, 1, 0}, Partition{3, 2, 1}), 3);
    CHECK(report.goodness.good);
    CHECK(report.snp->holds);
    CHECK(report.idp->holds);
    CHECK_FALSE(report.theorem_violation);

    auto alt = verify_good_theorem(
        alternating_chain_sum(Partition{1, 1, 0}, Partition{3, 2, 1}), 3);
    CHECK_FALSE(alt.theorem_violation);
}

TEST_CASE("random alternating chain sums satisfy the theorem") {
    Rng rng(606);
    for (int trial = 0; trial < 10; ++trial) {
        Partition beta = random_partition(rng, 3, 7);
        Partition alpha = random_subpartition(rng, beta);
        auto report = verify_good_theorem(alternating_chain_sum(alpha, beta), 2);
        CHECK(report.goodness.good);
        CHECK_FALSE(report.theorem_violation);
    }
}

TEST_CASE("scaled chain sums scale the subchain") {
    Partition alpha{1, 0}, beta{2, 1};
    std::int64_t t = 2;
    Vec a = alpha.parts, b = beta.parts;
    for (auto& x : a) x *= t;
    for (auto& x : b) x *= t;
    auto scaled = subchain(Partition(a), Partition(b));
    auto base = subchain(alpha, beta);
    REQUIRE(scaled.size() == base.size());
    for (std::size_t i = 0; i < base.size(); ++i) {
        Vec expect = base[i].parts;
        for (auto& x : expect) x *= t;
        CHECK(scaled[i].parts == expect);
    }
    CHECK(check_good(chain_sum(Partition(a), Partition(b))).good);
}

TEST_CASE("example_g2_310") {
    auto f = example_g2_310();
    CHECK(f.terms.size() == 9);
    CHECK(f.m == 3);

    auto bs = brackets(f);
    REQUIRE(bs.size() == 6);
    std::vector<std::int64_t> degrees, sizes;
    for (const auto& b : bs) {
        degrees.push_back(b.degree);
        sizes.push_back(static_cast<std::int64_t>(b.terms.size()));
    }
    CHECK(degrees == std::vector<std::int64_t>{4, 5, 6, 7, 8, 9});
    CHECK(sizes == std::vector<std::int64_t>{1, 2, 2, 2, 1, 1});

    Int coeff332 = 0;
    for (const auto& t : f.terms)
        if (t.partition == Partition{3, 3, 2}) coeff332 = t.coeff;
    CHECK(coeff332 == 44);

    CHECK(check_good(f).good);
}

TEST_CASE("materialize and kind round trip") {
    FamilySpec spec;
    spec.kind = FamilyKind::dual_grothendieck;
    spec.lambda = Partition{2, 1};
    spec.m = 2;
    CHECK(materialize(spec) == dual_grothendieck(Partition{2, 1}, 2));

    for (auto kind : {FamilyKind::dual_grothendieck, FamilyKind::chain_sum,
                      FamilyKind::alternating_chain_sum, FamilyKind::example_g2_310})
        CHECK(family_kind_from_string(family_kind_to_string(kind)) == kind);

    CHECK_THROWS_AS(family_kind_from_string("nope"), std::invalid_argument);
    CHECK_THROWS_AS(materialize(FamilySpec{}), std::invalid_argument);
}
