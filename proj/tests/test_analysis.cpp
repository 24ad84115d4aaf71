#include <algorithm>

#include "doctest.h"
#include "fixtures.hpp"
#include "ghw/analysis.hpp"
#include "ghw/errors.hpp"
#include "ghw/groebner.hpp"

using namespace ghw;

namespace {

TermOrder lowest_first(int n) {
    std::vector<int> p;
    for (int v = n - 1; v >= 0; --v) p.push_back(v);
    return {OrderKind::DegRevLex, p};
}

}  // namespace

TEST_CASE("ghw via resolution matches brute force") {
    for (const char* name : {"toy_6_3", "worked_6_3", "hamming_7_4", "counter_10_7", "repetition_3_1"}) {
        const Code c = fixtures::code(name);
        CHECK(ghw_via_resolution(c) == ghw_sequence_bruteforce(c));
    }
}

TEST_CASE("witness pairs of the worked code") {
    const Code c = fixtures::code("worked_6_3");
    const auto a = second_weight_witness(c, TermOrder::natural(OrderKind::DegRevLex, 6));
    CHECK(a.m1 == BitWord::parse("001011"));
    CHECK(a.m2 == BitWord::parse("010101"));
    CHECK(a.d2 == 5);
    CHECK(a.overlap_bound_holds());
    const auto b = second_weight_witness(c, lowest_first(6));
    CHECK(b.m1 == BitWord::parse("111000"));
    CHECK(b.m2 == BitWord::parse("100110"));
    CHECK((b.m1 | b.m2).weight() == 5);
}

TEST_CASE("witness of a two-dimensional code covers the support") {
    for (std::uint64_t trial = 0; trial < 20; ++trial) {
        const Code c = Code::from_generator(random_full_rank_matrix(7, 2, 31, trial));
        const auto w = second_weight_witness(c, TermOrder::natural(OrderKind::DegLex, 7));
        BitWord support = BitWord::zero(7);
        for (BitWord cw : codewords(c)) support |= cw;
        CHECK((w.m1 | w.m2) == support);
    }
}

TEST_CASE("witness needs dimension two") {
    try {
        (void)second_weight_witness(fixtures::code("repetition_3_1"), TermOrder::natural(OrderKind::DegLex, 3));
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::DimensionTooSmall);
    }
}

TEST_CASE("d2 from test-set pairs") {
    CHECK(d2_from_testset(fixtures::code("worked_6_3"), TermOrder::natural(OrderKind::DegRevLex, 6)) == 5);
    CHECK(d2_from_testset(fixtures::code("toy_6_3"), TermOrder::natural(OrderKind::DegRevLex, 6)) == 4);
    CHECK(d2_from_testset(fixtures::code("counter_10_7"), TermOrder::natural(OrderKind::DegRevLex, 10)) == 4);
    CHECK(min_pair_union({BitWord::parse("1100"), BitWord::parse("0110"), BitWord::parse("0011")}) == 3);
}

TEST_CASE("symmetric difference lemma") {
    CHECK(symmetric_difference_lemma_holds(BitWord::parse("111100"), BitWord::parse("111010")));
    CHECK(symmetric_difference_lemma_holds(BitWord::parse("110000"), BitWord::parse("001100")));
    const auto sample = sample_symmetric_difference_lemma(12, 5000, 3);
    CHECK(sample.pairs_applicable == 5000);
    CHECK(sample.pairs_drawn >= 5000);
    CHECK(sample.violations == 0);
}

TEST_CASE("verification of the counterexample code") {
    const auto r = verify_code(fixtures::code("counter_10_7"), TermOrder::natural(OrderKind::DegRevLex, 10));
    CHECK(r.all_proven_passed());
    CHECK(r.test_set.size() == 10);
    CHECK(r.pd_testset == 6);
    CHECK(r.minshift_testset == std::vector<int>{2, 4, 5, 7, 8, 9});
    CHECK_FALSE(r.conjecture_holds);
    CHECK(r.third_weight_matches == true);
    CHECK(r.betti_testset == fixtures::c10_testset());
    CHECK(r.betti_full == fixtures::c10_full());
}

TEST_CASE("verification of the toy code") {
    const auto r = verify_code(fixtures::code("toy_6_3"), TermOrder::natural(OrderKind::DegRevLex, 6));
    CHECK(r.all_proven_passed());
    CHECK(r.conjecture_holds);
    CHECK(r.groebner_size == 14);
    CHECK(r.betti_testset == fixtures::toy_testset());
}

TEST_CASE("union of all test sets of the Hamming code") {
    const Code c = fixtures::code("hamming_7_4");
    const auto u = union_testsets(c, all_priority_orders(7));
    CHECK(u.size() == 7);
    for (BitWord g : u.generators()) CHECK(g.weight() == 3);
    CHECK(betti_table_hochster(u) == fixtures::hamming_union());
    CHECK_THROWS_AS((void)union_testsets(c, {}), Error);
}

TEST_CASE("random generators are full rank and reproducible") {
    std::uint64_t rejections = 0;
    for (std::uint64_t trial = 0; trial < 30; ++trial) {
        const auto m = random_full_rank_matrix(10, 6, 77, trial, &rejections);
        CHECK(rank(m) == 6);
        CHECK(m == random_full_rank_matrix(10, 6, 77, trial));
    }
    CHECK_FALSE(random_full_rank_matrix(10, 6, 77, 0) == random_full_rank_matrix(10, 6, 78, 0));
    const auto a = random_orders(9, 4, 5, 1);
    CHECK(a.size() == 4);
    CHECK(a == random_orders(9, 4, 5, 1));
}

TEST_CASE("search with no trials examines nothing") {
    SearchConfig config;
    config.n = 8;
    config.k = 4;
    const auto r = counterexample_search(config);
    CHECK(r.codes_examined == 0);
    CHECK(r.flagged.empty());
}

TEST_CASE("search flags the injected counterexample") {
    SearchConfig config;
    config.n = 8;
    config.k = 4;
    config.trials = 10;
    config.seed = 5;
    config.fixtures.push_back(fixtures::matrix("counter_10_7"));
    const auto r = counterexample_search(config);
    REQUIRE_FALSE(r.flagged.empty());
    const auto& f = r.flagged.front();
    CHECK(f.source == "fixture");
    CHECK(f.pd_testset == 6);
    CHECK(f.k == 7);
    CHECK(r.mismatches_with_pd_below_k >= 1);
    CHECK(r.codes_examined + r.degenerate_skipped == 11);
}

TEST_CASE("search is deterministic across thread counts") {
    SearchConfig config;
    config.n = 8;
    config.k = 4;
    config.trials = 20;
    config.seed = 9;
    config.random_orders = 2;
    const auto one = counterexample_search(config);
    config.threads = 3;
    const auto three = counterexample_search(config);
    CHECK(one.codes_examined == three.codes_examined);
    CHECK(one.mismatches == three.mismatches);
    CHECK(one.flagged.size() == three.flagged.size());
    for (std::size_t i = 0; i < one.flagged.size(); ++i) {
        CHECK(one.flagged[i].index == three.flagged[i].index);
        CHECK(one.flagged[i].generator == three.flagged[i].generator);
    }
}
