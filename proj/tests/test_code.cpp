#include <algorithm>
#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "ghw/analysis.hpp"
#include "ghw/code.hpp"
#include "ghw/errors.hpp"

using namespace ghw;

namespace {

std::vector<BitWord> words(std::initializer_list<const char*> texts) {
    std::vector<BitWord> out;
    for (const char* t : texts) out.push_back(BitWord::parse(t));
    canonicalize(out);
    return out;
}

}  // namespace

TEST_CASE("zero code is rejected") {
    CHECK_THROWS_AS((void)Code::from_generator(BinaryMatrix(4, {BitWord::zero(4)})), Error);
    try {
        (void)Code::from_generator(BinaryMatrix(4, {BitWord::zero(4)}));
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::ZeroCode);
    }
}

TEST_CASE("length beyond the cap is rejected") {
    BinaryMatrix m(25, {BitWord::ones(25)});
    try {
        (void)Code::from_generator(m);
        FAIL("expected a cap error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::LengthCapExceeded);
        CHECK(exit_code(e.kind()) == 2);
    }
}

TEST_CASE("redundant generator rows are reduced away") {
    const Code c = Code::from_generator(BinaryMatrix::from_strings({"1100", "0011", "1111"}));
    CHECK(c.k() == 2);
    CHECK(c.parity().rows() == 2);
}

TEST_CASE("codewords of the toy code") {
    const Code c = fixtures::code("toy_6_3");
    const auto all = codewords(c);
    CHECK(all.size() == 8);
    std::set<BitWord::bits_type> set;
    for (BitWord w : all) set.insert(w.bits());
    CHECK(set.size() == 8);
    for (BitWord a : all) {
        CHECK(c.contains(a));
        for (BitWord b : all) CHECK(set.count((a ^ b).bits()) == 1);
    }
    CHECK(c.nondegenerate());
}

TEST_CASE("minimal supports of the toy code") {
    const auto m = minimal_support_codewords(fixtures::code("toy_6_3"));
    CHECK(m == words({"100001", "100110", "011010", "000111", "111100", "011101"}));
}

TEST_CASE("minimal supports of the repetition code") {
    const auto m = minimal_support_codewords(fixtures::code("repetition_3_1"));
    CHECK(m == words({"111"}));
}

TEST_CASE("minimal supports of the Hamming code") {
    const auto m = minimal_support_codewords(fixtures::code("hamming_7_4"));
    CHECK(m.size() == 14);
    CHECK(std::count_if(m.begin(), m.end(), [](BitWord w) { return w.weight() == 3; }) == 7);
    CHECK(std::count_if(m.begin(), m.end(), [](BitWord w) { return w.weight() == 4; }) == 7);
}

TEST_CASE("every nonzero word of the worked code has minimal support") {
    CHECK(minimal_support_codewords(fixtures::code("worked_6_3")).size() == 7);
}

TEST_CASE("circuits of the parity matroid are the minimal supports") {
    for (const char* name : {"toy_6_3", "worked_6_3", "hamming_7_4", "counter_10_7"}) {
        const Code c = fixtures::code(name);
        CHECK(matroid_circuits(c) == minimal_support_codewords(c));
    }
    for (std::uint64_t trial = 0; trial < 30; ++trial) {
        const Code c = Code::from_generator(random_full_rank_matrix(8, 4, 101, trial));
        CHECK(matroid_circuits(c) == minimal_support_codewords(c));
    }
}

TEST_CASE("generalized Hamming weights by brute force") {
    CHECK(ghw_sequence_bruteforce(fixtures::code("toy_6_3")).values == std::vector<int>{2, 4, 6});
    CHECK(ghw_sequence_bruteforce(fixtures::code("worked_6_3")).values == std::vector<int>{3, 5, 6});
    CHECK(ghw_sequence_bruteforce(fixtures::code("hamming_7_4")).values == std::vector<int>{3, 5, 6, 7});
    CHECK(ghw_sequence_bruteforce(fixtures::code("counter_10_7")).values ==
          std::vector<int>{2, 4, 5, 6, 8, 9, 10});
    CHECK(ghw_sequence_bruteforce(fixtures::code("repetition_3_1")).values == std::vector<int>{3});
    CHECK(ghw_bruteforce(fixtures::code("toy_6_3"), 1) == 2);
}

TEST_CASE("d1 is the minimum nonzero weight") {
    for (std::uint64_t trial = 0; trial < 30; ++trial) {
        const Code c = Code::from_generator(random_full_rank_matrix(9, 4, 7, trial));
        int min_weight = 99;
        for (BitWord w : codewords(c)) {
            if (!w.empty()) min_weight = std::min(min_weight, w.weight());
        }
        CHECK(ghw_bruteforce(c, 1) == min_weight);
        const auto seq = ghw_sequence_bruteforce(c);
        CHECK(seq.strictly_increasing());
        CHECK(seq.satisfies_singleton_bound(c.n(), c.k()));
    }
}

TEST_CASE("subcode dimension inside a support") {
    const Code c = fixtures::code("toy_6_3");
    CHECK(subcode_dim_within(c, BitWord::ones(6)) == 3);
    CHECK(subcode_dim_within(c, BitWord::zero(6)) == 0);
    CHECK(subcode_dim_within(c, BitWord::parse("100001")) == 1);
    CHECK(subcode_dim_within(c, BitWord::parse("100111")) == 2);
}

TEST_CASE("ghw sequence helpers") {
    const GhwSequence s{{2, 4, 6}};
    CHECK(s.d(2) == 4);
    CHECK(s.strictly_increasing());
    CHECK(s.satisfies_singleton_bound(6, 3));
    CHECK_FALSE(GhwSequence{{2, 2}}.strictly_increasing());
    CHECK_FALSE(GhwSequence{{6, 6}}.satisfies_singleton_bound(6, 2));
}
