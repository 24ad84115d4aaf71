#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ghw/betti.hpp"
#include "ghw/code.hpp"
#include "ghw/groebner.hpp"
#include "ghw/monomial_ideal.hpp"
#include "ghw/term_order.hpp"

namespace ghw {

/// Stanley-Reisner ideal of the code's matroid: generated by the supports of
/// the minimal-support codewords.
[[nodiscard]] MonomialIdeal stanley_reisner_ideal(const Code& c);
/// Ideal M generated by the supports of a test set.
[[nodiscard]] MonomialIdeal testset_ideal(const Code& c, const TermOrder& o);

/// GHWs as the minimal shifts of the Stanley-Reisner resolution.
[[nodiscard]] GhwSequence ghw_via_resolution(const Code& c, const HochsterOptions& options = {});

/// Minimum over unordered pairs of |supp a union supp b|.
[[nodiscard]] int min_pair_union(const std::vector<BitWord>& words);
/// d_2 read off the test set under o. Throws TooFewGenerators.
[[nodiscard]] int d2_from_testset(const Code& c, const TermOrder& o);

/// The pair of codewords spanning a two-dimensional subcode of support d_2,
/// chosen order-minimal: m1 is the smallest word occurring in such a pair,
/// m2 the smallest partner of m1.
/// As words, m1 and m2 double as their supports I and J.
struct WitnessPair {
    BitWord m1;
    BitWord m2;
    int d2 = 0;

    /// 2|I cap J| <= |I| <= |J|.
    [[nodiscard]] bool overlap_bound_holds() const noexcept;
};

/// Throws DimensionTooSmall if k < 2.
[[nodiscard]] WitnessPair second_weight_witness(const Code& c, const TermOrder& o);

/// For all A, B with |A cap B| > |A|/2, C = A xor B has A u B = A u C,
/// |A cap C| < |A|/2 and |C| < |B|. Returns true when the hypothesis fails.
[[nodiscard]] bool symmetric_difference_lemma_holds(BitWord a, BitWord b) noexcept;

struct LemmaSampleResult {
    std::uint64_t pairs_drawn = 0;
    std::uint64_t pairs_applicable = 0;  ///< pairs meeting the hypothesis
    std::uint64_t violations = 0;
};
[[nodiscard]] LemmaSampleResult sample_symmetric_difference_lemma(int n, std::uint64_t pairs, std::uint64_t seed);

/// Order-independent data about a code, shared by every order-level check.
struct CodeProfile {
    GhwSequence ghw;
    std::vector<BitWord> minimal_supports;
    BettiTable betti_full;
    std::vector<int> minshift_full;
};
[[nodiscard]] CodeProfile profile_code(const Code& c, const HochsterOptions& options = {});

struct Check {
    std::string name;
    bool proven = true;  ///< a theorem (failure is a bug) rather than a conjecture
    bool passed = true;
    std::string detail;
};

struct VerificationReport {
    std::string code_id;
    TermOrder order;
    int n = 0;
    int k = 0;
    GhwSequence ghw_true{};
    std::vector<int> minshift_full{};
    std::vector<int> minshift_testset{};
    int pd_testset = 0;
    BettiTable betti_full{};
    BettiTable betti_testset{};
    std::vector<BitWord> test_set{};
    int groebner_size = 0;
    std::optional<WitnessPair> witness{};
    std::vector<Check> checks{};
    /// The full test-set sequence equals the GHW sequence.
    bool conjecture_holds = false;
    /// d_3 equals the minimal third shift of R/M; empty when k < 3.
    std::optional<bool> third_weight_matches{};
    /// Euler checks performed during the test-set sweep.
    std::uint64_t euler_checks = 0;

    [[nodiscard]] bool all_proven_passed() const noexcept;
};

struct VerifyOptions {
    HochsterOptions hochster;
    std::uint64_t lemma_pairs = 1000;
    std::uint64_t lemma_seed = 1;
    bool abort_on_failure = true;
    std::string code_id;
};

/// Runs every proven check in turn and records the conjectural ones. Throws
/// TheoremViolation on a failed proven check unless abort_on_failure is off.
[[nodiscard]] VerificationReport verify_code(const Code& c, const TermOrder& o, const VerifyOptions& options = {},
                                             const CodeProfile* profile = nullptr);

struct SearchConfig {
    int n = 8;
    int k = 4;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    std::vector<TermOrder> orders;
    int random_orders = 0;
    /// Extra generator matrices examined before the random trials.
    std::vector<BinaryMatrix> fixtures;
    HochsterOptions hochster;
    unsigned threads = 1;
};

struct FlaggedCode {
    std::string source;  ///< "fixture" or "random"
    std::uint64_t index = 0;
    std::vector<std::string> generator;
    TermOrder order;
    std::vector<int> ghw;
    std::vector<int> minshift_testset;
    int pd_testset = 0;
    int k = 0;
    std::optional<bool> third_weight_matches;
};

struct SearchReport {
    SearchConfig config;
    std::uint64_t codes_examined = 0;
    std::uint64_t rank_rejections = 0;
    std::uint64_t degenerate_skipped = 0;
    std::uint64_t reports = 0;
    std::uint64_t mismatches = 0;
    std::uint64_t mismatches_with_pd_below_k = 0;
    /// Mismatches with pd(R/M) = k: counterexamples to the pd question.
    std::uint64_t pd_equal_k_mismatches = 0;
    std::uint64_t third_weight_failures = 0;
    std::uint64_t euler_checks = 0;
    std::vector<FlaggedCode> flagged;
};

/// Deterministic given the seed: trial t draws from its own generator seeded
/// by (seed, t), independent of the thread schedule.
[[nodiscard]] SearchReport counterexample_search(const SearchConfig& config);

/// A uniformly random full-rank k x n matrix for trial t; rejections counted.
[[nodiscard]] BinaryMatrix random_full_rank_matrix(int n, int k, std::uint64_t seed, std::uint64_t trial,
                                                   std::uint64_t* rejections = nullptr);
[[nodiscard]] std::vector<TermOrder> random_orders(int n, int count, std::uint64_t seed, std::uint64_t trial);

/// Union of the test sets over the given orders, as a monomial ideal.
[[nodiscard]] MonomialIdeal union_testsets(const Code& c, const std::vector<TermOrder>& orders);

}  // namespace ghw
