#include "ghw/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <random>
#include <sstream>
#include <thread>

namespace ghw {

namespace {

std::string join(const std::vector<int>& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i != 0) out += ',';
        out += std::to_string(v[i]);
    }
    return out + ")";
}

std::mt19937_64 trial_engine(std::uint64_t seed, std::uint64_t trial, std::uint32_t stream) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32), stream};
    return std::mt19937_64(seq);
}

// Portable bounded draw; the modulo bias is irrelevant at these sizes.
std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
    return rng() % bound;
}

}  // namespace

MonomialIdeal stanley_reisner_ideal(const Code& c) {
    return ideal_from_supports(c.n(), minimal_support_codewords(c));
}

MonomialIdeal testset_ideal(const Code& c, const TermOrder& o) {
    return ideal_from_supports(c.n(), test_set(reduced_groebner_basis(c, o).basis));
}

GhwSequence ghw_via_resolution(const Code& c, const HochsterOptions& options) {
    return GhwSequence{min_shifts(betti_table_hochster(stanley_reisner_ideal(c), options))};
}

int min_pair_union(const std::vector<BitWord>& words) {
    if (words.size() < 2) throw Error(ErrorKind::TooFewGenerators, "need at least two words for a pair minimum");
    int best = words.front().size() + 1;
    for (std::size_t a = 0; a < words.size(); ++a) {
        for (std::size_t b = a + 1; b < words.size(); ++b) best = std::min(best, (words[a] | words[b]).weight());
    }
    return best;
}

int d2_from_testset(const Code& c, const TermOrder& o) {
    return min_pair_union(test_set(reduced_groebner_basis(c, o).basis));
}

bool WitnessPair::overlap_bound_holds() const noexcept {
    return 2 * (m1 & m2).weight() <= m1.weight() && m1.weight() <= m2.weight();
}

WitnessPair second_weight_witness(const Code& c, const TermOrder& o) {
    if (c.k() < 2) throw Error(ErrorKind::DimensionTooSmall, "second weight needs dimension at least 2");
    const int d2 = ghw_bruteforce(c, 2);
    auto words = codewords(c);
    std::erase_if(words, [](BitWord w) { return w.empty(); });
    std::sort(words.begin(), words.end(), [&o](BitWord a, BitWord b) { return o.less(a, b); });

    auto spans_d2 = [d2](BitWord a, BitWord b) { return a != b && (a | b).weight() == d2; };
    for (BitWord m1 : words) {
        // words is sorted, so the first partner found is the minimal one.
        for (BitWord m2 : words) {
            if (spans_d2(m1, m2)) return {m1, m2, d2};
        }
    }
    throw Error(ErrorKind::TheoremViolation, "no pair of codewords spans a subcode of support d_2");
}

bool symmetric_difference_lemma_holds(BitWord a, BitWord b) noexcept {
    const int overlap = (a & b).weight();
    if (2 * overlap <= a.weight()) return true;
    const BitWord c = a ^ b;
    return (a | b) == (a | c) && 2 * (a & c).weight() < a.weight() && c.weight() < b.weight();
}

LemmaSampleResult sample_symmetric_difference_lemma(int n, std::uint64_t pairs, std::uint64_t seed) {
    auto rng = trial_engine(seed, 0, 7);
    LemmaSampleResult result;
    const auto mask = BitWord::full_mask(n);
    while (result.pairs_applicable < pairs) {
        BitWord a(n, static_cast<BitWord::bits_type>(rng()) & mask);
        // Bias B towards A so that the hypothesis holds for most draws.
        BitWord noise(n, static_cast<BitWord::bits_type>(rng() & rng()) & mask);
        BitWord b = a ^ noise;
        ++result.pairs_drawn;
        if (2 * (a & b).weight() <= a.weight()) continue;
        ++result.pairs_applicable;
        if (!symmetric_difference_lemma_holds(a, b)) ++result.violations;
    }
    return result;
}

CodeProfile profile_code(const Code& c, const HochsterOptions& options) {
    CodeProfile p;
    p.ghw = ghw_sequence_bruteforce(c);
    p.minimal_supports = minimal_support_codewords(c);
    p.betti_full = betti_table_hochster(ideal_from_supports(c.n(), p.minimal_supports), options);
    p.minshift_full = min_shifts(p.betti_full);
    return p;
}

bool VerificationReport::all_proven_passed() const noexcept {
    return std::all_of(checks.begin(), checks.end(), [](const Check& ch) { return !ch.proven || ch.passed; });
}

VerificationReport verify_code(const Code& c, const TermOrder& o, const VerifyOptions& options,
                               const CodeProfile* profile) {
    CodeProfile local;
    if (profile == nullptr) {
        local = profile_code(c, options.hochster);
        profile = &local;
    }
    VerificationReport r{.code_id = options.code_id, .order = o, .n = c.n(), .k = c.k()};
    r.ghw_true = profile->ghw;
    r.minshift_full = profile->minshift_full;
    r.betti_full = profile->betti_full;

    auto check = [&r](std::string name, bool passed, std::string detail, bool proven = true) {
        r.checks.push_back({std::move(name), proven, passed, std::move(detail)});
    };

    const auto gb = reduced_groebner_basis(c, o);
    r.groebner_size = gb.basis.total_size();
    r.test_set = test_set(gb.basis);
    const auto& minimal = profile->minimal_supports;
    const int d1 = r.ghw_true.d(1);

    // Every basis binomial is in standard form.
    const bool standard = std::all_of(gb.basis.binomials.begin(), gb.basis.binomials.end(),
                                      [](const Binomial& b) { return b.standard_form(); });
    check("binomials in standard form", standard, "lead and trail supports are disjoint");

    // Test set inside the minimal supports and attaining d_1.
    const bool inside = std::all_of(r.test_set.begin(), r.test_set.end(), [&](BitWord w) {
        return std::binary_search(minimal.begin(), minimal.end(), w, LexLess{});
    });
    check("test set has minimal support", inside, std::to_string(r.test_set.size()) + " test-set words");
    int min_weight = c.n() + 1;
    for (BitWord w : r.test_set) min_weight = std::min(min_weight, w.weight());
    check("test set attains d1", min_weight == d1,
          "min test-set weight " + std::to_string(min_weight) + ", d1 = " + std::to_string(d1));

    if (c.k() >= 2) {
        const int d2 = r.ghw_true.d(2);
        r.witness = second_weight_witness(c, o);
        const auto& wit = *r.witness;
        check("witness overlap bound", wit.overlap_bound_holds(),
              "m1 = " + wit.m1.to_string() + ", m2 = " + wit.m2.to_string());
        auto has_support = [&](BitWord s) {
            return std::any_of(gb.basis.binomials.begin(), gb.basis.binomials.end(),
                               [s](const Binomial& b) { return b.support() == s; });
        };
        check("basis binomial supported on m1", has_support(wit.m1), wit.m1.to_string());
        check("basis binomial supported on m2", has_support(wit.m2), wit.m2.to_string());
        const int from_pairs = r.test_set.size() >= 2 ? min_pair_union(r.test_set) : -1;
        check("d2 from test-set pairs", from_pairs == d2,
              "pair minimum " + std::to_string(from_pairs) + ", d2 = " + std::to_string(d2));
    }

    const auto m_ideal = ideal_from_supports(c.n(), r.test_set);
    HochsterStats sweep;
    r.betti_testset = betti_table_hochster(m_ideal, options.hochster, &sweep);
    r.euler_checks = sweep.euler_checks;
    r.minshift_testset = min_shifts(r.betti_testset);
    r.pd_testset = r.betti_testset.projective_dimension();

    check("(a) pd(R/M) <= k", r.pd_testset <= c.k(),
          "pd = " + std::to_string(r.pd_testset) + ", k = " + std::to_string(c.k()));
    bool bound_ok = true;
    for (int i = 3; i <= std::min(r.pd_testset, c.k()); ++i) {
        bound_ok = bound_ok && r.ghw_true.d(i) <= r.minshift_testset[static_cast<std::size_t>(i - 1)];
    }
    check("(b) d_i <= min shift of R/M", bound_ok, "GHW " + join(r.ghw_true.values) + ", R/M " + join(r.minshift_testset));
    bool exact_ok = !r.minshift_testset.empty() && r.minshift_testset[0] == d1;
    if (c.k() >= 2) exact_ok = exact_ok && r.minshift_testset.size() >= 2 && r.minshift_testset[1] == r.ghw_true.d(2);
    check("(c) d_1, d_2 equal min shifts of R/M", exact_ok, "R/M " + join(r.minshift_testset));
    if (c.k() >= 2) {
        check("Taylor pair minimum equals d2", taylor_pair_minimum(m_ideal) == r.ghw_true.d(2),
              "pair minimum " + std::to_string(taylor_pair_minimum(m_ideal)));
    }

    check("Stanley-Reisner min shifts equal GHW", r.minshift_full == r.ghw_true.values,
          "resolution " + join(r.minshift_full) + ", oracle " + join(r.ghw_true.values));
    check("Stanley-Reisner pd equals k", profile->betti_full.projective_dimension() == c.k(),
          "pd = " + std::to_string(profile->betti_full.projective_dimension()));
    check("GHW strictly increasing and Singleton bounded",
          r.ghw_true.strictly_increasing() && r.ghw_true.satisfies_singleton_bound(c.n(), c.k()),
          join(r.ghw_true.values));

    const auto lemma = sample_symmetric_difference_lemma(c.n(), options.lemma_pairs, options.lemma_seed);
    check("symmetric difference lemma", lemma.violations == 0,
          std::to_string(lemma.pairs_applicable) + " sampled pairs");

    r.conjecture_holds = r.minshift_testset == r.ghw_true.values;
    check("test-set sequence equals GHW", r.conjecture_holds, "R/M " + join(r.minshift_testset), false);
    if (c.k() >= 3) {
        r.third_weight_matches = r.minshift_testset.size() >= 3 && r.minshift_testset[2] == r.ghw_true.d(3);
        check("d3 equals third min shift of R/M", *r.third_weight_matches, "R/M " + join(r.minshift_testset), false);
    }

    if (options.abort_on_failure && !r.all_proven_passed()) {
        std::ostringstream msg;
        msg << "proven property failed for code " << (r.code_id.empty() ? "<unnamed>" : r.code_id) << " under "
            << o.describe() << ":";
        for (const auto& ch : r.checks) {
            if (ch.proven && !ch.passed) msg << "\n  " << ch.name << ": " << ch.detail;
        }
        msg << "\n  generator:";
        for (BitWord row : c.generator().row_span()) msg << ' ' << row.to_string();
        throw Error(ErrorKind::TheoremViolation, msg.str());
    }
    return r;
}

BinaryMatrix random_full_rank_matrix(int n, int k, std::uint64_t seed, std::uint64_t trial,
                                     std::uint64_t* rejections) {
    if (k < 1 || k > n) throw Error(ErrorKind::Usage, "need 1 <= k <= n");
    auto rng = trial_engine(seed, trial, 0);
    const auto mask = BitWord::full_mask(n);
    for (;;) {
        BinaryMatrix m(n);
        for (int r = 0; r < k; ++r) m.push_back(BitWord(n, static_cast<BitWord::bits_type>(rng()) & mask));
        if (rank(m) == k) return m;
        if (rejections != nullptr) ++*rejections;
    }
}

std::vector<TermOrder> random_orders(int n, int count, std::uint64_t seed, std::uint64_t trial) {
    auto rng = trial_engine(seed, trial, 1);
    std::vector<TermOrder> out;
    for (int t = 0; t < count; ++t) {
        const OrderKind kind = (rng() & 1U) ? OrderKind::DegRevLex : OrderKind::DegLex;
        std::vector<int> perm(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
        for (int i = n - 1; i > 0; --i) {
            std::swap(perm[static_cast<std::size_t>(i)],
                      perm[static_cast<std::size_t>(draw_below(rng, static_cast<std::uint64_t>(i) + 1))]);
        }
        out.emplace_back(kind, std::move(perm));
    }
    return out;
}

namespace {

struct TrialOutcome {
    bool examined = false;
    bool degenerate = false;
    std::uint64_t rejections = 0;
    std::uint64_t euler_checks = 0;
    std::vector<VerificationReport> reports;
    std::vector<std::string> generator;
    std::string source;
    std::uint64_t index = 0;
};

TrialOutcome run_code(const BinaryMatrix& m, const std::vector<TermOrder>& orders, const SearchConfig& config,
                      std::string source, std::uint64_t index) {
    TrialOutcome out;
    out.source = std::move(source);
    out.index = index;
    for (BitWord row : m.row_span()) out.generator.push_back(row.to_string());
    const Code code = Code::from_generator(m);
    if (!code.nondegenerate()) {
        out.degenerate = true;
        return out;
    }
    out.examined = true;
    HochsterOptions hochster = config.hochster;
    hochster.threads = 1;
    HochsterStats stats;
    CodeProfile profile;
    profile.ghw = ghw_sequence_bruteforce(code);
    profile.minimal_supports = minimal_support_codewords(code);
    profile.betti_full = betti_table_hochster(ideal_from_supports(code.n(), profile.minimal_supports), hochster, &stats);
    profile.minshift_full = min_shifts(profile.betti_full);
    out.euler_checks += stats.euler_checks;

    VerifyOptions vo;
    vo.hochster = hochster;
    vo.code_id = out.source + "#" + std::to_string(index);
    vo.lemma_pairs = 200;
    vo.lemma_seed = index;
    for (const auto& o : orders) {
        out.reports.push_back(verify_code(code, o, vo, &profile));
        out.euler_checks += out.reports.back().euler_checks;
    }
    return out;
}

}  // namespace

SearchReport counterexample_search(const SearchConfig& config) {
    SearchReport report;
    report.config = config;

    std::vector<TrialOutcome> outcomes;
    for (std::size_t f = 0; f < config.fixtures.size(); ++f) {
        const auto& m = config.fixtures[f];
        auto orders = config.orders;
        const auto extra = random_orders(m.cols(), config.random_orders, config.seed, ~std::uint64_t{0} - f);
        orders.insert(orders.end(), extra.begin(), extra.end());
        if (orders.empty()) orders.push_back(TermOrder::natural(OrderKind::DegRevLex, m.cols()));
        outcomes.push_back(run_code(m, orders, config, "fixture", f));
    }

    std::vector<TrialOutcome> trials(config.trials);
    std::atomic<std::uint64_t> next{0};
    std::vector<std::exception_ptr> errors(std::max(1U, config.threads));
    auto worker = [&](unsigned slot) {
        try {
            for (std::uint64_t t = next++; t < config.trials; t = next++) {
                std::uint64_t rejections = 0;
                const auto m = random_full_rank_matrix(config.n, config.k, config.seed, t, &rejections);
                auto orders = config.orders;
                const auto extra = random_orders(config.n, config.random_orders, config.seed, t);
                orders.insert(orders.end(), extra.begin(), extra.end());
                if (orders.empty()) orders.push_back(TermOrder::natural(OrderKind::DegRevLex, config.n));
                trials[t] = run_code(m, orders, config, "random", t);
                trials[t].rejections = rejections;
            }
        } catch (...) {
            errors[slot] = std::current_exception();
        }
    };
    if (config.threads <= 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned s = 0; s < config.threads; ++s) pool.emplace_back(worker, s);
        for (auto& th : pool) th.join();
    }
    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    outcomes.insert(outcomes.end(), std::make_move_iterator(trials.begin()), std::make_move_iterator(trials.end()));

    for (const auto& out : outcomes) {
        report.rank_rejections += out.rejections;
        report.euler_checks += out.euler_checks;
        if (out.degenerate) ++report.degenerate_skipped;
        if (!out.examined) continue;
        ++report.codes_examined;
        for (const auto& r : out.reports) {
            ++report.reports;
            if (r.third_weight_matches.has_value() && !*r.third_weight_matches) ++report.third_weight_failures;
            if (r.conjecture_holds) continue;
            ++report.mismatches;
            if (r.pd_testset < r.k) {
                ++report.mismatches_with_pd_below_k;
            } else {
                ++report.pd_equal_k_mismatches;
            }
            report.flagged.push_back(FlaggedCode{out.source, out.index, out.generator, r.order, r.ghw_true.values,
                                                 r.minshift_testset, r.pd_testset, r.k, r.third_weight_matches});
        }
    }
    return report;
}

MonomialIdeal union_testsets(const Code& c, const std::vector<TermOrder>& orders) {
    if (orders.empty()) throw Error(ErrorKind::Usage, "union of test sets needs at least one order");
    std::vector<BitWord> words;
    for (const auto& o : orders) {
        const auto t = test_set(reduced_groebner_basis(c, o).basis);
        words.insert(words.end(), t.begin(), t.end());
    }
    canonicalize(words);
    return ideal_from_supports(c.n(), std::move(words));
}

}  // namespace ghw
