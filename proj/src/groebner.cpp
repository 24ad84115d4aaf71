#include "ghw/groebner.hpp"

#include <algorithm>
#include <string>

namespace ghw {

namespace {

std::string monomial_string(BitWord w) {
    if (w.empty()) return "1";
    std::string out;
    for (int i : w.support()) {
        if (!out.empty()) out += '*';
        out += 'x' + std::to_string(i + 1);
    }
    return out;
}

constexpr BitWord::bits_type kUnseen = ~BitWord::bits_type{0};

}  // namespace

std::string Binomial::to_string() const {
    return monomial_string(lead) + " - " + monomial_string(trail);
}

CosetTable::CosetTable(BinaryMatrix parity, std::vector<BitWord::bits_type> leaders, int n)
    : leaders_(std::move(leaders)), n_(n) {
    for (int i = 0; i < n; ++i) {
        column_syndromes_.push_back(parity.empty() ? 0 : parity.column(i).bits());
    }
}

BitWord::bits_type CosetTable::syndrome(BitWord w) const noexcept {
    BitWord::bits_type s = 0;
    for (auto b = w.bits(); b != 0; b &= b - 1) s ^= column_syndromes_[static_cast<std::size_t>(std::countr_zero(b))];
    return s;
}

int GroebnerBasis::quadric_count() const noexcept {
    BitWord::bits_type linear_leads = 0;
    for (const auto& b : binomials) {
        if (b.lead.weight() == 1) linear_leads |= b.lead.bits();
    }
    return n - std::popcount(linear_leads);
}

GroebnerResult reduced_groebner_basis(const Code& c, const TermOrder& o) {
    const int n = c.n();
    if (o.size() != n) {
        throw Error(ErrorKind::LengthMismatch, "term order has " + std::to_string(o.size()) +
                                                   " variables, code length is " + std::to_string(n));
    }
    require_within_cap(n, "Groebner basis enumeration");
    require_within_cap(n - c.k(), "coset table");

    const int redundancy = n - c.k();
    std::vector<BitWord::bits_type> column_syndromes;
    for (int i = 0; i < n; ++i) column_syndromes.push_back(c.parity().empty() ? 0 : c.parity().column(i).bits());

    std::vector<BitWord::bits_type> leaders(std::size_t{1} << redundancy, kUnseen);
    // in_initial[w]: the square-free monomial X^w lies in the initial ideal.
    std::vector<std::uint8_t> in_initial(std::size_t{1} << n, 0);
    std::vector<Binomial> binomials;

    o.for_each_increasing([&](BitWord word) {
        const auto w = word.bits();
        // Every proper divisor has lower degree and was visited already; X^w
        // is divisible by a leading term iff some facet is in the initial ideal.
        for (auto rest = w; rest != 0; rest &= rest - 1) {
            if (in_initial[w & ~(rest & (~rest + 1))]) {
                in_initial[w] = 1;
                return;
            }
        }
        BitWord::bits_type s = 0;
        for (auto b = w; b != 0; b &= b - 1) s ^= column_syndromes[static_cast<std::size_t>(std::countr_zero(b))];
        if (leaders[s] == kUnseen) {
            leaders[s] = w;
            return;
        }
        binomials.push_back({word, BitWord(n, leaders[s])});
        in_initial[w] = 1;
    });

    GroebnerBasis basis{o, std::move(binomials), n};
    CosetTable table(c.parity(), std::move(leaders), n);
    return {std::move(basis), std::move(table)};
}

std::vector<BitWord> test_set(const GroebnerBasis& g) {
    std::vector<BitWord> out;
    out.reserve(g.binomials.size());
    for (const auto& b : g.binomials) out.push_back(b.codeword());
    canonicalize(out);
    return out;
}

BitWord normal_form(const CosetTable& t, BitWord w) {
    if (w.size() != t.n()) {
        throw Error(ErrorKind::LengthMismatch,
                    "word of length " + std::to_string(w.size()) + " for a code of length " + std::to_string(t.n()));
    }
    return t.leader_of_syndrome(t.syndrome(w));
}

BitWord decode(const CosetTable& t, BitWord w) {
    return w ^ normal_form(t, w);
}

}  // namespace ghw
