#include "ghw/code.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace ghw {

bool GhwSequence::strictly_increasing() const noexcept {
    return std::adjacent_find(values.begin(), values.end(), [](int a, int b) { return a >= b; }) == values.end();
}

bool GhwSequence::satisfies_singleton_bound(int n, int k) const noexcept {
    if (values.empty()) return true;
    if (values.front() < 1) return false;
    for (int h = 1; h <= size(); ++h) {
        if (d(h) > n - k + h) return false;
    }
    return true;
}

Code::Code(BinaryMatrix generator, BinaryMatrix parity)
    : generator_(std::move(generator)), parity_(std::move(parity)) {
    BitWord::bits_type covered = 0;
    for (BitWord r : generator_.row_span()) covered |= r.bits();
    nondegenerate_ = covered == BitWord::full_mask(generator_.cols());
}

Code Code::from_generator(const BinaryMatrix& m) {
    if (m.cols() > size_cap()) {
        throw Error(ErrorKind::LengthCapExceeded,
                    "code length " + std::to_string(m.cols()) + " exceeds the cap " + std::to_string(size_cap()) +
                        " (set GHW_UNSUPPORTED_SIZE_CAP to raise it, at most " + std::to_string(kMaxWordLength) + ")");
    }
    auto reduced = rref(m);
    if (reduced.rank == 0) throw Error(ErrorKind::ZeroCode, "generator matrix has rank 0");
    BinaryMatrix parity = kernel_basis(reduced.matrix);
    if (parity.empty()) parity = BinaryMatrix(m.cols());
    return Code(std::move(reduced.matrix), std::move(parity));
}

bool Code::contains(BitWord w) const {
    return parity_.empty() || parity_.multiply(w).empty();
}

std::vector<BitWord> codewords(const Code& c) {
    const int k = c.k();
    require_within_cap(k, "codeword enumeration");
    std::vector<BitWord> out;
    out.reserve(std::size_t{1} << k);
    BitWord w = BitWord::zero(c.n());
    out.push_back(w);
    for (std::uint64_t t = 1; t < (std::uint64_t{1} << k); ++t) {
        w ^= c.generator().row(std::countr_zero(t));
        out.push_back(w);
    }
    return out;
}

std::vector<BitWord> minimal_support_codewords(const Code& c) {
    auto words = codewords(c);
    std::erase_if(words, [](BitWord w) { return w.empty(); });
    std::stable_sort(words.begin(), words.end(), [](BitWord a, BitWord b) { return a.weight() < b.weight(); });
    // A codeword with a smaller nonzero codeword inside it also contains a
    // minimal one, so it is enough to test against the accepted words.
    std::vector<BitWord> minimal;
    for (BitWord w : words) {
        const bool dominated = std::any_of(minimal.begin(), minimal.end(),
                                           [w](BitWord m) { return m.proper_subset_of(w); });
        if (!dominated) minimal.push_back(w);
    }
    canonicalize(minimal);
    return minimal;
}

int subcode_dim_within(const Code& c, BitWord s) {
    return c.k() - rank_of_columns(c.generator(), ~s);
}

int ghw_bruteforce(const Code& c, int h) {
    if (h < 1 || h > c.k()) {
        throw Error(ErrorKind::Usage, "GHW index " + std::to_string(h) + " outside 1.." + std::to_string(c.k()));
    }
    const int n = c.n();
    require_within_cap(n, "GHW subset scan");
    for (int size = h; size <= n; ++size) {
        bool found = false;
        for_each_mask_of_weight(n, size, [&](BitWord::bits_type s) {
            if (!found && subcode_dim_within(c, BitWord(n, s)) >= h) found = true;
        });
        if (found) return size;
    }
    return n + 1;  // unreachable for h <= k
}

GhwSequence ghw_sequence_bruteforce(const Code& c) {
    const int n = c.n();
    const int k = c.k();
    require_within_cap(n, "GHW subset scan");
    GhwSequence seq;
    for (int size = 1; size <= n && seq.size() < k; ++size) {
        int best = 0;
        for_each_mask_of_weight(n, size, [&](BitWord::bits_type s) {
            if (best < k) best = std::max(best, subcode_dim_within(c, BitWord(n, s)));
        });
        while (seq.size() < best) seq.values.push_back(size);
    }
    return seq;
}

std::vector<BitWord> matroid_circuits(const Code& c) {
    const int n = c.n();
    require_within_cap(n, "circuit enumeration");
    std::vector<BitWord::bits_type> columns;
    for (int i = 0; i < n; ++i) {
        columns.push_back(c.parity().empty() ? 0 : c.parity().column(i).bits());
    }
    // dependent[s]: the columns indexed by s are linearly dependent.
    const std::size_t total = std::size_t{1} << n;
    std::vector<std::uint8_t> dependent(total, 0);
    std::vector<BitWord> circuits;
    for (int size = 1; size <= n; ++size) {
        for_each_mask_of_weight(n, size, [&](BitWord::bits_type s) {
            bool has_dependent_facet = false;
            for (auto rest = s; rest != 0; rest &= rest - 1) {
                if (dependent[s & ~(rest & (~rest + 1))]) {
                    has_dependent_facet = true;
                    break;
                }
            }
            if (has_dependent_facet) {
                dependent[s] = 1;
                return;
            }
            XorBasis basis;
            bool independent = true;
            for (auto rest = s; rest != 0; rest &= rest - 1) {
                if (!basis.insert(columns[static_cast<std::size_t>(std::countr_zero(rest))])) {
                    independent = false;
                    break;
                }
            }
            if (!independent) {
                dependent[s] = 1;
                circuits.emplace_back(n, s);
            }
        });
    }
    canonicalize(circuits);
    return circuits;
}

}  // namespace ghw
