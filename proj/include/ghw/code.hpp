#pragma once

#include <vector>

#include "ghw/binary_matrix.hpp"
#include "ghw/bitword.hpp"

namespace ghw {

/// Weight hierarchy d_1 < d_2 < ... < d_k.
struct GhwSequence {
    std::vector<int> values;

    [[nodiscard]] int size() const noexcept { return static_cast<int>(values.size()); }
    /// 1-based access: d(h) = d_h.
    [[nodiscard]] int d(int h) const { return values.at(static_cast<std::size_t>(h - 1)); }

    [[nodiscard]] bool strictly_increasing() const noexcept;
    /// d_h <= n - k + h for every h, and d_1 >= 1.
    [[nodiscard]] bool satisfies_singleton_bound(int n, int k) const noexcept;

    friend bool operator==(const GhwSequence&, const GhwSequence&) = default;
};

/// Binary linear code given by a full-rank generator matrix, with its parity
/// check matrix derived as the (reduced) kernel of the generator.
class Code {
public:
    /// Row-reduces m; k = rank(m). Throws ZeroCode or LengthCapExceeded.
    [[nodiscard]] static Code from_generator(const BinaryMatrix& m);

    [[nodiscard]] int n() const noexcept { return generator_.cols(); }
    [[nodiscard]] int k() const noexcept { return generator_.rows(); }
    [[nodiscard]] const BinaryMatrix& generator() const noexcept { return generator_; }
    [[nodiscard]] const BinaryMatrix& parity() const noexcept { return parity_; }
    /// No coordinate vanishes on the whole code.
    [[nodiscard]] bool nondegenerate() const noexcept { return nondegenerate_; }

    [[nodiscard]] bool contains(BitWord w) const;

    /// H w^T as a word of length n - k.
    [[nodiscard]] BitWord syndrome(BitWord w) const { return parity_.multiply(w); }

private:
    Code(BinaryMatrix generator, BinaryMatrix parity);

    BinaryMatrix generator_;
    BinaryMatrix parity_;
    bool nondegenerate_ = false;
};

/// All 2^k codewords in binary-reflected Gray-code order, starting from 0:
/// step t flips generator row countr_zero(t).
[[nodiscard]] std::vector<BitWord> codewords(const Code& c);

/// Nonzero codewords whose support strictly contains no other nonzero
/// codeword's support, in lexicographic order.
[[nodiscard]] std::vector<BitWord> minimal_support_codewords(const Code& c);

/// dim { v in C : supp(v) within s } = k - rank of the generator columns outside s.
[[nodiscard]] int subcode_dim_within(const Code& c, BitWord s);

/// d_h by scanning coordinate subsets in increasing size.
[[nodiscard]] int ghw_bruteforce(const Code& c, int h);
/// The whole hierarchy d_1..d_k in a single subset sweep.
[[nodiscard]] GhwSequence ghw_sequence_bruteforce(const Code& c);

/// Minimal dependent column sets of the parity-check matrix, in lexicographic
/// order. Computed from column ranks, independently of codeword enumeration.
[[nodiscard]] std::vector<BitWord> matroid_circuits(const Code& c);

}  // namespace ghw
