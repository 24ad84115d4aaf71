#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ghw/errors.hpp"

namespace ghw {

/// Hard upper bound on the ambient length representable by a BitWord.
inline constexpr int kMaxWordLength = 31;

/// Default cap on every exponential enumeration: lengths up to 24 keep 2^n at
/// 16.8M. The environment variable GHW_UNSUPPORTED_SIZE_CAP overrides it
/// (unsupported; clamped to kMaxWordLength).
inline constexpr int kDefaultSizeCap = 24;

[[nodiscard]] int size_cap();

/// Throws CapExceeded when an enumeration over 2^n elements would exceed the cap.
void require_within_cap(int n, std::string_view what);

/// A length-n vector over GF(2). Plays the role of a codeword, a square-free
/// exponent vector and a subset of the coordinates at the same time.
///
/// Coordinates are 0-based internally (bit i is coordinate i + 1 in all
/// user-facing text). The textual form puts coordinate 1 leftmost.
class BitWord {
public:
    using bits_type = std::uint32_t;

    constexpr BitWord() = default;
    constexpr BitWord(int n, bits_type bits) : bits_(bits & full_mask(n)), n_(static_cast<std::uint8_t>(n)) {}

    [[nodiscard]] static BitWord zero(int n) { return {n, 0}; }
    [[nodiscard]] static BitWord ones(int n) { return {n, full_mask(n)}; }
    [[nodiscard]] static BitWord unit(int n, int i) { return {n, bits_type{1} << i}; }
    /// Builds a word from 0-based coordinate indices.
    [[nodiscard]] static BitWord from_indices(int n, const std::vector<int>& indices);
    /// Parses "100001" (coordinate 1 leftmost). Throws Error(Parse) on bad input.
    [[nodiscard]] static BitWord parse(std::string_view text);

    [[nodiscard]] constexpr static bits_type full_mask(int n) {
        return n >= 32 ? ~bits_type{0} : ((bits_type{1} << n) - 1);
    }

    [[nodiscard]] constexpr int size() const noexcept { return n_; }
    [[nodiscard]] constexpr bits_type bits() const noexcept { return bits_; }
    [[nodiscard]] constexpr int weight() const noexcept { return std::popcount(bits_); }
    [[nodiscard]] constexpr bool empty() const noexcept { return bits_ == 0; }
    [[nodiscard]] constexpr bool test(int i) const noexcept { return (bits_ >> i) & 1U; }

    [[nodiscard]] constexpr BitWord with(int i) const noexcept { return {n_, bits_ | (bits_type{1} << i)}; }
    [[nodiscard]] constexpr BitWord without(int i) const noexcept { return {n_, bits_ & ~(bits_type{1} << i)}; }

    /// Subset test on supports.
    [[nodiscard]] constexpr bool subset_of(BitWord other) const noexcept { return (bits_ & ~other.bits_) == 0; }
    [[nodiscard]] constexpr bool proper_subset_of(BitWord other) const noexcept {
        return subset_of(other) && bits_ != other.bits_;
    }

    /// 0-based indices of the set coordinates, ascending.
    [[nodiscard]] std::vector<int> support() const;
    [[nodiscard]] std::string to_string() const;

    constexpr BitWord& operator^=(BitWord o) noexcept { bits_ ^= o.bits_; return *this; }
    constexpr BitWord& operator&=(BitWord o) noexcept { bits_ &= o.bits_; return *this; }
    constexpr BitWord& operator|=(BitWord o) noexcept { bits_ |= o.bits_; return *this; }

    friend constexpr BitWord operator^(BitWord a, BitWord b) noexcept { return a ^= b; }
    friend constexpr BitWord operator&(BitWord a, BitWord b) noexcept { return a &= b; }
    friend constexpr BitWord operator|(BitWord a, BitWord b) noexcept { return a |= b; }
    friend constexpr BitWord operator~(BitWord a) noexcept { return {a.n_, ~a.bits_}; }

    friend constexpr bool operator==(BitWord a, BitWord b) noexcept = default;

private:
    bits_type bits_ = 0;
    std::uint8_t n_ = 0;
};

/// Lexicographic order on the textual form ('0' < '1', coordinate 1 first).
/// This is the deterministic order used for every emitted set.
[[nodiscard]] constexpr bool lex_less(BitWord a, BitWord b) noexcept {
    const auto diff = a.bits() ^ b.bits();
    if (diff == 0) return a.size() < b.size();
    const auto low = diff & (~diff + 1);
    return (a.bits() & low) == 0;
}

struct LexLess {
    constexpr bool operator()(BitWord a, BitWord b) const noexcept { return lex_less(a, b); }
};

/// Sorts lexicographically and removes duplicates.
void canonicalize(std::vector<BitWord>& words);

/// Calls f(mask) for each n-bit mask of the given popcount in increasing
/// numeric order (Gosper's hack).
template <typename F>
void for_each_mask_of_weight(int n, int weight, F&& f) {
    using bits = BitWord::bits_type;
    if (weight < 0 || weight > n) return;
    if (weight == 0) {
        f(bits{0});
        return;
    }
    const std::uint64_t limit = std::uint64_t{1} << n;
    std::uint64_t v = (std::uint64_t{1} << weight) - 1;
    while (v < limit) {
        f(static_cast<bits>(v));
        const std::uint64_t c = v & (~v + 1);
        const std::uint64_t r = v + c;
        v = (((r ^ v) >> 2) / c) | r;
    }
}

}  // namespace ghw
