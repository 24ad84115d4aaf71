#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ghw/bitword.hpp"

namespace ghw {

enum class OrderKind { DegLex, DegRevLex };

[[nodiscard]] std::string_view to_string(OrderKind kind) noexcept;
[[nodiscard]] OrderKind parse_order_kind(std::string_view text);

/// Degree-compatible monomial order on square-free exponent vectors.
///
/// priority lists 0-based variables from highest to lowest precedence.
/// Both kinds first compare total degree. DegLex then compares exponents in
/// priority order, the larger exponent winning. DegRevLex scans from the
/// lowest-priority variable upward; at the first difference the word
/// containing that variable is the smaller one.
class TermOrder {
public:
    TermOrder(OrderKind kind, std::vector<int> priority);

    /// x_1 > x_2 > ... > x_n.
    [[nodiscard]] static TermOrder natural(OrderKind kind, int n);

    [[nodiscard]] OrderKind kind() const noexcept { return kind_; }
    [[nodiscard]] int size() const noexcept { return static_cast<int>(priority_.size()); }
    [[nodiscard]] const std::vector<int>& priority() const noexcept { return priority_; }

    /// Monotone 64-bit key: a < b in this order iff key(a) < key(b).
    [[nodiscard]] std::uint64_t key(BitWord w) const noexcept;
    [[nodiscard]] std::strong_ordering compare(BitWord a, BitWord b) const noexcept { return key(a) <=> key(b); }
    [[nodiscard]] bool less(BitWord a, BitWord b) const noexcept { return key(a) < key(b); }

    /// Calls f(word) on every square-free word of length n in increasing order.
    template <typename F>
    void for_each_increasing(F&& f) const {
        const int n = size();
        const auto mask = BitWord::full_mask(n);
        for (int degree = 0; degree <= n; ++degree) {
            if (kind_ == OrderKind::DegLex) {
                for_each_mask_of_weight(n, degree, [&](BitWord::bits_type v) { f(BitWord(n, unpermute(v))); });
            } else {
                for_each_mask_of_weight(n, n - degree,
                                        [&](BitWord::bits_type u) { f(BitWord(n, unpermute(mask ^ u))); });
            }
        }
    }

    /// "degrevlex 1>2>...>n" style description with 1-based variables.
    [[nodiscard]] std::string describe() const;

    friend bool operator==(const TermOrder& a, const TermOrder& b) noexcept {
        return a.kind_ == b.kind_ && a.priority_ == b.priority_;
    }

private:
    [[nodiscard]] BitWord::bits_type permute(BitWord::bits_type w) const noexcept;
    [[nodiscard]] BitWord::bits_type unpermute(BitWord::bits_type v) const noexcept;

    OrderKind kind_;
    std::vector<int> priority_;
    // slot_[var] = bit position of var inside the permuted key.
    std::vector<int> slot_;
    std::vector<int> var_of_slot_;
};

/// Every priority permutation for both kinds (2 * n! orders), deglex first.
[[nodiscard]] std::vector<TermOrder> all_priority_orders(int n);

}  // namespace ghw
