#include "ghw/term_order.hpp"

#include <algorithm>
#include <numeric>

namespace ghw {

std::string_view to_string(OrderKind kind) noexcept {
    return kind == OrderKind::DegLex ? "deglex" : "degrevlex";
}

OrderKind parse_order_kind(std::string_view text) {
    if (text == "deglex") return OrderKind::DegLex;
    if (text == "degrevlex") return OrderKind::DegRevLex;
    throw Error(ErrorKind::Usage, "unknown order '" + std::string(text) + "' (expected deglex or degrevlex)");
}

TermOrder::TermOrder(OrderKind kind, std::vector<int> priority) : kind_(kind), priority_(std::move(priority)) {
    const int n = size();
    if (n < 1 || n > kMaxWordLength) throw Error(ErrorKind::Usage, "term order needs 1..31 variables");
    std::vector<int> seen(static_cast<std::size_t>(n), 0);
    for (int v : priority_) {
        if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)]++) {
            throw Error(ErrorKind::Usage, "variable priority is not a permutation of 1.." + std::to_string(n));
        }
    }
    slot_.assign(static_cast<std::size_t>(n), 0);
    var_of_slot_.assign(static_cast<std::size_t>(n), 0);
    for (int p = 0; p < n; ++p) {
        // deglex: highest priority in the most significant slot.
        // degrevlex: lowest priority in the most significant slot; the key
        // stores the complement so that containing it means smaller.
        const int slot = kind_ == OrderKind::DegLex ? n - 1 - p : p;
        slot_[static_cast<std::size_t>(priority_[static_cast<std::size_t>(p)])] = slot;
        var_of_slot_[static_cast<std::size_t>(slot)] = priority_[static_cast<std::size_t>(p)];
    }
}

TermOrder TermOrder::natural(OrderKind kind, int n) {
    std::vector<int> priority(static_cast<std::size_t>(n));
    std::iota(priority.begin(), priority.end(), 0);
    return {kind, std::move(priority)};
}

BitWord::bits_type TermOrder::permute(BitWord::bits_type w) const noexcept {
    BitWord::bits_type v = 0;
    for (; w != 0; w &= w - 1) v |= BitWord::bits_type{1} << slot_[static_cast<std::size_t>(std::countr_zero(w))];
    return v;
}

BitWord::bits_type TermOrder::unpermute(BitWord::bits_type v) const noexcept {
    BitWord::bits_type w = 0;
    for (; v != 0; v &= v - 1) {
        w |= BitWord::bits_type{1} << var_of_slot_[static_cast<std::size_t>(std::countr_zero(v))];
    }
    return w;
}

std::uint64_t TermOrder::key(BitWord w) const noexcept {
    const auto degree = static_cast<std::uint64_t>(w.weight());
    auto v = permute(w.bits());
    if (kind_ == OrderKind::DegRevLex) v ^= BitWord::full_mask(size());
    return (degree << 32) | v;
}

std::string TermOrder::describe() const {
    std::string out(to_string(kind_));
    out += ' ';
    for (std::size_t p = 0; p < priority_.size(); ++p) {
        if (p != 0) out += '>';
        out += std::to_string(priority_[p] + 1);
    }
    return out;
}

std::vector<TermOrder> all_priority_orders(int n) {
    std::vector<TermOrder> out;
    for (OrderKind kind : {OrderKind::DegLex, OrderKind::DegRevLex}) {
        std::vector<int> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 0);
        do {
            out.emplace_back(kind, perm);
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return out;
}

}  // namespace ghw
