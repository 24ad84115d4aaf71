#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ghw/monomial_ideal.hpp"

namespace ghw {

/// Graded Betti numbers beta_{i,j} of a quotient R/I, stored sparsely
/// (only nonzero entries). beta_{0,0} = 1 is stored explicitly.
class BettiTable {
public:
    using Entries = std::map<std::pair<int, int>, std::uint64_t>;

    BettiTable() = default;
    explicit BettiTable(Entries entries);

    [[nodiscard]] std::uint64_t at(int i, int j) const noexcept;
    void add(int i, int j, std::uint64_t value);

    [[nodiscard]] const Entries& entries() const noexcept { return entries_; }
    [[nodiscard]] bool empty() const noexcept { return entries_.empty(); }

    /// Largest homological degree carrying an entry.
    [[nodiscard]] int projective_dimension() const noexcept;
    /// Largest j - i carrying an entry.
    [[nodiscard]] int max_row() const noexcept;
    [[nodiscard]] std::optional<int> min_shift(int i) const noexcept;
    /// Sum over j of beta_{i,j} (rank of F_i).
    [[nodiscard]] std::uint64_t total_rank(int i) const noexcept;
    /// Sum over (i,j) of (-1)^i beta_{i,j}; zero for R/I with I != 0.
    [[nodiscard]] long long alternating_sum() const noexcept;

    friend bool operator==(const BettiTable&, const BettiTable&) = default;

private:
    Entries entries_;
};

struct HochsterOptions {
    int field_char = 2;
    unsigned threads = 1;
    /// Skip vertex sets that are not unions of generators; their restriction
    /// is a cone and contributes nothing.
    bool skip_cones = true;
    /// Cross-check every restricted complex against its Euler characteristic
    /// (a mismatch throws TheoremViolation).
    bool check_euler = false;
};

struct HochsterStats {
    std::uint64_t complexes = 0;     ///< restricted complexes whose homology was computed
    std::uint64_t euler_checks = 0;  ///< of those, Euler-characteristic checks performed
};

/// beta_{i,j}(R/I) = sum over |W| = j of dim H~_{j-i-1}(Delta|_W).
[[nodiscard]] BettiTable betti_table_hochster(const MonomialIdeal& ideal, const HochsterOptions& options = {},
                                              HochsterStats* stats = nullptr);

/// (i, min { j : beta_{i,j} != 0 }) for i = 1..pd.
[[nodiscard]] std::vector<std::pair<int, int>> min_shift_sequence(const BettiTable& t);
/// Just the shifts of min_shift_sequence.
[[nodiscard]] std::vector<int> min_shifts(const BettiTable& t);

/// Minimum over generator pairs of |supp g_a union supp g_b|: the smallest
/// shift in the second step of the Taylor resolution.
[[nodiscard]] int taylor_pair_minimum(const MonomialIdeal& ideal);

/// Betti diagram text: columns are i = 0..pd, rows are j - i, entries
/// beta_{i, row + i}, zeros printed as 0.
[[nodiscard]] std::string render_betti_diagram(const BettiTable& t);
/// Inverse of render_betti_diagram.
[[nodiscard]] BettiTable parse_betti_diagram(const std::string& text);

}  // namespace ghw
