#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ghw/code.hpp"
#include "ghw/term_order.hpp"

namespace ghw {

/// X^lead - X^trail with lead > trail; lead + trail is a codeword.
struct Binomial {
    BitWord lead;
    BitWord trail;

    [[nodiscard]] BitWord support() const noexcept { return lead | trail; }
    [[nodiscard]] BitWord codeword() const noexcept { return lead ^ trail; }
    [[nodiscard]] bool standard_form() const noexcept { return (lead & trail).empty(); }
    /// "x5*x6 - x3" with 1-based variables; the empty monomial prints as 1.
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const Binomial&, const Binomial&) = default;
};

/// Syndrome -> coset leader (the order-minimal word of each coset).
class CosetTable {
public:
    CosetTable(BinaryMatrix parity_columns_source, std::vector<BitWord::bits_type> leaders, int n);

    [[nodiscard]] int n() const noexcept { return n_; }
    [[nodiscard]] std::size_t size() const noexcept { return leaders_.size(); }
    [[nodiscard]] BitWord::bits_type syndrome(BitWord w) const noexcept;
    [[nodiscard]] BitWord leader_of_syndrome(BitWord::bits_type s) const { return {n_, leaders_.at(s)}; }
    [[nodiscard]] const std::vector<BitWord::bits_type>& leaders() const noexcept { return leaders_; }

private:
    std::vector<BitWord::bits_type> column_syndromes_;
    std::vector<BitWord::bits_type> leaders_;
    int n_;
};

/// Reduced Groebner basis of the code ideal. Only the square-free binomials
/// are stored; the quadrics x_i^2 - 1 are implicit. A quadric belongs to the
/// reduced basis exactly when x_i itself is not a leading term.
struct GroebnerBasis {
    TermOrder order;
    std::vector<Binomial> binomials;  ///< increasing leading term
    int n = 0;

    /// Number of quadrics x_i^2 - 1 present in the reduced basis.
    [[nodiscard]] int quadric_count() const noexcept;
    /// Square-free binomials plus quadrics.
    [[nodiscard]] int total_size() const noexcept {
        return static_cast<int>(binomials.size()) + quadric_count();
    }
};

struct GroebnerResult {
    GroebnerBasis basis;
    CosetTable cosets;
};

/// Coset-leader enumeration: walks all square-free words in increasing order;
/// a word not divisible by a recorded leading term either opens a new coset or
/// yields the binomial X^word - X^leader and becomes a leading term.
[[nodiscard]] GroebnerResult reduced_groebner_basis(const Code& c, const TermOrder& o);

/// Distinct codewords lead + trail over the basis binomials, lexicographic.
[[nodiscard]] std::vector<BitWord> test_set(const GroebnerBasis& g);

/// Canonical coset leader of w.
[[nodiscard]] BitWord normal_form(const CosetTable& t, BitWord w);
/// w + normal_form(w), a nearest codeword.
[[nodiscard]] BitWord decode(const CosetTable& t, BitWord w);

}  // namespace ghw
