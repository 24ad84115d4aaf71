#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "ghw/bitword.hpp"

namespace ghw {

/// Row-major matrix over GF(2) with at most kMaxWordLength columns; each row is
/// a BitWord of length cols().
class BinaryMatrix {
public:
    BinaryMatrix() = default;
    explicit BinaryMatrix(int cols) : cols_(cols) {}
    BinaryMatrix(int cols, std::vector<BitWord> rows);

    /// Parses one bitstring per row ("100001").
    [[nodiscard]] static BinaryMatrix from_strings(const std::vector<std::string>& rows);
    [[nodiscard]] static BinaryMatrix identity(int n);

    [[nodiscard]] int rows() const noexcept { return static_cast<int>(rows_.size()); }
    [[nodiscard]] int cols() const noexcept { return cols_; }
    [[nodiscard]] bool empty() const noexcept { return rows_.empty(); }
    [[nodiscard]] BitWord row(int r) const { return rows_[static_cast<std::size_t>(r)]; }
    [[nodiscard]] std::span<const BitWord> row_span() const noexcept { return rows_; }
    [[nodiscard]] bool get(int r, int c) const { return rows_[static_cast<std::size_t>(r)].test(c); }

    void push_back(BitWord row);

    /// Column c as a word of length rows() (requires rows() <= kMaxWordLength).
    [[nodiscard]] BitWord column(int c) const;

    /// m * v^T, one bit per row.
    [[nodiscard]] BitWord multiply(BitWord v) const;

    friend bool operator==(const BinaryMatrix&, const BinaryMatrix&) = default;

private:
    std::vector<BitWord> rows_;
    int cols_ = 0;
};

struct RrefResult {
    BinaryMatrix matrix;      ///< reduced row echelon form, zero rows dropped
    int rank = 0;
    std::vector<int> pivots;  ///< 0-based pivot column per row
};

/// Reduced row echelon form. Pivots are chosen leftmost column first
/// (coordinate 1 first); zero rows are removed from the result.
[[nodiscard]] RrefResult rref(const BinaryMatrix& m);
[[nodiscard]] int rank(const BinaryMatrix& m);

/// Basis of {v : m v^T = 0}, in reduced echelon form.
[[nodiscard]] BinaryMatrix kernel_basis(const BinaryMatrix& m);

/// Rank of the submatrix formed by the selected columns.
[[nodiscard]] int rank_of_columns(const BinaryMatrix& m, BitWord cols);

/// True when both matrices have the same row space.
[[nodiscard]] bool same_row_space(const BinaryMatrix& a, const BinaryMatrix& b);

/// Incrementally built XOR basis; insert() reports whether the rank grew.
class XorBasis {
public:
    bool insert(BitWord::bits_type v) noexcept;
    [[nodiscard]] int rank() const noexcept { return rank_; }
    [[nodiscard]] bool contains(BitWord::bits_type v) const noexcept;

private:
    std::uint32_t by_top_[32] = {};
    int rank_ = 0;
};

/// Dense GF(2) matrix of arbitrary width, rows packed into 64-bit words.
/// Used for simplicial boundary matrices.
class PackedMatrix {
public:
    PackedMatrix(std::size_t rows, std::size_t cols);

    [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
    [[nodiscard]] std::size_t cols() const noexcept { return cols_; }

    void set(std::size_t r, std::size_t c) noexcept { data_[r * stride_ + c / 64] |= std::uint64_t{1} << (c % 64); }
    void flip(std::size_t r, std::size_t c) noexcept { data_[r * stride_ + c / 64] ^= std::uint64_t{1} << (c % 64); }
    [[nodiscard]] bool get(std::size_t r, std::size_t c) const noexcept {
        return (data_[r * stride_ + c / 64] >> (c % 64)) & 1U;
    }

    /// Rank by Gaussian elimination; destroys the contents.
    [[nodiscard]] std::size_t eliminate();

private:
    std::size_t rows_;
    std::size_t cols_;
    std::size_t stride_;
    std::vector<std::uint64_t> data_;
};

/// Rank of a dense integer matrix reduced modulo the prime p.
/// Rows are given as flat row-major storage of size rows * cols.
[[nodiscard]] std::size_t rank_mod_p(std::vector<std::int64_t> entries, std::size_t rows, std::size_t cols,
                                     std::int64_t p);

}  // namespace ghw
