#include "ghw/binary_matrix.hpp"

#include <algorithm>
#include <bit>
#include <utility>

namespace ghw {

BinaryMatrix::BinaryMatrix(int cols, std::vector<BitWord> rows) : cols_(cols) {
    rows_.reserve(rows.size());
    for (BitWord r : rows) push_back(r);
}

BinaryMatrix BinaryMatrix::from_strings(const std::vector<std::string>& rows) {
    if (rows.empty()) return BinaryMatrix{};
    BinaryMatrix m(static_cast<int>(rows.front().size()));
    for (const auto& r : rows) m.push_back(BitWord::parse(r));
    return m;
}

BinaryMatrix BinaryMatrix::identity(int n) {
    BinaryMatrix m(n);
    for (int i = 0; i < n; ++i) m.push_back(BitWord::unit(n, i));
    return m;
}

void BinaryMatrix::push_back(BitWord row) {
    if (row.size() != cols_) {
        throw Error(ErrorKind::LengthMismatch, "row of length " + std::to_string(row.size()) +
                                                   " in a matrix with " + std::to_string(cols_) + " columns");
    }
    rows_.push_back(row);
}

BitWord BinaryMatrix::column(int c) const {
    BitWord::bits_type bits = 0;
    for (int r = 0; r < rows(); ++r) {
        if (get(r, c)) bits |= BitWord::bits_type{1} << r;
    }
    return {rows(), bits};
}

BitWord BinaryMatrix::multiply(BitWord v) const {
    BitWord::bits_type bits = 0;
    for (int r = 0; r < rows(); ++r) {
        if (std::popcount(row(r).bits() & v.bits()) & 1) bits |= BitWord::bits_type{1} << r;
    }
    return {rows(), bits};
}

RrefResult rref(const BinaryMatrix& m) {
    std::vector<BitWord> rows(m.row_span().begin(), m.row_span().end());
    std::vector<int> pivots;
    std::size_t next = 0;
    for (int c = 0; c < m.cols() && next < rows.size(); ++c) {
        auto it = std::find_if(rows.begin() + static_cast<std::ptrdiff_t>(next), rows.end(),
                               [c](BitWord r) { return r.test(c); });
        if (it == rows.end()) continue;
        std::iter_swap(rows.begin() + static_cast<std::ptrdiff_t>(next), it);
        const BitWord pivot_row = rows[next];
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r != next && rows[r].test(c)) rows[r] ^= pivot_row;
        }
        pivots.push_back(c);
        ++next;
    }
    rows.resize(next);
    RrefResult out{BinaryMatrix(m.cols(), std::move(rows)), static_cast<int>(next), std::move(pivots)};
    return out;
}

int rank(const BinaryMatrix& m) {
    XorBasis basis;
    for (BitWord r : m.row_span()) basis.insert(r.bits());
    return basis.rank();
}

BinaryMatrix kernel_basis(const BinaryMatrix& m) {
    const auto reduced = rref(m);
    const int n = m.cols();
    BitWord::bits_type pivot_mask = 0;
    for (int p : reduced.pivots) pivot_mask |= BitWord::bits_type{1} << p;

    // One kernel vector per free column f: e_f plus the pivot coordinates whose
    // row has a 1 in column f.
    std::vector<BitWord> basis;
    for (int f = 0; f < n; ++f) {
        if ((pivot_mask >> f) & 1U) continue;
        BitWord v = BitWord::unit(n, f);
        for (int r = 0; r < reduced.rank; ++r) {
            if (reduced.matrix.get(r, f)) v = v.with(reduced.pivots[static_cast<std::size_t>(r)]);
        }
        basis.push_back(v);
    }
    return rref(BinaryMatrix(n, std::move(basis))).matrix;
}

int rank_of_columns(const BinaryMatrix& m, BitWord cols) {
    XorBasis basis;
    for (BitWord r : m.row_span()) basis.insert(r.bits() & cols.bits());
    return basis.rank();
}

bool same_row_space(const BinaryMatrix& a, const BinaryMatrix& b) {
    return a.cols() == b.cols() && rref(a).matrix == rref(b).matrix;
}

bool XorBasis::insert(BitWord::bits_type v) noexcept {
    while (v != 0) {
        const int top = 31 - std::countl_zero(v);
        if (by_top_[top] == 0) {
            by_top_[top] = v;
            ++rank_;
            return true;
        }
        v ^= by_top_[top];
    }
    return false;
}

bool XorBasis::contains(BitWord::bits_type v) const noexcept {
    while (v != 0) {
        const int top = 31 - std::countl_zero(v);
        if (by_top_[top] == 0) return false;
        v ^= by_top_[top];
    }
    return true;
}

PackedMatrix::PackedMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), stride_((cols + 63) / 64), data_(rows * stride_, 0) {}

std::size_t PackedMatrix::eliminate() {
    std::size_t rank = 0;
    for (std::size_t w = 0; w < stride_ && rank < rows_; ++w) {
        for (int bit = 0; bit < 64 && rank < rows_; ++bit) {
            const std::uint64_t mask = std::uint64_t{1} << bit;
            std::size_t pivot = rank;
            while (pivot < rows_ && (data_[pivot * stride_ + w] & mask) == 0) ++pivot;
            if (pivot == rows_) continue;
            std::uint64_t* prow = &data_[pivot * stride_];
            if (pivot != rank) {
                std::swap_ranges(prow + w, prow + stride_, &data_[rank * stride_ + w]);
                prow = &data_[rank * stride_];
            }
            for (std::size_t r = rank + 1; r < rows_; ++r) {
                std::uint64_t* row = &data_[r * stride_];
                if (row[w] & mask) {
                    for (std::size_t k = w; k < stride_; ++k) row[k] ^= prow[k];
                }
            }
            ++rank;
        }
    }
    return rank;
}

namespace {

std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
    std::int64_t result = 1;
    std::int64_t base = a % p;
    for (std::int64_t e = p - 2; e > 0; e >>= 1) {
        if (e & 1) result = result * base % p;
        base = base * base % p;
    }
    return result;
}

}  // namespace

std::size_t rank_mod_p(std::vector<std::int64_t> a, std::size_t rows, std::size_t cols, std::int64_t p) {
    for (auto& x : a) x = ((x % p) + p) % p;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && a[pivot * cols + c] == 0) ++pivot;
        if (pivot == rows) continue;
        if (pivot != rank) {
            for (std::size_t k = 0; k < cols; ++k) std::swap(a[pivot * cols + k], a[rank * cols + k]);
        }
        const std::int64_t inv = mod_inverse(a[rank * cols + c], p);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            const std::int64_t f = a[r * cols + c] * inv % p;
            if (f == 0) continue;
            for (std::size_t k = c; k < cols; ++k) {
                a[r * cols + k] = ((a[r * cols + k] - f * a[rank * cols + k]) % p + p) % p;
            }
        }
        ++rank;
    }
    return rank;
}

}  // namespace ghw
