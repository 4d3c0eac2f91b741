#pragma once

#include <cstdint>
#include <vector>

#include "nmc/bitword.hpp"

namespace nmc {

// Dense bit matrix over GF(2). Each row is a 64-bit mask (column j at
// bit j), so cols <= 64; plenty for desk-scale codes and well matched to
// XOR row operations.
class Gf2Matrix {
public:
    Gf2Matrix() = default;
    Gf2Matrix(uint32_t rows, uint32_t cols);

    static Gf2Matrix from_rows(const std::vector<BitWord>& rows);
    static Gf2Matrix from_row_masks(uint32_t cols, const std::vector<uint64_t>& rows);
    static Gf2Matrix identity(uint32_t n);

    uint32_t rows() const { return static_cast<uint32_t>(rows_.size()); }
    uint32_t cols() const { return cols_; }

    bool get(uint32_t r, uint32_t c) const;
    void set(uint32_t r, uint32_t c, bool v);

    uint64_t row_mask(uint32_t r) const { return rows_.at(r); }
    BitWord row(uint32_t r) const { return BitWord(cols_, rows_.at(r)); }
    const std::vector<uint64_t>& row_masks() const { return rows_; }

    void append_row(uint64_t mask);
    Gf2Matrix stacked_with(const Gf2Matrix& below) const;
    Gf2Matrix top_rows(uint32_t count) const;
    Gf2Matrix bottom_rows(uint32_t count) const;

    // v * M for a row vector v of rows() bits: XOR of the selected rows.
    uint64_t mul_left_mask(uint64_t v) const;
    BitWord mul_left(const BitWord& v) const;

    friend bool operator==(const Gf2Matrix&, const Gf2Matrix&) = default;

private:
    uint32_t cols_ = 0;
    std::vector<uint64_t> rows_;
};

// Row rank by Gaussian elimination.
uint32_t rank(const Gf2Matrix& m);

// Minimum Hamming weight over the 2^rows - 1 nonzero codewords of the
// code generated by g. Requires full row rank; enumeration is exhaustive
// and capped at 2^24 codewords (larger inputs are rejected).
uint32_t min_distance(const Gf2Matrix& g);

// Basis of { y : every row of m is orthogonal to y }.
Gf2Matrix null_space_basis(const Gf2Matrix& m);

// Minimum distance of the dual code of the code generated by g. When the
// dual is trivial ({0}), returns cols+1 as a sentinel.
uint32_t dual_distance(const Gf2Matrix& g);

// Reduced row echelon form with transform tracking: r = transform * m,
// where transform is rows x rows (row i stored as a bit mask). pivots[i]
// is the pivot column of row i of r; rows beyond rank(m) are zero in r.
struct Rref {
    Gf2Matrix r;
    std::vector<uint64_t> transform;
    std::vector<uint32_t> pivots;
    uint32_t rank = 0;
};
Rref reduced_row_echelon(const Gf2Matrix& m);

}  // namespace nmc
