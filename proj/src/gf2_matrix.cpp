#include "nmc/gf2_matrix.hpp"

#include <bit>
#include <stdexcept>

namespace nmc {

Gf2Matrix::Gf2Matrix(uint32_t rows, uint32_t cols) : cols_(cols), rows_(rows, 0) {
    if (cols > 64) throw std::invalid_argument("Gf2Matrix: cols > 64 unsupported");
}

Gf2Matrix Gf2Matrix::from_rows(const std::vector<BitWord>& rows) {
    if (rows.empty()) return Gf2Matrix();
    Gf2Matrix m(static_cast<uint32_t>(rows.size()), rows[0].length());
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].length() != m.cols_)
            throw std::invalid_argument("Gf2Matrix: ragged rows");
        m.rows_[i] = rows[i].mask();
    }
    return m;
}

Gf2Matrix Gf2Matrix::from_row_masks(uint32_t cols, const std::vector<uint64_t>& rows) {
    Gf2Matrix m(static_cast<uint32_t>(rows.size()), cols);
    const uint64_t keep = BitWord::mask_for(cols);
    for (size_t i = 0; i < rows.size(); ++i) m.rows_[i] = rows[i] & keep;
    return m;
}

Gf2Matrix Gf2Matrix::identity(uint32_t n) {
    Gf2Matrix m(n, n);
    for (uint32_t i = 0; i < n; ++i) m.rows_[i] = 1ULL << i;
    return m;
}

bool Gf2Matrix::get(uint32_t r, uint32_t c) const {
    if (c >= cols_) throw std::out_of_range("Gf2Matrix: column out of range");
    return (rows_.at(r) >> c) & 1;
}

void Gf2Matrix::set(uint32_t r, uint32_t c, bool v) {
    if (c >= cols_) throw std::out_of_range("Gf2Matrix: column out of range");
    if (v) rows_.at(r) |= (1ULL << c);
    else rows_.at(r) &= ~(1ULL << c);
}

void Gf2Matrix::append_row(uint64_t mask) {
    rows_.push_back(mask & BitWord::mask_for(cols_));
}

Gf2Matrix Gf2Matrix::stacked_with(const Gf2Matrix& below) const {
    if (below.rows() == 0) return *this;
    if (rows() == 0) return below;
    if (below.cols_ != cols_) throw std::invalid_argument("Gf2Matrix: column mismatch");
    Gf2Matrix m = *this;
    m.rows_.insert(m.rows_.end(), below.rows_.begin(), below.rows_.end());
    return m;
}

Gf2Matrix Gf2Matrix::top_rows(uint32_t count) const {
    if (count > rows()) throw std::out_of_range("Gf2Matrix: top_rows");
    Gf2Matrix m(0, cols_);
    m.rows_.assign(rows_.begin(), rows_.begin() + count);
    return m;
}

Gf2Matrix Gf2Matrix::bottom_rows(uint32_t count) const {
    if (count > rows()) throw std::out_of_range("Gf2Matrix: bottom_rows");
    Gf2Matrix m(0, cols_);
    m.rows_.assign(rows_.end() - count, rows_.end());
    return m;
}

uint64_t Gf2Matrix::mul_left_mask(uint64_t v) const {
    uint64_t acc = 0;
    uint64_t sel = v;
    while (sel) {
        const int i = std::countr_zero(sel);
        acc ^= rows_[static_cast<size_t>(i)];
        sel &= sel - 1;
    }
    return acc;
}

BitWord Gf2Matrix::mul_left(const BitWord& v) const {
    if (v.length() != rows()) throw std::invalid_argument("Gf2Matrix: vector length mismatch");
    return BitWord(cols_, mul_left_mask(v.mask()));
}

uint32_t rank(const Gf2Matrix& m) {
    std::vector<uint64_t> rows = m.row_masks();
    uint32_t rk = 0;
    for (uint32_t col = 0; col < m.cols() && rk < rows.size(); ++col) {
        uint32_t pivot = rk;
        while (pivot < rows.size() && !((rows[pivot] >> col) & 1)) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rk], rows[pivot]);
        for (uint32_t i = 0; i < rows.size(); ++i)
            if (i != rk && ((rows[i] >> col) & 1)) rows[i] ^= rows[rk];
        ++rk;
    }
    return rk;
}

uint32_t min_distance(const Gf2Matrix& g) {
    const uint32_t k = g.rows();
    if (k == 0) throw std::invalid_argument("min_distance: empty generator");
    if (k > 24) throw std::invalid_argument("min_distance: more than 2^24 codewords");
    if (rank(g) != k) throw std::invalid_argument("min_distance: generator not full row rank");

    // Gray-code walk over all nonzero coefficient vectors: step i flips
    // the row indexed by the lowest set bit of i.
    uint64_t word = 0;
    uint32_t best = g.cols() + 1;
    const uint64_t end = 1ULL << k;
    for (uint64_t i = 1; i < end; ++i) {
        word ^= g.row_mask(static_cast<uint32_t>(std::countr_zero(i)));
        const uint32_t w = static_cast<uint32_t>(std::popcount(word));
        if (w < best) best = w;
    }
    return best;
}

Rref reduced_row_echelon(const Gf2Matrix& m) {
    const uint32_t nrows = m.rows();
    Rref out;
    out.transform.assign(nrows, 0);
    for (uint32_t i = 0; i < nrows; ++i) out.transform[i] = 1ULL << i;

    std::vector<uint64_t> rows = m.row_masks();
    uint32_t rk = 0;
    for (uint32_t col = 0; col < m.cols() && rk < nrows; ++col) {
        uint32_t pivot = rk;
        while (pivot < nrows && !((rows[pivot] >> col) & 1)) ++pivot;
        if (pivot == nrows) continue;
        std::swap(rows[rk], rows[pivot]);
        std::swap(out.transform[rk], out.transform[pivot]);
        for (uint32_t i = 0; i < nrows; ++i) {
            if (i != rk && ((rows[i] >> col) & 1)) {
                rows[i] ^= rows[rk];
                out.transform[i] ^= out.transform[rk];
            }
        }
        out.pivots.push_back(col);
        ++rk;
    }
    out.r = Gf2Matrix::from_row_masks(m.cols(), rows);
    out.rank = rk;
    return out;
}

Gf2Matrix null_space_basis(const Gf2Matrix& m) {
    const uint32_t n = m.cols();
    if (m.rows() == 0) return Gf2Matrix::identity(n);

    Rref e = reduced_row_echelon(m);
    std::vector<bool> is_pivot(n, false);
    for (uint32_t p : e.pivots) is_pivot[p] = true;

    Gf2Matrix basis(0, n);
    for (uint32_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        // y_f = 1; pivot coordinates read off column f of the echelon form.
        uint64_t y = 1ULL << f;
        for (uint32_t i = 0; i < e.rank; ++i)
            if ((e.r.row_mask(i) >> f) & 1) y |= 1ULL << e.pivots[i];
        basis.append_row(y);
    }
    return basis;
}

uint32_t dual_distance(const Gf2Matrix& g) {
    Gf2Matrix dual = null_space_basis(g);
    if (dual.rows() == 0) return g.cols() + 1;
    return min_distance(dual);
}

}  // namespace nmc
