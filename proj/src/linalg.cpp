#include "mva/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace mva {

FpVec RowSpan::reduce(FpVec v) const {
    if (v.size() != ncols_) throw std::invalid_argument("RowSpan: size mismatch");
    for (size_t r = 0; r < rows_.size(); ++r) {
        Fp c = v[pivots_[r]];
        if (c.is_zero()) continue;
        for (size_t j = 0; j < ncols_; ++j) v[j] -= c * rows_[r][j];
    }
    return v;
}

bool RowSpan::contains(const FpVec& v) const { return is_zero_vec(reduce(v)); }

bool RowSpan::insert(FpVec v) {
    v = reduce(std::move(v));
    size_t piv = ncols_;
    for (size_t j = 0; j < ncols_; ++j)
        if (!v[j].is_zero()) { piv = j; break; }
    if (piv == ncols_) return false;
    Fp inv = v[piv].inverse();
    for (auto& x : v) x *= inv;
    // back-substitute into existing rows
    for (size_t r = 0; r < rows_.size(); ++r) {
        Fp c = rows_[r][piv];
        if (c.is_zero()) continue;
        for (size_t j = 0; j < ncols_; ++j) rows_[r][j] -= c * v[j];
    }
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), piv) - pivots_.begin();
    rows_.insert(rows_.begin() + pos, std::move(v));
    pivots_.insert(pivots_.begin() + pos, piv);
    return true;
}

std::vector<size_t> RowSpan::free_columns() const {
    std::vector<size_t> out;
    size_t r = 0;
    for (size_t j = 0; j < ncols_; ++j) {
        if (r < pivots_.size() && pivots_[r] == j) { ++r; continue; }
        out.push_back(j);
    }
    return out;
}

std::vector<FpVec> kernel_basis(const std::vector<FpVec>& mat_rows, size_t ncols,
                                const Prime& p) {
    RowSpan span(ncols, p);
    for (const auto& row : mat_rows) span.insert(row);
    const auto& rows = span.rows();
    const auto& piv = span.pivots();
    std::vector<FpVec> out;
    for (size_t j : span.free_columns()) {
        FpVec v = zero_vec(ncols, p);
        v[j] = Fp::one(p);
        for (size_t r = 0; r < rows.size(); ++r) v[piv[r]] = -rows[r][j];
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace mva
