#pragma once

#include <cstdint>
#include <vector>

#include "mva/fp.hpp"

namespace mva {

using FpVec = std::vector<Fp>;

/// Row-reduced span of vectors in F_p^n. Rows are kept in reduced row
/// echelon form; supports incremental insertion, membership, kernel
/// computation, and coset reduction.
class RowSpan {
public:
    RowSpan(size_t ncols, const Prime& p) : ncols_(ncols), p_(p) {}

    size_t ncols() const { return ncols_; }
    size_t rank() const { return rows_.size(); }
    const Prime& prime() const { return p_; }

    /// Reduce v against the current rows (eliminates pivot coordinates).
    FpVec reduce(FpVec v) const;

    bool contains(const FpVec& v) const;

    /// Insert v if independent; returns true if the rank grew.
    bool insert(FpVec v);

    const std::vector<FpVec>& rows() const { return rows_; }
    const std::vector<size_t>& pivots() const { return pivots_; }

    /// Indices of non-pivot coordinates (canonical coset representatives of
    /// the quotient are supported on these).
    std::vector<size_t> free_columns() const;

private:
    size_t ncols_;
    Prime p_;
    std::vector<FpVec> rows_;      // RREF rows
    std::vector<size_t> pivots_;   // pivot column of each row, increasing
};

/// Basis of the right kernel {x : M x = 0} of the matrix with the given rows.
std::vector<FpVec> kernel_basis(const std::vector<FpVec>& mat_rows, size_t ncols,
                                const Prime& p);

inline FpVec zero_vec(size_t n, const Prime& p) { return FpVec(n, Fp::zero(p)); }

inline bool is_zero_vec(const FpVec& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

}  // namespace mva
