#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "balgraph/abelian.hpp"

namespace balgraph {

/// Dense row-major integer matrix.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
    IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows);

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::int64_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    /// Appends a row; throws std::invalid_argument on a width mismatch.
    void push_row(const std::vector<std::int64_t>& row);

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::int64_t> data_;
};

/// Overflow-checked product; throws std::overflow_error.
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);

struct SmithForm {
    IntMatrix U;  // rows x rows, unimodular
    IntMatrix D;  // rows x cols, diagonal with d_i | d_{i+1}, d_i >= 0
    IntMatrix V;  // cols x cols, unimodular
    std::size_t rank = 0;

    std::int64_t diagonal(std::size_t i) const { return i < D.rows() && i < D.cols() ? D(i, i) : 0; }
};

/// U * M * V = D over the integers. Arithmetic is overflow-checked and throws
/// std::overflow_error rather than wrapping.
SmithForm smith_normal_form(const IntMatrix& m);

/// M x = b solved in A = Z_{n1} x ... x Z_{nk}, one Smith form shared by every factor.
///
/// Per factor the transformed system D y = U b is diagonal; each row either
/// fixes y_j up to the kernel of multiplication by d_j (we take the smallest
/// residue) or is a pure consistency check. Free coordinates are set to zero
/// and x = V y, so the returned solution is canonical.
class LinearSystem {
public:
    explicit LinearSystem(IntMatrix m);

    const IntMatrix& matrix() const noexcept { return m_; }
    const SmithForm& smith() const noexcept { return snf_; }

    /// Throws std::invalid_argument if rhs.size() != rows or an entry is not in A.
    std::optional<std::vector<GroupElement>> solve(const std::vector<GroupElement>& rhs,
                                                   const FiniteAbelianGroup& group) const;

private:
    IntMatrix m_;
    SmithForm snf_;
};

std::optional<std::vector<GroupElement>> solve_mod(const IntMatrix& m, const std::vector<GroupElement>& rhs,
                                                   const FiniteAbelianGroup& group);

}  // namespace balgraph
