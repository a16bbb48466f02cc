#include "balgraph/linsolve.hpp"

#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace balgraph {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in Smith normal form");
    return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in Smith normal form");
    return r;
}

std::int64_t checked_neg(std::int64_t a) { return checked_mul(a, -1); }

// row_dst += k * row_src
void add_row(IntMatrix& m, std::size_t dst, std::size_t src, std::int64_t k) {
    if (k == 0) return;
    for (std::size_t c = 0; c < m.cols(); ++c) m(dst, c) = checked_add(m(dst, c), checked_mul(k, m(src, c)));
}

void add_col(IntMatrix& m, std::size_t dst, std::size_t src, std::int64_t k) {
    if (k == 0) return;
    for (std::size_t r = 0; r < m.rows(); ++r) m(r, dst) = checked_add(m(r, dst), checked_mul(k, m(r, src)));
}

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(a, c), m(b, c));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < m.rows(); ++r) std::swap(m(r, a), m(r, b));
}

std::int64_t mod_floor(__int128 v, std::int64_t n) {
    auto r = static_cast<std::int64_t>(v % n);
    return r < 0 ? r + n : r;
}

// Inverse of a modulo n for gcd(a, n) = 1.
std::int64_t mod_inverse(std::int64_t a, std::int64_t n) {
    if (n == 1) return 0;
    std::int64_t old_r = a, r = n, old_s = 1, s = 0;
    while (r != 0) {
        std::int64_t q = old_r / r;
        std::tie(old_r, r) = std::make_pair(r, old_r - q * r);
        std::tie(old_s, s) = std::make_pair(s, old_s - q * s);
    }
    return mod_floor(old_s, n);
}

}  // namespace

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows) {
    for (const auto& row : rows) push_row(std::vector<std::int64_t>(row));
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

void IntMatrix::push_row(const std::vector<std::int64_t>& row) {
    if (rows_ == 0 && data_.empty()) cols_ = row.size();
    if (row.size() != cols_) throw std::invalid_argument("row width does not match matrix");
    data_.insert(data_.end(), row.begin(), row.end());
    ++rows_;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix shapes do not compose");
    IntMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k)
            if (a(i, k) != 0)
                for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) = checked_add(c(i, j), checked_mul(a(i, k), b(k, j)));
    return c;
}

SmithForm smith_normal_form(const IntMatrix& m) {
    SmithForm s{IntMatrix::identity(m.rows()), m, IntMatrix::identity(m.cols()), 0};
    IntMatrix& D = s.D;
    const std::size_t rows = m.rows(), cols = m.cols();

    for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
        while (true) {
            // Smallest nonzero magnitude in the trailing block becomes the pivot.
            std::size_t pr = rows, pc = cols;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j)
                    if (D(i, j) != 0 && (pr == rows || std::llabs(D(i, j)) < std::llabs(D(pr, pc)))) {
                        pr = i;
                        pc = j;
                    }
            if (pr == rows) return s;
            swap_rows(D, t, pr);
            swap_rows(s.U, t, pr);
            swap_cols(D, t, pc);
            swap_cols(s.V, t, pc);

            bool clean = true;
            const std::int64_t p = D(t, t);
            for (std::size_t i = t + 1; i < rows; ++i) {
                std::int64_t q = D(i, t) / p;
                add_row(D, i, t, checked_neg(q));
                add_row(s.U, i, t, checked_neg(q));
                if (D(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                std::int64_t q = D(t, j) / p;
                add_col(D, j, t, checked_neg(q));
                add_col(s.V, j, t, checked_neg(q));
                if (D(t, j) != 0) clean = false;
            }
            if (!clean) continue;

            // Divisibility: pull any offending row into the pivot row and retry.
            bool divides = true;
            for (std::size_t i = t + 1; i < rows && divides; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (D(i, j) % p != 0) {
                        add_row(D, t, i, 1);
                        add_row(s.U, t, i, 1);
                        divides = false;
                        break;
                    }
            if (divides) break;
        }
        if (D(t, t) < 0) {
            for (std::size_t c = 0; c < cols; ++c) D(t, c) = checked_neg(D(t, c));
            for (std::size_t c = 0; c < rows; ++c) s.U(t, c) = checked_neg(s.U(t, c));
        }
        s.rank = t + 1;
    }
    return s;
}

LinearSystem::LinearSystem(IntMatrix m) : m_(std::move(m)), snf_(smith_normal_form(m_)) {}

std::optional<std::vector<GroupElement>> LinearSystem::solve(const std::vector<GroupElement>& rhs,
                                                             const FiniteAbelianGroup& group) const {
    const std::size_t rows = m_.rows(), cols = m_.cols();
    if (rhs.size() != rows) throw std::invalid_argument("right-hand side length does not match row count");
    for (const auto& b : rhs)
        if (!group.contains(b)) throw std::invalid_argument("right-hand side entry is not an element of the group");

    std::vector<GroupElement> x(cols, group.zero());
    std::vector<std::int64_t> transformed(rows), y(cols);
    for (std::size_t f = 0; f < group.rank(); ++f) {
        const std::int64_t n = group.moduli()[f];
        for (std::size_t i = 0; i < rows; ++i) {
            __int128 acc = 0;
            for (std::size_t k = 0; k < rows; ++k)
                acc = (acc + static_cast<__int128>(mod_floor(snf_.U(i, k), n)) * rhs[k].residues[f]) % n;
            transformed[i] = mod_floor(acc, n);
        }
        std::fill(y.begin(), y.end(), 0);
        for (std::size_t i = 0; i < rows; ++i) {
            const std::int64_t d = snf_.diagonal(i);
            if (d == 0) {
                if (transformed[i] != 0) return std::nullopt;
                continue;
            }
            const std::int64_t g = std::gcd(mod_floor(d, n), n);
            if (transformed[i] % g != 0) return std::nullopt;
            const std::int64_t reduced_n = n / g;
            const std::int64_t reduced_d = mod_floor(d / g, reduced_n);
            y[i] = reduced_n == 1 ? 0
                                  : mod_floor(static_cast<__int128>(transformed[i] / g) * mod_inverse(reduced_d, reduced_n),
                                              reduced_n);
        }
        for (std::size_t j = 0; j < cols; ++j) {
            __int128 acc = 0;
            for (std::size_t k = 0; k < cols; ++k) acc = (acc + static_cast<__int128>(mod_floor(snf_.V(j, k), n)) * y[k]) % n;
            x[j].residues[f] = mod_floor(acc, n);
        }
    }
    return x;
}

std::optional<std::vector<GroupElement>> solve_mod(const IntMatrix& m, const std::vector<GroupElement>& rhs,
                                                   const FiniteAbelianGroup& group) {
    return LinearSystem(m).solve(rhs, group);
}

}  // namespace balgraph
