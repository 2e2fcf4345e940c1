#include "hurwitzkit/linalg.hpp"

#include <utility>

namespace hurwitzkit::algebra {

void RationalMatrix::append_row(const std::vector<Rational>& row)
{
    if (rows_ == 0 && cols_ == 0) {
        cols_ = row.size();
    }
    if (row.size() != cols_) {
        throw PreconditionError("append_row: wrong row length");
    }
    data_.insert(data_.end(), row.begin(), row.end());
    ++rows_;
}

std::vector<Rational> RationalMatrix::row(std::size_t i) const
{
    return {data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
            data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
}

std::vector<Rational> RationalMatrix::multiply(const std::vector<Rational>& v) const
{
    if (v.size() != cols_) {
        throw PreconditionError("multiply: dimension mismatch");
    }
    std::vector<Rational> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            if ((*this)(i, j) != 0 && v[j] != 0) {
                out[i] += (*this)(i, j) * v[j];
            }
        }
    }
    return out;
}

RowEchelon row_echelon(const RationalMatrix& a)
{
    const std::size_t n = a.rows();
    const std::size_t m = a.cols();

    // clear denominators row by row
    std::vector<std::vector<Integer>> mat(n, std::vector<Integer>(m));
    for (std::size_t i = 0; i < n; ++i) {
        Integer lcm = 1;
        for (std::size_t j = 0; j < m; ++j) {
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), a(i, j).get_den_mpz_t());
        }
        for (std::size_t j = 0; j < m; ++j) {
            mat[i][j] = a(i, j).get_num() * (lcm / a(i, j).get_den());
        }
    }

    // Bareiss: every intermediate entry is a minor of the input, so the
    // division by the previous pivot is exact.
    std::vector<std::size_t> pivots;
    Integer prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m && r < n; ++c) {
        std::size_t p = r;
        while (p < n && mat[p][c] == 0) {
            ++p;
        }
        if (p == n) {
            continue;
        }
        std::swap(mat[p], mat[r]);
        for (std::size_t i = r + 1; i < n; ++i) {
            for (std::size_t j = c + 1; j < m; ++j) {
                Integer v = mat[r][c] * mat[i][j] - mat[i][c] * mat[r][j];
                mpz_divexact(mat[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
            }
            mat[i][c] = 0;
        }
        prev = mat[r][c];
        pivots.push_back(c);
        ++r;
    }

    // back-substitution to reduced form
    RationalMatrix reduced(pivots.size(), m);
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        Rational lead(mat[i][pivots[i]]);
        for (std::size_t j = 0; j < m; ++j) {
            if (mat[i][j] != 0) {
                reduced(i, j) = Rational(mat[i][j]) / lead;
            }
        }
    }
    for (std::size_t i = pivots.size(); i-- > 0;) {
        for (std::size_t k = 0; k < i; ++k) {
            Rational f = reduced(k, pivots[i]);
            if (f == 0) {
                continue;
            }
            for (std::size_t j = pivots[i]; j < m; ++j) {
                if (reduced(i, j) != 0) {
                    reduced(k, j) -= f * reduced(i, j);
                }
            }
        }
    }
    return RowEchelon{std::move(reduced), std::move(pivots)};
}

std::size_t rank(const RationalMatrix& a)
{
    return row_echelon(a).rank();
}

std::vector<std::vector<Rational>> null_space(const RationalMatrix& a)
{
    auto ech = row_echelon(a);
    const std::size_t m = a.cols();
    std::vector<bool> is_pivot(m, false);
    for (auto c : ech.pivot_columns) {
        is_pivot[c] = true;
    }
    std::vector<std::vector<Rational>> basis;
    for (std::size_t free = 0; free < m; ++free) {
        if (is_pivot[free]) {
            continue;
        }
        std::vector<Rational> v(m);
        v[free] = 1;
        for (std::size_t i = 0; i < ech.rank(); ++i) {
            v[ech.pivot_columns[i]] = -ech.reduced(i, free);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

LinearSolution solve(const RationalMatrix& a, const std::vector<Rational>& b)
{
    if (b.size() != a.rows()) {
        throw PreconditionError("solve: right-hand side has the wrong length");
    }
    RationalMatrix aug(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            aug(i, j) = a(i, j);
        }
        aug(i, a.cols()) = b[i];
    }
    auto ech = row_echelon(aug);
    LinearSolution out;
    out.consistent = ech.pivot_columns.empty() || ech.pivot_columns.back() != a.cols();
    out.rank = out.consistent ? ech.rank() : ech.rank() - 1;
    if (out.consistent && out.rank == a.cols()) {
        std::vector<Rational> x(a.cols());
        for (std::size_t i = 0; i < ech.rank(); ++i) {
            x[ech.pivot_columns[i]] = ech.reduced(i, a.cols());
        }
        out.unique = std::move(x);
    }
    return out;
}

}  // namespace hurwitzkit::algebra
