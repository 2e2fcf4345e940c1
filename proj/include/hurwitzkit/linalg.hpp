#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hurwitzkit/rational.hpp"

namespace hurwitzkit::algebra {

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rational& operator()(std::size_t i, std::size_t j) { return data_.at(i * cols_ + j); }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_.at(i * cols_ + j); }

    void append_row(const std::vector<Rational>& row);
    std::vector<Rational> row(std::size_t i) const;
    std::vector<Rational> multiply(const std::vector<Rational>& v) const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

/// Reduced row echelon form computed by fraction-free (Bareiss) elimination
/// followed by exact back-substitution.
struct RowEchelon {
    RationalMatrix reduced;                 // rank rows, pivots normalised to 1
    std::vector<std::size_t> pivot_columns;  // one per row of `reduced`
    std::size_t rank() const { return pivot_columns.size(); }
};

RowEchelon row_echelon(const RationalMatrix& a);

std::size_t rank(const RationalMatrix& a);

/// Basis of {v : A v = 0}; one vector per free column, with a 1 in that column.
std::vector<std::vector<Rational>> null_space(const RationalMatrix& a);

struct LinearSolution {
    std::size_t rank = 0;
    bool consistent = false;
    /// Present iff the system is consistent and rank == number of unknowns.
    std::optional<std::vector<Rational>> unique;
};

LinearSolution solve(const RationalMatrix& a, const std::vector<Rational>& b);

}  // namespace hurwitzkit::algebra
