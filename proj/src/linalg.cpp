#include "qprime/linalg.hpp"

#include <utility>

namespace qprime {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows)
    , cols_(cols)
    , data_(rows * cols)
{
}

std::vector<Rational> RationalMatrix::multiply(const std::vector<Rational>& x) const
{
    if (x.size() != cols_) {
        throw DomainError("matrix-vector size mismatch");
    }
    std::vector<Rational> y(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            y[r] += (*this)(r, c) * x[c];
        }
    }
    return y;
}

RationalMatrix vandermonde(const std::vector<Rational>& points, std::size_t degree)
{
    RationalMatrix v(points.size(), degree + 1);
    for (std::size_t r = 0; r < points.size(); ++r) {
        Rational power = 1;
        for (std::size_t c = 0; c <= degree; ++c) {
            v(r, c) = power;
            power *= points[r];
        }
    }
    return v;
}

namespace {

// Gauss-Jordan elimination on [A | b]; returns the pivot column of each
// pivot row.
std::vector<std::size_t> eliminate(RationalMatrix& a, std::vector<Rational>* b)
{
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        std::size_t pivot = row;
        while (pivot < a.rows() && a(pivot, col) == 0) {
            ++pivot;
        }
        if (pivot == a.rows()) {
            continue;
        }
        if (pivot != row) {
            for (std::size_t c = 0; c < a.cols(); ++c) {
                std::swap(a(pivot, c), a(row, c));
            }
            if (b != nullptr) {
                std::swap((*b)[pivot], (*b)[row]);
            }
        }
        const Rational inv = 1 / a(row, col);
        for (std::size_t c = col; c < a.cols(); ++c) {
            a(row, c) *= inv;
        }
        if (b != nullptr) {
            (*b)[row] *= inv;
        }
        for (std::size_t r = 0; r < a.rows(); ++r) {
            if (r == row || a(r, col) == 0) {
                continue;
            }
            const Rational factor = a(r, col);
            for (std::size_t c = col; c < a.cols(); ++c) {
                a(r, c) -= factor * a(row, c);
            }
            if (b != nullptr) {
                (*b)[r] -= factor * (*b)[row];
            }
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace

std::size_t rank(RationalMatrix m)
{
    return eliminate(m, nullptr).size();
}

std::optional<std::vector<Rational>> solve(RationalMatrix a, std::vector<Rational> b)
{
    if (b.size() != a.rows()) {
        throw DomainError("right-hand side size mismatch");
    }
    const auto pivots = eliminate(a, &b);
    for (std::size_t r = pivots.size(); r < a.rows(); ++r) {
        if (b[r] != 0) {
            return std::nullopt;
        }
    }
    std::vector<Rational> x(a.cols());
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        x[pivots[r]] = b[r];
    }
    return x;
}

} // namespace qprime
