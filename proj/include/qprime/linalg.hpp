#pragma once

// Dense exact linear algebra over Q, sized for the small systems that come up
// here (a few dozen columns).

#include <cstddef>
#include <optional>
#include <vector>

#include "qprime/exactnum.hpp"

namespace qprime {

class RationalMatrix {
public:
    RationalMatrix(std::size_t rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::vector<Rational> multiply(const std::vector<Rational>& x) const;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Rational> data_;
};

/// Vandermonde matrix with rows (1, x, ..., x^degree).
RationalMatrix vandermonde(const std::vector<Rational>& points, std::size_t degree);

std::size_t rank(RationalMatrix m);

/// Solves A x = b. Returns nullopt when the system is inconsistent; when it
/// is underdetermined the free variables are set to zero.
std::optional<std::vector<Rational>> solve(RationalMatrix a, std::vector<Rational> b);

} // namespace qprime
