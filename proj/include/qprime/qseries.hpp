#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "qprime/exactnum.hpp"

namespace qprime {

/// Truncated q-series c(0) + c(1) q + ... + c(N) q^N with exact rational
/// coefficients. The precision N is part of the value: binary operations
/// truncate to the smaller precision.
class QExpansion {
public:
    /// Zero series known through q^precision.
    explicit QExpansion(std::size_t precision);
    explicit QExpansion(std::vector<Rational> coeffs);

    static QExpansion constant(const Rational& c, std::size_t precision);
    static QExpansion from_integers(std::span<const Integer> coeffs);

    std::size_t precision() const { return coeffs_.size() - 1; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    const Rational& operator[](std::size_t n) const { return coeffs_[n]; }
    Rational& operator[](std::size_t n) { return coeffs_[n]; }

    bool is_zero() const;
    QExpansion truncated(std::size_t precision) const;

    QExpansion& operator+=(const QExpansion& other);
    QExpansion& operator-=(const QExpansion& other);
    QExpansion& operator*=(const Rational& scalar);

    /// Equal on every exponent up to the common precision.
    friend bool operator==(const QExpansion& a, const QExpansion& b);

private:
    std::vector<Rational> coeffs_;
};

QExpansion operator+(QExpansion a, const QExpansion& b);
QExpansion operator-(QExpansion a, const QExpansion& b);
QExpansion operator-(QExpansion a);
QExpansion operator*(QExpansion a, const Rational& scalar);
QExpansion operator*(const Rational& scalar, QExpansion a);

QExpansion series_add(const QExpansion& a, const QExpansion& b);

/// Cauchy product truncated at min(N_a, N_b). Schoolbook over integers after
/// clearing denominators; a 128-bit accumulator is used when the coefficient
/// sizes allow it. Output ranges are split across worker threads.
QExpansion series_mul(const QExpansion& a, const QExpansion& b);
QExpansion operator*(const QExpansion& a, const QExpansion& b);

/// a^e by repeated squaring; a^0 is the constant 1.
QExpansion series_pow(const QExpansion& a, unsigned e);

/// D^order with D = q d/dq: coefficient n is multiplied by n^order.
QExpansion series_D(const QExpansion& a, unsigned order = 1);

} // namespace qprime
