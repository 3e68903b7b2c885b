#pragma once

// Finite-x diagnostics for sign changes of c_F(p) over primes p: exact
// partial sums of c_F(p) and c_F(p)^2, sign-change counts, the exponent
// profile of a cusp combination and the Deligne bound for eigenforms.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "qprime/forms.hpp"

namespace qprime {

struct PrimeCoefficient {
    std::uint64_t p;
    Rational value;
};

/// c_F(p) for every prime p <= X from a single expansion at precision X.
std::vector<PrimeCoefficient> prime_coefficients(const QuasiForm& f, std::uint64_t x,
    EisensteinConvention conv = EisensteinConvention::paper);
std::vector<PrimeCoefficient> prime_coefficients(const QExpansion& e);

/// Adjacent opposite-sign pairs after dropping zeros.
std::size_t count_sign_changes(std::span<const Rational> values);

struct ExponentTerm {
    int weight;          // k_f
    int basis_index;     // i in S_{k,i}
    int derivative;      // j_f, the largest derivative order present
    Rational leading;    // A_f, the coefficient of D^{j_f}
    Rational alpha;      // j_f + (k_f + 1)/2
    Rational beta;       // 2 alpha - 1
};

struct ExponentProfile {
    std::vector<ExponentTerm> terms;
    Rational alpha0 = 0;
    Rational beta0 = 0;
    std::vector<std::size_t> max_set; // indices into terms with beta == beta0
    /// False when some referenced weight has dim S_m > 1: the basis elements
    /// are then echelon forms, not eigenforms. alpha0 and beta0 only depend
    /// on (k, j) and are unaffected.
    bool eigenform_basis = true;
};

/// Requires a nonzero cusp-only form.
ExponentProfile exponent_profile(const QuasiForm& cusp_only);

struct SignStatsReport {
    std::uint64_t bound = 0;
    std::size_t sign_changes = 0;
    std::vector<std::pair<std::uint64_t, Rational>> partial_sum;
    std::vector<std::pair<std::uint64_t, Rational>> partial_sum_abs;
    std::vector<std::pair<std::uint64_t, Rational>> partial_sum_sq;
    /// Diagnostic only: sum c_F(p)^2 * log(x) / x^beta0 in floating point.
    /// Empty unless the form is a nonzero cusp combination.
    std::vector<std::pair<std::uint64_t, double>> normalized_sq;
    std::optional<ExponentProfile> profile;
};

/// Exact partial sums at each grid point (grid values must not exceed X).
SignStatsReport partial_sum_report(const QuasiForm& f, std::uint64_t x, std::vector<std::uint64_t> grid,
    EisensteinConvention conv = EisensteinConvention::paper);

struct DeligneResult {
    bool passed = true;
    std::uint64_t primes_checked = 0;
    std::optional<std::uint64_t> first_violation;
    std::uint64_t worst_prime = 0;
    /// max |a(p)| / (2 p^{(k-1)/2}), floating diagnostic.
    double worst_ratio = 0.0;
};

/// Weights whose cusp space is one-dimensional: 12, 16, 18, 20, 22, 26.
bool has_unique_eigenform(int m);

/// |a(p)| <= 2 p^{(m-1)/2}, compared exactly as a(p)^2 <= 4 p^{m-1}, at
/// every prime p <= min(X, precision of the series).
DeligneResult deligne_check_series(int m, const QExpansion& series, std::uint64_t x);

/// Check for the normalized eigenform of a one-dimensional weight.
DeligneResult deligne_check(int m, std::uint64_t x);

} // namespace qprime
