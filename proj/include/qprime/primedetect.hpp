#pragma once

// Prime-vanishing decisions for quasimodular forms. For an Eisenstein
// combination f = sum alpha_{k,l} D^l G_k the coefficient at a prime p is
// the polynomial sum alpha_{k,l} p^l (1 + p^{k-1}), so vanishing at every
// prime is decided by finitely many primes.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qprime/forms.hpp"

namespace qprime {

/// c_f(p) = sum_r betas[r] p^r for every prime p. betas.size() is
/// degree_bound + 1; the top entries may be zero.
struct PrimePolynomial {
    std::vector<Rational> betas;
    int degree_bound = 0;

    bool is_zero() const;
    Rational evaluate(const Integer& p) const;
};

PrimePolynomial prime_polynomial(const QuasiForm& f);

/// sum alpha_{k,l} p^l (1 + p^{k-1}) evaluated term by term, without
/// collecting powers.
Rational eisenstein_prime_coefficient(const QuasiForm& f, std::uint64_t p);

struct FiniteCheckVerdict {
    enum class Kind { vanishes_at_all_primes, not_all_primes, insufficient_primes };

    Kind kind = Kind::insufficient_primes;
    int degree_bound = 0;
    /// Primes with a vanishing coefficient needed to conclude: degree_bound + 1.
    std::size_t needed = 0;
    /// Row count of the Vandermonde system written with powers up to
    /// p^(degree_bound + 1); reported alongside `needed` for comparison.
    std::size_t display_rows = 0;
    std::size_t vanishing_found = 0;
    std::uint64_t witness_prime = 0;
    Rational witness_value = 0;
};

/// Root counting on the distinct supplied primes; non-primes are rejected.
FiniteCheckVerdict finite_check(const QuasiForm& f, std::vector<std::uint64_t> primes);

std::string to_string(FiniteCheckVerdict::Kind kind);

struct OmegaViolation {
    std::uint64_t n = 0;
    Rational value = 0;
    std::string reason;
};

struct OmegaReport {
    std::uint64_t range_checked = 0;
    bool include_small = false;
    bool nonneg_ok = true;
    bool zero_set_equals_primes = true;
    std::vector<OmegaViolation> violations;
    std::size_t total_violations = 0;

    bool passed() const { return nonneg_ok && zero_set_equals_primes; }
};

inline constexpr std::size_t default_violation_cap = 20;

/// Bounded check of c_f(n) >= 0 with c_f(n) = 0 exactly at primes, over
/// 2 <= n <= N (0 <= n <= N with include_small).
OmegaReport omega_scan(const QuasiForm& f, std::uint64_t bound, bool include_small = false,
    EisensteinConvention conv = EisensteinConvention::paper, std::size_t violation_cap = default_violation_cap);

OmegaReport omega_scan_expansion(const QExpansion& e, bool include_small = false,
    std::size_t violation_cap = default_violation_cap);

struct OmegaTildeVerdict {
    bool in_omega_tilde = false;
    std::optional<CuspKey> cusp_witness;
    Rational cusp_witness_coefficient = 0;
    std::optional<std::uint64_t> prime_witness;
    Rational prime_witness_value = 0;
    std::size_t primes_searched = 0;
};

struct OmegaTildeOptions {
    /// The witness search covers the first `search_factor * (d + 1)` primes.
    std::size_t search_factor = 10;
    EisensteinConvention conv = EisensteinConvention::paper;
};

/// F vanishes at every prime iff its cusp part is zero and the prime
/// polynomial of its Eisenstein part is zero.
OmegaTildeVerdict omega_tilde_decide(const QuasiForm& f, const OmegaTildeOptions& options = {});

} // namespace qprime
