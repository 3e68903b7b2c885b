#pragma once

// Exact integer and rational arithmetic: Bernoulli numbers, divisor-power
// sums and a prime sieve. Big numbers are GMP values through gmpxx.

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace qprime {

using Integer = mpz_class;
using Rational = mpq_class;

class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Builds num/den in lowest terms; den must be nonzero.
Rational make_rational(const Integer& num, const Integer& den = 1);

/// Renders "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);
std::string to_string(const Integer& z);

/// Parses "p/q" or "p" (optional sign, decimal digits only). Throws DomainError.
Rational parse_rational(std::string_view text);

int sign(const Rational& r);

/// B_k with the x/(e^x - 1) convention (B_1 = -1/2). Odd k > 1 is rejected.
Rational bernoulli(int k);

/// sigma_r(n) = sum of d^r over divisors d of n.
Integer sigma(unsigned r, std::uint64_t n);

/// sigma_r(n) for every 0 <= n <= limit (entry 0 is 0). Computed
/// multiplicatively from a smallest-prime-factor sieve.
std::vector<Integer> sigma_table(unsigned r, std::size_t limit);

/// Smallest prime factor of every n <= limit; spf[0] = spf[1] = 0.
std::vector<std::uint32_t> smallest_prime_factors(std::size_t limit);

class PrimeList {
public:
    explicit PrimeList(std::uint64_t bound);

    std::uint64_t bound() const { return bound_; }
    const std::vector<std::uint64_t>& primes() const { return primes_; }
    std::size_t size() const { return primes_.size(); }
    bool empty() const { return primes_.empty(); }
    auto begin() const { return primes_.begin(); }
    auto end() const { return primes_.end(); }
    std::uint64_t operator[](std::size_t i) const { return primes_[i]; }

private:
    std::uint64_t bound_;
    std::vector<std::uint64_t> primes_;
};

PrimeList primes_up_to(std::uint64_t x);

/// The first `count` primes.
std::vector<std::uint64_t> first_primes(std::size_t count);

bool is_prime(std::uint64_t n);

/// Worker count for internal loops: QPRIME_THREADS if set and positive,
/// otherwise the hardware concurrency.
unsigned worker_count();

/// Runs body(begin, end) over [0, n) split into contiguous chunks.
void parallel_chunks(std::size_t n, const std::function<void(std::size_t, std::size_t)>& body);

} // namespace qprime
