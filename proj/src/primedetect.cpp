#include "qprime/primedetect.hpp"

#include <algorithm>

#include "qprime/decompose.hpp"

namespace qprime {

bool PrimePolynomial::is_zero() const
{
    return std::all_of(betas.begin(), betas.end(), [](const Rational& b) { return b == 0; });
}

Rational PrimePolynomial::evaluate(const Integer& p) const
{
    Rational value = 0;
    for (auto it = betas.rbegin(); it != betas.rend(); ++it) {
        value = value * p + *it;
    }
    return value;
}

namespace {

void require_eisenstein(const QuasiForm& f)
{
    if (f.has_cusp()) {
        throw DomainError("not an Eisenstein combination: cusp terms present");
    }
}

int degree_bound_of(const QuasiForm& f)
{
    int d = 0;
    for (const auto& [key, c] : f.eis()) {
        d = std::max(d, key.l + key.k - 1);
    }
    return d;
}

} // namespace

PrimePolynomial prime_polynomial(const QuasiForm& f)
{
    require_eisenstein(f);
    PrimePolynomial out;
    out.degree_bound = degree_bound_of(f);
    out.betas.assign(static_cast<std::size_t>(out.degree_bound) + 1, Rational(0));
    for (const auto& [key, c] : f.eis()) {
        out.betas[static_cast<std::size_t>(key.l)] += c;
        out.betas[static_cast<std::size_t>(key.l + key.k - 1)] += c;
    }
    return out;
}

Rational eisenstein_prime_coefficient(const QuasiForm& f, std::uint64_t p)
{
    require_eisenstein(f);
    Rational value = 0;
    for (const auto& [key, c] : f.eis()) {
        Integer pl;
        Integer pk;
        mpz_ui_pow_ui(pl.get_mpz_t(), p, static_cast<unsigned long>(key.l));
        mpz_ui_pow_ui(pk.get_mpz_t(), p, static_cast<unsigned long>(key.k - 1));
        value += c * pl * (1 + pk);
    }
    return value;
}

FiniteCheckVerdict finite_check(const QuasiForm& f, std::vector<std::uint64_t> primes)
{
    require_eisenstein(f);
    std::sort(primes.begin(), primes.end());
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
    for (const auto p : primes) {
        if (!is_prime(p)) {
            throw DomainError("finite_check: " + std::to_string(p) + " is not prime");
        }
    }

    FiniteCheckVerdict verdict;
    verdict.degree_bound = degree_bound_of(f);
    verdict.needed = static_cast<std::size_t>(verdict.degree_bound) + 1;
    verdict.display_rows = verdict.needed + 1;
    if (f.eis().empty()) {
        verdict.kind = FiniteCheckVerdict::Kind::vanishes_at_all_primes;
        return verdict;
    }
    for (const auto p : primes) {
        const Rational value = eisenstein_prime_coefficient(f, p);
        if (value != 0) {
            verdict.kind = FiniteCheckVerdict::Kind::not_all_primes;
            verdict.witness_prime = p;
            verdict.witness_value = value;
            return verdict;
        }
        ++verdict.vanishing_found;
    }
    // A polynomial of degree <= d with d + 1 roots is identically zero.
    verdict.kind = verdict.vanishing_found >= verdict.needed ? FiniteCheckVerdict::Kind::vanishes_at_all_primes
                                                             : FiniteCheckVerdict::Kind::insufficient_primes;
    return verdict;
}

std::string to_string(FiniteCheckVerdict::Kind kind)
{
    switch (kind) {
    case FiniteCheckVerdict::Kind::vanishes_at_all_primes:
        return "VanishesAtAllPrimes";
    case FiniteCheckVerdict::Kind::not_all_primes:
        return "NotAllPrimes";
    case FiniteCheckVerdict::Kind::insufficient_primes:
        return "InsufficientPrimes";
    }
    return "unknown";
}

OmegaReport omega_scan_expansion(const QExpansion& e, bool include_small, std::size_t violation_cap)
{
    OmegaReport report;
    report.range_checked = e.precision();
    report.include_small = include_small;
    const PrimeList primes(e.precision());
    std::vector<bool> prime_mask(e.precision() + 1, false);
    for (const auto p : primes) {
        prime_mask[p] = true;
    }
    auto record = [&](std::uint64_t n, const Rational& value, const char* reason) {
        ++report.total_violations;
        if (report.violations.size() < violation_cap) {
            report.violations.push_back({n, value, reason});
        }
    };
    for (std::size_t n = include_small ? 0 : 2; n <= e.precision(); ++n) {
        const Rational& c = e[n];
        if (c < 0) {
            report.nonneg_ok = false;
            record(n, c, "negative coefficient");
        }
        if (prime_mask[n] && c != 0) {
            report.zero_set_equals_primes = false;
            record(n, c, "nonzero at prime");
        } else if (!prime_mask[n] && c == 0) {
            report.zero_set_equals_primes = false;
            record(n, c, "zero at non-prime");
        }
    }
    return report;
}

OmegaReport omega_scan(const QuasiForm& f, std::uint64_t bound, bool include_small, EisensteinConvention conv,
    std::size_t violation_cap)
{
    if (bound < 2) {
        throw DomainError("omega_scan: bound must be at least 2");
    }
    return omega_scan_expansion(quasiform_expand(f, bound, conv), include_small, violation_cap);
}

OmegaTildeVerdict omega_tilde_decide(const QuasiForm& f, const OmegaTildeOptions& options)
{
    const DecompositionResult parts = split_eis_cusp(f, default_certificate_precision, options.conv);
    const PrimePolynomial poly = prime_polynomial(parts.eis_part);

    OmegaTildeVerdict verdict;
    if (!parts.cusp_part.cusp().empty()) {
        const auto& [key, c] = *parts.cusp_part.cusp().begin();
        verdict.cusp_witness = key;
        verdict.cusp_witness_coefficient = c;
    }
    if (!verdict.cusp_witness && poly.is_zero()) {
        verdict.in_omega_tilde = true;
        return verdict;
    }

    const auto primes = first_primes(options.search_factor * (static_cast<std::size_t>(poly.degree_bound) + 1));
    verdict.primes_searched = primes.size();
    if (f.has_cusp()) {
        const QExpansion e = quasiform_expand(f, primes.back(), options.conv);
        for (const auto p : primes) {
            if (e[p] != 0) {
                verdict.prime_witness = p;
                verdict.prime_witness_value = e[p];
                break;
            }
        }
    } else {
        for (const auto p : primes) {
            const Rational value = poly.evaluate(p);
            if (value != 0) {
                verdict.prime_witness = p;
                verdict.prime_witness_value = value;
                break;
            }
        }
    }
    return verdict;
}

} // namespace qprime
