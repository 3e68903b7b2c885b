#include "qprime/signstats.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

namespace qprime {

std::vector<PrimeCoefficient> prime_coefficients(const QExpansion& e)
{
    std::vector<PrimeCoefficient> out;
    for (const auto p : primes_up_to(e.precision())) {
        out.push_back({p, e[p]});
    }
    return out;
}

std::vector<PrimeCoefficient> prime_coefficients(const QuasiForm& f, std::uint64_t x, EisensteinConvention conv)
{
    if (x < 2) {
        throw DomainError("prime_coefficients: X must be at least 2");
    }
    return prime_coefficients(quasiform_expand(f, x, conv));
}

std::size_t count_sign_changes(std::span<const Rational> values)
{
    std::size_t changes = 0;
    int previous = 0;
    for (const auto& v : values) {
        const int s = sgn(v);
        if (s == 0) {
            continue;
        }
        if (previous != 0 && s != previous) {
            ++changes;
        }
        previous = s;
    }
    return changes;
}

ExponentProfile exponent_profile(const QuasiForm& cusp_only)
{
    if (!cusp_only.eis().empty() || cusp_only.constant() != 0) {
        throw DomainError("exponent_profile: form has an Eisenstein part");
    }
    if (cusp_only.cusp().empty()) {
        throw DomainError("exponent_profile: zero form has no exponent profile");
    }
    // Highest derivative order per basis element; map order is ascending in l.
    std::map<std::pair<int, int>, std::pair<int, Rational>> top;
    for (const auto& [key, c] : cusp_only.cusp()) {
        top[{key.m, key.i}] = {key.l, c};
    }
    ExponentProfile profile;
    for (const auto& [mi, lead] : top) {
        ExponentTerm term;
        term.weight = mi.first;
        term.basis_index = mi.second;
        term.derivative = lead.first;
        term.leading = lead.second;
        term.alpha = Rational(term.derivative) + Rational(term.weight + 1, 2);
        term.beta = 2 * term.alpha - 1;
        profile.terms.push_back(term);
        if (cusp_dimension(term.weight) > 1) {
            profile.eigenform_basis = false;
        }
    }
    profile.alpha0 = profile.terms.front().alpha;
    for (const auto& t : profile.terms) {
        profile.alpha0 = std::max(profile.alpha0, t.alpha);
    }
    profile.beta0 = 2 * profile.alpha0 - 1;
    for (std::size_t i = 0; i < profile.terms.size(); ++i) {
        if (profile.terms[i].beta == profile.beta0) {
            profile.max_set.push_back(i);
        }
    }
    return profile;
}

namespace {

double log_abs(const Rational& r)
{
    long num_exp = 0;
    long den_exp = 0;
    const double num = mpz_get_d_2exp(&num_exp, r.get_num_mpz_t());
    const double den = mpz_get_d_2exp(&den_exp, r.get_den_mpz_t());
    return std::log(std::fabs(num)) - std::log(den) + static_cast<double>(num_exp - den_exp) * std::log(2.0);
}

} // namespace

SignStatsReport partial_sum_report(const QuasiForm& f, std::uint64_t x, std::vector<std::uint64_t> grid,
    EisensteinConvention conv)
{
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    if (!grid.empty() && grid.back() > x) {
        throw DomainError("partial_sum_report: grid point " + std::to_string(grid.back()) + " exceeds X");
    }
    SignStatsReport report;
    report.bound = x;
    const auto coeffs = prime_coefficients(f, x, conv);
    std::vector<Rational> values;
    values.reserve(coeffs.size());
    for (const auto& pc : coeffs) {
        values.push_back(pc.value);
    }
    report.sign_changes = count_sign_changes(values);
    if (f.eis().empty() && f.constant() == 0 && !f.cusp().empty()) {
        report.profile = exponent_profile(f);
    }

    Rational sum = 0;
    Rational sum_abs = 0;
    Rational sum_sq = 0;
    std::size_t next = 0;
    auto emit = [&](std::uint64_t at) {
        report.partial_sum.emplace_back(at, sum);
        report.partial_sum_abs.emplace_back(at, sum_abs);
        report.partial_sum_sq.emplace_back(at, sum_sq);
        if (report.profile && at >= 2 && sum_sq != 0) {
            const double beta0 = report.profile->beta0.get_d();
            const double lx = std::log(static_cast<double>(at));
            report.normalized_sq.emplace_back(at, std::exp(log_abs(sum_sq) + std::log(lx) - beta0 * lx));
        }
    };
    for (const auto& pc : coeffs) {
        while (next < grid.size() && grid[next] < pc.p) {
            emit(grid[next++]);
        }
        sum += pc.value;
        sum_abs += abs(pc.value);
        sum_sq += pc.value * pc.value;
    }
    while (next < grid.size()) {
        emit(grid[next++]);
    }
    return report;
}

bool has_unique_eigenform(int m)
{
    return cusp_dimension(m) == 1;
}

DeligneResult deligne_check_series(int m, const QExpansion& series, std::uint64_t x)
{
    if (m < 12 || m % 2 != 0) {
        throw DomainError("deligne_check: weight must be even and >= 12");
    }
    DeligneResult result;
    const std::uint64_t limit = std::min<std::uint64_t>(x, series.precision());
    for (const auto p : primes_up_to(limit)) {
        const Rational& a = series[p];
        Integer bound;
        mpz_ui_pow_ui(bound.get_mpz_t(), p, static_cast<unsigned long>(m - 1));
        bound *= 4;
        ++result.primes_checked;
        if (a * a > bound) {
            result.passed = false;
            if (!result.first_violation) {
                result.first_violation = p;
            }
        }
        const double ratio = a == 0 ? 0.0
                                    : std::exp(log_abs(a) - std::log(2.0)
                                          - 0.5 * (m - 1) * std::log(static_cast<double>(p)));
        if (ratio > result.worst_ratio) {
            result.worst_ratio = ratio;
            result.worst_prime = p;
        }
    }
    return result;
}

DeligneResult deligne_check(int m, std::uint64_t x)
{
    if (!has_unique_eigenform(m)) {
        throw DomainError("deligne_check: weight " + std::to_string(m)
            + " does not have a one-dimensional cusp space");
    }
    return deligne_check_series(m, cusp_basis(m, x).front(), x);
}

} // namespace qprime
