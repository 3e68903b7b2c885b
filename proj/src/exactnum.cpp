#include "qprime/exactnum.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <thread>

namespace qprime {

Rational make_rational(const Integer& num, const Integer& den)
{
    if (den == 0) {
        throw DomainError("rational with zero denominator");
    }
    Rational r(num, den);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r)
{
    return r.get_str();
}

std::string to_string(const Integer& z)
{
    return z.get_str();
}

namespace {

bool all_digits(std::string_view s)
{
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

} // namespace

Rational parse_rational(std::string_view text)
{
    std::string_view num = text;
    std::string_view den = "1";
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
    }
    std::string_view digits = num;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
        digits.remove_prefix(1);
    }
    if (!all_digits(digits) || !all_digits(den)) {
        throw DomainError("malformed rational '" + std::string(text) + "'");
    }
    std::string n(num);
    if (n.front() == '+') {
        n.erase(0, 1);
    }
    return make_rational(Integer(n), Integer(std::string(den)));
}

int sign(const Rational& r)
{
    return sgn(r);
}

Rational bernoulli(int k)
{
    if (k < 0) {
        throw DomainError("bernoulli: negative index");
    }
    if (k == 1) {
        return Rational(-1, 2);
    }
    if (k % 2 != 0) {
        throw DomainError("bernoulli: odd index " + std::to_string(k) + " > 1");
    }
    // sum_{j=0}^{m} C(m+1, j) B_j = 0, solved for B_m.
    std::vector<Rational> b(static_cast<std::size_t>(k) + 1);
    b[0] = 1;
    for (int m = 1; m <= k; ++m) {
        Rational acc = 0;
        Integer binom = 1; // C(m+1, j)
        for (int j = 0; j < m; ++j) {
            acc += binom * b[j];
            binom = binom * (m + 1 - j) / (j + 1);
        }
        b[m] = -acc / (m + 1);
    }
    return b[k];
}

Integer sigma(unsigned r, std::uint64_t n)
{
    if (n == 0) {
        throw DomainError("sigma: n must be positive");
    }
    Integer result = 1;
    std::uint64_t rest = n;
    for (std::uint64_t p = 2; p * p <= rest; ++p) {
        if (rest % p != 0) {
            continue;
        }
        Integer pr;
        mpz_ui_pow_ui(pr.get_mpz_t(), p, r);
        Integer term = 1;
        Integer power = 1;
        while (rest % p == 0) {
            rest /= p;
            power *= pr;
            term += power;
        }
        result *= term;
    }
    if (rest > 1) {
        Integer pr;
        mpz_ui_pow_ui(pr.get_mpz_t(), rest, r);
        result *= pr + 1;
    }
    return result;
}

std::vector<std::uint32_t> smallest_prime_factors(std::size_t limit)
{
    std::vector<std::uint32_t> spf(limit + 1, 0);
    for (std::size_t i = 2; i <= limit; ++i) {
        if (spf[i] != 0) {
            continue;
        }
        for (std::size_t j = i; j <= limit; j += i) {
            if (spf[j] == 0) {
                spf[j] = static_cast<std::uint32_t>(i);
            }
        }
    }
    return spf;
}

std::vector<Integer> sigma_table(unsigned r, std::size_t limit)
{
    std::vector<Integer> table(limit + 1);
    if (limit == 0) {
        return table;
    }
    table[1] = 1;
    const auto spf = smallest_prime_factors(limit);
    // prime_part[n] is the full power of spf[n] dividing n.
    std::vector<std::uint64_t> prime_part(limit + 1, 1);
    for (std::size_t n = 2; n <= limit; ++n) {
        const std::uint64_t p = spf[n];
        const std::size_t below = n / p;
        prime_part[n] = (below % p == 0) ? prime_part[below] * p : p;
        if (prime_part[n] == n) {
            Integer power;
            mpz_ui_pow_ui(power.get_mpz_t(), n, r);
            table[n] = table[below] + power;
        } else {
            table[n] = table[n / prime_part[n]] * table[prime_part[n]];
        }
    }
    return table;
}

PrimeList::PrimeList(std::uint64_t bound)
    : bound_(bound)
{
    if (bound < 2) {
        return;
    }
    std::vector<bool> composite(bound + 1, false);
    for (std::uint64_t i = 2; i <= bound; ++i) {
        if (composite[i]) {
            continue;
        }
        primes_.push_back(i);
        for (std::uint64_t j = i * i; j <= bound; j += i) {
            composite[j] = true;
        }
    }
}

PrimeList primes_up_to(std::uint64_t x)
{
    return PrimeList(x);
}

std::vector<std::uint64_t> first_primes(std::size_t count)
{
    std::uint64_t bound = 16;
    while (true) {
        PrimeList list(bound);
        if (list.size() >= count) {
            return {list.begin(), list.begin() + static_cast<std::ptrdiff_t>(count)};
        }
        bound *= 2;
    }
}

bool is_prime(std::uint64_t n)
{
    if (n < 2) {
        return false;
    }
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            return false;
        }
    }
    return true;
}

unsigned worker_count()
{
    if (const char* env = std::getenv("QPRIME_THREADS")) {
        const long requested = std::strtol(env, nullptr, 10);
        if (requested > 0) {
            return static_cast<unsigned>(requested);
        }
    }
    return std::max(1U, std::thread::hardware_concurrency());
}

void parallel_chunks(std::size_t n, const std::function<void(std::size_t, std::size_t)>& body)
{
    const std::size_t workers = std::min<std::size_t>(worker_count(), std::max<std::size_t>(n / 256, 1));
    if (workers <= 1) {
        body(0, n);
        return;
    }
    std::vector<std::thread> pool;
    const std::size_t step = (n + workers - 1) / workers;
    for (std::size_t begin = 0; begin < n; begin += step) {
        pool.emplace_back(body, begin, std::min(n, begin + step));
    }
    for (auto& t : pool) {
        t.join();
    }
}

} // namespace qprime
