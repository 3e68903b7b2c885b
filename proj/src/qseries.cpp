#include "qprime/qseries.hpp"

#include <algorithm>
#include <utility>

namespace qprime {

QExpansion::QExpansion(std::size_t precision)
    : coeffs_(precision + 1)
{
}

QExpansion::QExpansion(std::vector<Rational> coeffs)
    : coeffs_(std::move(coeffs))
{
    if (coeffs_.empty()) {
        throw DomainError("q-expansion needs at least the constant coefficient");
    }
}

QExpansion QExpansion::constant(const Rational& c, std::size_t precision)
{
    QExpansion out(precision);
    out[0] = c;
    return out;
}

QExpansion QExpansion::from_integers(std::span<const Integer> coeffs)
{
    std::vector<Rational> rs(coeffs.begin(), coeffs.end());
    return QExpansion(std::move(rs));
}

bool QExpansion::is_zero() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

QExpansion QExpansion::truncated(std::size_t precision) const
{
    const std::size_t keep = std::min(precision, this->precision()) + 1;
    return QExpansion(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(keep)));
}

QExpansion& QExpansion::operator+=(const QExpansion& other)
{
    coeffs_.resize(std::min(coeffs_.size(), other.coeffs_.size()));
    for (std::size_t n = 0; n < coeffs_.size(); ++n) {
        coeffs_[n] += other.coeffs_[n];
    }
    return *this;
}

QExpansion& QExpansion::operator-=(const QExpansion& other)
{
    coeffs_.resize(std::min(coeffs_.size(), other.coeffs_.size()));
    for (std::size_t n = 0; n < coeffs_.size(); ++n) {
        coeffs_[n] -= other.coeffs_[n];
    }
    return *this;
}

QExpansion& QExpansion::operator*=(const Rational& scalar)
{
    for (auto& c : coeffs_) {
        c *= scalar;
    }
    return *this;
}

bool operator==(const QExpansion& a, const QExpansion& b)
{
    const std::size_t common = std::min(a.coeffs_.size(), b.coeffs_.size());
    return std::equal(a.coeffs_.begin(), a.coeffs_.begin() + static_cast<std::ptrdiff_t>(common), b.coeffs_.begin());
}

QExpansion operator+(QExpansion a, const QExpansion& b)
{
    a += b;
    return a;
}

QExpansion operator-(QExpansion a, const QExpansion& b)
{
    a -= b;
    return a;
}

QExpansion operator-(QExpansion a)
{
    a *= Rational(-1);
    return a;
}

QExpansion operator*(QExpansion a, const Rational& scalar)
{
    a *= scalar;
    return a;
}

QExpansion operator*(const Rational& scalar, QExpansion a)
{
    a *= scalar;
    return a;
}

QExpansion series_add(const QExpansion& a, const QExpansion& b)
{
    return a + b;
}

namespace {

struct IntegerSeries {
    std::vector<Integer> values;
    Integer denominator = 1;
    std::size_t max_bits = 0;
};

IntegerSeries clear_denominators(const QExpansion& a, std::size_t len)
{
    IntegerSeries out;
    for (std::size_t n = 0; n < len; ++n) {
        mpz_lcm(out.denominator.get_mpz_t(), out.denominator.get_mpz_t(), a[n].get_den_mpz_t());
    }
    out.values.resize(len);
    for (std::size_t n = 0; n < len; ++n) {
        out.values[n] = a[n].get_num() * (out.denominator / a[n].get_den());
        if (out.values[n] != 0) {
            out.max_bits = std::max(out.max_bits, mpz_sizeinbase(out.values[n].get_mpz_t(), 2));
        }
    }
    return out;
}

std::size_t bit_length(std::size_t v)
{
    std::size_t bits = 0;
    while (v != 0) {
        ++bits;
        v >>= 1;
    }
    return bits;
}

void mul_small(const IntegerSeries& a, const IntegerSeries& b, const std::vector<std::size_t>& support,
    std::vector<Integer>& out)
{
    const std::size_t len = out.size();
    std::vector<long> av(len);
    std::vector<long> bv(len);
    for (std::size_t i = 0; i < len; ++i) {
        av[i] = a.values[i].get_si();
        bv[i] = b.values[i].get_si();
    }
    parallel_chunks(len, [&](std::size_t begin, std::size_t end) {
        for (std::size_t n = begin; n < end; ++n) {
            __int128 acc = 0;
            for (const std::size_t i : support) {
                if (i > n) {
                    break;
                }
                acc += static_cast<__int128>(av[i]) * bv[n - i];
            }
            // Split the 128-bit accumulator into two 64-bit halves for GMP.
            const bool negative = acc < 0;
            const unsigned __int128 mag = negative ? -static_cast<unsigned __int128>(acc) : acc;
            Integer value = static_cast<unsigned long>(mag >> 64);
            value <<= 64;
            value += static_cast<unsigned long>(mag & ~0UL);
            out[n] = negative ? Integer(-value) : value;
        }
    });
}

void mul_big(const IntegerSeries& a, const IntegerSeries& b, const std::vector<std::size_t>& support,
    std::vector<Integer>& out)
{
    parallel_chunks(out.size(), [&](std::size_t begin, std::size_t end) {
        for (std::size_t n = begin; n < end; ++n) {
            mpz_ptr acc = out[n].get_mpz_t();
            for (const std::size_t i : support) {
                if (i > n) {
                    break;
                }
                mpz_addmul(acc, a.values[i].get_mpz_t(), b.values[n - i].get_mpz_t());
            }
        }
    });
}

} // namespace

QExpansion series_mul(const QExpansion& a, const QExpansion& b)
{
    const std::size_t len = std::min(a.precision(), b.precision()) + 1;
    IntegerSeries ia = clear_denominators(a, len);
    IntegerSeries ib = clear_denominators(b, len);

    std::vector<std::size_t> support_a;
    std::vector<std::size_t> support_b;
    for (std::size_t i = 0; i < len; ++i) {
        if (ia.values[i] != 0) {
            support_a.push_back(i);
        }
        if (ib.values[i] != 0) {
            support_b.push_back(i);
        }
    }
    // Iterate over the sparser factor.
    if (support_b.size() < support_a.size()) {
        std::swap(ia, ib);
        std::swap(support_a, support_b);
    }

    std::vector<Integer> product(len);
    const bool fits = ia.max_bits < 63 && ib.max_bits < 63
        && ia.max_bits + ib.max_bits + bit_length(support_a.size()) < 126;
    if (fits) {
        mul_small(ia, ib, support_a, product);
    } else {
        mul_big(ia, ib, support_a, product);
    }

    const Integer denominator = ia.denominator * ib.denominator;
    std::vector<Rational> coeffs(len);
    for (std::size_t n = 0; n < len; ++n) {
        coeffs[n] = make_rational(product[n], denominator);
    }
    return QExpansion(std::move(coeffs));
}

QExpansion operator*(const QExpansion& a, const QExpansion& b)
{
    return series_mul(a, b);
}

QExpansion series_pow(const QExpansion& a, unsigned e)
{
    QExpansion result = QExpansion::constant(1, a.precision());
    QExpansion base = a;
    while (e != 0) {
        if ((e & 1U) != 0) {
            result = series_mul(result, base);
        }
        e >>= 1U;
        if (e != 0) {
            base = series_mul(base, base);
        }
    }
    return result;
}

QExpansion series_D(const QExpansion& a, unsigned order)
{
    QExpansion out = a;
    if (order == 0) {
        return out;
    }
    for (std::size_t n = 0; n <= out.precision(); ++n) {
        Integer factor;
        mpz_ui_pow_ui(factor.get_mpz_t(), n, order);
        out[n] *= factor;
    }
    return out;
}

} // namespace qprime
