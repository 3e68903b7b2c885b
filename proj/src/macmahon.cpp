#include "qprime/macmahon.hpp"

#include <string>

namespace qprime {

MacMahonTable::MacMahonTable(int a_max, std::size_t n_max)
    : a_max_(a_max)
    , n_max_(n_max)
{
    if (a_max < 1 || n_max < 1) {
        throw DomainError("macmahon_table: a_max and N must be positive");
    }
    const std::size_t len = n_max + 1;
    // values_[j] holds the series for j distinct part sizes among 1..s.
    values_.assign(static_cast<std::size_t>(a_max) + 1, std::vector<Integer>(len));
    values_[0][0] = 1;
    std::vector<Integer> y(len);
    for (std::size_t s = 1; s <= n_max; ++s) {
        // Descending j so that values_[j - 1] still excludes size s.
        for (int j = a_max; j >= 1; --j) {
            const auto& x = values_[static_cast<std::size_t>(j) - 1];
            // y = x * q^s / (1 - q^s)^2, i.e. y[n] = x[n-s] + 2 y[n-s] - y[n-2s].
            bool any = false;
            for (std::size_t n = 0; n < len; ++n) {
                y[n] = 0;
                if (n < s) {
                    continue;
                }
                y[n] = x[n - s] + 2 * y[n - s];
                if (n >= 2 * s) {
                    y[n] -= y[n - 2 * s];
                }
                any = any || y[n] != 0;
            }
            if (!any) {
                continue;
            }
            auto& target = values_[static_cast<std::size_t>(j)];
            for (std::size_t n = s; n < len; ++n) {
                target[n] += y[n];
            }
        }
    }
}

const Integer& MacMahonTable::operator()(int a, std::size_t n) const
{
    if (a < 1 || a > a_max_ || n > n_max_) {
        throw DomainError("MacMahon table index out of range");
    }
    return values_[static_cast<std::size_t>(a)][n];
}

MacMahonTable macmahon_table(int a_max, std::size_t n_max)
{
    return MacMahonTable(a_max, n_max);
}

Rational MacMahonRelation::evaluate(std::size_t n, const MacMahonTable& table) const
{
    Rational total = 0;
    for (const auto& term : terms) {
        Rational p = 0;
        for (auto it = term.poly.rbegin(); it != term.poly.rend(); ++it) {
            p = p * n + *it;
        }
        total += p * table(term.a, n);
    }
    return total;
}

MacMahonRelation cvio_relation()
{
    return {{{1, {2, -3, 1}}, {2, {-8}}}};
}

IdentityCheck cvio_identity(std::size_t n, const MacMahonTable& table)
{
    if (table.a_max() < 2) {
        throw DomainError("cvio_identity needs a table with a_max >= 2");
    }
    if (n < 1 || n > table.n_max()) {
        throw DomainError("cvio_identity: n = " + std::to_string(n) + " outside the table");
    }
    IdentityCheck out;
    const Integer nn = n;
    out.lhs = (nn * nn - 3 * nn + 2) * table(1, n);
    out.rhs = 8 * table(2, n);
    out.holds = out.lhs == out.rhs;
    out.is_prime = is_prime(n);
    return out;
}

void write_csv(std::ostream& out, const MacMahonTable& table)
{
    const bool identity = table.a_max() >= 2;
    out << "n";
    for (int a = 1; a <= table.a_max(); ++a) {
        out << ",M_" << a;
    }
    if (identity) {
        out << ",identity_holds,is_prime";
    }
    out << '\n';
    for (std::size_t n = 1; n <= table.n_max(); ++n) {
        out << n;
        for (int a = 1; a <= table.a_max(); ++a) {
            out << ',' << table(a, n).get_str();
        }
        if (identity) {
            const auto check = cvio_identity(n, table);
            out << ',' << (check.holds ? 1 : 0) << ',' << (check.is_prime ? 1 : 0);
        }
        out << '\n';
    }
}

} // namespace qprime
