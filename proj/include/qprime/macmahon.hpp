#pragma once

// MacMahon's weighted partition series
//
//     U_a(q) = sum_{0 < s_1 < ... < s_a} prod_i q^{s_i} / (1 - q^{s_i})^2
//            = sum_n M_a(n) q^n,
//
// where M_a(n) counts partitions of n into exactly a distinct part sizes,
// weighted by the product of the multiplicities.

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <vector>

#include "qprime/exactnum.hpp"

namespace qprime {

class MacMahonTable {
public:
    MacMahonTable(int a_max, std::size_t n_max);

    int a_max() const { return a_max_; }
    std::size_t n_max() const { return n_max_; }

    /// M_a(n) for 1 <= a <= a_max and 0 <= n <= n_max.
    const Integer& operator()(int a, std::size_t n) const;

private:
    int a_max_;
    std::size_t n_max_;
    std::vector<std::vector<Integer>> values_; // values_[a][n]
};

MacMahonTable macmahon_table(int a_max, std::size_t n_max);

/// sum_a P_a(n) M_a(n) with P_a polynomials over Q in n.
struct MacMahonRelation {
    struct Term {
        int a;
        std::vector<Rational> poly; // coefficients of n^0, n^1, ...
    };
    std::vector<Term> terms;

    Rational evaluate(std::size_t n, const MacMahonTable& table) const;
};

/// (n^2 - 3n + 2) M_1(n) - 8 M_2(n).
MacMahonRelation cvio_relation();

struct IdentityCheck {
    Integer lhs;
    Integer rhs;
    bool holds = false;
    bool is_prime = false;
};

/// (n^2 - 3n + 2) M_1(n) == 8 M_2(n), together with the primality of n.
IdentityCheck cvio_identity(std::size_t n, const MacMahonTable& table);

/// Rows "n,M_1,...,M_amax[,identity]" for 1 <= n <= n_max.
void write_csv(std::ostream& out, const MacMahonTable& table);

} // namespace qprime
