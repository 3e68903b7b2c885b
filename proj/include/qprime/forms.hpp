#pragma once

// Level-one Eisenstein series, cusp form bases, the prime-vanishing H_k
// family and the canonical QuasiForm representation
//
//     F = c + sum alpha_{k,l} D^l G_k + sum gamma_{m,i,l} D^l S_{m,i}
//
// where S_{m,i} is the i-th element of the echelonized weight-m cusp basis.

#include <compare>
#include <cstddef>
#include <map>
#include <vector>

#include "qprime/qseries.hpp"

namespace qprime {

/// Sign of the Eisenstein constant term. `paper` uses +B_k/2k (so the
/// constant of G_4 is -1/240); `classical` uses -B_k/2k, which makes G_k a
/// genuine modular form for k >= 4.
enum class EisensteinConvention { paper, classical };

struct EisKey {
    int k;
    int l;
    auto operator<=>(const EisKey&) const = default;
};

struct CuspKey {
    int m;
    int i;
    int l;
    auto operator<=>(const CuspKey&) const = default;
};

/// dim M_k for level one (0 for odd or negative k).
int modular_dimension(int k);
/// dim S_k for level one.
int cusp_dimension(int k);

/// Sparse canonical representation; zero coefficients are never stored.
/// The constant is the weight-0 Eisenstein component; it only arises from
/// generator products under the `paper` convention or from constant input.
class QuasiForm {
public:
    QuasiForm() = default;

    static QuasiForm eisenstein(int k, int l = 0, const Rational& c = 1);
    static QuasiForm cusp_form(int m, int i, int l = 0, const Rational& c = 1);
    static QuasiForm constant_form(const Rational& c);

    const Rational& constant() const { return constant_; }
    const std::map<EisKey, Rational>& eis() const { return eis_; }
    const std::map<CuspKey, Rational>& cusp() const { return cusp_; }

    void add_constant(const Rational& c) { constant_ += c; }
    void add_eis(EisKey key, const Rational& c);
    void add_cusp(CuspKey key, const Rational& c);

    bool is_zero() const { return constant_ == 0 && eis_.empty() && cusp_.empty(); }
    bool has_cusp() const { return !cusp_.empty(); }
    bool is_eisenstein() const { return cusp_.empty(); }

    /// Largest weight k + 2l (resp. m + 2l) over stored terms; 0 if none.
    int max_weight() const;

    QuasiForm& operator+=(const QuasiForm& other);
    QuasiForm& operator-=(const QuasiForm& other);
    QuasiForm& operator*=(const Rational& scalar);

    friend bool operator==(const QuasiForm&, const QuasiForm&) = default;

private:
    Rational constant_ = 0;
    std::map<EisKey, Rational> eis_;
    std::map<CuspKey, Rational> cusp_;
};

QuasiForm operator+(QuasiForm a, const QuasiForm& b);
QuasiForm operator-(QuasiForm a, const QuasiForm& b);
QuasiForm operator*(QuasiForm a, const Rational& scalar);
QuasiForm operator*(const Rational& scalar, QuasiForm a);

/// D^order applied termwise; the constant is annihilated.
QuasiForm derivative(const QuasiForm& f, int order = 1);

struct Monomial {
    int a; // power of G_2
    int b; // power of G_4
    int c; // power of G_6
    int weight() const { return 2 * a + 4 * b + 6 * c; }
    auto operator<=>(const Monomial&) const = default;
};

/// sum coeff * G_2^a G_4^b G_6^c, zero coefficients dropped.
class GeneratorMonomialCombo {
public:
    GeneratorMonomialCombo() = default;
    static GeneratorMonomialCombo single(Monomial m, const Rational& c = 1);

    void add(Monomial m, const Rational& c);
    const std::map<Monomial, Rational>& terms() const { return terms_; }

    GeneratorMonomialCombo& operator+=(const GeneratorMonomialCombo& other);
    GeneratorMonomialCombo& operator*=(const Rational& scalar);
    friend GeneratorMonomialCombo operator*(const GeneratorMonomialCombo& a, const GeneratorMonomialCombo& b);

private:
    std::map<Monomial, Rational> terms_;
};

QExpansion eisenstein_G(int k, std::size_t precision, EisensteinConvention conv = EisensteinConvention::paper);

/// Normalized Eisenstein series E_k = 1 - (2k/B_k) sum sigma_{k-1}(n) q^n, k >= 4.
QExpansion eisenstein_E(int k, std::size_t precision);

/// q prod (1 - q^n)^24 via the cube of Euler's product (Jacobi's identity).
QExpansion delta(std::size_t precision);

/// Echelonized basis of S_m: element i has coefficient 1 at q^{i+1} and 0
/// at q^{j+1} for the other j < dim S_m. Results are memoized per weight.
std::vector<QExpansion> cusp_basis(int m, std::size_t precision);

QuasiForm hk_form(int k);
QExpansion hk(int k, std::size_t precision, EisensteinConvention conv = EisensteinConvention::paper);

QExpansion quasiform_expand(const QuasiForm& f, std::size_t precision,
    EisensteinConvention conv = EisensteinConvention::paper);

/// Direct product expansion of a generator combination.
QExpansion monomials_expand(const GeneratorMonomialCombo& g, std::size_t precision,
    EisensteinConvention conv = EisensteinConvention::paper);

/// Vectors spanning weight-w quasimodular forms, as canonical terms:
/// D^l G_{w-2l} (0 <= l <= w/2 - 2), D^{w/2-1} G_2 and D^l S_{w-2l,i}.
std::vector<QuasiForm> quasimodular_spanning_set(int weight);

/// Rank of the q-coefficient matrix of the classical weight-w spanning set
/// through `precision`.
std::size_t spanning_rank(int weight, std::size_t precision);

/// Unique QuasiForm with the same expansion as `g`. Solved weight by weight
/// against the classical spanning set using (#vectors + 10) coefficients,
/// then certified by re-expansion through max(n_guard, that bound).
/// Throws DomainError("inconsistent ...") if the certificate fails.
QuasiForm from_monomials(const GeneratorMonomialCombo& g, std::size_t n_guard,
    EisensteinConvention conv = EisensteinConvention::paper);

} // namespace qprime
