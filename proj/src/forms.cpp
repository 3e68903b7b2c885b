#include "qprime/forms.hpp"

#include <algorithm>
#include <mutex>
#include <string>
#include <utility>

#include "qprime/linalg.hpp"

namespace qprime {

int modular_dimension(int k)
{
    if (k < 0 || k % 2 != 0 || k == 2) {
        return 0;
    }
    return k % 12 == 2 ? k / 12 : k / 12 + 1;
}

int cusp_dimension(int k)
{
    return k < 12 ? 0 : modular_dimension(k) - 1;
}

// QuasiForm -------------------------------------------------------------------

QuasiForm QuasiForm::eisenstein(int k, int l, const Rational& c)
{
    QuasiForm f;
    f.add_eis({k, l}, c);
    return f;
}

QuasiForm QuasiForm::cusp_form(int m, int i, int l, const Rational& c)
{
    QuasiForm f;
    f.add_cusp({m, i, l}, c);
    return f;
}

QuasiForm QuasiForm::constant_form(const Rational& c)
{
    QuasiForm f;
    f.add_constant(c);
    return f;
}

void QuasiForm::add_eis(EisKey key, const Rational& c)
{
    if (key.k < 2 || key.k % 2 != 0 || key.l < 0) {
        throw DomainError("invalid Eisenstein term D^" + std::to_string(key.l) + " G_" + std::to_string(key.k));
    }
    if (c == 0) {
        return;
    }
    auto [it, inserted] = eis_.try_emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) {
            eis_.erase(it);
        }
    }
}

void QuasiForm::add_cusp(CuspKey key, const Rational& c)
{
    if (key.m % 2 != 0 || key.l < 0 || key.i < 0 || key.i >= cusp_dimension(key.m)) {
        throw DomainError("invalid cusp term D^" + std::to_string(key.l) + " S_" + std::to_string(key.m) + "."
            + std::to_string(key.i));
    }
    if (c == 0) {
        return;
    }
    auto [it, inserted] = cusp_.try_emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) {
            cusp_.erase(it);
        }
    }
}

int QuasiForm::max_weight() const
{
    int w = 0;
    for (const auto& [key, c] : eis_) {
        w = std::max(w, key.k + 2 * key.l);
    }
    for (const auto& [key, c] : cusp_) {
        w = std::max(w, key.m + 2 * key.l);
    }
    return w;
}

QuasiForm& QuasiForm::operator+=(const QuasiForm& other)
{
    constant_ += other.constant_;
    for (const auto& [key, c] : other.eis_) {
        add_eis(key, c);
    }
    for (const auto& [key, c] : other.cusp_) {
        add_cusp(key, c);
    }
    return *this;
}

QuasiForm& QuasiForm::operator-=(const QuasiForm& other)
{
    return *this += other * Rational(-1);
}

QuasiForm& QuasiForm::operator*=(const Rational& scalar)
{
    if (scalar == 0) {
        *this = QuasiForm();
        return *this;
    }
    constant_ *= scalar;
    for (auto& [key, c] : eis_) {
        c *= scalar;
    }
    for (auto& [key, c] : cusp_) {
        c *= scalar;
    }
    return *this;
}

QuasiForm operator+(QuasiForm a, const QuasiForm& b)
{
    a += b;
    return a;
}

QuasiForm operator-(QuasiForm a, const QuasiForm& b)
{
    a -= b;
    return a;
}

QuasiForm operator*(QuasiForm a, const Rational& scalar)
{
    a *= scalar;
    return a;
}

QuasiForm operator*(const Rational& scalar, QuasiForm a)
{
    a *= scalar;
    return a;
}

QuasiForm derivative(const QuasiForm& f, int order)
{
    if (order < 0) {
        throw DomainError("negative derivative order");
    }
    if (order == 0) {
        return f;
    }
    QuasiForm out;
    for (const auto& [key, c] : f.eis()) {
        out.add_eis({key.k, key.l + order}, c);
    }
    for (const auto& [key, c] : f.cusp()) {
        out.add_cusp({key.m, key.i, key.l + order}, c);
    }
    return out;
}

// GeneratorMonomialCombo ------------------------------------------------------

GeneratorMonomialCombo GeneratorMonomialCombo::single(Monomial m, const Rational& c)
{
    GeneratorMonomialCombo g;
    g.add(m, c);
    return g;
}

void GeneratorMonomialCombo::add(Monomial m, const Rational& c)
{
    if (m.a < 0 || m.b < 0 || m.c < 0) {
        throw DomainError("negative generator exponent");
    }
    if (c == 0) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) {
            terms_.erase(it);
        }
    }
}

GeneratorMonomialCombo& GeneratorMonomialCombo::operator+=(const GeneratorMonomialCombo& other)
{
    for (const auto& [m, c] : other.terms_) {
        add(m, c);
    }
    return *this;
}

GeneratorMonomialCombo& GeneratorMonomialCombo::operator*=(const Rational& scalar)
{
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_) {
        c *= scalar;
    }
    return *this;
}

GeneratorMonomialCombo operator*(const GeneratorMonomialCombo& a, const GeneratorMonomialCombo& b)
{
    GeneratorMonomialCombo out;
    for (const auto& [ma, ca] : a.terms()) {
        for (const auto& [mb, cb] : b.terms()) {
            out.add({ma.a + mb.a, ma.b + mb.b, ma.c + mb.c}, ca * cb);
        }
    }
    return out;
}

// Expansions ------------------------------------------------------------------

namespace {

void require_even_weight(int k, int minimum, const char* what)
{
    if (k < minimum || k % 2 != 0) {
        throw DomainError(std::string(what) + ": weight " + std::to_string(k) + " must be even and >= "
            + std::to_string(minimum));
    }
}

Rational eisenstein_constant(int k, EisensteinConvention conv)
{
    const Rational c = bernoulli(k) / (2 * k);
    return conv == EisensteinConvention::paper ? c : Rational(-c);
}

// Jacobi: prod (1 - q^n)^3 = sum_{j >= 0} (-1)^j (2j + 1) q^{j(j+1)/2}.
QExpansion euler_cube(std::size_t precision)
{
    QExpansion out(precision);
    for (std::size_t j = 0; j * (j + 1) / 2 <= precision; ++j) {
        const long v = static_cast<long>(2 * j + 1);
        out[j * (j + 1) / 2] = (j % 2 == 0) ? v : -v;
    }
    return out;
}

class CuspCache {
public:
    static CuspCache& instance()
    {
        static CuspCache cache;
        return cache;
    }

    template <typename Build>
    std::vector<QExpansion> get(int key, std::size_t precision, Build build)
    {
        {
            std::lock_guard lock(mutex_);
            if (auto it = entries_.find(key); it != entries_.end() && it->second.precision >= precision) {
                return truncate(it->second.series, precision);
            }
        }
        std::vector<QExpansion> fresh = build();
        std::lock_guard lock(mutex_);
        auto& slot = entries_[key];
        if (slot.series.empty() || slot.precision < precision) {
            slot.precision = precision;
            slot.series = fresh;
        }
        return truncate(fresh, precision);
    }

private:
    struct Entry {
        std::size_t precision = 0;
        std::vector<QExpansion> series;
    };

    static std::vector<QExpansion> truncate(const std::vector<QExpansion>& series, std::size_t precision)
    {
        std::vector<QExpansion> out;
        out.reserve(series.size());
        for (const auto& s : series) {
            out.push_back(s.truncated(precision));
        }
        return out;
    }

    std::mutex mutex_;
    std::map<int, Entry> entries_;
};

constexpr int delta_cache_key = -12;

} // namespace

QExpansion eisenstein_G(int k, std::size_t precision, EisensteinConvention conv)
{
    require_even_weight(k, 2, "eisenstein_G");
    const auto sigmas = sigma_table(static_cast<unsigned>(k - 1), precision);
    QExpansion out(precision);
    out[0] = eisenstein_constant(k, conv);
    for (std::size_t n = 1; n <= precision; ++n) {
        out[n] = sigmas[n];
    }
    return out;
}

QExpansion eisenstein_E(int k, std::size_t precision)
{
    require_even_weight(k, 4, "eisenstein_E");
    const Rational scale = Rational(-2 * k) / bernoulli(k);
    const auto sigmas = sigma_table(static_cast<unsigned>(k - 1), precision);
    QExpansion out(precision);
    out[0] = 1;
    for (std::size_t n = 1; n <= precision; ++n) {
        out[n] = scale * sigmas[n];
    }
    return out;
}

QExpansion delta(std::size_t precision)
{
    if (precision < 1) {
        throw DomainError("delta: precision must be at least 1");
    }
    auto cached = CuspCache::instance().get(delta_cache_key, precision, [precision] {
        const QExpansion cube = euler_cube(precision - 1);
        QExpansion eta24 = cube;
        for (int i = 1; i < 8; ++i) {
            eta24 = series_mul(eta24, cube);
        }
        QExpansion out(precision);
        for (std::size_t n = 1; n <= precision; ++n) {
            out[n] = eta24[n - 1];
        }
        return std::vector<QExpansion> {out};
    });
    return cached.front();
}

std::vector<QExpansion> cusp_basis(int m, std::size_t precision)
{
    if (m % 2 != 0) {
        throw DomainError("cusp_basis: weight must be even");
    }
    const int dim = cusp_dimension(m);
    if (dim == 0) {
        return {};
    }
    const std::size_t working = std::max<std::size_t>(precision, static_cast<std::size_t>(dim));
    auto basis = CuspCache::instance().get(m, working, [m, dim, working] {
        const int w = m - 12;
        const QExpansion d = delta(working);
        std::vector<QExpansion> rows;
        if (w == 0) {
            rows.push_back(d);
        } else if (modular_dimension(w) == 1) {
            // M_w is spanned by its unique monomial, which equals E_w.
            rows.push_back(series_mul(d, eisenstein_E(w, working)));
        } else {
            const QExpansion e4 = eisenstein_E(4, working);
            const QExpansion e6 = eisenstein_E(6, working);
            for (int b = w / 6; b >= 0; --b) {
                if ((w - 6 * b) % 4 != 0) {
                    continue;
                }
                const int a = (w - 6 * b) / 4;
                rows.push_back(series_mul(d, series_mul(series_pow(e4, static_cast<unsigned>(a)),
                                                 series_pow(e6, static_cast<unsigned>(b)))));
            }
        }
        // Gauss-Jordan on the coefficients of q^1..q^dim.
        for (int col = 0; col < dim; ++col) {
            const std::size_t n = static_cast<std::size_t>(col) + 1;
            int pivot = col;
            while (pivot < dim && rows[pivot][n] == 0) {
                ++pivot;
            }
            if (pivot == dim) {
                throw DomainError("cusp_basis: singular leading block in weight " + std::to_string(m));
            }
            std::swap(rows[pivot], rows[col]);
            rows[col] *= 1 / Rational(rows[col][n]);
            for (int r = 0; r < dim; ++r) {
                if (r != col && rows[r][n] != 0) {
                    rows[r] -= rows[col] * Rational(rows[r][n]);
                }
            }
        }
        return rows;
    });
    for (auto& element : basis) {
        element = element.truncated(precision);
    }
    return basis;
}

QuasiForm hk_form(int k)
{
    require_even_weight(k, 6, "hk");
    QuasiForm f;
    if (k == 6) {
        f.add_eis({2, 2}, 1);
        f.add_eis({2, 1}, -1);
        f.add_eis({2, 0}, 1);
        f.add_eis({4, 0}, -1);
        return f * Rational(1, 6);
    }
    f.add_eis({k - 6, 2}, -1);
    f.add_eis({k - 4, 2}, 1);
    f.add_eis({k - 4, 0}, 1);
    f.add_eis({k - 2, 0}, -1);
    return f * Rational(1, 24);
}

QExpansion hk(int k, std::size_t precision, EisensteinConvention conv)
{
    return quasiform_expand(hk_form(k), precision, conv);
}

QExpansion quasiform_expand(const QuasiForm& f, std::size_t precision, EisensteinConvention conv)
{
    // Eisenstein part: c(n) = sum alpha_{k,l} n^l sigma_{k-1}(n), evaluated
    // over integers after clearing a common denominator.
    Integer denominator = 1;
    for (const auto& [key, c] : f.eis()) {
        mpz_lcm(denominator.get_mpz_t(), denominator.get_mpz_t(), c.get_den_mpz_t());
    }
    std::map<int, std::vector<Integer>> polys; // k -> integer coefficients in n
    Rational constant = f.constant();
    for (const auto& [key, c] : f.eis()) {
        auto& poly = polys[key.k];
        if (poly.size() <= static_cast<std::size_t>(key.l)) {
            poly.resize(static_cast<std::size_t>(key.l) + 1);
        }
        poly[static_cast<std::size_t>(key.l)] += c.get_num() * (denominator / c.get_den());
        if (key.l == 0) {
            constant += c * eisenstein_constant(key.k, conv);
        }
    }
    std::vector<Integer> scaled(precision + 1);
    for (const auto& [k, poly] : polys) {
        const auto sigmas = sigma_table(static_cast<unsigned>(k - 1), precision);
        for (std::size_t n = 1; n <= precision; ++n) {
            Integer value = 0;
            for (auto it = poly.rbegin(); it != poly.rend(); ++it) {
                value = value * n + *it;
            }
            scaled[n] += value * sigmas[n];
        }
    }
    QExpansion out(precision);
    out[0] = constant;
    for (std::size_t n = 1; n <= precision; ++n) {
        out[n] = make_rational(scaled[n], denominator);
    }

    // Cusp part, grouped by basis element.
    std::map<std::pair<int, int>, std::vector<Rational>> cusp_polys;
    for (const auto& [key, c] : f.cusp()) {
        auto& poly = cusp_polys[{key.m, key.i}];
        if (poly.size() <= static_cast<std::size_t>(key.l)) {
            poly.resize(static_cast<std::size_t>(key.l) + 1);
        }
        poly[static_cast<std::size_t>(key.l)] = c;
    }
    std::map<int, std::vector<QExpansion>> bases;
    for (const auto& [mi, poly] : cusp_polys) {
        auto [it, inserted] = bases.try_emplace(mi.first);
        if (inserted) {
            it->second = cusp_basis(mi.first, precision);
        }
        const QExpansion& element = it->second[static_cast<std::size_t>(mi.second)];
        for (std::size_t n = 1; n <= precision; ++n) {
            if (element[n] == 0) {
                continue;
            }
            Rational value = 0;
            for (auto p = poly.rbegin(); p != poly.rend(); ++p) {
                value = value * n + *p;
            }
            out[n] += value * element[n];
        }
    }
    return out;
}

namespace {

class GeneratorPowers {
public:
    GeneratorPowers(std::size_t precision, EisensteinConvention conv)
        : base_ {eisenstein_G(2, precision, conv), eisenstein_G(4, precision, conv), eisenstein_G(6, precision, conv)}
        , precision_(precision)
    {
    }

    const QExpansion& power(int generator, int e)
    {
        auto& list = powers_[generator];
        if (list.empty()) {
            list.push_back(QExpansion::constant(1, precision_));
        }
        while (list.size() <= static_cast<std::size_t>(e)) {
            list.push_back(series_mul(list.back(), base_[generator]));
        }
        return list[static_cast<std::size_t>(e)];
    }

    QExpansion monomial(const Monomial& m)
    {
        return series_mul(series_mul(power(0, m.a), power(1, m.b)), power(2, m.c));
    }

private:
    QExpansion base_[3];
    std::vector<QExpansion> powers_[3];
    std::size_t precision_;
};

Integer binomial(int n, int k)
{
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

// Rewrites a combination of paper-convention generators G_k = G_k^cl + B_k/k
// in terms of classical (modular) generators.
std::map<Monomial, Rational> to_classical_generators(const GeneratorMonomialCombo& g, EisensteinConvention conv)
{
    if (conv == EisensteinConvention::classical) {
        return g.terms();
    }
    const Rational shift[3] = {bernoulli(2) / 2, bernoulli(4) / 4, bernoulli(6) / 6};
    GeneratorMonomialCombo out;
    for (const auto& [m, c] : g.terms()) {
        const int exps[3] = {m.a, m.b, m.c};
        std::vector<std::pair<Monomial, Rational>> partial {{Monomial {0, 0, 0}, c}};
        for (int gen = 0; gen < 3; ++gen) {
            std::vector<std::pair<Monomial, Rational>> next;
            for (const auto& [pm, pc] : partial) {
                Rational shift_power = 1;
                for (int drop = 0; drop <= exps[gen]; ++drop) {
                    Monomial nm = pm;
                    const int keep = exps[gen] - drop;
                    (gen == 0 ? nm.a : gen == 1 ? nm.b : nm.c) = keep;
                    next.emplace_back(nm, pc * binomial(exps[gen], keep) * shift_power);
                    shift_power *= shift[gen];
                }
            }
            partial = std::move(next);
        }
        for (const auto& [pm, pc] : partial) {
            out.add(pm, pc);
        }
    }
    return out.terms();
}

} // namespace

QExpansion monomials_expand(const GeneratorMonomialCombo& g, std::size_t precision, EisensteinConvention conv)
{
    GeneratorPowers powers(precision, conv);
    QExpansion out(precision);
    for (const auto& [m, c] : g.terms()) {
        out += powers.monomial(m) * c;
    }
    return out;
}

std::vector<QuasiForm> quasimodular_spanning_set(int weight)
{
    if (weight < 2 || weight % 2 != 0) {
        throw DomainError("spanning set needs an even weight >= 2");
    }
    std::vector<QuasiForm> out;
    for (int l = 0; l <= weight / 2 - 2; ++l) {
        out.push_back(QuasiForm::eisenstein(weight - 2 * l, l));
    }
    out.push_back(QuasiForm::eisenstein(2, weight / 2 - 1));
    for (int l = 0; weight - 2 * l >= 12; ++l) {
        const int m = weight - 2 * l;
        for (int i = 0; i < cusp_dimension(m); ++i) {
            out.push_back(QuasiForm::cusp_form(m, i, l));
        }
    }
    return out;
}

namespace {

RationalMatrix spanning_matrix(const std::vector<QuasiForm>& span, std::size_t precision)
{
    RationalMatrix a(precision + 1, span.size());
    for (std::size_t col = 0; col < span.size(); ++col) {
        const QExpansion e = quasiform_expand(span[col], precision, EisensteinConvention::classical);
        for (std::size_t n = 0; n <= precision; ++n) {
            a(n, col) = e[n];
        }
    }
    return a;
}

} // namespace

std::size_t spanning_rank(int weight, std::size_t precision)
{
    return rank(spanning_matrix(quasimodular_spanning_set(weight), precision));
}

QuasiForm from_monomials(const GeneratorMonomialCombo& g, std::size_t n_guard, EisensteinConvention conv)
{
    std::map<int, GeneratorMonomialCombo> by_weight;
    for (const auto& [m, c] : to_classical_generators(g, conv)) {
        by_weight[m.weight()].add(m, c);
    }

    QuasiForm result;
    std::size_t certificate = n_guard;
    for (const auto& [weight, part] : by_weight) {
        if (weight == 0) {
            result.add_constant(part.terms().begin()->second);
            continue;
        }
        const auto span = quasimodular_spanning_set(weight);
        const std::size_t precision = span.size() + 10;
        certificate = std::max(certificate, precision);
        const RationalMatrix a = spanning_matrix(span, precision);
        const QExpansion target = monomials_expand(part, precision, EisensteinConvention::classical);
        auto solution = solve(a, target.coeffs());
        if (!solution) {
            throw DomainError("inconsistent: weight " + std::to_string(weight)
                + " component is not in the span of its spanning set at precision " + std::to_string(precision));
        }
        for (std::size_t col = 0; col < span.size(); ++col) {
            result += span[col] * (*solution)[col];
        }
    }

    if (conv == EisensteinConvention::paper) {
        // G_k^classical = G_k^paper - B_k/k on every undifferentiated term.
        Rational shift = 0;
        for (const auto& [key, c] : result.eis()) {
            if (key.l == 0) {
                shift -= c * bernoulli(key.k) / key.k;
            }
        }
        result.add_constant(shift);
    }

    if (quasiform_expand(result, certificate, conv) != monomials_expand(g, certificate, conv)) {
        throw DomainError("inconsistent: re-expansion differs from the generator product through precision "
            + std::to_string(certificate));
    }
    return result;
}

} // namespace qprime
