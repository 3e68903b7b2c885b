#include "qprime/serialize.hpp"

namespace qprime {

Json to_json(const Rational& r)
{
    return to_string(r);
}

Rational rational_from_json(const Json& j)
{
    if (j.is_string()) {
        return parse_rational(j.get<std::string>());
    }
    if (j.is_number_integer()) {
        return Rational(Integer(std::to_string(j.get<long long>())));
    }
    throw DomainError("expected a rational string, got " + j.dump());
}

Json to_json(const QExpansion& e)
{
    Json coeffs = Json::array();
    for (const auto& c : e.coeffs()) {
        coeffs.push_back(to_string(c));
    }
    return Json {{"precision", e.precision()}, {"coeffs", std::move(coeffs)}};
}

QExpansion expansion_from_json(const Json& j)
{
    const auto precision = j.at("precision").get<std::size_t>();
    const auto& coeffs = j.at("coeffs");
    if (!coeffs.is_array() || coeffs.size() != precision + 1) {
        throw DomainError("QExpansion JSON: expected precision + 1 coefficients");
    }
    std::vector<Rational> values;
    values.reserve(coeffs.size());
    for (const auto& c : coeffs) {
        values.push_back(rational_from_json(c));
    }
    return QExpansion(std::move(values));
}

Json to_json(const QuasiForm& f)
{
    Json eis = Json::array();
    for (const auto& [key, c] : f.eis()) {
        eis.push_back(Json::array({key.k, key.l, to_string(c)}));
    }
    Json cusp = Json::array();
    for (const auto& [key, c] : f.cusp()) {
        cusp.push_back(Json::array({key.m, key.i, key.l, to_string(c)}));
    }
    Json out {{"eis", std::move(eis)}, {"cusp", std::move(cusp)}};
    if (f.constant() != 0) {
        out["const"] = to_string(f.constant());
    }
    return out;
}

QuasiForm quasiform_from_json(const Json& j)
{
    QuasiForm f;
    if (j.contains("eis")) {
        for (const auto& t : j.at("eis")) {
            if (!t.is_array() || t.size() != 3) {
                throw DomainError("QuasiForm JSON: eis entries are [k, l, \"p/q\"]");
            }
            f.add_eis({t[0].get<int>(), t[1].get<int>()}, rational_from_json(t[2]));
        }
    }
    if (j.contains("cusp")) {
        for (const auto& t : j.at("cusp")) {
            if (!t.is_array() || t.size() != 4) {
                throw DomainError("QuasiForm JSON: cusp entries are [m, i, l, \"p/q\"]");
            }
            f.add_cusp({t[0].get<int>(), t[1].get<int>(), t[2].get<int>()}, rational_from_json(t[3]));
        }
    }
    if (j.contains("const")) {
        f.add_constant(rational_from_json(j.at("const")));
    }
    return f;
}

Json to_json(const DecompositionResult& d)
{
    return Json {{"eis_part", to_json(d.eis_part)}, {"cusp_part", to_json(d.cusp_part)},
        {"certificate_precision", d.certificate_precision}};
}

DecompositionResult decomposition_from_json(const Json& j)
{
    DecompositionResult d;
    d.eis_part = quasiform_from_json(j.at("eis_part"));
    d.cusp_part = quasiform_from_json(j.at("cusp_part"));
    d.certificate_precision = j.at("certificate_precision").get<std::size_t>();
    return d;
}

Json to_json(const PrimePolynomial& p)
{
    Json betas = Json::array();
    for (const auto& b : p.betas) {
        betas.push_back(to_string(b));
    }
    return Json {{"betas", std::move(betas)}, {"degree_bound", p.degree_bound}, {"is_zero", p.is_zero()}};
}

Json to_json(const FiniteCheckVerdict& v)
{
    Json out {{"verdict", to_string(v.kind)}, {"degree_bound", v.degree_bound}, {"needed", v.needed},
        {"display_rows", v.display_rows}, {"vanishing_found", v.vanishing_found}};
    if (v.kind == FiniteCheckVerdict::Kind::not_all_primes) {
        out["witness"] = {{"p", v.witness_prime}, {"value", to_string(v.witness_value)}};
    }
    return out;
}

Json to_json(const OmegaReport& r)
{
    Json violations = Json::array();
    for (const auto& v : r.violations) {
        violations.push_back({{"n", v.n}, {"value", to_string(v.value)}, {"reason", v.reason}});
    }
    return Json {{"range_checked", r.range_checked}, {"include_small", r.include_small},
        {"nonneg_ok", r.nonneg_ok}, {"zero_set_equals_primes", r.zero_set_equals_primes},
        {"passed", r.passed()}, {"total_violations", r.total_violations}, {"violations", std::move(violations)}};
}

Json to_json(const OmegaTildeVerdict& v)
{
    Json out {{"verdict", v.in_omega_tilde ? "InOmegaTilde" : "Not"}};
    Json witnesses = Json::array();
    if (v.cusp_witness) {
        witnesses.push_back({{"kind", "cusp"}, {"m", v.cusp_witness->m}, {"i", v.cusp_witness->i},
            {"l", v.cusp_witness->l}, {"coefficient", to_string(v.cusp_witness_coefficient)}});
    }
    if (v.prime_witness) {
        witnesses.push_back(
            {{"kind", "prime"}, {"p", *v.prime_witness}, {"value", to_string(v.prime_witness_value)}});
    }
    if (!v.in_omega_tilde) {
        out["witnesses"] = std::move(witnesses);
        out["primes_searched"] = v.primes_searched;
    }
    return out;
}

Json to_json(const ExponentProfile& p)
{
    Json terms = Json::array();
    for (const auto& t : p.terms) {
        terms.push_back({{"weight", t.weight}, {"basis_index", t.basis_index}, {"derivative", t.derivative},
            {"leading", to_string(t.leading)}, {"alpha", to_string(t.alpha)}, {"beta", to_string(t.beta)}});
    }
    return Json {{"terms", std::move(terms)}, {"alpha0", to_string(p.alpha0)}, {"beta0", to_string(p.beta0)},
        {"max_set", p.max_set}, {"eigenform_basis", p.eigenform_basis}};
}

Json to_json(const SignStatsReport& r)
{
    auto exact = [](const std::vector<std::pair<std::uint64_t, Rational>>& rows) {
        Json out = Json::array();
        for (const auto& [x, v] : rows) {
            out.push_back(Json::array({x, to_string(v)}));
        }
        return out;
    };
    Json normalized = Json::array();
    for (const auto& [x, v] : r.normalized_sq) {
        normalized.push_back(Json::array({x, v}));
    }
    Json out {{"bound", r.bound}, {"sign_changes", r.sign_changes}, {"partial_sum", exact(r.partial_sum)},
        {"partial_sum_abs", exact(r.partial_sum_abs)}, {"partial_sum_sq", exact(r.partial_sum_sq)},
        {"normalized_sq_diagnostic", std::move(normalized)}};
    if (r.profile) {
        out["profile"] = to_json(*r.profile);
    }
    return out;
}

Json to_json(const DeligneResult& r)
{
    Json out {{"passed", r.passed}, {"primes_checked", r.primes_checked}, {"worst_prime", r.worst_prime},
        {"worst_ratio", r.worst_ratio}};
    if (r.first_violation) {
        out["first_violation"] = *r.first_violation;
    }
    return out;
}

Json to_json(const MacMahonTable& t)
{
    Json rows = Json::array();
    for (std::size_t n = 1; n <= t.n_max(); ++n) {
        Json row {{"n", n}};
        Json values = Json::array();
        for (int a = 1; a <= t.a_max(); ++a) {
            values.push_back(t(a, n).get_str());
        }
        row["M"] = std::move(values);
        if (t.a_max() >= 2) {
            const auto check = cvio_identity(n, t);
            row["identity_holds"] = check.holds;
            row["is_prime"] = check.is_prime;
        }
        rows.push_back(std::move(row));
    }
    return Json {{"a_max", t.a_max()}, {"N", t.n_max()}, {"rows", std::move(rows)}};
}

} // namespace qprime
