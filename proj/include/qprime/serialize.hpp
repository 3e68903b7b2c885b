#pragma once

// JSON wire formats. Rationals are always "p/q" (or "p") strings.
//
//   QExpansion:          {"precision": N, "coeffs": ["p/q", ...]}
//   QuasiForm:           {"eis": [[k, l, "p/q"], ...], "cusp": [[m, i, l, "p/q"], ...]}
//                        plus "const": "p/q" when the constant is nonzero
//   DecompositionResult: {"eis_part": QuasiForm, "cusp_part": QuasiForm,
//                         "certificate_precision": N}

#include <json.hpp>

#include "qprime/decompose.hpp"
#include "qprime/macmahon.hpp"
#include "qprime/primedetect.hpp"
#include "qprime/signstats.hpp"

namespace qprime {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json to_json(const QExpansion& e);
QExpansion expansion_from_json(const Json& j);

Json to_json(const QuasiForm& f);
QuasiForm quasiform_from_json(const Json& j);

Json to_json(const DecompositionResult& d);
DecompositionResult decomposition_from_json(const Json& j);

Json to_json(const PrimePolynomial& p);
Json to_json(const FiniteCheckVerdict& v);
Json to_json(const OmegaReport& r);
Json to_json(const OmegaTildeVerdict& v);
Json to_json(const ExponentProfile& p);
Json to_json(const SignStatsReport& r);
Json to_json(const DeligneResult& r);
Json to_json(const MacMahonTable& t);

} // namespace qprime
