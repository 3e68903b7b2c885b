#include "qprime/decompose.hpp"

#include <string>

namespace qprime {

DecompositionResult split_eis_cusp(const QuasiForm& f, std::size_t certificate_precision, EisensteinConvention conv)
{
    DecompositionResult out;
    out.eis_part.add_constant(f.constant());
    for (const auto& [key, c] : f.eis()) {
        out.eis_part.add_eis(key, c);
    }
    for (const auto& [key, c] : f.cusp()) {
        out.cusp_part.add_cusp(key, c);
    }
    out.certificate_precision = certificate_precision;

    const QExpansion whole = quasiform_expand(f, certificate_precision, conv);
    const QExpansion rebuilt = quasiform_expand(out.eis_part, certificate_precision, conv)
        + quasiform_expand(out.cusp_part, certificate_precision, conv);
    if (whole != rebuilt) {
        throw DomainError("split_eis_cusp: reconstruction failed through precision "
            + std::to_string(certificate_precision));
    }
    return out;
}

ComplexQuasiForm ComplexQuasiForm::from_real(const QuasiForm& f, const GaussianRational& scale)
{
    auto times = [&scale](const Rational& c) { return GaussianRational {c * scale.re, c * scale.im}; };
    ComplexQuasiForm out;
    out.constant = times(f.constant());
    for (const auto& [key, c] : f.eis()) {
        out.eis[key] = times(c);
    }
    for (const auto& [key, c] : f.cusp()) {
        out.cusp[key] = times(c);
    }
    return out;
}

std::pair<QuasiForm, QuasiForm> split_realified(const ComplexQuasiForm& f)
{
    QuasiForm re;
    QuasiForm im;
    re.add_constant(f.constant.re);
    im.add_constant(f.constant.im);
    for (const auto& [key, c] : f.eis) {
        re.add_eis(key, c.re);
        im.add_eis(key, c.im);
    }
    for (const auto& [key, c] : f.cusp) {
        re.add_cusp(key, c.re);
        im.add_cusp(key, c.im);
    }
    return {re, im};
}

} // namespace qprime
