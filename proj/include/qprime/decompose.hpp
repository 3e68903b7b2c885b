#pragma once

#include <cstddef>
#include <map>
#include <utility>

#include "qprime/forms.hpp"

namespace qprime {

/// F = F_E + F_S with F_E quasimodular Eisenstein and F_S quasimodular cusp.
struct DecompositionResult {
    QuasiForm eis_part;   // constant and Eisenstein terms only
    QuasiForm cusp_part;  // cusp terms only
    std::size_t certificate_precision = 0;
};

inline constexpr std::size_t default_certificate_precision = 60;

/// Projects the canonical representation onto its two summands and certifies
/// the reconstruction by re-expansion through `certificate_precision`.
DecompositionResult split_eis_cusp(const QuasiForm& f,
    std::size_t certificate_precision = default_certificate_precision,
    EisensteinConvention conv = EisensteinConvention::paper);

/// Exact Gaussian rational re + i*im.
struct GaussianRational {
    Rational re = 0;
    Rational im = 0;
    bool is_zero() const { return re == 0 && im == 0; }
    friend bool operator==(const GaussianRational&, const GaussianRational&) = default;
};

/// QuasiForm with Gaussian rational coefficients.
struct ComplexQuasiForm {
    GaussianRational constant;
    std::map<EisKey, GaussianRational> eis;
    std::map<CuspKey, GaussianRational> cusp;

    static ComplexQuasiForm from_real(const QuasiForm& f, const GaussianRational& scale = {1, 0});
};

/// F = F_Re + i F_Im with both parts real, taken coefficientwise.
std::pair<QuasiForm, QuasiForm> split_realified(const ComplexQuasiForm& f);

} // namespace qprime
