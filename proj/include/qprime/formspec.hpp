#pragma once

// Text form specs, e.g. "D^2 G2 - 1/6*G4 + 3 H8 + G2^2*G6 + S24.1".
//
//   expr    := ['+'|'-'] term (('+'|'-') term)*
//   term    := factor ('*'? factor)*
//   factor  := 'D' ['^' int] factor | primary ['^' int]
//   primary := rational | 'G'k | 'H'k | 'DELTA' | 'S'm'.'i | '(' expr ')'
//
// Whitespace is ignored. Products and powers are only defined between
// G2, G4, G6 and scalars; such products go through from_monomials.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "qprime/forms.hpp"

namespace qprime {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t position, const std::string& message);
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

QuasiForm parse_form_spec(std::string_view spec, EisensteinConvention conv = EisensteinConvention::paper);

/// A spec naming an existing *.json file is read as QuasiForm JSON;
/// anything else goes through parse_form_spec.
QuasiForm load_form(const std::string& spec, EisensteinConvention conv = EisensteinConvention::paper);

} // namespace qprime
