#pragma once
// Textual form of ring elements: "a+b*w" for Z[w], "a+b*i" for Z[i].
// Printing is canonical (omits zero terms, unit coefficients, "*1");
// parsing accepts any signed sum of integer and symbol terms and reports
// malformed input with a character position.

#include <string>

#include "recip/eisenstein.hpp"
#include "recip/gaussian.hpp"

namespace recip {

std::string eis_to_string(const Eisenstein& x);
std::string gauss_to_string(const GaussianInt& x);

// DomainError "parse-error" with a 1-based position diagnostic on bad input.
Eisenstein parse_eisenstein(const std::string& text);
GaussianInt parse_gaussian(const std::string& text);

}  // namespace recip
