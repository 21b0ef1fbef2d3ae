#ifndef GLINV_FORM_IO_HPP
#define GLINV_FORM_IO_HPP

#include <string>
#include <string_view>

#include "json.hpp"

#include "glinv/forms.hpp"

namespace glinv {

// Text grammar (canonical output, tolerant input):
//   form     := term (('+' | '-') term)* | "0"
//   term     := [rational "*"]? xfac* dxchain?
//   xfac     := "x[" i "," j "]" ("^" exponent)?
//   dxchain  := "dx[" i "," j "]" ("^" "dx[" i "," j "]")*
// Input additionally accepts whitespace anywhere, '*' between factors, a
// missing '*' after the coefficient, and dx factors in any order.

std::string to_text(const Form& f);
/// Throws ParseError naming the offending token.
Form parse_form_text(std::string_view text, int n);

/// {"n": n, "terms": [{"c": "p/q", "x": [[i,j,e],...], "dx": [[i,j],...]}]}
nlohmann::json to_json(const Form& f);
Form form_from_json(const nlohmann::json& j);

/// Structured input when the first non-blank character is '{', text otherwise.
/// n is required for text input and ignored for structured input.
Form parse_form_auto(std::string_view input, int n);

}  // namespace glinv

#endif  // GLINV_FORM_IO_HPP
