#ifndef GAUSSGRASS_PARSER_HPP
#define GAUSSGRASS_PARSER_HPP

#include <string_view>

#include "gaussgrass/ratfunc.hpp"

namespace gaussgrass {

// Expression grammar (ASCII): arbitrary-precision integer literals, parameter
// identifiers [A-Za-z][A-Za-z0-9_]*, operators + - * ^ with the usual
// precedence, unary minus, parentheses. Exponents are non-negative integer
// literals. Implicit multiplication is not accepted ("2*z1", never "2z1").
//
// poly_parse implements exactly that grammar. ratfunc_parse additionally
// accepts '/' (same precedence as '*'), which machine-emitted chart matrices
// use for non-polynomial entries.
MultiPoly poly_parse(std::string_view text, const RingPtr& ring);
MultiPoly poly_parse(std::string_view text, std::vector<std::string> params,
                     const FieldSpec& field);
RatFunc ratfunc_parse(std::string_view text, const RingPtr& ring);

}  // namespace gaussgrass

#endif
