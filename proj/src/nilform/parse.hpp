#pragma once

#include <string>

#include "form.hpp"

namespace nilform {

// Expression grammar shared by all file formats. Scalars and forms live in
// one algebra: a scalar is a degree-0 form, '*' is the wedge product,
// '/' requires a degree-0 divisor.
//
//   expr     := term (('+'|'-') term)*
//   term     := unary (('*'|'/') unary)*
//   unary    := '-' unary | primary ('^' uint)?
//   primary  := number | ident | 'conj' '(' expr ')' | '(' expr ')' | monomial
//   number   := digits ('/' digits)? 'i'? | 'i'
//   monomial := 'e' '[' indices? '|' indices? ']'      e.g. e[1,2|1,3]
//
// Identifiers resolve through the registry; unknown names are rejected.
InvariantForm parse_form(const std::string& text, const RegistryPtr& reg, int n);

// parse_form restricted to degree-0 results.
ParamScalar parse_scalar(const std::string& text, const RegistryPtr& reg);

// Gaussian rational literal (no parameters), e.g. "3/2+1/2i".
GaussianRational parse_gaussian(const std::string& text);

}  // namespace nilform
