#pragma once

#include "ulab/hyper/hyperreal.hpp"

#include <string_view>

namespace ulab::hyper {

/// Evaluates series text such as "3 + 5e - 2e^3 + 7e^-1".
///
/// Grammar (juxtaposition multiplies, "^" takes an integer exponent):
///   expr    := term (('+' | '-') term)*
///   term    := unary (('*' | '/' | <juxtaposed>) unary)*
///   unary   := '-' unary | power
///   power   := primary ('^' ['-'] digits)?
///   primary := number | 'e' | 'W' | 'pi' | '(' expr ')'
/// `e` is the infinitesimal, `W` its reciprocal Omega, numbers are exact
/// ("5/2" parses as a quotient). `pi` introduces a decimal coefficient.
HyperReal parse_hyperreal(std::string_view text, int order = default_order());

}  // namespace ulab::hyper
