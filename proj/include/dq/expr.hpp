#pragma once

#include <string_view>

#include "dq/interval.hpp"

namespace dq {

// Evaluates a small arithmetic expression to an enclosing interval.
//
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := '-' unary | power
//   power   := primary ('^' unary)?
//   primary := decimal | 'pi' | ident '(' expr ')' | '(' expr ')'
//
// ident is one of sqrt, log, exp. Decimal literals are converted outward, so
// "3.35e8" and "(2+3^(-1/2))^(6/7)" both give certified enclosures.
Interval evaluate_expression(std::string_view text);

}  // namespace dq
