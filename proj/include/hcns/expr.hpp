#pragma once

// Expression syntax shared by the scalar grammar, natural-form numbers and
// the calculator.
//
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := ('-' | '+') unary | power
//   power   := primary ('^' INTEGER)?
//   primary := INTEGER | DECIMAL | IDENT | IDENT '(' [expr (',' expr)*] ')'
//            | '(' expr ')'
//
// Implicit multiplication is rejected.

#include "hcns/scalar.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace hcns {

struct Expr {
    enum class Op { Integer, Decimal, Ident, Call, Neg, Add, Sub, Mul, Div, Pow };

    Op op;
    std::size_t pos = 0;
    std::string text;         // literal digits or identifier
    unsigned exponent = 0;    // Pow only
    std::vector<Expr> args;   // operands or call arguments
};

Expr parse_expression(std::string_view text);

/// Evaluates an expression in the scalar grammar; calls are rejected.
Scalar evaluate_scalar(const Expr& expr);

}  // namespace hcns
