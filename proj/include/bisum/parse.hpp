// Expression language for rational functions in x and y.
//
// Grammar (whitespace insignificant, no implicit multiplication):
//   expr   := term (('+'|'-') term)*
//   term   := unary (('*'|'/') unary)*
//   unary  := '-' unary | power
//   power  := atom ('^' exponent)?
//   atom   := INT | 'x' | 'y' | '(' expr ')'
//   exponent := INT | '(' '-'? INT ')'   (must be a nonnegative integer)
#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "bisum/bpoly.hpp"

namespace bisum {

struct ParseError : std::runtime_error {
    ParseError(size_t offset_, const std::string& what_)
        : std::runtime_error("parse error at byte " + std::to_string(offset_) + ": " + what_),
          offset(offset_) {}
    size_t offset;
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    enum class Kind { Num, VarX, VarY, Neg, Add, Sub, Mul, Div, Pow };
    Kind kind;
    Int value;          // Num
    unsigned exponent;  // Pow
    ExprPtr lhs, rhs;
};

ExprPtr parse(std::string_view input);

// lowering is total on well-formed trees except division by a
// syntactically zero denominator
RatFunc lower(const ExprPtr& e);

inline RatFunc parse_ratfunc(std::string_view input) { return lower(parse(input)); }

// convenience for fixtures: input must lower to a polynomial
BPoly parse_bpoly(std::string_view input);
// input must lower to a polynomial free of y (resp. x)
UPoly parse_upoly_x(std::string_view input);
UPoly parse_upoly_y(std::string_view input);

}  // namespace bisum
