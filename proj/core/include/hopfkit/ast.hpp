#pragma once

#include <memory>
#include <string>
#include <vector>

#include "hopfkit/rational.hpp"

namespace hopfkit {

struct Expr;
using ExprPtr = std::shared_ptr<Expr>;

// Expression tree of the presentation DSL.
struct Expr {
    enum class Kind { Number, Name, Add, Sub, Mul, Div, Neg, Pow, Exp, Log1p };
    Kind kind;
    Rational number;      // Number
    std::string name;     // Name
    ExprPtr a, b;         // operands
    int exponent = 0;     // Pow
    int line = 0, column = 0;
};

struct TExpr;
using TExprPtr = std::shared_ptr<TExpr>;

// Tensor expression: sums/differences of leg pairs, with scalar multipliers.
struct TExpr {
    enum class Kind { Pair, Add, Sub, ScalarMul };
    Kind kind;
    ExprPtr left, right;  // Pair legs, or ScalarMul's scalar in `left`
    TExprPtr ta, tb;      // Add/Sub operands, ScalarMul operand in `ta`
    int line = 0, column = 0;
};

struct RelationRule {
    std::string lhs_a, lhs_b;  // [lhs_a, lhs_b] = rhs
    ExprPtr rhs;
    int line = 0, column = 0;
};

struct AlgebraBlock {
    std::string name;
    std::string param;
    std::vector<std::string> generators;
    std::vector<RelationRule> relations;
    std::vector<std::pair<std::string, TExprPtr>> coproduct_rules;
    std::vector<std::pair<std::string, ExprPtr>> counit_rules;
    std::vector<std::pair<std::string, ExprPtr>> antipode_rules;
    int line = 0, column = 0;
};

struct PairingBlock {
    std::string first_name, second_name;
    std::vector<std::pair<std::string, std::string>> pairs;
    int line = 0, column = 0;
};

// Parse tree of one `.hopf` file: two algebra blocks and a pairing block.
struct PresentationFile {
    AlgebraBlock first, second;
    PairingBlock pairing;
};

PresentationFile parse_presentation(const std::string& source);

// Parses a standalone DSL expression (the CLI input syntax).
ExprPtr parse_expression_text(const std::string& source);

}  // namespace hopfkit
