#pragma once

#include "waring/biseries.hpp"
#include "waring/symfunc.hpp"

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

namespace waring::dsl {

// Syntax error with 1-based position information.
class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string& message, int line, int col)
        : std::runtime_error(message + " at line " + std::to_string(line) + ", column " +
                             std::to_string(col)),
          line_(line),
          col_(col) {}
    int line() const { return line_; }
    int col() const { return col_; }

  private:
    int line_;
    int col_;
};

enum class NodeKind { literal, atom, add, sub, mul, pow };

// AST for the expression language
//   expr   := term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := rational | atom | '(' expr ')' | factor '^' nat
//   atom   := basis '[' nat-list ']' '(' alphabet ')'
//   basis  := 'p'|'h'|'e'|'m'       alphabet := 'X' | 'X/(1-t*X)'
struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    NodeKind kind;
    Rational value;           // literal
    Basis basis = Basis::p;   // atom
    Partition index;          // atom
    bool transformed = false; // atom: alphabet X/(1-t*X)
    ExprPtr lhs, rhs;         // add/sub/mul; pow uses lhs as base
    int exponent = 0;         // pow

    static ExprPtr literal(const Rational& v);
    static ExprPtr atom(Basis b, Partition mu, bool transformed);
    static ExprPtr add(ExprPtr a, ExprPtr b);
    static ExprPtr sub(ExprPtr a, ExprPtr b);
    static ExprPtr mul(ExprPtr a, ExprPtr b);
    static ExprPtr pow(ExprPtr base, int exponent);
};

bool equal(const Expr& a, const Expr& b);

ExprPtr parse(std::string_view text);

// Canonical printing; print(parse(s)) reparses to an identical AST.
std::string to_string(const Expr& e);

// Exact truncated evaluation in N variables (u-free series). Every basis
// atom must satisfy |mu| <= N; plain atoms land in the t^0 slice,
// transformed p/h/e atoms evaluate part by part on X/(1-t*X).
BiSeries eval(const Expr& e, int nvars, int t_order);

}  // namespace waring::dsl
