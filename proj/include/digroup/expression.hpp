#pragma once

// Surface syntax for elements of F(X):
//
//   expr := term (("|-" | "-|") term)*     left-associative, equal precedence
//   term := atom ["'"]                      postfix dagger
//   atom := "e" | ident | ident "^-1" | "(" expr ")"
//
// Note that |- and -| together are not associative in general, so mixed
// chains such as "a -| b |- c" mean "(a -| b) |- c".

#include <memory>
#include <string>
#include <string_view>

#include "digroup/diword.hpp"
#include "digroup/free_digroup.hpp"

namespace digroup {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  enum class Op : std::uint8_t { Atom, Left, Right, Dagger };

  Op op;
  Letter letter;  // Atom only
  ExprPtr lhs;    // operand of Dagger, left operand of Left/Right
  ExprPtr rhs;

  static ExprPtr atom(Letter l);
  static ExprPtr left(ExprPtr a, ExprPtr b);
  static ExprPtr right(ExprPtr a, ExprPtr b);
  static ExprPtr dagger(ExprPtr a);
};

bool structurally_equal(const Expr& a, const Expr& b);

class UnknownIdentifier : public ParseError {
 public:
  UnknownIdentifier(const std::string& name, std::size_t position)
      : ParseError("unknown identifier '" + name + "'", position), name_(name) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

/// Throws ParseError (or UnknownIdentifier) with a 0-based character offset.
ExprPtr parse_expression(std::string_view text, const Alphabet& alphabet);

/// Canonical text; reparses to a structurally equal tree.
std::string render(const Expr& e, const Alphabet& alphabet);

/// Evaluation by the closed-form operations.
NormalForm eval_expression(const Expr& e);

/// The unreduced diword obtained with the free disemigroup operations and the
/// formal inverse [x1 .. xn]_m' = [xn^-1 .. x1^-1 e]_{n+1}. Normalizing it
/// gives the same element as eval_expression.
DiWord eval_raw(const Expr& e);

}  // namespace digroup
