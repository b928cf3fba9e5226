#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "ouro/domain.hpp"
#include "ouro/scalar.hpp"

namespace ouro {

class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(const std::string& what, std::size_t pos)
      : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"),
        position(pos) {}
  std::size_t position;
};

class ArityError : public std::runtime_error {
 public:
  ArityError(const std::string& what, std::size_t pos)
      : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"),
        position(pos) {}
  std::size_t position;
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

enum class UnaryOp { Neg, Abs, Floor, Ceil, Round };
enum class BinaryOp { Add, Sub, Mul, Div, Min, Max, Pow };
enum class Builtin { Mean, Median, Clamp };

struct Expr {
  enum class Kind { Var, Const, Unary, Binary, Call };

  Kind kind;
  int var_index = 0;  // 1-based
  Scalar value;
  UnaryOp un{};
  BinaryOp bin{};
  Builtin builtin{};
  std::vector<ExprPtr> children;

  static ExprPtr var(int index);
  static ExprPtr constant(Scalar v);
  static ExprPtr unary(UnaryOp op, ExprPtr child);
  static ExprPtr binary(BinaryOp op, ExprPtr l, ExprPtr r);
  static ExprPtr call(Builtin b, std::vector<ExprPtr> args);
};

// Grammar:
//   expr   := term (("+"|"-") term)*
//   term   := factor (("*"|"/") factor)*
//   factor := unary ("^" factor)?
//   unary  := ("-")? atom
//   atom   := number | varname | call | "(" expr ")"
//   call   := ident "(" expr ("," expr)* ")"
//   varname := "x" digits
ExprPtr parse_expr(const std::string& source, int arity);

std::string print_expr(const ExprPtr& e);

bool structurally_equal(const ExprPtr& a, const ExprPtr& b);

// Throws DomainError on undefined arithmetic.
Scalar eval(const ExprPtr& e, const std::vector<Scalar>& args);

struct FunctionDef {
  std::string name;
  int arity = 1;
  ExprPtr body;
  DomainSignature signature = DomainSignature::power(Domain::all_reals(), 1);
  Domain codomain = Domain::all_reals();
};

FunctionDef make_function(const std::string& name, const std::string& source,
                          DomainSignature sig, Domain codomain);

// n-ary arithmetic mean over the given base domain
FunctionDef make_mean(int n, const Domain& base);

enum class Status;  // checker.hpp

struct CatalogEntry {
  FunctionDef def;
  // expected verdict class on the entry's own signature: "holds" covers
  // both Holds and HoldsProbably
  std::string expected;  // "holds" | "fails" | "undefined"
};

const std::vector<CatalogEntry>& catalog();
const FunctionDef* find_catalog(const std::string& name);

}  // namespace ouro
