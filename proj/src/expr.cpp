#include "ouro/expr.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <limits>

namespace ouro {

ExprPtr Expr::var(int index) {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::Var;
  e->var_index = index;
  return e;
}

ExprPtr Expr::constant(Scalar v) {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::Const;
  e->value = v;
  return e;
}

ExprPtr Expr::unary(UnaryOp op, ExprPtr child) {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::Unary;
  e->un = op;
  e->children = {std::move(child)};
  return e;
}

ExprPtr Expr::binary(BinaryOp op, ExprPtr l, ExprPtr r) {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::Binary;
  e->bin = op;
  e->children = {std::move(l), std::move(r)};
  return e;
}

ExprPtr Expr::call(Builtin b, std::vector<ExprPtr> args) {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::Call;
  e->builtin = b;
  e->children = std::move(args);
  return e;
}

// ---------------------------------------------------------------------------
// parser

namespace {

class Parser {
 public:
  Parser(const std::string& src, int arity) : src_(src), arity_(arity) {}

  ExprPtr parse() {
    ExprPtr e = expr();
    skip_ws();
    if (pos_ != src_.size()) throw SyntaxError("trailing input", pos_);
    return e;
  }

 private:
  ExprPtr expr() {
    ExprPtr l = term();
    for (;;) {
      skip_ws();
      if (accept('+'))
        l = Expr::binary(BinaryOp::Add, l, term());
      else if (accept('-'))
        l = Expr::binary(BinaryOp::Sub, l, term());
      else
        return l;
    }
  }

  ExprPtr term() {
    ExprPtr l = factor();
    for (;;) {
      skip_ws();
      if (accept('*'))
        l = Expr::binary(BinaryOp::Mul, l, factor());
      else if (accept('/'))
        l = Expr::binary(BinaryOp::Div, l, factor());
      else
        return l;
    }
  }

  // right-associative pow
  ExprPtr factor() {
    ExprPtr base = unary();
    skip_ws();
    if (accept('^')) return Expr::binary(BinaryOp::Pow, base, factor());
    return base;
  }

  ExprPtr unary() {
    skip_ws();
    if (accept('-')) return Expr::unary(UnaryOp::Neg, atom());
    return atom();
  }

  ExprPtr atom() {
    skip_ws();
    if (pos_ >= src_.size()) throw SyntaxError("unexpected end of input", pos_);
    char c = src_[pos_];
    if (accept('(')) {
      ExprPtr e = expr();
      skip_ws();
      if (!accept(')')) throw SyntaxError("expected ')'", pos_);
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c))) return ident();
    throw SyntaxError("expected number, variable, call or '('", pos_);
  }

  ExprPtr number() {
    std::size_t start = pos_;
    while (pos_ < src_.size() &&
           (std::isdigit(static_cast<unsigned char>(src_[pos_])) ||
            src_[pos_] == '.' || src_[pos_] == 'e' || src_[pos_] == 'E' ||
            ((src_[pos_] == '+' || src_[pos_] == '-') &&
             (src_[pos_ - 1] == 'e' || src_[pos_ - 1] == 'E'))))
      ++pos_;
    std::string tok = src_.substr(start, pos_ - start);
    if (tok.find('.') == std::string::npos &&
        tok.find('e') == std::string::npos &&
        tok.find('E') == std::string::npos) {
      std::int64_t v = 0;
      auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (res.ec != std::errc() || res.ptr != tok.data() + tok.size())
        throw SyntaxError("bad integer literal '" + tok + "'", start);
      return Expr::constant(Scalar::integer(v));
    }
    double v = 0;
    auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (res.ec != std::errc() || res.ptr != tok.data() + tok.size())
      throw SyntaxError("bad number literal '" + tok + "'", start);
    return Expr::constant(Scalar::real(v));
  }

  ExprPtr ident() {
    std::size_t start = pos_;
    while (pos_ < src_.size() &&
           std::isalpha(static_cast<unsigned char>(src_[pos_])))
      ++pos_;
    std::string name = src_.substr(start, pos_ - start);
    if (name == "x") {
      std::size_t dstart = pos_;
      while (pos_ < src_.size() &&
             std::isdigit(static_cast<unsigned char>(src_[pos_])))
        ++pos_;
      if (pos_ == dstart) throw SyntaxError("expected variable index", pos_);
      int idx = std::stoi(src_.substr(dstart, pos_ - dstart));
      if (idx < 1 || idx > arity_)
        throw ArityError("variable x" + std::to_string(idx) +
                             " out of range for arity " +
                             std::to_string(arity_),
                         start);
      return Expr::var(idx);
    }
    skip_ws();
    if (!accept('(')) throw SyntaxError("expected '(' after '" + name + "'", pos_);
    std::vector<ExprPtr> args;
    args.push_back(expr());
    skip_ws();
    while (accept(',')) {
      args.push_back(expr());
      skip_ws();
    }
    if (!accept(')')) throw SyntaxError("expected ')'", pos_);
    return make_call(name, std::move(args), start);
  }

  ExprPtr make_call(const std::string& name, std::vector<ExprPtr> args,
                    std::size_t pos) {
    auto need = [&](std::size_t n) {
      if (args.size() != n)
        throw SyntaxError(name + " takes " + std::to_string(n) +
                              " argument(s), got " +
                              std::to_string(args.size()),
                          pos);
    };
    if (name == "abs" || name == "floor" || name == "ceil" ||
        name == "round") {
      need(1);
      UnaryOp op = name == "abs"     ? UnaryOp::Abs
                   : name == "floor" ? UnaryOp::Floor
                   : name == "ceil"  ? UnaryOp::Ceil
                                     : UnaryOp::Round;
      return Expr::unary(op, args[0]);
    }
    if (name == "min" || name == "max") {
      need(2);
      return Expr::binary(name == "min" ? BinaryOp::Min : BinaryOp::Max,
                          args[0], args[1]);
    }
    if (name == "mean") {
      if (args.empty()) throw SyntaxError("mean needs arguments", pos);
      return Expr::call(Builtin::Mean, std::move(args));
    }
    if (name == "median") {
      if (args.empty()) throw SyntaxError("median needs arguments", pos);
      return Expr::call(Builtin::Median, std::move(args));
    }
    if (name == "clamp") {
      need(3);
      return Expr::call(Builtin::Clamp, std::move(args));
    }
    throw SyntaxError("unknown function '" + name + "'", pos);
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void skip_ws() {
    while (pos_ < src_.size() &&
           std::isspace(static_cast<unsigned char>(src_[pos_])))
      ++pos_;
  }

  const std::string& src_;
  int arity_;
  std::size_t pos_ = 0;
};

}  // namespace

ExprPtr parse_expr(const std::string& source, int arity) {
  return Parser(source, arity).parse();
}

// ---------------------------------------------------------------------------
// printer

namespace {

const char* bin_sym(BinaryOp op) {
  switch (op) {
    case BinaryOp::Add: return "+";
    case BinaryOp::Sub: return "-";
    case BinaryOp::Mul: return "*";
    case BinaryOp::Div: return "/";
    case BinaryOp::Pow: return "^";
    default: return nullptr;  // Min/Max print as calls
  }
}

bool is_atom(const ExprPtr& e) {
  if (e->kind == Expr::Kind::Var || e->kind == Expr::Kind::Call) return true;
  if (e->kind == Expr::Kind::Const)
    return !(e->value.is_int() ? e->value.as_int() < 0 : e->value.value() < 0);
  if (e->kind == Expr::Kind::Binary)
    return e->bin == BinaryOp::Min || e->bin == BinaryOp::Max;
  return false;
}

std::string print_child(const ExprPtr& e) {
  std::string s = print_expr(e);
  return is_atom(e) ? s : "(" + s + ")";
}

}  // namespace

std::string print_expr(const ExprPtr& e) {
  switch (e->kind) {
    case Expr::Kind::Var:
      return "x" + std::to_string(e->var_index);
    case Expr::Kind::Const:
      return e->value.str();
    case Expr::Kind::Unary: {
      const char* name = nullptr;
      switch (e->un) {
        case UnaryOp::Neg: return "-" + print_child(e->children[0]);
        case UnaryOp::Abs: name = "abs"; break;
        case UnaryOp::Floor: name = "floor"; break;
        case UnaryOp::Ceil: name = "ceil"; break;
        case UnaryOp::Round: name = "round"; break;
      }
      return std::string(name) + "(" + print_expr(e->children[0]) + ")";
    }
    case Expr::Kind::Binary: {
      if (e->bin == BinaryOp::Min || e->bin == BinaryOp::Max) {
        return std::string(e->bin == BinaryOp::Min ? "min" : "max") + "(" +
               print_expr(e->children[0]) + "," + print_expr(e->children[1]) +
               ")";
      }
      return print_child(e->children[0]) + bin_sym(e->bin) +
             print_child(e->children[1]);
    }
    case Expr::Kind::Call: {
      const char* name = e->builtin == Builtin::Mean     ? "mean"
                         : e->builtin == Builtin::Median ? "median"
                                                         : "clamp";
      std::string s = std::string(name) + "(";
      for (std::size_t i = 0; i < e->children.size(); ++i) {
        if (i) s += ",";
        s += print_expr(e->children[i]);
      }
      return s + ")";
    }
  }
  return "?";
}

bool structurally_equal(const ExprPtr& a, const ExprPtr& b) {
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case Expr::Kind::Var:
      return a->var_index == b->var_index;
    case Expr::Kind::Const:
      return a->value.is_int() == b->value.is_int() &&
             a->value.value() == b->value.value();
    case Expr::Kind::Unary:
      if (a->un != b->un) return false;
      break;
    case Expr::Kind::Binary:
      if (a->bin != b->bin) return false;
      break;
    case Expr::Kind::Call:
      if (a->builtin != b->builtin) return false;
      break;
  }
  if (a->children.size() != b->children.size()) return false;
  for (std::size_t i = 0; i < a->children.size(); ++i)
    if (!structurally_equal(a->children[i], b->children[i])) return false;
  return true;
}

// ---------------------------------------------------------------------------
// evaluation

namespace {

Scalar int_or_real(double v) {
  if (std::floor(v) == v && std::fabs(v) < 0x1p62)
    return Scalar::integer(static_cast<std::int64_t>(v));
  return Scalar::real(v);
}

Scalar add(const Scalar& a, const Scalar& b) {
  if (a.is_int() && b.is_int()) {
    std::int64_t r;
    if (!__builtin_add_overflow(a.as_int(), b.as_int(), &r))
      return Scalar::integer(r);
  }
  return Scalar::real(a.value() + b.value());
}

Scalar sub(const Scalar& a, const Scalar& b) {
  if (a.is_int() && b.is_int()) {
    std::int64_t r;
    if (!__builtin_sub_overflow(a.as_int(), b.as_int(), &r))
      return Scalar::integer(r);
  }
  return Scalar::real(a.value() - b.value());
}

Scalar mul(const Scalar& a, const Scalar& b) {
  if (a.is_int() && b.is_int()) {
    std::int64_t r;
    if (!__builtin_mul_overflow(a.as_int(), b.as_int(), &r))
      return Scalar::integer(r);
  }
  return Scalar::real(a.value() * b.value());
}

Scalar divide(const Scalar& a, const Scalar& b) {
  if (b.value() == 0.0) throw DomainError("division by zero");
  if (a.is_int() && b.is_int() && a.as_int() % b.as_int() == 0)
    return Scalar::integer(a.as_int() / b.as_int());
  return Scalar::real(a.value() / b.value());
}

Scalar power(const Scalar& a, const Scalar& b) {
  if (a.value() == 0.0 && b.value() < 0.0)
    throw DomainError("zero to a negative power");
  if (a.is_int() && b.is_int() && b.as_int() >= 0) {
    std::int64_t base = a.as_int(), result = 1;
    std::int64_t exp = b.as_int();
    bool overflow = false;
    while (exp > 0 && !overflow) {
      if (exp & 1) overflow |= __builtin_mul_overflow(result, base, &result);
      exp >>= 1;
      if (exp > 0) overflow |= __builtin_mul_overflow(base, base, &base);
    }
    if (!overflow) return Scalar::integer(result);
  }
  double r = std::pow(a.value(), b.value());
  if (!std::isfinite(r)) throw DomainError("pow result not finite");
  return Scalar::real(r);
}

Scalar mean_of(const std::vector<Scalar>& vals) {
  bool all_int = true;
  for (const auto& v : vals) all_int &= v.is_int();
  if (all_int) {
    std::int64_t sum = 0;
    bool overflow = false;
    for (const auto& v : vals)
      overflow |= __builtin_add_overflow(sum, v.as_int(), &sum);
    if (!overflow)
      return divide(Scalar::integer(sum),
                    Scalar::integer(static_cast<std::int64_t>(vals.size())));
  }
  double sum = 0;
  for (const auto& v : vals) sum += v.value();
  return Scalar::real(sum / static_cast<double>(vals.size()));
}

}  // namespace

Scalar eval(const ExprPtr& e, const std::vector<Scalar>& args) {
  switch (e->kind) {
    case Expr::Kind::Var:
      return args[static_cast<std::size_t>(e->var_index - 1)];
    case Expr::Kind::Const:
      return e->value;
    case Expr::Kind::Unary: {
      Scalar c = eval(e->children[0], args);
      switch (e->un) {
        case UnaryOp::Neg:
          return c.is_int() ? Scalar::integer(-c.as_int())
                            : Scalar::real(-c.value());
        case UnaryOp::Abs:
          return c.is_int() ? Scalar::integer(std::llabs(c.as_int()))
                            : Scalar::real(std::fabs(c.value()));
        case UnaryOp::Floor:
          return c.is_int() ? c : int_or_real(std::floor(c.value()));
        case UnaryOp::Ceil:
          return c.is_int() ? c : int_or_real(std::ceil(c.value()));
        case UnaryOp::Round:
          return c.is_int() ? c : int_or_real(std::round(c.value()));
      }
      break;
    }
    case Expr::Kind::Binary: {
      Scalar l = eval(e->children[0], args);
      Scalar r = eval(e->children[1], args);
      switch (e->bin) {
        case BinaryOp::Add: return add(l, r);
        case BinaryOp::Sub: return sub(l, r);
        case BinaryOp::Mul: return mul(l, r);
        case BinaryOp::Div: return divide(l, r);
        case BinaryOp::Min: return r.value() < l.value() ? r : l;
        case BinaryOp::Max: return r.value() > l.value() ? r : l;
        case BinaryOp::Pow: return power(l, r);
      }
      break;
    }
    case Expr::Kind::Call: {
      std::vector<Scalar> vals;
      vals.reserve(e->children.size());
      for (const auto& c : e->children) vals.push_back(eval(c, args));
      switch (e->builtin) {
        case Builtin::Mean:
          return mean_of(vals);
        case Builtin::Median: {
          std::sort(vals.begin(), vals.end(),
                    [](const Scalar& a, const Scalar& b) {
                      return a.value() < b.value();
                    });
          const std::size_t n = vals.size();
          if (n % 2 == 1) return vals[n / 2];
          return mean_of({vals[n / 2 - 1], vals[n / 2]});
        }
        case Builtin::Clamp: {
          const Scalar& x = vals[0];
          const Scalar& lo = vals[1];
          const Scalar& hi = vals[2];
          if (lo.value() > hi.value()) throw DomainError("clamp lo > hi");
          if (x.value() < lo.value()) return lo;
          if (x.value() > hi.value()) return hi;
          return x;
        }
      }
      break;
    }
  }
  throw std::logic_error("unreachable eval");
}

// ---------------------------------------------------------------------------
// function definitions and catalog

FunctionDef make_function(const std::string& name, const std::string& source,
                          DomainSignature sig, Domain codomain) {
  FunctionDef f;
  f.name = name;
  f.arity = sig.arity();
  f.body = parse_expr(source, f.arity);
  f.signature = std::move(sig);
  f.codomain = std::move(codomain);
  return f;
}

FunctionDef make_mean(int n, const Domain& base) {
  std::string src = "mean(";
  for (int i = 1; i <= n; ++i) {
    if (i > 1) src += ",";
    src += "x" + std::to_string(i);
  }
  src += ")";
  return make_function("mean_" + std::to_string(n), src,
                       DomainSignature::power(base, n), base);
}

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = [] {
    std::vector<CatalogEntry> v;
    const Domain R = Domain::all_reals();
    const Domain Z = Domain::all_integers();
    auto pow1 = [](const Domain& d) { return DomainSignature::power(d, 1); };

    auto add = [&](FunctionDef def, const char* expected) {
      v.push_back({std::move(def), expected});
    };

    add(make_function("identity", "x1", pow1(R), R), "holds");
    add(make_function("identity_int", "x1", pow1(Domain::int_range(-50, 50)),
                      Domain::int_range(-50, 50)),
        "holds");
    add(make_function("const_7", "7", pow1(R),
                      Domain::finite_set({Scalar::integer(7)})),
        "holds");
    add(make_function("const_7_int", "7", pow1(Domain::int_range(0, 9)),
                      Domain::finite_set({Scalar::integer(7)})),
        "holds");
    for (int n = 2; n <= 16; ++n) add(make_mean(n, R), "holds");
    add(make_function("floor", "floor(x1)", pow1(R), Z), "holds");
    add(make_function("round", "round(x1)", pow1(R), Z), "holds");
    const Domain half_line = Domain::real_interval(
        0.0, std::numeric_limits<double>::infinity(), true, false);
    add(make_function("abs", "abs(x1)", pow1(half_line), half_line), "holds");
    add(make_function("clamp_0_1", "clamp(x1,0,1)", pow1(R),
                      Domain::real_interval(0, 1, true, true)),
        "holds");
    add(make_function("min_2", "min(x1,x2)", DomainSignature::power(R, 2), R),
        "holds");
    add(make_function("max_2", "max(x1,x2)", DomainSignature::power(R, 2), R),
        "holds");
    add(make_function("median_3", "median(x1,x2,x3)",
                      DomainSignature::power(R, 3), R),
        "holds");
    add(make_function("min_2_int", "min(x1,x2)",
                      DomainSignature::power(Domain::int_range(-20, 20), 2),
                      Domain::int_range(-20, 20)),
        "holds");
    add(make_function("succ", "x1+1", pow1(R), R), "fails");
    add(make_function("double_unit", "2*x1",
                      pow1(Domain::real_interval(0, 1, true, true)),
                      Domain::real_interval(0, 1, true, true)),
        "undefined");
    return v;
  }();
  return entries;
}

const FunctionDef* find_catalog(const std::string& name) {
  for (const auto& e : catalog())
    if (e.def.name == name) return &e.def;
  return nullptr;
}

}  // namespace ouro
