#include "ouro/domain.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>

namespace ouro {

Domain Domain::finite_set(std::vector<Scalar> elems) {
  if (elems.empty()) throw std::invalid_argument("empty finite set");
  std::sort(elems.begin(), elems.end());
  std::vector<Scalar> dedup;
  for (const auto& e : elems) {
    if (!dedup.empty() && dedup.back().value() == e.value()) continue;
    dedup.push_back(e);
  }
  Domain d;
  d.kind_ = Kind::FiniteSet;
  d.elements_ = std::move(dedup);
  return d;
}

Domain Domain::int_range(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw std::invalid_argument("int range lo > hi");
  Domain d;
  d.kind_ = Kind::IntRange;
  d.lo_i_ = lo;
  d.hi_i_ = hi;
  return d;
}

Domain Domain::real_interval(double lo, double hi, bool lo_closed,
                             bool hi_closed) {
  if (std::isnan(lo) || std::isnan(hi) || lo > hi)
    throw std::invalid_argument("bad real interval bounds");
  if (std::isinf(lo) && lo_closed) lo_closed = false;
  if (std::isinf(hi) && hi_closed) hi_closed = false;
  Domain d;
  d.kind_ = Kind::RealInterval;
  d.lo_r_ = lo;
  d.hi_r_ = hi;
  d.lo_closed_ = lo_closed;
  d.hi_closed_ = hi_closed;
  return d;
}

Domain Domain::all_reals() {
  Domain d;
  d.kind_ = Kind::AllReals;
  return d;
}

Domain Domain::all_integers() {
  Domain d;
  d.kind_ = Kind::AllIntegers;
  return d;
}

bool Domain::contains(const Scalar& v) const {
  switch (kind_) {
    case Kind::FiniteSet:
      for (const auto& e : elements_)
        if (e.value() == v.value()) return true;
      return false;
    case Kind::IntRange:
      if (!v.integral()) return false;
      return v.value() >= static_cast<double>(lo_i_) &&
             v.value() <= static_cast<double>(hi_i_);
    case Kind::RealInterval: {
      const double x = v.value();
      if (lo_closed_ ? x < lo_r_ : x <= lo_r_) return false;
      if (hi_closed_ ? x > hi_r_ : x >= hi_r_) return false;
      return true;
    }
    case Kind::AllReals:
      return true;
    case Kind::AllIntegers:
      return v.integral();
  }
  return false;
}

std::optional<std::uint64_t> Domain::finite_size() const {
  switch (kind_) {
    case Kind::FiniteSet:
      return elements_.size();
    case Kind::IntRange:
      return static_cast<std::uint64_t>(hi_i_ - lo_i_) + 1;
    default:
      return std::nullopt;
  }
}

std::vector<Scalar> Domain::enumerate() const {
  switch (kind_) {
    case Kind::FiniteSet:
      return elements_;
    case Kind::IntRange: {
      std::vector<Scalar> out;
      out.reserve(static_cast<std::size_t>(hi_i_ - lo_i_) + 1);
      for (std::int64_t v = lo_i_; v <= hi_i_; ++v)
        out.push_back(Scalar::integer(v));
      return out;
    }
    default:
      throw NotEnumerable("domain " + str() + " is not enumerable");
  }
}

Scalar Domain::sample_one(Rng& rng, const SampleWindow& window) const {
  switch (kind_) {
    case Kind::FiniteSet:
      return elements_[static_cast<std::size_t>(
          rng.uniform_int(0, static_cast<std::int64_t>(elements_.size()) - 1))];
    case Kind::IntRange:
      return Scalar::integer(rng.uniform_int(lo_i_, hi_i_));
    case Kind::RealInterval: {
      const double lo = std::max(lo_r_, window.lo);
      const double hi = std::min(hi_r_, window.hi);
      if (lo == hi) return Scalar::real(lo);
      for (;;) {
        Scalar s = Scalar::real(rng.uniform(lo, hi));
        if (contains(s)) return s;  // open endpoints excluded by retry
      }
    }
    case Kind::AllReals:
      return Scalar::real(rng.uniform(window.lo, window.hi));
    case Kind::AllIntegers:
      return Scalar::integer(
          rng.uniform_int(static_cast<std::int64_t>(window.lo),
                          static_cast<std::int64_t>(window.hi)));
  }
  throw std::logic_error("unreachable");
}

std::vector<Scalar> Domain::sample(std::uint64_t k, Rng& rng,
                                   const SampleWindow& window) const {
  std::vector<Scalar> out;
  out.reserve(k);
  for (std::uint64_t i = 0; i < k; ++i) out.push_back(sample_one(rng, window));
  return out;
}

static std::string format_bound(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return format_double(v);
}

std::string Domain::str() const {
  switch (kind_) {
    case Kind::FiniteSet: {
      std::string s = "set{";
      for (std::size_t i = 0; i < elements_.size(); ++i) {
        if (i) s += ",";
        s += elements_[i].str();
      }
      return s + "}";
    }
    case Kind::IntRange:
      return "int[" + std::to_string(lo_i_) + ".." + std::to_string(hi_i_) +
             "]";
    case Kind::RealInterval:
      return std::string("real") + (lo_closed_ ? "[" : "(") +
             format_bound(lo_r_) + "," + format_bound(hi_r_) +
             (hi_closed_ ? "]" : ")");
    case Kind::AllReals:
      return "R";
    case Kind::AllIntegers:
      return "Z";
  }
  return "?";
}

bool operator==(const Domain& a, const Domain& b) {
  if (a.kind_ != b.kind_) return false;
  switch (a.kind_) {
    case Domain::Kind::FiniteSet:
      if (a.elements_.size() != b.elements_.size()) return false;
      for (std::size_t i = 0; i < a.elements_.size(); ++i)
        if (!(a.elements_[i] == b.elements_[i]) ||
            a.elements_[i].is_int() != b.elements_[i].is_int())
          return false;
      return true;
    case Domain::Kind::IntRange:
      return a.lo_i_ == b.lo_i_ && a.hi_i_ == b.hi_i_;
    case Domain::Kind::RealInterval:
      return a.lo_r_ == b.lo_r_ && a.hi_r_ == b.hi_r_ &&
             a.lo_closed_ == b.lo_closed_ && a.hi_closed_ == b.hi_closed_;
    default:
      return true;
  }
}

DomainSignature DomainSignature::power(Domain base, int arity) {
  if (arity < 1) throw std::invalid_argument("arity must be >= 1");
  DomainSignature s;
  s.power_ = true;
  s.arity_ = arity;
  s.factors_ = {std::move(base)};
  return s;
}

DomainSignature DomainSignature::mixed(std::vector<Domain> factors) {
  if (factors.empty()) throw std::invalid_argument("empty signature");
  bool all_equal = true;
  for (std::size_t i = 1; i < factors.size(); ++i)
    if (!(factors[i] == factors[0])) all_equal = false;
  if (all_equal)
    return power(std::move(factors[0]), static_cast<int>(factors.size()));
  DomainSignature s;
  s.power_ = false;
  s.arity_ = static_cast<int>(factors.size());
  s.factors_ = std::move(factors);
  return s;
}

std::optional<std::uint64_t> DomainSignature::finite_size() const {
  std::uint64_t total = 1;
  for (int i = 0; i < arity_; ++i) {
    auto sz = factor(i).finite_size();
    if (!sz) return std::nullopt;
    if (*sz != 0 && total > std::numeric_limits<std::uint64_t>::max() / *sz)
      return std::numeric_limits<std::uint64_t>::max();  // saturate
    total *= *sz;
  }
  return total;
}

std::vector<Scalar> DomainSignature::sample_point(
    Rng& rng, const SampleWindow& window) const {
  std::vector<Scalar> point;
  point.reserve(static_cast<std::size_t>(arity_));
  for (int i = 0; i < arity_; ++i)
    point.push_back(factor(i).sample_one(rng, window));
  return point;
}

void DomainSignature::enumerate_points(
    const std::function<void(const std::vector<Scalar>&)>& visit) const {
  std::vector<std::vector<Scalar>> axes;
  axes.reserve(static_cast<std::size_t>(arity_));
  for (int i = 0; i < arity_; ++i) axes.push_back(factor(i).enumerate());
  std::vector<std::size_t> idx(static_cast<std::size_t>(arity_), 0);
  std::vector<Scalar> point(static_cast<std::size_t>(arity_), Scalar());
  for (;;) {
    for (int i = 0; i < arity_; ++i)
      point[static_cast<std::size_t>(i)] =
          axes[static_cast<std::size_t>(i)][idx[static_cast<std::size_t>(i)]];
    visit(point);
    int i = arity_ - 1;
    while (i >= 0) {
      auto& k = idx[static_cast<std::size_t>(i)];
      if (++k < axes[static_cast<std::size_t>(i)].size()) break;
      k = 0;
      --i;
    }
    if (i < 0) return;
  }
}

std::string DomainSignature::str() const {
  if (power_) {
    if (arity_ == 1) return factors_.front().str();
    return factors_.front().str() + "^" + std::to_string(arity_);
  }
  std::string s;
  for (int i = 0; i < arity_; ++i) {
    if (i) s += " x ";
    s += factor(i).str();
  }
  return s;
}

bool operator==(const DomainSignature& a, const DomainSignature& b) {
  if (a.arity_ != b.arity_) return false;
  for (int i = 0; i < a.arity_; ++i)
    if (!(a.factor(i) == b.factor(i))) return false;
  return true;
}

// ---------------------------------------------------------------------------
// mini-syntax parser

namespace {

class DomainParser {
 public:
  explicit DomainParser(const std::string& text) : text_(text) {}

  Domain parse_one_domain() {
    Domain d = atom();
    skip_ws();
    if (pos_ != text_.size())
      throw DomainParseError("trailing input after domain", pos_);
    return d;
  }

  DomainSignature parse_sig() {
    std::vector<Domain> factors;
    append_power(factors);
    skip_ws();
    while (pos_ < text_.size() && peek() == 'x') {
      ++pos_;  // 'x'
      append_power(factors);
      skip_ws();
    }
    if (pos_ != text_.size())
      throw DomainParseError("trailing input after signature", pos_);
    return DomainSignature::mixed(std::move(factors));
  }

 private:
  void append_power(std::vector<Domain>& factors) {
    Domain d = atom();
    skip_ws();
    int reps = 1;
    if (pos_ < text_.size() && peek() == '^') {
      ++pos_;
      reps = static_cast<int>(parse_int());
      if (reps < 1) throw DomainParseError("power must be >= 1", pos_);
    }
    for (int i = 0; i < reps; ++i) factors.push_back(d);
  }

  char peek() const { return text_[pos_]; }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void expect(char c) {
    if (pos_ >= text_.size() || text_[pos_] != c)
      throw DomainParseError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  bool try_word(const char* w) {
    std::size_t n = std::string(w).size();
    if (text_.compare(pos_, n, w) == 0) {
      pos_ += n;
      return true;
    }
    return false;
  }

  std::int64_t parse_int() {
    skip_ws();
    std::int64_t v = 0;
    auto res = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), v);
    if (res.ec != std::errc())
      throw DomainParseError("expected integer", pos_);
    pos_ = static_cast<std::size_t>(res.ptr - text_.data());
    return v;
  }

  double parse_real_bound() {
    skip_ws();
    if (try_word("-inf")) return -std::numeric_limits<double>::infinity();
    if (try_word("inf")) return std::numeric_limits<double>::infinity();
    double v = 0;
    auto res = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), v);
    if (res.ec != std::errc())
      throw DomainParseError("expected number", pos_);
    pos_ = static_cast<std::size_t>(res.ptr - text_.data());
    return v;
  }

  Scalar parse_scalar() {
    skip_ws();
    std::size_t start = pos_;
    double v = parse_real_bound();
    std::string tok = text_.substr(start, pos_ - start);
    if (tok.find('.') == std::string::npos &&
        tok.find('e') == std::string::npos &&
        tok.find("inf") == std::string::npos)
      return Scalar::integer(static_cast<std::int64_t>(v));
    return Scalar::real(v);
  }

  Domain atom() {
    skip_ws();
    if (pos_ >= text_.size()) throw DomainParseError("expected domain", pos_);
    if (try_word("R")) return Domain::all_reals();
    if (try_word("Z")) return Domain::all_integers();
    if (try_word("set{")) {
      std::vector<Scalar> elems;
      elems.push_back(parse_scalar());
      skip_ws();
      while (pos_ < text_.size() && peek() == ',') {
        ++pos_;
        elems.push_back(parse_scalar());
        skip_ws();
      }
      expect('}');
      return Domain::finite_set(std::move(elems));
    }
    if (try_word("int[")) {
      std::int64_t lo = parse_int();
      skip_ws();
      expect('.');
      expect('.');
      std::int64_t hi = parse_int();
      skip_ws();
      expect(']');
      return Domain::int_range(lo, hi);
    }
    if (try_word("real")) {
      skip_ws();
      bool lo_closed;
      if (peek() == '[') lo_closed = true;
      else if (peek() == '(') lo_closed = false;
      else throw DomainParseError("expected '[' or '('", pos_);
      ++pos_;
      double lo = parse_real_bound();
      skip_ws();
      expect(',');
      double hi = parse_real_bound();
      skip_ws();
      bool hi_closed;
      if (pos_ < text_.size() && peek() == ']') hi_closed = true;
      else if (pos_ < text_.size() && peek() == ')') hi_closed = false;
      else throw DomainParseError("expected ']' or ')'", pos_);
      ++pos_;
      return Domain::real_interval(lo, hi, lo_closed, hi_closed);
    }
    throw DomainParseError("unrecognized domain", pos_);
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

}  // namespace

Domain parse_domain(const std::string& text) {
  return DomainParser(text).parse_one_domain();
}

DomainSignature parse_signature(const std::string& text) {
  return DomainParser(text).parse_sig();
}

}  // namespace ouro
