#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace ouro {

// Raised when an arithmetic step has no defined numeric value
// (division by zero, 0^negative, overflow to non-finite).
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// A numeric value that is either an exact 64-bit integer or a finite
// binary64 real. Mixed arithmetic promotes to real; NaN and infinities
// are rejected at construction.
class Scalar {
 public:
  Scalar() : is_int_(true), i_(0), r_(0.0) {}

  static Scalar integer(std::int64_t v) {
    Scalar s;
    s.is_int_ = true;
    s.i_ = v;
    s.r_ = static_cast<double>(v);
    return s;
  }

  static Scalar real(double v) {
    if (!std::isfinite(v)) throw DomainError("non-finite scalar");
    Scalar s;
    s.is_int_ = false;
    s.i_ = 0;
    s.r_ = v;
    return s;
  }

  bool is_int() const { return is_int_; }
  std::int64_t as_int() const { return i_; }
  double value() const { return r_; }

  // true for exact integers and for reals that happen to be integral
  bool integral() const {
    if (is_int_) return true;
    return std::floor(r_) == r_;
  }

  std::string str() const;

  friend bool operator==(const Scalar& a, const Scalar& b) {
    if (a.is_int_ && b.is_int_) return a.i_ == b.i_;
    return a.r_ == b.r_;
  }

  friend bool operator<(const Scalar& a, const Scalar& b) {
    if (a.r_ != b.r_) return a.r_ < b.r_;
    if (a.is_int_ && b.is_int_) return a.i_ < b.i_;
    return a.is_int_ && !b.is_int_;  // int sorts before the equal real
  }

 private:
  bool is_int_;
  std::int64_t i_;
  double r_;
};

// |a - b| <= eps_abs + eps_rel*|b|, exact when both sides are exact integers
bool scalars_equal(const Scalar& a, const Scalar& b, double eps_abs,
                   double eps_rel);

// absolute defect |a - b|
double scalar_defect(const Scalar& a, const Scalar& b);

// shortest round-trip decimal text for a double
std::string format_double(double v);

}  // namespace ouro
