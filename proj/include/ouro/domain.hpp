#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ouro/rng.hpp"
#include "ouro/scalar.hpp"

namespace ouro {

class NotEnumerable : public std::runtime_error {
 public:
  explicit NotEnumerable(const std::string& what) : std::runtime_error(what) {}
};

class DomainParseError : public std::runtime_error {
 public:
  DomainParseError(const std::string& what, std::size_t pos)
      : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"),
        position(pos) {}
  std::size_t position;
};

struct SampleWindow {
  double lo = -1e6;
  double hi = 1e6;
};

// A membership-testable set of scalars: finite set, integer range,
// real interval (possibly unbounded ends), all reals, or all integers.
class Domain {
 public:
  enum class Kind { FiniteSet, IntRange, RealInterval, AllReals, AllIntegers };

  static Domain finite_set(std::vector<Scalar> elems);
  static Domain int_range(std::int64_t lo, std::int64_t hi);
  static Domain real_interval(double lo, double hi, bool lo_closed,
                              bool hi_closed);
  static Domain all_reals();
  static Domain all_integers();

  Kind kind() const { return kind_; }
  const std::vector<Scalar>& elements() const { return elements_; }
  std::int64_t int_lo() const { return lo_i_; }
  std::int64_t int_hi() const { return hi_i_; }
  double real_lo() const { return lo_r_; }
  double real_hi() const { return hi_r_; }
  bool lo_closed() const { return lo_closed_; }
  bool hi_closed() const { return hi_closed_; }

  bool contains(const Scalar& v) const;

  // Number of members when finite (FiniteSet, IntRange), nullopt otherwise.
  std::optional<std::uint64_t> finite_size() const;

  // Ascending members of a finite domain; throws NotEnumerable otherwise.
  std::vector<Scalar> enumerate() const;

  Scalar sample_one(Rng& rng, const SampleWindow& window = {}) const;
  std::vector<Scalar> sample(std::uint64_t k, Rng& rng,
                             const SampleWindow& window = {}) const;

  std::string str() const;

  friend bool operator==(const Domain& a, const Domain& b);

 private:
  Kind kind_ = Kind::AllReals;
  std::vector<Scalar> elements_;
  std::int64_t lo_i_ = 0, hi_i_ = 0;
  double lo_r_ = 0, hi_r_ = 0;
  bool lo_closed_ = true, hi_closed_ = true;
};

// Either a finite power A^n or a mixed product A1 x ... x An. A mixed
// product whose factors are all equal normalizes to a power.
class DomainSignature {
 public:
  static DomainSignature power(Domain base, int arity);
  static DomainSignature mixed(std::vector<Domain> factors);

  int arity() const { return arity_; }
  bool is_power() const { return power_; }
  const Domain& base() const { return factors_.front(); }
  const Domain& factor(int i) const {
    return power_ ? factors_.front() : factors_[static_cast<std::size_t>(i)];
  }

  std::optional<std::uint64_t> finite_size() const;
  std::vector<Scalar> sample_point(Rng& rng,
                                   const SampleWindow& window = {}) const;
  // Visits every point of a finite signature in lexicographic order.
  void enumerate_points(
      const std::function<void(const std::vector<Scalar>&)>& visit) const;

  std::string str() const;

  friend bool operator==(const DomainSignature& a, const DomainSignature& b);

 private:
  bool power_ = true;
  int arity_ = 1;
  std::vector<Domain> factors_;  // one entry when power_, n entries otherwise
};

// Mini-syntax: set{1,2,3}, int[-50..50], real[0,1], real(0,1], R, Z,
// powers R^3, mixed products `real[0,1] x int[0..9]`.
Domain parse_domain(const std::string& text);
DomainSignature parse_signature(const std::string& text);

}  // namespace ouro
