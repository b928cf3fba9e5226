#include "ouro/scalar.hpp"

#include <charconv>
#include <cstdlib>

namespace ouro {

std::string format_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string Scalar::str() const {
  if (is_int_) return std::to_string(i_);
  return format_double(r_);
}

bool scalars_equal(const Scalar& a, const Scalar& b, double eps_abs,
                   double eps_rel) {
  if (a.is_int() && b.is_int()) return a.as_int() == b.as_int();
  return std::fabs(a.value() - b.value()) <=
         eps_abs + eps_rel * std::fabs(b.value());
}

double scalar_defect(const Scalar& a, const Scalar& b) {
  if (a.is_int() && b.is_int()) {
    return std::fabs(static_cast<double>(a.as_int() - b.as_int()));
  }
  return std::fabs(a.value() - b.value());
}

}  // namespace ouro
