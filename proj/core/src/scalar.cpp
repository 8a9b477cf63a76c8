#include "liext/scalar.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace liext {

Scalar Scalar::parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  try {
    return Scalar::exact(Rat(s));
  } catch (const std::exception&) {
    throw std::invalid_argument("bad rational literal: '" + s + "'");
  }
}

bool Scalar::is_zero(double tol) const {
  if (mode_ == Mode::exact) return v_ == 0;
  return std::abs(to_double()) <= tol;
}

std::string Scalar::str() const {
  if (mode_ == Mode::exact) return v_.str();
  return format_double(to_double());
}

std::string format_double(double v) {
  char buf[64];
  for (int prec = 1; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof buf, "%.*g", prec, v);
    double back = std::strtod(buf, nullptr);
    if (back == v) return buf;
  }
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

} // namespace liext
