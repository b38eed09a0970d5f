#include "extremal/extended_real.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace extremal {

ExtendedReal ExtendedReal::finite(double v) {
  if (!std::isfinite(v)) {
    throw std::invalid_argument("ExtendedReal::finite: value is not finite");
  }
  return ExtendedReal(Kind::finite, v);
}

ExtendedReal ExtendedReal::from_double(double v) {
  if (std::isnan(v)) {
    throw std::invalid_argument("ExtendedReal::from_double: NaN");
  }
  if (std::isinf(v)) {
    return v > 0 ? pos_infinity() : neg_infinity();
  }
  return ExtendedReal(Kind::finite, v);
}

double ExtendedReal::value() const {
  switch (kind_) {
    case Kind::finite:
      return value_;
    case Kind::pos_inf:
      return std::numeric_limits<double>::infinity();
    case Kind::neg_inf:
      return -std::numeric_limits<double>::infinity();
    case Kind::indeterminate:
      break;
  }
  return std::numeric_limits<double>::quiet_NaN();
}

ExtendedReal ExtendedReal::operator-() const {
  switch (kind_) {
    case Kind::finite:
      return ExtendedReal(Kind::finite, -value_);
    case Kind::pos_inf:
      return neg_infinity();
    case Kind::neg_inf:
      return pos_infinity();
    case Kind::indeterminate:
      break;
  }
  return indeterminate(-value_);
}

ExtendedReal operator+(const ExtendedReal& a, const ExtendedReal& b) {
  if (a.is_indeterminate() || b.is_indeterminate()) {
    return ExtendedReal::indeterminate();
  }
  if (a.is_finite() && b.is_finite()) {
    return ExtendedReal::from_double(a.value_ + b.value_);
  }
  if (a.is_infinite() && b.is_infinite() && a.kind_ != b.kind_) {
    return ExtendedReal::indeterminate();
  }
  return a.is_infinite() ? a : b;
}

std::partial_ordering operator<=>(const ExtendedReal& a, const ExtendedReal& b) {
  if (a.is_indeterminate() || b.is_indeterminate()) {
    return std::partial_ordering::unordered;
  }
  return a.value() <=> b.value();
}

bool operator==(const ExtendedReal& a, const ExtendedReal& b) {
  if (a.is_indeterminate() || b.is_indeterminate()) {
    return false;
  }
  return a.value() == b.value();
}

std::string format_number(double v) {
  if (std::isnan(v)) {
    return "nan";
  }
  if (std::isinf(v)) {
    return v > 0 ? "inf" : "-inf";
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

std::string ExtendedReal::to_string() const {
  if (is_indeterminate()) {
    return "indeterminate";
  }
  return format_number(value());
}

}  // namespace extremal
