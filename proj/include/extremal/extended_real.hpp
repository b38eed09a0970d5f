#pragma once

#include <compare>
#include <string>

namespace extremal {

/// A real number extended with +inf, -inf and an explicit "indeterminate" state.
///
/// Indeterminate values are produced only where a limit has the form 0 x (-inf)
/// and must not silently decay to a number. They compare unordered with
/// everything, so any bound check involving one is false.
class ExtendedReal {
 public:
  enum class Kind { finite, pos_inf, neg_inf, indeterminate };

  constexpr ExtendedReal() = default;

  static ExtendedReal finite(double v);
  static constexpr ExtendedReal pos_infinity() { return ExtendedReal(Kind::pos_inf, 0.0); }
  static constexpr ExtendedReal neg_infinity() { return ExtendedReal(Kind::neg_inf, 0.0); }
  /// `companion` is an informative numeric limit (e.g. the 0- approached by a sequence).
  static constexpr ExtendedReal indeterminate(double companion = 0.0) {
    return ExtendedReal(Kind::indeterminate, companion);
  }
  /// Maps +-inf doubles to the infinite kinds; NaN is rejected.
  static ExtendedReal from_double(double v);

  constexpr Kind kind() const { return kind_; }
  constexpr bool is_finite() const { return kind_ == Kind::finite; }
  constexpr bool is_infinite() const { return kind_ == Kind::pos_inf || kind_ == Kind::neg_inf; }
  constexpr bool is_indeterminate() const { return kind_ == Kind::indeterminate; }

  /// Finite value, +-inf as IEEE infinities, NaN when indeterminate.
  double value() const;
  /// The stored companion limit of an indeterminate value.
  constexpr double companion() const { return value_; }

  ExtendedReal operator-() const;
  friend ExtendedReal operator+(const ExtendedReal& a, const ExtendedReal& b);
  friend ExtendedReal operator-(const ExtendedReal& a, const ExtendedReal& b) { return a + (-b); }
  friend std::partial_ordering operator<=>(const ExtendedReal& a, const ExtendedReal& b);
  friend bool operator==(const ExtendedReal& a, const ExtendedReal& b);

  /// "inf", "-inf", "indeterminate" or the value with 15 significant digits.
  std::string to_string() const;

 private:
  constexpr ExtendedReal(Kind k, double v) : kind_(k), value_(v) {}

  Kind kind_ = Kind::finite;
  double value_ = 0.0;
};

/// Formats a double with 15 significant digits, using the inf/-inf literals.
std::string format_number(double v);

}  // namespace extremal
