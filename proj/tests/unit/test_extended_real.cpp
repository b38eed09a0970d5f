#include <cmath>
#include <limits>

#include "doctest.h"
#include "extremal/extended_real.hpp"

using extremal::ExtendedReal;

TEST_CASE("ordering") {
  const auto a = ExtendedReal::finite(1.5);
  const auto inf = ExtendedReal::pos_infinity();
  const auto ninf = ExtendedReal::neg_infinity();
  const auto ind = ExtendedReal::indeterminate(0.0);
  CHECK(ninf < a);
  CHECK(a < inf);
  CHECK(ninf < inf);
  CHECK(a <= ExtendedReal::finite(1.5));
  CHECK_FALSE(ind <= a);
  CHECK_FALSE(a <= ind);
  CHECK_FALSE(ind == ind);
  CHECK((ind <=> a) == std::partial_ordering::unordered);
}

TEST_CASE("arithmetic") {
  const auto inf = ExtendedReal::pos_infinity();
  const auto ninf = ExtendedReal::neg_infinity();
  CHECK((inf + ninf).is_indeterminate());
  CHECK((inf + ExtendedReal::finite(-3)).kind() == ExtendedReal::Kind::pos_inf);
  CHECK((ExtendedReal::finite(2) - ExtendedReal::finite(0.5)).value() == 1.5);
  CHECK((-inf).kind() == ExtendedReal::Kind::neg_inf);
}

TEST_CASE("conversion and formatting") {
  CHECK(ExtendedReal::from_double(std::numeric_limits<double>::infinity()).to_string() == "inf");
  CHECK(ExtendedReal::from_double(-std::numeric_limits<double>::infinity()).to_string() == "-inf");
  CHECK(ExtendedReal::indeterminate().to_string() == "indeterminate");
  CHECK(std::isnan(ExtendedReal::indeterminate(0.0).value()));
  CHECK(ExtendedReal::indeterminate(-0.25).companion() == -0.25);
  CHECK(ExtendedReal::finite(1.0 / 3.0).to_string() == "0.333333333333333");
  CHECK_THROWS(ExtendedReal::from_double(std::nan("")));
  CHECK_THROWS(ExtendedReal::finite(std::numeric_limits<double>::infinity()));
  CHECK(extremal::format_number(1.5772156649015329) == "1.57721566490153");
}
