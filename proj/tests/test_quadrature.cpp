#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <numbers>

#include "doctest.h"
#include "wavetraj/quadrature.hpp"

using namespace wavetraj;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("known integrals") {
  CHECK(integrate([](double x) { return x * x; }, 0.0, 1.0) ==
        doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(integrate([](double x) { return std::sin(x); }, 0.0, kPi) ==
        doctest::Approx(2.0).epsilon(1e-14));
  CHECK(integrate([](double x) { return std::exp(-x * x); }, -8.0, 8.0) ==
        doctest::Approx(std::sqrt(kPi)).epsilon(1e-13));
  // oscillatory
  CHECK(integrate([](double x) { return std::cos(40.0 * x); }, 0.0, 1.0) ==
        doctest::Approx(std::sin(40.0) / 40.0).epsilon(1e-12));
}

TEST_CASE("orientation and degenerate interval") {
  CHECK(integrate([](double x) { return x; }, 1.0, 0.0) ==
        doctest::Approx(-0.5).epsilon(1e-15));
  CHECK(integrate([](double x) { return x; }, 2.0, 2.0) == 0.0);
}

TEST_CASE("split points partition the interval") {
  // kinked integrand: |x| over [-1, 2]
  const double kink[] = {0.0};
  const double v = integrate_split([](double x) { return std::abs(x); }, -1.0, 2.0, kink);
  CHECK(v == doctest::Approx(2.5).epsilon(1e-14));
}

TEST_CASE("budget exhaustion reports failure") {
  QuadratureOptions opts;
  opts.max_intervals = 4;
  opts.rel_tol = 1e-14;
  const auto nasty = [](double x) { return std::sin(1.0 / (x + 1e-3)); };
  CHECK_THROWS_AS(integrate(nasty, 0.0, 1.0, opts), Error);
  try {
    integrate(nasty, 0.0, 1.0, opts);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::QuadratureFailure);
  }
}
