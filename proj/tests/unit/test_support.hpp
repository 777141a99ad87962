#pragma once

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "sublorentz/mat2c.hpp"

namespace testsupport {

using sublorentz::cplx;
using sublorentz::Mat2C;

class Random {
 public:
  explicit Random(std::uint64_t seed) : eng_(seed) {}
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(eng_); }
  cplx complex(double r) { return {uniform(-r, r), uniform(-r, r)}; }
  Mat2C matrix(double r) { return {complex(r), complex(r), complex(r), complex(r)}; }
  std::array<double, 3> vec3(double r) { return {uniform(-r, r), uniform(-r, r), uniform(-r, r)}; }
  std::array<double, 3> unit3() {
    for (;;) {
      auto v = vec3(1.0);
      const double n = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
      if (n > 0.1 && n <= 1.0) return {v[0] / n, v[1] / n, v[2] / n};
    }
  }

 private:
  std::mt19937_64 eng_;
};

inline ::testing::AssertionResult MatNear(const Mat2C& got, const Mat2C& want, double tol) {
  const double d = sublorentz::max_abs_diff(got, want);
  if (d <= tol) return ::testing::AssertionSuccess();
  return ::testing::AssertionFailure() << "max entry deviation " << d << " exceeds " << tol;
}

}  // namespace testsupport
