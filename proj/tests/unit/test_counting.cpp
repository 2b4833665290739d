#include <cmath>

#include "doctest.h"
#include "parsicompact/counting.hpp"
#include "support.hpp"

using namespace parsicompact;

TEST_SUITE("counting") {
  TEST_CASE("base case") {
    CHECK(count_mixed(1, 0) == 1);
    CHECK(count_mixed(1, 1) == 0);
    CHECK(count_mixed(1, 5) == 0);
    CHECK(count_total_mixed(1) == 1);
  }

  TEST_CASE("small values") {
    CHECK(count_mixed(2, 0) == 1);
    CHECK(count_mixed(3, 0) == 3);
    CHECK(count_mixed(3, 1) == 1);
    CHECK(count_total_mixed(2) == 1);
    CHECK(count_total_mixed(3) == 4);
    CHECK(count_mixed(5, 4) == 0);
  }

  TEST_CASE("no unlabelled nodes gives Cayley's n^(n-2)") {
    for (std::size_t n = 2; n <= 15; ++n) {
      BigInt cayley = boost::multiprecision::pow(BigInt(n), static_cast<unsigned>(n - 2));
      CHECK(count_mixed(n, 0) == cayley);
    }
  }

  TEST_CASE("n-2 unlabelled nodes gives the cubic trees") {
    for (std::size_t n = 3; n <= 20; ++n) {
      CHECK(count_mixed(n, n - 2) == count_cubic(n));
      if (n <= 18) CHECK(count_cubic(n) == support::odd_double_factorial(static_cast<int>(n) - 2));
    }
  }

  TEST_CASE("table agrees with single lookups") {
    TreeCountTable table(10);
    for (std::size_t n = 1; n <= 10; ++n) {
      CHECK(table.total(n) == count_total_mixed(n));
      for (std::size_t m = 0; m + 2 <= n; ++m) CHECK(table.at(n, m) == count_mixed(n, m));
    }
  }

  TEST_CASE("counts outgrow 64 bits") {
    CHECK(count_total_mixed(25) > BigInt(std::numeric_limits<std::uint64_t>::max()));
    CHECK(count_total_mixed(40) > count_total_mixed(39));
  }

  TEST_CASE("closed form estimate") {
    double e2 = closed_form_estimate(2);
    CHECK(std::isfinite(e2));
    CHECK(e2 > 0.0);
    double prev_ratio = 0.0;
    for (std::size_t n = 4; n <= 12; ++n) {
      double ratio = closed_form_estimate(n) / count_total_mixed(n).convert_to<double>();
      CHECK(ratio > prev_ratio);
      CHECK(ratio < 1.0);
      prev_ratio = ratio;
    }
    for (std::size_t n = 5; n <= 40; ++n) {
      double growth_mixed = closed_form_estimate(n) / closed_form_estimate(n - 1);
      double growth_cubic = count_cubic(n).convert_to<double>() / count_cubic(n - 1).convert_to<double>();
      CHECK(growth_mixed > growth_cubic);
    }
    for (std::size_t n = 2; n <= 50; ++n) CHECK(std::isfinite(closed_form_estimate(n)));
  }
}
