#include <doctest.h>

#include <cmath>

#include "anharm/sturm.hpp"
#include "anharm/tridiag.hpp"

using namespace anharm;

TEST_CASE("sturm chain isolates and refines simple real roots") {
  // (u - 2)(u + 1)(u - 0.5) = u^3 - 1.5u^2 - 1.5u + 1... expand:
  // (u-2)(u+1) = u^2 - u - 2; times (u - 0.5): u^3 - 1.5 u^2 - 1.5 u + 1
  SturmChain chain({1.0, -1.5, -1.5, 1.0});
  CHECK(chain.count_roots(-10.0, 10.0) == 3);
  CHECK(chain.count_roots(0.0, 10.0) == 2);
  auto roots = chain.roots(1e-12);
  REQUIRE(roots.size() == 3);
  CHECK(roots[0] == doctest::Approx(-1.0).epsilon(1e-10));
  CHECK(roots[1] == doctest::Approx(0.5).epsilon(1e-10));
  CHECK(roots[2] == doctest::Approx(2.0).epsilon(1e-10));
}

TEST_CASE("descartes counts are exact for real-rooted polynomials") {
  // roots -3, -1, 2: (u+3)(u+1)(u-2) = u^3 + 2u^2 - 5u - 6
  std::vector<double> c = {-6.0, -5.0, 2.0, 1.0};
  CHECK(descartes_positive(c) == 1);
  CHECK(descartes_negative(c) == 2);
}

TEST_CASE("tridiagonal bisection finds certified eigenvalues") {
  // [[0, s], [s, 0]] with s = 2 sqrt(2): eigenvalues -+ 2 sqrt 2
  double s = 2.0 * std::sqrt(2.0);
  std::vector<double> diag = {0.0, 0.0}, off = {s};
  auto ev = tridiag_eigenvalues(diag, off);
  REQUIRE(ev.size() == 2);
  CHECK(ev[0] == doctest::Approx(-s).epsilon(1e-13));
  CHECK(ev[1] == doctest::Approx(s).epsilon(1e-13));
}

TEST_CASE("tridiagonal count below") {
  std::vector<double> diag = {1.0, 3.0, 5.0}, off = {0.0, 0.0};
  CHECK(tridiag_count_below(diag, off, 0.0) == 0);
  CHECK(tridiag_count_below(diag, off, 2.0) == 1);
  CHECK(tridiag_count_below(diag, off, 10.0) == 3);
}

TEST_CASE("dense solve") {
  // 2x + y = 5, x - y = 1 -> x = 2, y = 1
  auto x = dense_solve({2.0, 1.0, 1.0, -1.0}, {5.0, 1.0}, 2);
  CHECK(x[0] == doctest::Approx(2.0));
  CHECK(x[1] == doctest::Approx(1.0));
}
