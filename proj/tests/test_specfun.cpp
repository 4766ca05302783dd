#include <doctest.h>

#include <cmath>

#include "edss/errors.hpp"
#include "edss/specfun.hpp"

using namespace edss;

// ---------------------------------------------------------------------------
// Chi-squared survival function
// ---------------------------------------------------------------------------

TEST_CASE("chi-squared tail matches reference values at df = 7") {
  // Independently computed: sf(10.23, 7) = 0.17590993654282647 and the
  // critical point sf(14.067, 7) = 0.05000244468.
  CHECK(chi_squared_sf(10.23, 7) ==
        doctest::Approx(0.17590993654282647).epsilon(1e-10));
  CHECK(chi_squared_sf(14.067, 7) ==
        doctest::Approx(0.050002444680797654).epsilon(1e-10));
}

TEST_CASE("chi-squared tail with two degrees of freedom is exp(-x/2)") {
  for (double x : {0.0, 0.1, 0.5, 1.0, 2.0, 5.0, 10.0, 25.0, 60.0}) {
    CHECK(chi_squared_sf(x, 2) ==
          doctest::Approx(std::exp(-x / 2.0)).epsilon(1e-12));
  }
}

TEST_CASE("chi-squared tail at df = 1 matches the normal fold") {
  // sf(x, 1) = 2 * (1 - Phi(sqrt(x))) = erfc(sqrt(x/2)).
  for (double x : {0.5, 1.0, 4.0, 9.0, 16.0}) {
    CHECK(chi_squared_sf(x, 1) ==
          doctest::Approx(std::erfc(std::sqrt(x / 2.0))).epsilon(1e-10));
  }
  // The 2-cell toy fixture: chi = 16, df = 1.
  CHECK(chi_squared_sf(16.0, 1) ==
        doctest::Approx(6.334248366623988e-05).epsilon(1e-9));
}

TEST_CASE("chi-squared tail is monotone in x and in df") {
  double prev = 1.0;
  for (double x = 0.0; x <= 40.0; x += 0.5) {
    double cur = chi_squared_sf(x, 7);
    CHECK(cur <= prev + 1e-15);
    prev = cur;
  }
  // More degrees of freedom push mass to the right: sf grows with df.
  for (int df = 1; df < 20; ++df)
    CHECK(chi_squared_sf(8.0, df) < chi_squared_sf(8.0, df + 1));
}

TEST_CASE("chi-squared boundary behavior") {
  CHECK(chi_squared_sf(0.0, 7) == doctest::Approx(1.0));
  // df = 0 is the vacuous test: a point mass at zero.
  CHECK(chi_squared_sf(0.0, 0) == doctest::Approx(1.0));
  CHECK(chi_squared_sf(0.5, 0) == doctest::Approx(0.0));
  CHECK_THROWS_AS(chi_squared_sf(-1.0, 7), Error);
  CHECK_THROWS_AS(chi_squared_sf(1.0, -1), Error);
}

// ---------------------------------------------------------------------------
// Regularized gamma
// ---------------------------------------------------------------------------

TEST_CASE("regularized gamma halves sum to one") {
  for (double a : {0.5, 1.0, 3.5, 10.0, 40.0}) {
    for (double x : {0.01, 0.5, 1.0, 3.0, 9.0, 42.0}) {
      CHECK(reg_gamma_p(a, x) + reg_gamma_q(a, x) ==
            doctest::Approx(1.0).epsilon(1e-12));
    }
  }
}

TEST_CASE("regularized gamma at a = 1 is the exponential CDF") {
  for (double x : {0.1, 1.0, 2.5, 7.0}) {
    CHECK(reg_gamma_p(1.0, x) ==
          doctest::Approx(1.0 - std::exp(-x)).epsilon(1e-12));
  }
}

// ---------------------------------------------------------------------------
// Student t two-sided p-values
// ---------------------------------------------------------------------------

TEST_CASE("student t closed forms at low degrees of freedom") {
  // nu = 1 (Cauchy): P(|T| >= 1) = 1/2 exactly.
  CHECK(student_t_two_sided(1.0, 1.0) == doctest::Approx(0.5).epsilon(1e-12));
  // nu = 2 at t = sqrt(2): p = 1 - sqrt(2)/2.
  CHECK(student_t_two_sided(std::sqrt(2.0), 2.0) ==
        doctest::Approx(1.0 - std::sqrt(2.0) / 2.0).epsilon(1e-12));
}

TEST_CASE("student t fixtures across a realistic spread") {
  // (t, nu, two-sided p) triples verified against an independent
  // implementation of the incomplete-beta tail.
  struct Row {
    double t, nu, p;
  };
  const Row rows[] = {
      {-2.9991938, 42.0, 0.004536093994839054},
      {0.78900782, 49.0, 0.43390858492771744},
      {1.47637648, 26.0, 0.15185290031339083},
      {0.21373854, 27.0, 0.8323568126877924},
      {1.28959683, 16.0, 0.21552111632577547},
      {-0.8108894, 22.0, 0.4261150322623154},
      {-0.2195677, 12.0, 0.8298984027862095}};
  for (const Row& r : rows) {
    CHECK(student_t_two_sided(r.t, r.nu) ==
          doctest::Approx(r.p).epsilon(1e-8));
  }
}

TEST_CASE("student t symmetry, null point, and monotonicity") {
  for (double t : {0.3, 1.1, 2.7}) {
    CHECK(student_t_two_sided(t, 10.0) ==
          doctest::Approx(student_t_two_sided(-t, 10.0)).epsilon(1e-14));
  }
  CHECK(student_t_two_sided(0.0, 5.0) == doctest::Approx(1.0));
  double prev = 1.0;
  for (double t = 0.0; t <= 6.0; t += 0.25) {
    double cur = student_t_two_sided(t, 17.0);
    CHECK(cur <= prev + 1e-15);
    prev = cur;
  }
  CHECK_THROWS_AS(student_t_two_sided(1.0, 0.0), Error);
}

// ---------------------------------------------------------------------------
// Regularized beta
// ---------------------------------------------------------------------------

TEST_CASE("regularized beta endpoints, symmetry, and uniform case") {
  CHECK(reg_beta(2.0, 3.0, 0.0) == doctest::Approx(0.0));
  CHECK(reg_beta(2.0, 3.0, 1.0) == doctest::Approx(1.0));
  // I_x(1,1) = x (uniform CDF).
  for (double x : {0.1, 0.25, 0.7, 0.95})
    CHECK(reg_beta(1.0, 1.0, x) == doctest::Approx(x).epsilon(1e-12));
  // Reflection: I_x(a,b) = 1 - I_{1-x}(b,a).
  for (double x : {0.2, 0.5, 0.8}) {
    CHECK(reg_beta(2.5, 4.0, x) ==
          doctest::Approx(1.0 - reg_beta(4.0, 2.5, 1.0 - x)).epsilon(1e-12));
  }
  CHECK_THROWS_AS(reg_beta(2.0, 3.0, -0.1), Error);
  CHECK_THROWS_AS(reg_beta(2.0, 3.0, 1.1), Error);
}
