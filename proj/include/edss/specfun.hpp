#pragma once

namespace edss {

// Regularized lower incomplete gamma P(a, x) = γ(a,x)/Γ(a), a > 0, x >= 0.
// Series expansion for x < a+1, continued fraction otherwise; absolute
// accuracy ~1e-14, well inside the 1e-10 contract.
double reg_gamma_p(double a, double x);

// Upper tail Q(a, x) = 1 - P(a, x).
double reg_gamma_q(double a, double x);

// Regularized incomplete beta I_x(a, b), 0 <= x <= 1, via the modified
// Lentz continued fraction with the symmetry flip at x > (a+1)/(a+b+2).
double reg_beta(double a, double b, double x);

// Upper tail of the chi-squared distribution: P(X >= x) with df degrees of
// freedom.  df = 0 degenerates to a point mass at 0.
double chi_squared_sf(double x, int df);

// Two-sided p-value of a Student t statistic with nu degrees of freedom:
// P(|T| >= |t|) = I_{nu/(nu+t^2)}(nu/2, 1/2).
double student_t_two_sided(double t, double nu);

}  // namespace edss
