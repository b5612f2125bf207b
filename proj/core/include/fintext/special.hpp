#pragma once

namespace fintext {

/// Regularized lower incomplete gamma P(a, x), a > 0, x >= 0.
/// Series expansion for x < a + 1, Lentz continued fraction otherwise;
/// absolute accuracy better than 1e-12 for a <= 50 (df <= 100).
double regularized_gamma_p(double a, double x);

/// Regularized upper incomplete gamma Q(a, x) = 1 - P(a, x).
double regularized_gamma_q(double a, double x);

/// Upper tail of the chi-squared distribution with df degrees of freedom.
double chi_squared_upper_tail(double x, double df);

/// Regularized incomplete beta I_x(a, b) via Lentz continued fraction.
double regularized_beta(double x, double a, double b);

/// Two-sided p-value of a Student-t statistic with df degrees of freedom.
double student_t_two_sided_p(double t, double df);

}  // namespace fintext
