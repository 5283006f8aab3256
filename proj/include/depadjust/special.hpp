#pragma once

namespace depadjust {

// Regularized incomplete beta function I_x(a, b), continued-fraction
// evaluation. Valid for a, b > 0 and x in [0, 1].
double incomplete_beta(double a, double b, double x);

// Inverse of I_x(a, b) in x, solved by bisection to absolute tolerance 1e-10.
double incomplete_beta_inverse(double a, double b, double p);

}  // namespace depadjust
