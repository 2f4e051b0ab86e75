#pragma once

namespace isac {

// Complementary error function and its inverse, implemented in-repo so the
// core stays dependency-free. erfc uses the Maclaurin series of erf below
// |x| = 2 and a Lentz continued fraction above; erfcinv refines a coarse
// asymptotic guess with safeguarded Newton steps until the residual is at
// machine level, which makes erfc(erfcinv(y)) == y to ~1e-15.

double erfc(double x);

/// Inverse of erfc on (0, 2).
double erfcinv(double y);

/// Inverse of erf on (-1, 1).
double erfinv(double y);

}  // namespace isac
