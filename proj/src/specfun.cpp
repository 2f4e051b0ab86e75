#include "isac/specfun.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "isac/units.hpp"

namespace isac {

namespace {

constexpr double kTwoOverSqrtPi = 1.1283791670955125739;  // 2 / sqrt(pi)

// erf via its Maclaurin series; converges for any argument and loses at most
// ~3 digits to cancellation at |x| = 2 where the large-x branch takes over.
double erf_series(double x) {
  const double x2 = x * x;
  double term = x;
  double sum = x;
  for (int n = 1; n < 300; ++n) {
    term *= -x2 / n;
    const double add = term / (2 * n + 1);
    sum += add;
    if (std::abs(add) <= 1e-18 * std::abs(sum)) break;
  }
  return kTwoOverSqrtPi * sum;
}

// Continued fraction erfc(x) = exp(-x^2) / (x sqrt(pi)) * K, with
// K = 1 / (1 + q / (1 + 2q / (1 + 3q / ...))), q = 1 / (2 x^2),
// evaluated by the modified Lentz scheme. Reliable for x >= 2.
double erfc_cf(double x) {
  const double q = 0.5 / (x * x);
  const double tiny = 1e-300;
  double f = tiny, c = f, d = 0.0;
  for (int n = 0; n < 500; ++n) {
    const double a = (n == 0) ? 1.0 : n * q;
    const double b = 1.0;
    d = b + a * d;
    if (d == 0.0) d = tiny;
    c = b + a / c;
    if (c == 0.0) c = tiny;
    d = 1.0 / d;
    const double delta = c * d;
    f *= delta;
    if (std::abs(delta - 1.0) < 1e-17) break;
  }
  return std::exp(-x * x) / (x * std::sqrt(kPi)) * f;
}

}  // namespace

double erfc(double x) {
  if (std::isnan(x)) return x;
  const double ax = std::abs(x);
  double value;
  if (ax < 2.0) {
    value = 1.0 - erf_series(ax);
  } else if (ax > 27.0) {
    value = 0.0;  // underflows double precision
  } else {
    value = erfc_cf(ax);
  }
  return x >= 0.0 ? value : 2.0 - value;
}

double erfcinv(double y) {
  if (!(y > 0.0) || !(y < 2.0))
    throw std::domain_error("erfcinv: argument must lie in (0, 2)");
  if (y == 1.0) return 0.0;
  // Solve on the y < 1 side and mirror.
  const bool mirrored = y > 1.0;
  const double target = mirrored ? 2.0 - y : y;

  // Initial guess: linearisation near y = 1, asymptotic tail otherwise, the
  // tail estimate x ~ sqrt(ln(1/(y sqrt(pi) x))) iterated once.
  double x;
  if (target > 0.5) {
    x = (1.0 - target) * std::sqrt(kPi) / 2.0;
  } else {
    x = std::sqrt(std::max(1.0, -std::log(target)));
    x = std::sqrt(std::max(1.0, -std::log(target * std::sqrt(kPi) * x)));
  }

  // Safeguarded Newton on d/dx erfc = -2/sqrt(pi) exp(-x^2), keeping the
  // best-residual iterate; stops on an exact root or when no representable
  // progress remains.
  double lo = 0.0, hi = 30.0;
  double best_x = x;
  double best_r = std::numeric_limits<double>::infinity();
  for (int iter = 0; iter < 200; ++iter) {
    const double r = erfc(x) - target;
    if (std::abs(r) < best_r) {
      best_r = std::abs(r);
      best_x = x;
    }
    if (r == 0.0) break;
    if (r > 0.0) lo = x; else hi = x;
    const double step = r / (kTwoOverSqrtPi * std::exp(-x * x));
    double next = x + step;
    if (!(next > lo) || !(next < hi)) next = 0.5 * (lo + hi);
    if (next == x) break;
    x = next;
  }
  return mirrored ? -best_x : best_x;
}

double erfinv(double y) {
  if (!(y > -1.0) || !(y < 1.0))
    throw std::domain_error("erfinv: argument must lie in (-1, 1)");
  return erfcinv(1.0 - y);
}

}  // namespace isac
