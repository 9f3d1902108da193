#include "casimir/propagator.hpp"

#include <cmath>
#include <stdexcept>

#include "casimir/quadrature.hpp"

namespace casimir {

namespace {

void check_gamma_l(const char* who, double gamma, double L) {
  if (!(gamma > 0.0) || !std::isfinite(gamma))
    throw std::invalid_argument(std::string(who) + ": gamma must be positive");
  if (!(L > 0.0) || !std::isfinite(L))
    throw std::invalid_argument(std::string(who) + ": L must be positive");
}

} // namespace

double boundary_kernel(const PlateKernelInput& inp) {
  check_gamma_l("boundary_kernel", inp.gamma, inp.L);
  if (inp.z < 0.0 || inp.z > inp.L || inp.zprime < 0.0 || inp.zprime > inp.L)
    throw std::invalid_argument(
        "boundary_kernel: z and zprime must lie in [0, L]");
  // Combining exponents first collapses the four images to
  //   2 cosh(gamma (L - z - z')) - 2 e^{-gamma L} cosh(gamma (z - z')).
  const double g = inp.gamma;
  const double u = inp.z + inp.zprime;
  const double v = inp.z - inp.zprime;
  return 2.0 * std::cosh(g * (inp.L - u)) -
         2.0 * std::exp(-g * inp.L) * std::cosh(g * v);
}

double integrated_coincident_kernel(double gamma, double L) {
  check_gamma_l("integrated_coincident_kernel", gamma, L);
  return L * gamma / std::expm1(2.0 * gamma * L);
}

double coincident_kernel_quadrature(double gamma, double L, double rel_tol) {
  check_gamma_l("coincident_kernel_quadrature", gamma, L);
  // gamma B(z, z) / (4 sinh(gamma L)) with every exponent pushed
  // non-positive, so large gamma L cannot overflow the intermediate.
  const double denom = -std::expm1(-2.0 * gamma * L);
  auto integrand = [gamma, L, denom](double z) {
    const double num = std::exp(-2.0 * gamma * (L - z)) +
                       std::exp(-2.0 * gamma * z) -
                       2.0 * std::exp(-2.0 * gamma * L);
    return 0.5 * gamma * num / denom;
  };
  const QuadratureResult q = integrate(integrand, 0.0, L, rel_tol);
  return 0.5 - q.value;
}

double gauge_kernel_value(double gamma, double L, int d) {
  if (d != 2)
    throw std::invalid_argument(
        "gauge_kernel_value: only the physical case d = 2 is supported");
  return (1.0 - d) * integrated_coincident_kernel(gamma, L);
}

double scalar_propagator_neumann(double gamma, double L, double z,
                                 double zprime) {
  check_gamma_l("scalar_propagator_neumann", gamma, L);
  if (z < 0.0 || z > L || zprime < 0.0 || zprime > L)
    throw std::invalid_argument(
        "scalar_propagator_neumann: z and zprime must lie in [0, L]");
  const double u = z + zprime;
  const double v = z - zprime;
  const double images =
      (std::exp(-gamma * u) + std::exp(-gamma * (2.0 * L - u)) +
       std::exp(-gamma * (2.0 * L - v)) + std::exp(-gamma * (2.0 * L + v))) /
      (-std::expm1(-2.0 * gamma * L));
  return (std::exp(-gamma * std::abs(v)) + images) / (2.0 * gamma);
}

double neumann_check(double gamma, double L, double eps) {
  check_gamma_l("neumann_check", gamma, L);
  if (!(eps > 0.0) || eps >= L / 3.0)
    throw std::invalid_argument(
        "neumann_check: eps must lie in (0, L/3)");
  const double zp = L / 3.0;
  const double d0 = scalar_propagator_neumann(gamma, L, 0.0, zp);
  const double d1 = scalar_propagator_neumann(gamma, L, eps, zp);
  return std::abs(d1 - d0) / eps / std::abs(d1);
}

} // namespace casimir
