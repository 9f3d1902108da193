#pragma once

namespace casimir {

struct PlateKernelInput {
  double gamma;  // transverse energy sqrt(omega_n^2 + k_perp^2)
  double L;
  double z;
  double zprime; // both positions in [0, L]
};

/// Image-sum numerator of the L-dependent propagator block between the
/// plates:
///
///   B = e^{gL}(e^{-g(|z|+|z'|)} + e^{-g(|z-L|+|z'-L|)})
///       - e^{-g(|z|+|z'-L|)} - e^{-g(|z-L|+|z'|)},   g = gamma.
///
/// Callers apply the prefactor -1/(4 gamma sinh(gamma L)). The relative
/// minus between the image groups makes the full propagator vanish on
/// the plates (the transverse-polarization block); the scalar channel
/// with flipped group sign is handled by scalar_propagator_neumann.
/// Exponents are combined before exponentiation, so the value is exact
/// until it genuinely exceeds the double range (gamma L ~ 700 with z
/// and z' both near a plate).
double boundary_kernel(const PlateKernelInput& inp);

/// Coincident-point z-integral of the boundary block per transverse
/// mode, in closed form: L gamma / (e^{2 gamma L} - 1). Underflows
/// cleanly to zero for large gamma L.
double integrated_coincident_kernel(double gamma, double L);

/// Same quantity via adaptive quadrature of the kernel over z, kept as
/// an independent check. The quadrature route contains a
/// gamma-independent contact term +1/2 that the closed form (defined
/// by dimensional regularization, which discards scaleless pieces)
/// does not; it is removed here so both routes agree.
double coincident_kernel_quadrature(double gamma, double L,
                                    double rel_tol = 1e-12);

/// Gauge-field block of the static 3d theory: (1 - d) times the scalar
/// block, supported at the physical dimension d = 2 only (one scalar
/// minus the would-be d-1 transverse polarizations).
/// Throws std::invalid_argument for d != 2.
double gauge_kernel_value(double gamma, double L, int d);

/// Mixed-representation scalar propagator obeying the Neumann
/// condition dD/dz = 0 on both plates, built from the image sum with
/// both groups positive:
///   2 gamma D = e^{-g|z-z'|}
///     + [e^{-gu} + e^{-g(2L-u)} + e^{-g(2L-z+z')} + e^{-g(2L+z-z')}]
///       / (1 - e^{-2gL}),    u = z + z'.
/// All exponents are non-positive, so gamma L up to 1e3 is safe.
double scalar_propagator_neumann(double gamma, double L, double z,
                                 double zprime);

/// One-sided finite-difference residual |dD/dz| / |D| of the Neumann
/// propagator at z = eps with z' = L/3. Scales linearly in eps.
double neumann_check(double gamma, double L, double eps);

} // namespace casimir
