#pragma once

#include "casimir/free_field.hpp"

namespace casimir {

/// The two published limit forms of the order-alpha correction demand
/// opposite signs for its bulk piece; the library computes under
/// either reading and never silently corrects one into the other.
/// as_printed keeps the bulk piece as -b1 pi^2 L/(45 beta^4);
/// reconciled flips it so the sum f1a + f1b matches the
/// high-temperature closed form and the 3d unit-operator coefficient
/// simultaneously. The audit module quantifies both choices.
enum class SignConvention { as_printed, reconciled };

const char* convention_name(SignConvention c);

/// Bulk piece of the order-alpha correction, exact at all
/// temperatures: a pure L T^4 law with no other scale, so its
/// zeta-regularized value is not merely asymptotic.
double f1a(double beta, double L, double b1, SignConvention conv);

/// Plate piece of the order-alpha correction, b1 * 2L * S(beta, L)
/// with S from inter_sum; the error bound scales accordingly.
SumValue f1b(double beta, double L, double b1, const SumConfig& cfg = {});

/// Low-temperature closed form of f1b:
/// b1 (pi^2/(240 L^3) + pi^2 L/(45 beta^4)).
double f1b_lowT_closed(double beta, double L, double b1);

/// High-temperature closed form of f1b: b1 zeta(3)/(4 pi beta L^2).
double f1b_highT_closed(double beta, double L, double b1);

/// Complete low-temperature free energy per unit area,
/// -pi^2/(720 L^3) [1 - 9 alpha/(32 m L)]; temperature independent.
double two_loop_lowT(double L, double m, double alpha);

/// Complete high-temperature free energy per unit area,
/// -pi^2 L/(45 beta^4) [1 - 3 alpha/(32 m L)] + zeta(3)/(2 pi beta^3)
/// - zeta(3)/(8 pi beta L^2) [1 - 3 alpha/(16 m L)].
double two_loop_highT(double beta, double L, double m, double alpha);

/// Assembled free energy F0 + f1a + f1b with the per-term breakdown in
/// parts (keys blackbody, plate_constant, boundary_sum, order_alpha_a,
/// order_alpha_b). When the system sits in a definite temperature
/// regime the corresponding closed form is attached as an annotation.
FreeEnergyResult total_free_energy(const PlateSystem& sys,
                                   const SumConfig& cfg = {},
                                   SignConvention conv =
                                       SignConvention::as_printed);

} // namespace casimir
