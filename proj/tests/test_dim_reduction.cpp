#include "doctest.h"

#include <cmath>
#include <stdexcept>

#include "casimir/dim_reduction.hpp"
#include "casimir/domain.hpp"
#include "casimir/eft_correction.hpp"

using casimir::f0_3d;
using casimir::f1_3d;
using casimir::f1_3d_kernel_path;
using casimir::match_highT;
using casimir::MatchReport;
using casimir::PlateSystem;
using casimir::SignConvention;
using casimir::unit_operator_f;

namespace {

double rel_err(double got, double want) {
  return std::abs(got - want) / std::abs(want);
}

} // namespace

TEST_CASE("reduced unit-operator density") {
  CHECK(rel_err(unit_operator_f(0.1, 1.0, 0.0), -200.193212444871674417) <=
        1e-14);
  // b1 = 1 removes the volume piece entirely.
  CHECK(rel_err(unit_operator_f(0.1, 1.0, 1.0), 19.1313298015585171125) <=
        1e-14);
  CHECK_THROWS_AS(unit_operator_f(0.0, 1.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(unit_operator_f(1.0, -1.0, 0.0), std::invalid_argument);
}

TEST_CASE("reduced free-field and correction densities") {
  CHECK(rel_err(f0_3d(1.0), -0.0478283245038962927813) <= 1e-14);
  CHECK(rel_err(f0_3d(2.0), -0.0119570811259740731953) <= 1e-14);
  CHECK(rel_err(f1_3d(1.0, 0.3, 0.4), -(0.3 + 0.4) * f0_3d(1.0)) <= 1e-15);
  CHECK_THROWS_AS(f0_3d(0.0), std::invalid_argument);
  CHECK_THROWS_AS(f1_3d(-1.0, 0.1, 0.1), std::invalid_argument);
}

TEST_CASE("kernel quadrature reproduces the reduced correction") {
  CHECK(rel_err(f1_3d_kernel_path(1.0, 1.0, 1.0), f1_3d(1.0, 1.0, 1.0)) <=
        1e-10);
  CHECK(rel_err(f1_3d_kernel_path(3.0, 0.5, 0.5), f1_3d(3.0, 0.5, 0.5)) <=
        1e-10);
}

TEST_CASE("scalar and gauge kernel routes carry equal weight") {
  // Each route alone integrates to zeta(3)/8 pi L^2; the gauge side
  // enters with the opposite sign and a single transverse mode.
  const double scalar_only = f1_3d_kernel_path(1.0, 1.0, 0.0);
  const double gauge_only = f1_3d_kernel_path(1.0, 0.0, 1.0);
  CHECK(rel_err(scalar_only, 0.0478283245038962927813) <= 1e-10);
  CHECK(rel_err(gauge_only, 0.0478283245038962927813) <= 1e-10);
}

TEST_CASE("hot-limit match holds under both conventions") {
  const PlateSystem sys{1.0, 0.1, 1000.0, 1.0 / 137.036};
  for (SignConvention conv :
       {SignConvention::as_printed, SignConvention::reconciled}) {
    CAPTURE(casimir::convention_name(conv));
    const MatchReport rep = match_highT(sys, conv);
    CHECK(rep.high_t_regime);
    CHECK(rep.residual < 1e-13);
    CHECK(rep.convention == conv);
  }
}

TEST_CASE("hot-limit match is an identity even outside the hot regime") {
  const PlateSystem sys{1.0, 1.0, 1000.0, 1.0 / 137.036};
  const MatchReport rep = match_highT(sys, SignConvention::reconciled);
  CHECK(!rep.high_t_regime);
  CHECK(rep.residual < 1e-13);
}

TEST_CASE("hot-limit match reduces to the free field at zero coupling") {
  const PlateSystem off{1.0, 0.1, 1000.0, 0.0};
  const MatchReport rep = match_highT(off, SignConvention::as_printed);
  CHECK(rep.residual < 1e-14);
}
