#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "casimir/audit.hpp"
#include "casimir/dim_reduction.hpp"
#include "casimir/domain.hpp"
#include "casimir/eft_correction.hpp"
#include "casimir/free_field.hpp"
#include "casimir/mode_sum.hpp"
#include "casimir/special_functions.hpp"
#include "casimir/thermodynamics.hpp"

namespace py = pybind11;

PYBIND11_MODULE(casimir, m) {
  m.doc() = "Casimir free energy between parallel plates at finite "
            "temperature: mode sums, closed-form limits, the order-alpha "
            "boundary correction under both published sign conventions, "
            "and the consistency audit.";

  py::register_exception<casimir::ConvergenceError>(m, "ConvergenceError",
                                                    PyExc_RuntimeError);

  py::enum_<casimir::Regime>(m, "Regime")
      .value("LowT", casimir::Regime::LowT)
      .value("HighT", casimir::Regime::HighT)
      .value("Crossover", casimir::Regime::Crossover);

  py::enum_<casimir::Method>(m, "Method")
      .value("closed_low", casimir::Method::closed_low)
      .value("closed_high", casimir::Method::closed_high)
      .value("numeric", casimir::Method::numeric);

  py::enum_<casimir::SignConvention>(m, "SignConvention")
      .value("as_printed", casimir::SignConvention::as_printed)
      .value("reconciled", casimir::SignConvention::reconciled);

  py::enum_<casimir::DiffScheme>(m, "DiffScheme")
      .value("central_2", casimir::DiffScheme::central_2)
      .value("central_4", casimir::DiffScheme::central_4);

  py::class_<casimir::PlateSystem>(m, "PlateSystem")
      .def(py::init<double, double, double, double>(), py::arg("L"),
           py::arg("beta"), py::arg("m"), py::arg("alpha"))
      .def_readwrite("L", &casimir::PlateSystem::L)
      .def_readwrite("beta", &casimir::PlateSystem::beta)
      .def_readwrite("m", &casimir::PlateSystem::m)
      .def_readwrite("alpha", &casimir::PlateSystem::alpha)
      .def("__repr__", [](const casimir::PlateSystem& s) {
        return "PlateSystem(L=" + std::to_string(s.L) +
               ", beta=" + std::to_string(s.beta) +
               ", m=" + std::to_string(s.m) +
               ", alpha=" + std::to_string(s.alpha) + ")";
      });

  py::class_<casimir::EftCoefficients>(m, "EftCoefficients")
      .def_readonly("b1", &casimir::EftCoefficients::b1)
      .def_readonly("e1", &casimir::EftCoefficients::e1)
      .def_readonly("e2", &casimir::EftCoefficients::e2)
      .def_readonly("f_unit", &casimir::EftCoefficients::f_unit)
      .def_readonly("d1", &casimir::EftCoefficients::d1);

  py::class_<casimir::SumConfig>(m, "SumConfig")
      .def(py::init<>())
      .def_readwrite("rel_tol", &casimir::SumConfig::rel_tol)
      .def_readwrite("abs_tol", &casimir::SumConfig::abs_tol)
      .def_readwrite("max_image", &casimir::SumConfig::max_image)
      .def_readwrite("max_matsubara", &casimir::SumConfig::max_matsubara)
      .def_readwrite("oracle_n", &casimir::SumConfig::oracle_n)
      .def_readwrite("oracle_j", &casimir::SumConfig::oracle_j)
      .def_readwrite("r_low", &casimir::SumConfig::r_low)
      .def_readwrite("r_high", &casimir::SumConfig::r_high);

  py::class_<casimir::SumValue>(m, "SumValue")
      .def_readonly("value", &casimir::SumValue::value)
      .def_readonly("error_bound", &casimir::SumValue::error_bound)
      .def_readonly("terms_used", &casimir::SumValue::terms_used);

  py::class_<casimir::ResummationCheck>(m, "ResummationCheck")
      .def_readonly("lhs", &casimir::ResummationCheck::lhs)
      .def_readonly("rhs", &casimir::ResummationCheck::rhs)
      .def_readonly("residual", &casimir::ResummationCheck::residual);

  py::class_<casimir::FreeEnergyResult>(m, "FreeEnergyResult")
      .def_readonly("total", &casimir::FreeEnergyResult::total)
      .def_readonly("parts", &casimir::FreeEnergyResult::parts)
      .def_readonly("method", &casimir::FreeEnergyResult::method)
      .def_readonly("error_bound", &casimir::FreeEnergyResult::error_bound)
      .def_readonly("regime", &casimir::FreeEnergyResult::regime)
      .def_readonly("closed_regime_value",
                    &casimir::FreeEnergyResult::closed_regime_value);

  py::class_<casimir::MatchReport>(m, "MatchReport")
      .def_readonly("lhs", &casimir::MatchReport::lhs)
      .def_readonly("rhs", &casimir::MatchReport::rhs)
      .def_readonly("residual", &casimir::MatchReport::residual)
      .def_readonly("convention", &casimir::MatchReport::convention)
      .def_readonly("high_t_regime", &casimir::MatchReport::high_t_regime);

  py::class_<casimir::GridPoint>(m, "GridPoint")
      .def(py::init<double, double, double, double>(), py::arg("beta"),
           py::arg("L"), py::arg("m"), py::arg("alpha"))
      .def_readwrite("beta", &casimir::GridPoint::beta)
      .def_readwrite("L", &casimir::GridPoint::L)
      .def_readwrite("m", &casimir::GridPoint::m)
      .def_readwrite("alpha", &casimir::GridPoint::alpha);

  py::class_<casimir::ConsistencyReport>(m, "ConsistencyReport")
      .def_readonly("identity_id", &casimir::ConsistencyReport::identity_id)
      .def_readonly("point", &casimir::ConsistencyReport::point)
      .def_readonly("lhs", &casimir::ConsistencyReport::lhs)
      .def_readonly("rhs", &casimir::ConsistencyReport::rhs)
      .def_readonly("residual", &casimir::ConsistencyReport::residual)
      .def_readonly("tolerance", &casimir::ConsistencyReport::tolerance)
      .def_readonly("convention", &casimir::ConsistencyReport::convention)
      .def_readonly("pass_", &casimir::ConsistencyReport::pass);

  py::class_<casimir::IdentitySuiteResult>(m, "IdentitySuiteResult")
      .def_readonly("reports", &casimir::IdentitySuiteResult::reports)
      .def_readonly("oracle_sign_verdict",
                    &casimir::IdentitySuiteResult::oracle_sign_verdict)
      .def_readonly("reconciling_convention",
                    &casimir::IdentitySuiteResult::reconciling_convention)
      .def_readonly("reconciling_unique",
                    &casimir::IdentitySuiteResult::reconciling_unique)
      .def_readonly("degenerate_alpha_zero",
                    &casimir::IdentitySuiteResult::degenerate_alpha_zero)
      .def_readonly("tension_residual_confirmed",
                    &casimir::IdentitySuiteResult::tension_residual_confirmed)
      .def_readonly("lttt_m_range",
                    &casimir::IdentitySuiteResult::lttt_m_range)
      .def_readonly("neumann_image_group_sign",
                    &casimir::IdentitySuiteResult::neumann_image_group_sign)
      .def_readonly("check_passed",
                    &casimir::IdentitySuiteResult::check_passed);

  py::class_<casimir::DerivativeConfig>(m, "DerivativeConfig")
      .def(py::init<>())
      .def_readwrite("step_rel", &casimir::DerivativeConfig::step_rel)
      .def_readwrite("scheme", &casimir::DerivativeConfig::scheme)
      .def_readwrite("subtract_bulk",
                     &casimir::DerivativeConfig::subtract_bulk);

  m.def("zeta", &casimir::zeta, py::arg("s"));
  m.def("gamma_fn", &casimir::gamma_fn, py::arg("x"));
  m.def("polylog_neg", &casimir::polylog_neg, py::arg("p"), py::arg("x"));

  m.def("b1_coefficient", &casimir::b1_coefficient, py::arg("sys"));
  m.def("make_coefficients", &casimir::make_coefficients, py::arg("sys"));
  m.def("classify_regime", &casimir::classify_regime, py::arg("sys"),
        py::arg("cfg") = casimir::SumConfig{});
  m.def("validate", &casimir::validate, py::arg("sys"));

  m.def("inter_sum", &casimir::inter_sum, py::arg("beta"), py::arg("L"),
        py::arg("cfg") = casimir::SumConfig{});
  m.def("inter_sum_bruteforce", &casimir::inter_sum_bruteforce,
        py::arg("beta"), py::arg("L"), py::arg("cfg") = casimir::SumConfig{});
  m.def("static_mode_integral", &casimir::static_mode_integral, py::arg("L"));
  m.def("resummation_identity", &casimir::resummation_identity,
        py::arg("gamma"), py::arg("L"), py::arg("trunc"));
  m.def("plate_thermal_sum", &casimir::plate_thermal_sum, py::arg("beta"),
        py::arg("L"));

  m.def("boundary_log_sum", &casimir::boundary_log_sum, py::arg("beta"),
        py::arg("L"), py::arg("cfg") = casimir::SumConfig{});
  m.def("boundary_log_sum_bruteforce", &casimir::boundary_log_sum_bruteforce,
        py::arg("beta"), py::arg("L"), py::arg("cfg") = casimir::SumConfig{});
  m.def("free_energy_F0", &casimir::free_energy_F0, py::arg("beta"),
        py::arg("L"), py::arg("cfg") = casimir::SumConfig{});
  m.def("casimir_lowT_free", &casimir::casimir_lowT_free, py::arg("L"));

  m.def("f1a", &casimir::f1a, py::arg("beta"), py::arg("L"), py::arg("b1"),
        py::arg("conv"));
  m.def("f1b", &casimir::f1b, py::arg("beta"), py::arg("L"), py::arg("b1"),
        py::arg("cfg") = casimir::SumConfig{});
  m.def("f1b_lowT_closed", &casimir::f1b_lowT_closed, py::arg("beta"),
        py::arg("L"), py::arg("b1"));
  m.def("f1b_highT_closed", &casimir::f1b_highT_closed, py::arg("beta"),
        py::arg("L"), py::arg("b1"));
  m.def("two_loop_lowT", &casimir::two_loop_lowT, py::arg("L"), py::arg("m"),
        py::arg("alpha"));
  m.def("two_loop_highT", &casimir::two_loop_highT, py::arg("beta"),
        py::arg("L"), py::arg("m"), py::arg("alpha"));
  m.def("total_free_energy", &casimir::total_free_energy, py::arg("sys"),
        py::arg("cfg") = casimir::SumConfig{},
        py::arg("conv") = casimir::SignConvention::as_printed);

  m.def("unit_operator_f", &casimir::unit_operator_f, py::arg("beta"),
        py::arg("L"), py::arg("b1"));
  m.def("f0_3d", &casimir::f0_3d, py::arg("L"));
  m.def("f1_3d", &casimir::f1_3d, py::arg("L"), py::arg("e1"), py::arg("e2"));
  m.def("f1_3d_kernel_path", &casimir::f1_3d_kernel_path, py::arg("L"),
        py::arg("e1"), py::arg("e2"), py::arg("rel_tol") = 1e-12);
  m.def("match_highT", &casimir::match_highT, py::arg("sys"), py::arg("conv"),
        py::arg("cfg") = casimir::SumConfig{});

  m.def("default_grid", &casimir::default_grid);
  m.def("run_identity_suite", &casimir::run_identity_suite, py::arg("grid"),
        py::arg("cfg") = casimir::SumConfig{},
        py::arg("tol_override") = py::none());
  m.def("zeta_reg_f1a_oracle", &casimir::zeta_reg_f1a_oracle, py::arg("beta"),
        py::arg("L"));

  m.def("casimir_force", &casimir::casimir_force, py::arg("sys"),
        py::arg("cfg") = casimir::SumConfig{},
        py::arg("dcfg") = casimir::DerivativeConfig{},
        py::arg("conv") = casimir::SignConvention::as_printed,
        py::arg("use_closed_form") = false);
  m.def("entropy", &casimir::entropy, py::arg("sys"),
        py::arg("cfg") = casimir::SumConfig{},
        py::arg("dcfg") = casimir::DerivativeConfig{},
        py::arg("conv") = casimir::SignConvention::as_printed);
}
