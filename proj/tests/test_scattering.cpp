#include "qscatter/closed_form.hpp"
#include "qscatter/error.hpp"
#include "qscatter/scattering.hpp"
#include "qscatter/sweep.hpp"

#include <doctest.h>

#include <Eigen/LU>

#include <cmath>

using namespace qscatter;

namespace {

PotentialProfile rect_barrier(double v, double w) {
  return PotentialProfile::finite_composite(0.0, {WellShape::Rectangular, 0.0}, 0.0, v,
                                            BarrierForm::Rectangular, w);
}

// Rectangles of width w and the deltas' strengths, centred at -d and 0.
PotentialProfile narrow_pair(double v_w, double v_b, double d, double w) {
  return PotentialProfile::finite_composite(v_w / w, {WellShape::Rectangular, w}, d - w, v_b / w,
                                            BarrierForm::Rectangular, w);
}

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

const PotentialProfile kGaussianComposite =
    PotentialProfile::finite_composite(10.0, {WellShape::Gaussian, 0.4}, 5.0, 11.5);

} // namespace

TEST_SUITE("scattering") {

TEST_CASE("free space") {
  for (double e : {0.1, 2.0, 40.0}) {
    const auto r = transmission(PotentialProfile::free(), e);
    CHECK(r.T == 1.0);
    CHECK(r.R == 0.0);
    CHECK(r.unitarity_defect < 1e-12);
  }
}

TEST_CASE("rectangular barrier against its closed form") {
  NumericsConfig cfg;
  cfg.resolve_wavelength = false;
  for (double e : {0.5, 2.5, 5.0, 5.5, 10.0, 25.0}) {
    const auto r = transmission(rect_barrier(5.0, 1.0), e, cfg);
    CHECK(rel(r.T, rectangular_barrier_T(5.0, 1.0, e)) <= 1e-8);
    CHECK(r.unitarity_defect <= 1e-10);
    CHECK(r.closed_form_defect <= 1e-10);
  }
}

TEST_CASE("Scarf II shape against its closed form") {
  const auto p = PotentialProfile::continuous_joined(5.0, 5.0, BarrierForm::TanhSech);
  CHECK(rel(transmission(p, 1.0).T, scarf2_T(5.0, 1.0, 1.0)) <= 1e-4);
}

TEST_CASE("delta pairs route to the closed form") {
  const auto p = PotentialProfile::delta_pair(1.0, 5.0, 3.0);
  const auto r = transmission(p, 25.0);
  const auto a = delta_amplitudes(1.0, 5.0, 3.0, 25.0);
  CHECK(r.T == a.T());
  CHECK(r.R == a.R());
  CHECK(r.f_over_a == a.f_over_a);

  for (double e : {0.4, 3.0, 17.0})
    CHECK(std::abs(transmission(PotentialProfile::delta_pair(5.0, 0.0, 2.0), e).T -
                   transmission(PotentialProfile::delta_pair(0.0, 5.0, 2.0), e).T) <= 1e-12);
}

TEST_CASE("narrow rectangles converge to the delta pair") {
  // Checks the pair amplitudes independently of their derivation: the
  // rectangles are integrated numerically and multiplied as transfer matrices.
  NumericsConfig cfg;
  cfg.h = 1e-4;
  for (const auto &[v_w, v_b, d, e] :
       {std::tuple{1.0, 5.0, 3.0, 10.0}, {5.0, 5.0, 3.0, 2.0}, {5.0, 5.0, 1.0, 30.0}}) {
    const double exact = delta_amplitudes(v_w, v_b, d, e).T();
    double last_rk = 1.0, last_tm = 1.0;
    for (double w : {0.01, 0.005, 0.0025}) {
      const auto p = narrow_pair(v_w, v_b, d, w);
      const double rk = std::abs(transmission(p, e, cfg).T - exact);
      const double tm = std::abs(transfer_matrix_T(p, e, 4, cfg) - exact);
      CHECK(rk < 0.6 * last_rk);
      CHECK(tm < 0.6 * last_tm);
      last_rk = rk;
      last_tm = tm;
    }
    CHECK(last_rk < 2e-3);
  }
}

TEST_CASE("delta surrogate converges monotonically") {
  const double limit = delta_barrier_T(5.0, 25.0);
  double last = 1.0;
  for (double w : {0.1, 0.05, 0.025, 0.0125}) {
    const double err = std::abs(transmission(delta_as_rectangle(5.0, w), 25.0).T - limit);
    CHECK(err < last);
    last = err;
  }
  CHECK(transmission(delta_as_rectangle(0.0, 0.1), 3.0).T == 1.0);
}

TEST_CASE("composite transmission rides around the bare barrier") {
  const auto p = PotentialProfile::finite_composite(10.0, {WellShape::Rectangular, 5.0}, 5.0, 11.5);
  const auto curve = run_sweep(p, open_grid(10.0, 200), {});
  CHECK(curve_stats(curve).crossing_count >= 2);
}

TEST_CASE("mirror symmetry of T") {
  for (const auto &p :
       {kGaussianComposite,
        PotentialProfile::finite_composite(4.0, {WellShape::Triangular, 2.0}, 1.5, 3.0,
                                           BarrierForm::Rectangular, 0.7),
        PotentialProfile::continuous_joined(10.0, 5.0),
        PotentialProfile::discontinuous_joined(15.0, 5.0, BarrierForm::Gauss),
        PotentialProfile::single_smooth(1.0, 5.0, 3.0), PotentialProfile::delta_pair(1.0, 5.0, 3.0)})
    for (double e : {0.8, 6.0, 33.0})
      CHECK(std::abs(transmission(p, e).T - transmission(mirror(p), e).T) <= 1e-10);
}

TEST_CASE("transfer matrix oracle") {
  CHECK(std::abs(transfer_matrix_T(rect_barrier(5.0, 1.0), 2.5, 1) -
                 rectangular_barrier_T(5.0, 1.0, 2.5)) <= 1e-12);
  CHECK(std::abs(transfer_matrix_T(rect_barrier(5.0, 1.0), 5.0, 1) -
                 rectangular_barrier_T(5.0, 1.0, 5.0)) <= 1e-12);
  CHECK(transfer_matrix_T(PotentialProfile::free(), 3.0, 100) == 1.0);
  CHECK(rel(transfer_matrix_T(kGaussianComposite, 2.0, 10000),
            transmission(kGaussianComposite, 2.0).T) <= 1e-6);
  // Fewer slices than pieces falls back to uniform slicing.
  CHECK(std::isfinite(transfer_matrix_T(kGaussianComposite, 2.0, 2)));
  CHECK_THROWS_AS(transfer_matrix_T(kGaussianComposite, 2.0, 0), Error);
}

TEST_CASE("constant segment propagators are unimodular") {
  for (double v : {-3.0, 0.0, 2.0, 7.0}) {
    const auto m = segment_transfer_matrix(v, 2.0, 0.37, {});
    CHECK(m.determinant() == doctest::Approx(1.0).epsilon(1e-13));
  }
}

TEST_CASE("coarse steps are caught") {
  const auto p = PotentialProfile::discontinuous_joined(15.0, 5.0, BarrierForm::Gauss);
  const auto w = integration_window(p, {});
  bool caught = false;
  for (double e : {5.0, 10.0, 15.0}) {
    try {
      transmission(p, e, {}, w, 0.5);
    } catch (const Error &err) {
      caught = caught || err.code() == ErrorCode::UnitarityViolation;
    }
  }
  CHECK(caught);
}

}
