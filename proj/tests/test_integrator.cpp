#include "qscatter/error.hpp"
#include "qscatter/integrator.hpp"

#include <doctest.h>

#include <cmath>

using namespace qscatter;

namespace {

const PotentialProfile kSmooth = PotentialProfile::single_smooth(3.0, 5.0, 1.0);

PairState<double> carry(const PotentialProfile &p, double e, double to, double h) {
  return propagate_pair(p, e, 0.0, to, PairState<double>(1.0, 0.0, 0.0, 1.0), h, {}).state;
}

} // namespace

TEST_SUITE("integrator") {

TEST_CASE("free particle: cos and sin over k") {
  const double k = 3.0, e = k * k, h = 1e-3;
  const auto free = PotentialProfile::free();
  const NumericsConfig cfg;
  OdeState<double> c{0.0, 1.0, 0.0}, s{0.0, 0.0, 1.0};
  for (int i = 0; i < 2000; ++i) {
    c = rk4_step(c, h, e, free, cfg);
    s = rk4_step(s, h, e, free, cfg);
  }
  CHECK(c.x == doctest::Approx(2.0));
  CHECK(std::abs(c.y - std::cos(2.0 * k)) < 1e-10);
  CHECK(std::abs(s.y - std::sin(2.0 * k) / k) < 1e-10);

  OdeState<double> back{0.0, 1.0, 0.0};
  for (int i = 0; i < 1000; ++i)
    back = rk4_step(back, -h, e, free, cfg);
  CHECK(std::abs(back.y - std::cos(k)) < 1e-10);
  CHECK_THROWS_AS(rk4_step(back, 0.0, e, free, cfg), Error);
}

TEST_CASE("fourth-order convergence") {
  const double e = 2.0, L = 3.0;
  const auto ref = carry(kSmooth, e, L, 1e-4);
  const double e1 = (carry(kSmooth, e, L, 0.04) - ref).norm();
  const double e2 = (carry(kSmooth, e, L, 0.02) - ref).norm();
  const double e3 = (carry(kSmooth, e, L, 0.01) - ref).norm();
  CHECK(e1 / e2 == doctest::Approx(16.0).epsilon(0.1));
  CHECK(e2 / e3 == doctest::Approx(16.0).epsilon(0.1));
}

TEST_CASE("fourth order survives breakpoints inside the interval") {
  const auto p = PotentialProfile::finite_composite(10.0, {WellShape::Gaussian, 0.4}, 1.0, 11.5);
  const double e = 7.0;
  auto left = [&](double h) {
    return propagate_pair(p, e, 0.0, -1.4, PairState<double>(1.0, 0.0, 0.0, 1.0), h, {}).state;
  };
  const auto ref = left(1e-4);
  const double e1 = (left(0.02) - ref).norm();
  const double e2 = (left(0.01) - ref).norm();
  CHECK(e1 / e2 == doctest::Approx(16.0).epsilon(0.15));
}

TEST_CASE("reversibility") {
  const PairState<double> start(1.0, 0.0, 0.0, 1.0);
  const auto there = propagate_pair(kSmooth, 4.0, 0.0, 3.0, start, 1e-3, {});
  const auto back = propagate_pair(kSmooth, 4.0, 3.0, 0.0, there.state, 1e-3, {});
  CHECK((back.state - start).norm() < 1e-9);
}

TEST_CASE("zero potential reproduces the free solutions") {
  const auto flat = PotentialProfile::single_smooth(0.0, 0.0, 3.0);
  const double k = 2.5;
  const auto data = fundamental_pair(flat, k * k, Window{-1.0, 1.0}, {});
  CHECK(std::abs(data.psi1 - std::cos(-k)) < 1e-10);
  CHECK(std::abs(data.psi2 - std::sin(-k) / k) < 1e-10);
  CHECK(std::abs(data.phi1 - std::cos(k)) < 1e-10);
  CHECK(std::abs(data.phi1_prime + k * std::sin(k)) < 1e-10);
  CHECK(std::abs(data.phi2_prime - std::cos(k)) < 1e-10);
  CHECK(data.wronskian_drift < 1e-12);

  const auto free = fundamental_pair(PotentialProfile::free(), 1.7, Window{-1.0, 1.0}, {});
  CHECK(std::abs(free.psi1 - std::cos(std::sqrt(1.7))) < 1e-10);
  CHECK(free.wronskian_drift < 1e-12);
}

TEST_CASE("Wronskian drift at E = 1 across the families") {
  for (const auto &p :
       {PotentialProfile::finite_composite(10.0, {WellShape::Rectangular, 5.0}, 5.0, 11.5),
        PotentialProfile::finite_composite(10.0, {WellShape::Parabolic, 1.0}, 5.0, 11.5),
        PotentialProfile::continuous_joined(15.0, 5.0),
        PotentialProfile::discontinuous_joined(15.0, 5.0, BarrierForm::Gauss),
        PotentialProfile::single_smooth(2000.0, 5.0, 8.0),
        PotentialProfile::continuous_joined(10.0, 10.0, BarrierForm::TanhSech)}) {
    const NumericsConfig cfg;
    const auto data = fundamental_pair(p, 1.0, integration_window(p, cfg), cfg);
    CHECK(data.wronskian_drift < 1e-9);
    CHECK(data.step <= 1e-3);
  }
}

TEST_CASE("evanescent growth under a rectangular barrier") {
  const auto p = PotentialProfile::finite_composite(0.0, {WellShape::Rectangular, 0.0}, 0.0,
                                                    5.0, BarrierForm::Rectangular, 1.0);
  PairState<double> s(1.0, 0.0, 0.0, 1.0);
  double last = 1.0;
  for (int i = 1; i <= 10; ++i) {
    s = propagate_pair(p, 2.5, (i - 1) * 0.1, i * 0.1, s, 1e-3, {}).state;
    CHECK(s(0) > last);
    CHECK(std::isfinite(s(0)));
    last = s(0);
  }
  CHECK(last == doctest::Approx(std::cosh(std::sqrt(2.5))).epsilon(1e-10));
}

TEST_CASE("step size") {
  const NumericsConfig cfg;
  const auto shallow = PotentialProfile::continuous_joined(5.0, 5.0);
  CHECK(step_size(shallow, 1.0, integration_window(shallow, cfg), cfg) == cfg.h);
  const auto deep = PotentialProfile::single_smooth(5000.0, 5.0, 8.0);
  const double h = step_size(deep, 50.0, integration_window(deep, cfg), cfg);
  CHECK(h < cfg.h);
  CHECK(h == doctest::Approx(2.0 * std::numbers::pi / std::sqrt(5050.0) / 500.0).epsilon(1e-6));
  NumericsConfig fixed = cfg;
  fixed.resolve_wavelength = false;
  CHECK(step_size(deep, 50.0, integration_window(deep, fixed), fixed) == cfg.h);
}

TEST_CASE("integration errors") {
  const auto p = PotentialProfile::single_smooth(1.0, 5.0, 3.0);
  CHECK_THROWS_AS(fundamental_pair(p, 0.0, Window{-5, 5}, {}), Error);
  try {
    fundamental_pair(p, 1.0, Window{}, {});
    FAIL("no error");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::DegenerateWindow);
  }
  const auto wall = PotentialProfile::finite_composite(0.0, {WellShape::Rectangular, 0.0}, 0.0,
                                                       1e6, BarrierForm::Rectangular, 10.0);
  try {
    fundamental_pair(wall, 1.0, Window{0.0, 10.0}, {}, 1e-2);
    FAIL("no error");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::NonFiniteState);
  }
}

}
