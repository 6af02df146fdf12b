#include "qscatter/closed_form.hpp"
#include "qscatter/error.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace qscatter;
using std::numbers::pi;

TEST_SUITE("closed_form") {

TEST_CASE("single barrier delta from the pair formula") {
  const auto a = delta_amplitudes(0.0, 5.0, 3.0, 25.0);
  CHECK(a.T() == doctest::Approx(0.8).epsilon(1e-14));
  CHECK(a.R() == doctest::Approx(0.2).epsilon(1e-13));
  CHECK(std::abs(std::abs(a.lambda) - 1.0) < 1e-15);
}

TEST_CASE("free pair is transparent") {
  for (double e : {0.01, 1.0, 37.0}) {
    const auto a = delta_amplitudes(0.0, 0.0, 2.0, e);
    CHECK(a.T() == 1.0);
    CHECK(a.R() == 0.0);
  }
}

TEST_CASE("pair unitarity over random parameters") {
  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> strength(0.0, 20.0), sep(0.0, 10.0),
      energy(1e-3, 100.0);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const auto a = delta_amplitudes(strength(rng), strength(rng), sep(rng), energy(rng));
    worst = std::max(worst, std::abs(a.T() + a.R() - 1.0));
  }
  CHECK(worst <= 1e-12);
}

TEST_CASE("well and barrier deltas transmit alike") {
  for (double e : {0.3, 6.25, 25.0, 80.0}) {
    const double t = delta_barrier_T(5.0, e);
    CHECK(std::abs(delta_amplitudes(5.0, 0.0, 3.0, e).T() - t) <= 1e-12);
    CHECK(std::abs(delta_amplitudes(0.0, 5.0, 3.0, e).T() - t) <= 1e-12);
  }
}

TEST_CASE("equal well and barrier: transparent at kd = n pi") {
  // The phase e^{2ikd} multiplying the second scattering makes the two
  // reflections cancel when it equals 1.
  const double d = 3.0;
  for (int n = 1; n <= 3; ++n) {
    const double k = n * pi / d;
    const auto a = delta_amplitudes(5.0, 5.0, d, k * k);
    CHECK(std::abs(a.T() - 1.0) <= 1e-12);
    CHECK(a.R() <= 1e-12);
  }
}

TEST_CASE("equal well and barrier: at fixed k, least transparent at kd = (n + 1/2) pi") {
  const double d = 3.0;
  for (int n = 0; n <= 2; ++n) {
    const double k = (n + 0.5) * pi / d;
    const double u = 5.0;
    const double a = u * u / (4.0 * k * k);
    const double t = delta_amplitudes(5.0, 5.0, d, k * k).T();
    CHECK(t == doctest::Approx(1.0 / ((1.0 + 2.0 * a) * (1.0 + 2.0 * a))).epsilon(1e-12));
    for (double shift : {-0.01, 0.01})
      CHECK(delta_amplitudes(5.0, 5.0, d + shift, k * k).T() > t);
  }
}

TEST_CASE("pair amplitudes agree with a mirrored pair") {
  for (double e : {0.5, 4.0, 31.0}) {
    const auto a = double_delta_amplitudes(-1.0, 5.0, 3.0, e);
    const auto b = double_delta_amplitudes(5.0, -1.0, 3.0, e);
    CHECK(a.T() == doctest::Approx(b.T()).epsilon(1e-13));
  }
}

TEST_CASE("single delta transmission") {
  CHECK(delta_barrier_T(5.0, 25.0) == doctest::Approx(0.8).epsilon(1e-15));
  CHECK(delta_barrier_T(5.0, 6.25) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(delta_barrier_T(0.0, 3.0) == 1.0);
  double last = 0.0;
  for (double e = 0.01; e < 1000.0; e *= 1.3) {
    const double t = delta_barrier_T(5.0, e);
    CHECK(t > last);
    last = t;
  }
  CHECK(delta_barrier_T(5.0, 1e9) > 1.0 - 1e-8);
}

TEST_CASE("nonpositive energies are rejected") {
  for (double e : {0.0, -1.0}) {
    CHECK_THROWS_AS(delta_barrier_T(5.0, e), Error);
    CHECK_THROWS_AS(delta_amplitudes(1.0, 5.0, 3.0, e), Error);
    CHECK_THROWS_AS(rectangular_barrier_T(5.0, 1.0, e), Error);
    CHECK_THROWS_AS(scarf2_T(5.0, 1.0, e), Error);
  }
  CHECK_THROWS_AS(scarf2_T(5.0, 0.0, 1.0), Error);
}

TEST_CASE("Scarf II") {
  for (double e = 0.05; e < 30.0; e += 0.37)
    CHECK(std::abs(scarf2_T(0.0, 1.0, e) - 1.0) <= 1e-12);
  CHECK(scarf2_T(5.0, 1.0, 1.0) == doctest::Approx(0.0321884040409107954).epsilon(1e-12));
  CHECK(scarf2_T(5.0, 1.0, 500.0) > 0.999);
  CHECK(std::isfinite(scarf2_T(15.0, 1.0, 1e4)));
}

TEST_CASE("rectangular barrier") {
  CHECK(rectangular_barrier_T(0.0, 1.0, 3.0) == 1.0);
  CHECK(rectangular_barrier_T(5.0, 1.0, 2.5) ==
        doctest::Approx(0.15584412260093874584).epsilon(1e-13));
  for (int n = 1; n <= 3; ++n) {
    const double e = 5.0 + n * n * pi * pi;
    CHECK(std::abs(rectangular_barrier_T(5.0, 1.0, e) - 1.0) <= 1e-12);
  }
  const double at = rectangular_barrier_T(5.0, 1.0, 5.0);
  CHECK(at == doctest::Approx(1.0 / (1.0 + 0.25 * 5.0)).epsilon(1e-15));
  CHECK(rectangular_barrier_T(5.0, 1.0, 5.0 * (1 - 1e-7)) == doctest::Approx(at).epsilon(1e-6));
  CHECK(rectangular_barrier_T(5.0, 1.0, 5.0 * (1 + 1e-7)) == doctest::Approx(at).epsilon(1e-6));
}

}
