#include <cmath>
#include <numbers>
#include <random>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "doctest.h"
#include "ptmathieu/model.hpp"

using namespace ptmathieu;
using std::numbers::pi;

namespace {

double phi(int n, double x, Boundary bc) {
  return bc == Boundary::Neumann ? std::cos(n * x) : std::sin(n * x);
}

// Adaptive Gauss-Kronrod on [0, pi]; independent of the closed forms.
template <class F> double quad(F f) {
  double err = 0.0;
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, 0.0, pi, 20, 1e-14,
                                                                      &err);
}

double quad_sine(int m, int n, int j, Boundary bc) {
  return quad([=](double x) { return phi(m, x, bc) * std::sin(2 * j * x) * phi(n, x, bc); });
}

double quad_cosine(int m, int n, Boundary bc) {
  return quad([=](double x) { return phi(m, x, bc) * std::cos(2 * x) * phi(n, x, bc); });
}

ModelParams random_params(std::mt19937& rng) {
  std::uniform_real_distribution<double> q(-5.0, 5.0);
  std::uniform_real_distribution<double> d(-2.0, 2.0);
  std::uniform_int_distribution<int> j(1, 4);
  std::bernoulli_distribution neumann(0.5);
  return {q(rng), d(rng), j(rng), neumann(rng) ? Boundary::Neumann : Boundary::Dirichlet};
}

} // namespace

TEST_CASE("potential_value") {
  const ModelParams p{1.0, 0.5, 1, Boundary::Neumann};
  const Complex v0 = potential_value(p, 0.0);
  CHECK(v0.real() == doctest::Approx(2.0));
  CHECK(v0.imag() == doctest::Approx(0.0));
  const Complex vh = potential_value(p, pi / 2);
  CHECK(vh.real() == doctest::Approx(-2.0));
  CHECK(std::abs(vh.imag()) < 1e-15);

  // delta = 1, j = 1 reduces to 2q exp(2ix).
  for (double q : {-1.5, 0.3, 2.0}) {
    const ModelParams e{q, 1.0, 1, Boundary::Dirichlet};
    const Complex v = potential_value(e, pi / 4);
    CHECK(std::abs(v - Complex(0.0, 2.0 * q)) < 1e-14);
    for (double x : {0.1, 0.7, 2.9}) {
      CHECK(std::abs(potential_value(e, x) - 2.0 * q * std::exp(Complex(0.0, 2.0 * x))) < 1e-14);
    }
  }
}

TEST_CASE("sine_coupling closed form") {
  CHECK(sine_coupling(0, 2, 1, Boundary::Neumann) == 0.0);
  CHECK(sine_coupling(0, 1, 1, Boundary::Neumann) == doctest::Approx(4.0 / 3.0).epsilon(1e-15));
  CHECK(sine_coupling(1, 2, 1, Boundary::Neumann) == doctest::Approx(4.0 / 15.0).epsilon(1e-15));
  // Quadrature values frozen from the oracle above.
  CHECK(std::abs(quad_sine(0, 1, 1, Boundary::Neumann) - 4.0 / 3.0) < 1e-12);
  CHECK(std::abs(quad_sine(1, 2, 1, Boundary::Neumann) - 4.0 / 15.0) < 1e-12);
}

TEST_CASE("parity selection rule") {
  for (Boundary bc : {Boundary::Neumann, Boundary::Dirichlet}) {
    for (int j = 1; j <= 4; ++j) {
      for (int m = first_index(bc); m <= 64; ++m) {
        for (int n = first_index(bc); n <= 64; ++n) {
          if ((m + n) % 2 == 0) {
            REQUIRE(sine_coupling(m, n, j, bc) == 0.0);
          }
        }
      }
    }
  }
}

TEST_CASE("closed-form elements match adaptive quadrature") {
  std::mt19937 rng(20240611);
  std::uniform_int_distribution<int> idx(0, 24);
  std::uniform_int_distribution<int> jdist(1, 4);
  for (int trial = 0; trial < 200; ++trial) {
    const Boundary bc = trial % 2 == 0 ? Boundary::Neumann : Boundary::Dirichlet;
    const int m = idx(rng) + first_index(bc);
    const int n = idx(rng) + first_index(bc);
    const int j = jdist(rng);
    CAPTURE(m);
    CAPTURE(n);
    CAPTURE(j);
    CHECK(std::abs(sine_coupling(m, n, j, bc) - quad_sine(m, n, j, bc)) < 1e-10);
    CHECK(std::abs(cosine_coupling(m, n, bc) - quad_cosine(m, n, bc)) < 1e-10);
  }
}

TEST_CASE("invalid basis indices") {
  CHECK_THROWS_AS(sine_coupling(0, 1, 1, Boundary::Dirichlet), std::invalid_argument);
  CHECK_THROWS_AS(sine_coupling(-1, 1, 1, Boundary::Neumann), std::invalid_argument);
  CHECK_THROWS_AS(cosine_coupling(1, 0, Boundary::Dirichlet), std::invalid_argument);
  CHECK_THROWS_AS(sine_coupling(1, 2, 0, Boundary::Neumann), std::invalid_argument);
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(validate({1.0, 0.5, 0, Boundary::Neumann}), std::invalid_argument);
  CHECK_THROWS_AS(validate({NAN, 0.5, 1, Boundary::Neumann}), std::invalid_argument);
  CHECK(frequency_index(3.0) == 3);
  CHECK_THROWS_AS(frequency_index(0.5), std::invalid_argument);
  CHECK_THROWS_AS(frequency_index(0.0), std::invalid_argument);
  CHECK(parse_boundary("dirichlet") == Boundary::Dirichlet);
  CHECK_THROWS_AS(parse_boundary("robin"), std::invalid_argument);
  CHECK_THROWS_AS(assemble_matrix({1.0, 0.5, 1, Boundary::Neumann}, 7), std::invalid_argument);
}

TEST_CASE("free particle matrix is diag(n^2)") {
  for (int j = 1; j <= 3; ++j) {
    const auto h = assemble_matrix({0.0, 3.7, j, Boundary::Neumann}, 16);
    CHECK(h.basis == Basis::CosineNormalized);
    for (int r = 0; r < 16; ++r) {
      for (int c = 0; c < 16; ++c) {
        CHECK(h.entries(r, c) == Complex(r == c ? double(r * r) : 0.0));
      }
    }
  }
  const auto d = assemble_matrix({0.0, 1.0, 2, Boundary::Dirichlet}, 8);
  CHECK(d.basis == Basis::SineNormalized);
  CHECK(d.entries(0, 0) == Complex(1.0));
  CHECK(d.entries(7, 7) == Complex(64.0));
}

TEST_CASE("Dirichlet classical elements against quadrature") {
  const auto h = assemble_matrix({1.0, 0.0, 1, Boundary::Dirichlet}, 12);
  // Row/column i is sin((i+1)x).
  const double quad_11 = 1.0 + 2.0 * (2.0 / pi) * quad_cosine(1, 1, Boundary::Dirichlet);
  CHECK(std::abs(quad_11) < 1e-12);
  CHECK(std::abs(h.entries(0, 0)) < 1e-14);
  for (int r = 0; r + 2 < 12; ++r) {
    CHECK(h.entries(r, r + 2).real() == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(h.entries(r + 2, r).real() == doctest::Approx(1.0).epsilon(1e-14));
  }
  CHECK(h.entries.imag().cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("Galerkin matrix entries match quadrature of the normalized basis") {
  const ModelParams p{1.3, 0.7, 2, Boundary::Neumann};
  const auto h = assemble_matrix(p, 10);
  for (int m = 0; m < 10; ++m) {
    for (int n = 0; n < 10; ++n) {
      const double nm = m == 0 ? 1.0 / std::sqrt(pi) : std::sqrt(2.0 / pi);
      const double nn = n == 0 ? 1.0 / std::sqrt(pi) : std::sqrt(2.0 / pi);
      const Complex expected =
          (m == n ? double(m * m) : 0.0) +
          nm * nn * 2.0 * p.q *
              Complex(quad_cosine(m, n, p.bc), p.delta * quad_sine(m, n, p.j, p.bc));
      CHECK(std::abs(h.entries(m, n) - expected) < 1e-10);
    }
  }
}

TEST_CASE("matrix identities: conjugation and reflection") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    ModelParams p = random_params(rng);
    ModelParams flipped = p;
    flipped.delta = -p.delta;
    const auto h = assemble_matrix(p, 24);
    const auto hf = assemble_matrix(flipped, 24);
    // conjugate(H(delta)) == H(-delta), entrywise and exactly.
    REQUIRE((h.entries.conjugate() - hf.entries).cwiseAbs().maxCoeff() == 0.0);
    // D H(delta) D == H(-delta), D = diag((-1)^n) over basis indices.
    Eigen::VectorXcd dvec(24);
    for (int i = 0; i < 24; ++i) {
      dvec(i) = ((first_index(p.bc) + i) % 2 == 0) ? 1.0 : -1.0;
    }
    const Eigen::MatrixXcd reflected = dvec.asDiagonal() * h.entries * dvec.asDiagonal();
    REQUIRE((reflected - hf.entries).cwiseAbs().maxCoeff() == 0.0);
  }
}
