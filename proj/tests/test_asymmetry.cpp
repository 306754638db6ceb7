#include <doctest.h>

#include <cmath>

#include "lgt/asymmetry.hpp"

using namespace lgt;

namespace {

constexpr double kPi = 3.14159265358979323846;

// Label list of a spin-1 family, used to hand-build reduced states.
ReductionPlan qlm_plan(MultiSectorState& st, int ell) {
  return ReductionPlan(st, SubsystemSpec{ell});
}

MultiSectorState qlm_state(int n) {
  ModelParams p{1.0, 0.15, 0.2, 0.0};
  MultiSectorState st(ModelKind::QuantumLink, n, p);
  const double r = 1.0 / std::sqrt(2.0);
  st.add_sector({1, -1}, r, vacuum_state(n), 1u << 20);
  st.add_sector({0, 0}, r, vacuum_state(n), 1u << 20);
  return st;
}

}  // namespace

TEST_CASE("von neumann entropy on known spectra") {
  Eigen::MatrixXcd pure = Eigen::MatrixXcd::Zero(3, 3);
  pure(1, 1) = 1.0;
  CHECK(von_neumann_entropy(pure) == doctest::Approx(0.0).epsilon(1e-14));
  Eigen::MatrixXcd half = Eigen::MatrixXcd::Zero(2, 2);
  half(0, 0) = half(1, 1) = 0.5;
  CHECK(von_neumann_entropy(half) ==
        doctest::Approx(std::log(2.0)).epsilon(1e-13));
  Eigen::MatrixXcd mixed = Eigen::MatrixXcd::Identity(5, 5) / 5.0;
  CHECK(von_neumann_entropy(mixed) ==
        doctest::Approx(std::log(5.0)).epsilon(1e-13));
  // Basis rotation leaves the entropy alone.
  Eigen::MatrixXcd u(2, 2);
  const double c = std::cos(0.3), s = std::sin(0.3);
  u << c, -s, s, c;
  Eigen::MatrixXcd rot = u * half * u.adjoint();
  CHECK(von_neumann_entropy(rot) ==
        doctest::Approx(std::log(2.0)).epsilon(1e-13));
}

TEST_CASE("von neumann entropy rejects non-states") {
  Eigen::MatrixXcd bad = Eigen::MatrixXcd::Zero(2, 2);
  bad(0, 0) = 1.1;
  bad(1, 1) = -0.1;
  CHECK_THROWS_AS(von_neumann_entropy(bad), ModelError);
}

TEST_CASE("hand-built two-label state hits the closed forms") {
  auto st = qlm_state(6);
  auto plan = qlm_plan(st, 2);
  const auto& basis = plan.basis();
  // Pick one label from each charge block.
  int i0 = -1, i1 = -1;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (basis.charges[i] == GaugeSector{1, -1} && i1 < 0)
      i1 = static_cast<int>(i);
    if (basis.charges[i] == GaugeSector{0, 0} && i0 < 0)
      i0 = static_cast<int>(i);
  }
  REQUIRE(i0 >= 0);
  REQUIRE(i1 >= 0);
  const double th = kPi / 5.0;
  const double c = std::cos(th), s = std::sin(th);
  ReducedDensityMatrix rdm;
  rdm.basis = basis;
  rdm.matrix = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(basis.size()),
                                      static_cast<Eigen::Index>(basis.size()));
  rdm.matrix(i0, i0) = c * c;
  rdm.matrix(i1, i1) = s * s;
  rdm.matrix(i0, i1) = c * s;
  rdm.matrix(i1, i0) = c * s;
  const double c2 = c * c, s2 = s * s;
  CHECK(entanglement_asymmetry(rdm) ==
        doctest::Approx(-c2 * std::log(c2) - s2 * std::log(s2))
            .epsilon(1e-12));
  CHECK(renyi2_asymmetry(rdm) ==
        doctest::Approx(-std::log(c2 * c2 + s2 * s2)).epsilon(1e-12));
  CHECK(trace_distance_asymmetry(rdm) == doctest::Approx(c * s).epsilon(1e-12));
}

TEST_CASE("link order parameter matches an independent spin-1 construction") {
  auto st = qlm_state(6);
  auto plan = qlm_plan(st, 2);
  const auto& basis = plan.basis();
  Eigen::MatrixXcd op = order_parameter_matrix(basis);
  // M = S^x + ((S^x)^2 - (S^y)^2)/sqrt(2) on one spin-1 link has every
  // nonzero element equal to 1/sqrt(2) and zero diagonal; the subsystem
  // operator is the sum over links with deltas elsewhere.
  auto m_elem = [](int a, int b) {
    return std::abs(a - b) >= 1 ? 1.0 / std::sqrt(2.0) : 0.0;
  };
  const auto dim = static_cast<Eigen::Index>(basis.size());
  for (Eigen::Index r = 0; r < dim; ++r)
    for (Eigen::Index col = 0; col < dim; ++col) {
      double expect = 0.0;
      if (label_occ_bits(basis.labels[r], 2) ==
          label_occ_bits(basis.labels[col], 2)) {
        LinkConfig lr = label_links(basis.labels[r], 2);
        LinkConfig lc = label_links(basis.labels[col], 2);
        if (lr[0] == lc[0] && lr[1] != lc[1]) expect = m_elem(lr[1], lc[1]);
        if (lr[1] == lc[1] && lr[0] != lc[0]) expect = m_elem(lr[0], lc[0]);
      }
      CHECK(std::abs(op(r, col) - cplx(expect, 0.0)) < 1e-14);
    }
}

TEST_CASE("order parameter vanishes on charge-projected states") {
  auto st = qlm_state(6);
  auto plan = qlm_plan(st, 2);
  for (double t : {0.0, 1.7, 24.0}) {
    auto rdm = plan.reduce_at(st, t);
    auto proj = rdm.symmetric_projection();
    CHECK(std::abs(order_parameter(proj, ModelKind::QuantumLink)) < 1e-12);
  }
}

TEST_CASE("order parameter refuses integer-field links") {
  ModelParams p{1.0, 0.2, 0.3, kPi};
  MultiSectorState st(ModelKind::Schwinger, 6, p);
  st.add_sector({0, 0}, 1.0, neel_state(6), 1u << 20);
  ReductionPlan plan(st, SubsystemSpec{2});
  auto rdm = plan.reduce_at(st, 0.0);
  CHECK_THROWS_AS(order_parameter(rdm, ModelKind::Schwinger), ModelError);
}

TEST_CASE("moving average shrinks its window at the edges") {
  std::vector<double> x{1, 2, 3, 4, 5};
  CHECK(moving_average(x, 3) == std::vector<double>{1.5, 2, 3, 4, 4.5});
  CHECK(moving_average(x, 5) == std::vector<double>{2, 2.5, 3, 3.5, 4});
  CHECK(moving_average(x, 1) == x);
}

TEST_CASE("crossing detection on the piecewise-linear example") {
  MetricSeries a, b;
  for (int i = 0; i <= 1000; ++i) {
    double t = 0.01 * i;
    a.times.push_back(t);
    b.times.push_back(t);
    a.values.push_back(std::max(1.0 - t, 0.1));
    b.values.push_back(std::max(0.6 - 0.1 * t, 0.05));
  }
  auto c = detect_crossing(a, b, 5);
  REQUIRE(c.size() == 2);
  // Curves meet at t = 4/9 and again at t = 5 where b sinks below the floor
  // of a; smoothing moves these only slightly.
  CHECK(c[0] > 0.35);
  CHECK(c[0] < 0.55);
  CHECK(c[1] == doctest::Approx(5.0).epsilon(0.05));
  // a sits below b between the two crossings only: (5 - 4/9) / (10 - 4/9).
  CHECK(fraction_below_after(a, b, c[0]) ==
        doctest::Approx((5.0 - 4.0 / 9.0) / (10.0 - 4.0 / 9.0)).epsilon(0.02));
  CHECK(fraction_below_after(a, b, 5.1) == 0.0);
}

TEST_CASE("crossing detection trivial cases") {
  MetricSeries a, b;
  for (int i = 0; i < 50; ++i) {
    a.times.push_back(0.1 * i);
    b.times.push_back(0.1 * i);
    a.values.push_back(1.0);
    b.values.push_back(0.5);
  }
  CHECK(detect_crossing(a, b).empty());
  CHECK(detect_crossing(a, a).empty());
  CHECK(fraction_below_after(a, b, 0.0) == 0.0);
  CHECK(fraction_below_after(b, a, 0.0) == 1.0);
  MetricSeries other = b;
  other.times[3] += 1e-3;
  CHECK_THROWS_AS(detect_crossing(a, other), ModelError);
}
