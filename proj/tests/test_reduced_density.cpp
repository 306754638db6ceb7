#include <doctest.h>

#include <cmath>

#include "lgt/asymmetry.hpp"
#include "lgt/reduced_density.hpp"

using namespace lgt;

namespace {

constexpr double kPi = 3.14159265358979323846;
const double kInv2 = 1.0 / std::sqrt(2.0);

MultiSectorState two_sector_state(int n, double j, double theta, cplx a0,
                                  cplx a1) {
  ModelParams p{1.0, 0.21, j, theta};
  MultiSectorState st(ModelKind::Schwinger, n, p);
  st.add_sector({0, 0}, a0, neel_state(n), 1u << 20);
  st.add_sector({1, -1}, a1, neel_state(n), 1u << 20);
  return st;
}

}  // namespace

TEST_CASE("reduced state has unit trace and hermitian matrix at all times") {
  auto st = two_sector_state(8, 0.37, kPi, kInv2, kInv2);
  ReductionPlan plan(st, SubsystemSpec{2});
  for (double t : {0.0, 0.9, 7.7, 140.0}) {
    auto rdm = plan.reduce_at(st, t);
    CHECK(rdm.trace() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK((rdm.matrix - rdm.matrix.adjoint()).cwiseAbs().maxCoeff() < 1e-12);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rdm.matrix);
    CHECK(es.eigenvalues().minCoeff() > -1e-12);
  }
}

TEST_CASE("equal two-sector superposition starts at asymmetry log 2") {
  auto st = two_sector_state(8, 0.15, kPi, kInv2, kInv2);
  ReductionPlan plan(st, SubsystemSpec{2});
  auto rdm = plan.reduce_at(st, 0.0);
  // The seed factorizes, so the reduced state is a pure equal superposition
  // of the two charge labels and projecting it costs exactly log 2.
  CHECK(entanglement_asymmetry(rdm) == doctest::Approx(std::log(2.0)).epsilon(1e-10));
  CHECK(renyi2_asymmetry(rdm) == doctest::Approx(std::log(2.0)).epsilon(1e-10));
  CHECK(trace_distance_asymmetry(rdm) == doctest::Approx(0.5).epsilon(1e-10));
}

TEST_CASE("tilted superposition starts at the binary-entropy value") {
  const double th = kPi / 6.0;
  const double c = std::cos(th), s = std::sin(th);
  auto st = two_sector_state(8, 0.15, kPi, c, s);
  ReductionPlan plan(st, SubsystemSpec{2});
  auto rdm = plan.reduce_at(st, 0.0);
  const double c2 = c * c, s2 = s * s;
  const double h2 = -c2 * std::log(c2) - s2 * std::log(s2);
  CHECK(entanglement_asymmetry(rdm) == doctest::Approx(h2).epsilon(1e-10));
  CHECK(renyi2_asymmetry(rdm) ==
        doctest::Approx(-std::log(c2 * c2 + s2 * s2)).epsilon(1e-10));
  CHECK(trace_distance_asymmetry(rdm) ==
        doctest::Approx(c * s).epsilon(1e-10));
}

TEST_CASE("three equal sectors start at asymmetry log 3") {
  ModelParams p{1.0, 0.21, 0.05, kPi};
  MultiSectorState st(ModelKind::Schwinger, 8, p);
  const double r = 1.0 / std::sqrt(3.0);
  st.add_sector({0, 0, 0}, r, neel_state(8), 1u << 20);
  st.add_sector({1, 0, -1}, r, neel_state(8), 1u << 20);
  st.add_sector({2, 0, -2}, r, neel_state(8), 1u << 20);
  ReductionPlan plan(st, SubsystemSpec{3});
  auto rdm = plan.reduce_at(st, 0.0);
  CHECK(entanglement_asymmetry(rdm) ==
        doctest::Approx(std::log(3.0)).epsilon(1e-10));
}

TEST_CASE("single sector is exactly symmetric at every time") {
  ModelParams p{1.0, 0.3, 0.4, kPi};
  MultiSectorState st(ModelKind::Schwinger, 8, p);
  st.add_sector({0, 0}, 1.0, neel_state(8), 1u << 20);
  ReductionPlan plan(st, SubsystemSpec{2});
  for (double t : {0.0, 3.1, 47.0}) {
    auto rdm = plan.reduce_at(st, t);
    CHECK(std::abs(entanglement_asymmetry(rdm)) < 1e-10);
    CHECK(std::abs(trace_distance_asymmetry(rdm)) < 1e-8);
  }
}

TEST_CASE("symmetric projection kills cross-charge blocks and is idempotent") {
  auto st = two_sector_state(8, 0.37, kPi, kInv2, kInv2);
  ReductionPlan plan(st, SubsystemSpec{2});
  auto rdm = plan.reduce_at(st, 1.3);
  CHECK(rdm.block_norm({0, 0}, {1, -1}) > 1e-3);
  auto proj = rdm.symmetric_projection();
  CHECK(proj.block_norm({0, 0}, {1, -1}) == 0.0);
  CHECK(proj.block_norm({0, 0}, {0, 0}) ==
        doctest::Approx(rdm.block_norm({0, 0}, {0, 0})).epsilon(1e-14));
  CHECK(proj.trace() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(entanglement_asymmetry(proj) < 1e-12);
  auto twice = proj.symmetric_projection();
  CHECK((twice.matrix - proj.matrix).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("asymmetry metrics ignore the global phase of the state") {
  auto a = two_sector_state(8, 0.37, kPi, kInv2, kInv2);
  const cplx phase = std::exp(cplx(0.0, 0.7));
  auto b = two_sector_state(8, 0.37, kPi, kInv2 * phase, kInv2 * phase);
  ReductionPlan pa(a, SubsystemSpec{2});
  ReductionPlan pb(b, SubsystemSpec{2});
  for (double t : {0.0, 2.9, 31.0}) {
    auto ra = pa.reduce_at(a, t);
    auto rb = pb.reduce_at(b, t);
    CHECK(std::abs(entanglement_asymmetry(ra) - entanglement_asymmetry(rb)) <
          1e-12);
    CHECK(std::abs(trace_distance_asymmetry(ra) -
                   trace_distance_asymmetry(rb)) < 1e-12);
    CHECK(std::abs(renyi2_asymmetry(ra) - renyi2_asymmetry(rb)) < 1e-12);
  }
}

TEST_CASE("relative sector phase does change the reduced state") {
  auto a = two_sector_state(8, 0.37, kPi, kInv2, kInv2);
  auto b = two_sector_state(8, 0.37, kPi, kInv2,
                            kInv2 * std::exp(cplx(0.0, 1.1)));
  ReductionPlan pa(a, SubsystemSpec{2});
  ReductionPlan pb(b, SubsystemSpec{2});
  auto ra = pa.reduce_at(a, 0.0);
  auto rb = pb.reduce_at(b, 0.0);
  CHECK((ra.matrix - rb.matrix).cwiseAbs().maxCoeff() > 1e-3);
  // But the diagonal blocks agree, so the projected states coincide.
  CHECK((ra.symmetric_projection().matrix - rb.symmetric_projection().matrix)
            .cwiseAbs()
            .maxCoeff() < 1e-14);
}

TEST_CASE("reduce and reduce_at agree through explicit amplitudes") {
  auto st = two_sector_state(8, 0.15, kPi, kInv2, kInv2);
  ReductionPlan plan(st, SubsystemSpec{2});
  const double t = 4.2;
  std::vector<Eigen::VectorXcd> amps;
  for (std::size_t k = 0; k < st.sector_count(); ++k)
    amps.push_back(st.sector(k).amplitudes(t));
  auto r1 = plan.reduce(st, amps);
  auto r2 = plan.reduce_at(st, t);
  CHECK((r1.matrix - r2.matrix).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("subsystem basis lists every label with its charges") {
  auto st = two_sector_state(8, 0.15, kPi, kInv2, kInv2);
  ReductionPlan plan(st, SubsystemSpec{2});
  const auto& basis = plan.basis();
  REQUIRE(basis.size() > 0);
  REQUIRE(basis.labels.size() == basis.charges.size());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    CHECK(label_charges(ModelKind::Schwinger, basis.labels[i], 2) ==
          basis.charges[i]);
    bool known = basis.charges[i] == GaugeSector{0, 0} ||
                 basis.charges[i] == GaugeSector{1, -1};
    CHECK(known);
  }
}
