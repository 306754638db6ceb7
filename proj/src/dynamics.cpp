#include "lgt/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace lgt {

EigenSystem EigenSystem::decompose(const Eigen::MatrixXcd& h) {
  if (h.rows() == 0) throw ModelError("cannot decompose an empty sector");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h);
  if (solver.info() != Eigen::Success)
    throw ModelError("eigendecomposition failed");
  EigenSystem out{solver.eigenvalues(), solver.eigenvectors()};
  for (Eigen::Index c = 0; c < out.vectors.cols(); ++c) {
    Eigen::Index imax = 0;
    double best = 0.0;
    for (Eigen::Index r = 0; r < out.vectors.rows(); ++r) {
      double a = std::abs(out.vectors(r, c));
      if (a > best) {
        best = a;
        imax = r;
      }
    }
    cplx v = out.vectors(imax, c);
    if (best > 0.0) out.vectors.col(c) *= std::conj(v) / std::abs(v);
  }
  return out;
}

SectorState::SectorState(std::shared_ptr<const SectorBasis> basis,
                         ModelParams params, cplx alpha,
                         const FermionConfig& seed)
    : ham_(std::move(basis), params),
      eig_(EigenSystem::decompose(ham_.matrix())),
      alpha_(alpha) {
  auto idx = ham_.basis().find_occ(pack_occ(seed));
  if (!idx)
    throw ModelError("seed configuration is not in sector " +
                     std::to_string(pack_occ(seed)));
  psi0_ = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(ham_.basis().size()));
  psi0_(static_cast<Eigen::Index>(*idx)) = 1.0;
  w_ = eig_.vectors.adjoint() * psi0_;
}

Eigen::VectorXcd SectorState::amplitudes(double t) const {
  Eigen::VectorXcd phased(w_.size());
  for (Eigen::Index n = 0; n < w_.size(); ++n)
    phased(n) = std::exp(cplx(0.0, -eig_.energies(n) * t)) * w_(n);
  return eig_.vectors * phased;
}

double SectorState::energy_expectation(const Eigen::VectorXcd& amps) const {
  return (amps.adjoint() * (ham_.matrix() * amps))(0).real();
}

MultiSectorState::MultiSectorState(ModelKind model, int n_sites,
                                   ModelParams params)
    : model_(model), n_(n_sites), params_(params) {}

void MultiSectorState::add_sector(const std::vector<int>& charges_on_a,
                                  cplx alpha, const FermionConfig& seed,
                                  std::size_t cap_dim) {
  GaugeSector g = padded_sector(charges_on_a, n_);
  std::optional<int> filling;
  if (model_ == ModelKind::Schwinger)
    filling = static_cast<int>(seed.size()) -
              static_cast<int>(std::count(seed.begin(), seed.end(), 0));
  if (cap_dim) {
    std::size_t dim = SectorBasis::dimension(model_, n_, g, filling);
    if (dim > cap_dim)
      throw CapExceeded("sector dimension " + std::to_string(dim) +
                        " exceeds cap " + std::to_string(cap_dim));
  }
  auto basis = std::make_shared<SectorBasis>(model_, n_, std::move(g), filling);
  sectors_.push_back(
      std::make_unique<SectorState>(std::move(basis), params_, alpha, seed));
}

double MultiSectorState::coefficient_norm2() const {
  double s = 0.0;
  for (const auto& sec : sectors_) s += std::norm(sec->alpha());
  return s;
}

ConservationReport check_conservation(const MultiSectorState& state,
                                      const std::vector<double>& times) {
  ConservationReport rep;
  for (std::size_t k = 0; k < state.sector_count(); ++k) {
    const auto& sec = state.sector(k);
    const double e0 = sec.energy_expectation(sec.initial());
    const double scale = std::max(1.0, std::abs(e0));
    for (double t : times) {
      Eigen::VectorXcd a = sec.amplitudes(t);
      rep.max_norm_drift =
          std::max(rep.max_norm_drift, std::abs(a.squaredNorm() - 1.0));
      rep.max_energy_drift =
          std::max(rep.max_energy_drift,
                   std::abs(sec.energy_expectation(a) - e0) / scale);
    }
  }
  return rep;
}

}  // namespace lgt
