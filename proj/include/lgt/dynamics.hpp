#pragma once

#include <Eigen/Dense>
#include <memory>
#include <vector>

#include "lgt/hamiltonian.hpp"

namespace lgt {

// Spectral decomposition of one sector Hamiltonian. Columns are
// phase-canonicalized (largest-magnitude entry real positive) so repeated
// runs and equivalent builds produce identical amplitude files.
struct EigenSystem {
  Eigen::VectorXd energies;
  Eigen::MatrixXcd vectors;

  static EigenSystem decompose(const Eigen::MatrixXcd& h);
};

// One gauge sector of an evolving superposition: basis, Hamiltonian,
// spectrum, coefficient and the initial fermion configuration's amplitudes.
class SectorState {
 public:
  SectorState(std::shared_ptr<const SectorBasis> basis, ModelParams params,
              cplx alpha, const FermionConfig& seed);

  const SectorBasis& basis() const { return ham_.basis(); }
  const SectorHamiltonian& hamiltonian() const { return ham_; }
  const EigenSystem& eigensystem() const { return eig_; }
  cplx alpha() const { return alpha_; }
  const Eigen::VectorXcd& initial() const { return psi0_; }
  // Eigenbasis overlaps <E_n|psi0>.
  const Eigen::VectorXcd& overlaps() const { return w_; }

  Eigen::VectorXcd amplitudes(double t) const;

  double energy_expectation(const Eigen::VectorXcd& amps) const;

 private:
  SectorHamiltonian ham_;
  EigenSystem eig_;
  cplx alpha_;
  Eigen::VectorXcd psi0_;
  Eigen::VectorXcd w_;
};

// Superposition over gauge sectors sharing one fermion seed (or one seed per
// sector); alphas are fixed, evolution is per sector.
class MultiSectorState {
 public:
  MultiSectorState(ModelKind model, int n_sites, ModelParams params);

  void add_sector(const std::vector<int>& charges_on_a, cplx alpha,
                  const FermionConfig& seed, std::size_t cap_dim = 0);

  ModelKind model() const { return model_; }
  int n_sites() const { return n_; }
  const ModelParams& params() const { return params_; }
  std::size_t sector_count() const { return sectors_.size(); }
  const SectorState& sector(std::size_t k) const { return *sectors_[k]; }

  // Squared norm of the coefficient vector; 1 for a normalized state.
  double coefficient_norm2() const;

 private:
  ModelKind model_;
  int n_;
  ModelParams params_;
  std::vector<std::unique_ptr<SectorState>> sectors_;
};

struct ConservationReport {
  double max_norm_drift = 0.0;     // | ||a(t)||^2 - 1 | per sector
  double max_energy_drift = 0.0;   // relative to t=0, extra matvec each time
};

// Evaluates norm and energy conservation at the given times.
ConservationReport check_conservation(const MultiSectorState& state,
                                      const std::vector<double>& times);

}  // namespace lgt
