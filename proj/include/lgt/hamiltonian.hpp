#pragma once

#include <Eigen/Dense>
#include <memory>

#include "lgt/sector_basis.hpp"
#include "lgt/types.hpp"

namespace lgt {

// Dense Hamiltonian restricted to one gauge sector, with the links already
// integrated out: the electric term is diagonal in the occupation basis and
// the hop/pair terms move between occupations of the same sector.
class SectorHamiltonian {
 public:
  SectorHamiltonian(std::shared_ptr<const SectorBasis> basis,
                    ModelParams params);

  const SectorBasis& basis() const { return *basis_; }
  std::shared_ptr<const SectorBasis> basis_ptr() const { return basis_; }
  const ModelParams& params() const { return params_; }
  const Eigen::MatrixXcd& matrix() const { return h_; }

  // Diagonal (mass + electric) energy of one basis state.
  double diagonal_energy(std::size_t i) const;

 private:
  std::shared_ptr<const SectorBasis> basis_;
  ModelParams params_;
  Eigen::MatrixXcd h_;
};

}  // namespace lgt
