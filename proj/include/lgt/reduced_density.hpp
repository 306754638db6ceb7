#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "lgt/dynamics.hpp"

namespace lgt {

// Ordered list of subsystem labels (occupations of sites 1..ell plus links
// 1..ell) appearing in a state family, with the A-side gauge charges of each.
struct SubsystemBasis {
  int ell = 0;
  std::vector<std::uint64_t> labels;
  std::vector<GaugeSector> charges;  // per label

  std::size_t size() const { return labels.size(); }
};

// Reduced density matrix on the subsystem label basis. Entries between labels
// of different A-charges form the symmetry-breaking off-diagonal blocks.
struct ReducedDensityMatrix {
  SubsystemBasis basis;
  Eigen::MatrixXcd matrix;

  // Zeroes every entry connecting distinct A-charge vectors.
  ReducedDensityMatrix symmetric_projection() const;
  double trace() const { return matrix.trace().real(); }
  // Frobenius norm of the block between two charge vectors.
  double block_norm(const GaugeSector& bra, const GaugeSector& ket) const;
};

// Precomputed index lists: for each ordered sector pair, the basis-state
// pairs whose complement labels coincide, with their subsystem label rows and
// columns. Tracing out the complement is then one sweep per time sample.
class ReductionPlan {
 public:
  ReductionPlan(const MultiSectorState& state, SubsystemSpec sub);

  const SubsystemBasis& basis() const { return basis_; }

  // rho_A from per-sector amplitude vectors (indexed like the state family).
  ReducedDensityMatrix reduce(const MultiSectorState& state,
                              const std::vector<Eigen::VectorXcd>& amps) const;
  ReducedDensityMatrix reduce_at(const MultiSectorState& state,
                                 double t) const;

 private:
  struct PairList {
    std::size_t bra_sector, ket_sector;
    std::vector<std::uint32_t> bra_state, ket_state;
    std::vector<std::uint32_t> row, col;
  };
  SubsystemBasis basis_;
  std::vector<PairList> pairs_;
};

}  // namespace lgt
