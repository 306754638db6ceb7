#include "lgt/hamiltonian.hpp"

#include <cmath>

namespace lgt {

double SectorHamiltonian::diagonal_energy(std::size_t i) const {
  const auto& b = *basis_;
  const int n = b.n_sites();
  const double th = params_.theta / (2.0 * M_PI);
  double e = 0.0;
  if (b.model() == ModelKind::Schwinger) {
    for (int s = 1; s <= n; ++s)
      e += params_.m * (s % 2 ? -1.0 : 1.0) * b.occ(i, s);
    for (int v : b.links(i)) e += params_.j * (v + th) * (v + th);
  } else {
    for (int s = 1; s <= n; ++s) e += params_.m * b.occ(i, s);
    const auto& links = b.links(i);
    for (int k = 1; k <= n - 1; ++k) {
      double field = (k % 2 ? 1.0 : -1.0) * links[k - 1] + th;
      e += params_.j * field * field;
    }
  }
  return e;
}

SectorHamiltonian::SectorHamiltonian(std::shared_ptr<const SectorBasis> basis,
                                     ModelParams params)
    : basis_(std::move(basis)), params_(params) {
  const auto& b = *basis_;
  const int n = b.n_sites();
  const auto dim = static_cast<Eigen::Index>(b.size());
  h_ = Eigen::MatrixXcd::Zero(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i)
    h_(i, i) = diagonal_energy(static_cast<std::size_t>(i));

  const double w = params_.w;
  for (Eigen::Index i = 0; i < dim; ++i) {
    const std::uint32_t bits = b.occ_bits(static_cast<std::size_t>(i));
    for (int bond = 1; bond <= n - 1; ++bond) {
      const std::uint32_t left = 1u << (n - bond);
      const std::uint32_t right = 1u << (n - bond - 1);
      if (b.model() == ModelKind::Schwinger) {
        // psi^dag_n U_n psi_{n+1}: |0 1> -> |1 0>, raising link n. Adjacent
        // Jordan-Wigner strings cancel, so the element is -w on the upper
        // triangle and its mirror.
        if ((bits & left) == 0 && (bits & right) != 0) {
          auto j = b.find_occ((bits | left) & ~right);
          if (j) {
            h_(static_cast<Eigen::Index>(*j), i) += -w;
            h_(i, static_cast<Eigen::Index>(*j)) += -w;
          }
        }
      } else {
        // psi_n S^+_n psi_{n+1}: |1 1> -> |0 0>, raising link n. The pair of
        // Jordan-Wigner strings contributes a net factor -1 and the spin-1
        // ladder a factor sqrt(2), so the element is +sqrt(2) w. Allowed only
        // while the link can still be raised.
        if ((bits & left) != 0 && (bits & right) != 0 &&
            b.links(static_cast<std::size_t>(i))[bond - 1] <= 0) {
          auto j = b.find_occ(bits & ~left & ~right);
          if (j) {
            h_(static_cast<Eigen::Index>(*j), i) += std::sqrt(2.0) * w;
            h_(i, static_cast<Eigen::Index>(*j)) += std::sqrt(2.0) * w;
          }
        }
      }
    }
  }
}

}  // namespace lgt
