#include "lgt/reduced_density.hpp"

#include <cmath>
#include <map>
#include <unordered_map>

namespace lgt {

ReducedDensityMatrix ReducedDensityMatrix::symmetric_projection() const {
  ReducedDensityMatrix out{basis, matrix};
  const auto dim = static_cast<Eigen::Index>(basis.size());
  for (Eigen::Index r = 0; r < dim; ++r)
    for (Eigen::Index c = 0; c < dim; ++c)
      if (basis.charges[r] != basis.charges[c]) out.matrix(r, c) = 0.0;
  return out;
}

double ReducedDensityMatrix::block_norm(const GaugeSector& bra,
                                        const GaugeSector& ket) const {
  double s = 0.0;
  const auto dim = static_cast<Eigen::Index>(basis.size());
  for (Eigen::Index r = 0; r < dim; ++r) {
    if (basis.charges[r] != bra) continue;
    for (Eigen::Index c = 0; c < dim; ++c)
      if (basis.charges[c] == ket) s += std::norm(matrix(r, c));
  }
  return std::sqrt(s);
}

ReductionPlan::ReductionPlan(const MultiSectorState& state, SubsystemSpec sub) {
  const int ell = sub.ell;
  const int n = state.n_sites();
  if (ell < 1 || ell > n - 2)
    throw ModelError("subsystem must leave at least two complement sites");
  basis_.ell = ell;

  std::map<std::uint64_t, std::uint32_t> label_index;
  struct SectorMaps {
    std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> by_comp;
    std::vector<std::uint32_t> label_of_state;
  };
  std::vector<SectorMaps> maps(state.sector_count());

  for (std::size_t k = 0; k < state.sector_count(); ++k) {
    const auto& b = state.sector(k).basis();
    maps[k].label_of_state.resize(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) {
      std::uint64_t lab = subsystem_label(b, i, ell);
      auto [it, inserted] =
          label_index.emplace(lab, static_cast<std::uint32_t>(basis_.size()));
      if (inserted) {
        basis_.labels.push_back(lab);
        basis_.charges.push_back(label_charges(b.model(), lab, ell));
      }
      maps[k].label_of_state[i] = it->second;
      maps[k].by_comp[complement_label(b, i, ell)].push_back(
          static_cast<std::uint32_t>(i));
    }
  }

  for (std::size_t a = 0; a < state.sector_count(); ++a) {
    for (std::size_t b = 0; b < state.sector_count(); ++b) {
      PairList pl;
      pl.bra_sector = a;
      pl.ket_sector = b;
      for (const auto& [comp, states_a] : maps[a].by_comp) {
        auto it = maps[b].by_comp.find(comp);
        if (it == maps[b].by_comp.end()) continue;
        for (auto ia : states_a)
          for (auto ib : it->second) {
            pl.bra_state.push_back(ia);
            pl.ket_state.push_back(ib);
            pl.row.push_back(maps[a].label_of_state[ia]);
            pl.col.push_back(maps[b].label_of_state[ib]);
          }
      }
      pairs_.push_back(std::move(pl));
    }
  }
}

ReducedDensityMatrix ReductionPlan::reduce(
    const MultiSectorState& state,
    const std::vector<Eigen::VectorXcd>& amps) const {
  ReducedDensityMatrix rdm;
  rdm.basis = basis_;
  const auto dim = static_cast<Eigen::Index>(basis_.size());
  rdm.matrix = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& pl : pairs_) {
    const cplx pa = state.sector(pl.bra_sector).alpha();
    const cplx pb = state.sector(pl.ket_sector).alpha();
    const auto& va = amps[pl.bra_sector];
    const auto& vb = amps[pl.ket_sector];
    for (std::size_t x = 0; x < pl.row.size(); ++x) {
      cplx v = pa * va(pl.bra_state[x]) * std::conj(pb * vb(pl.ket_state[x]));
      rdm.matrix(pl.row[x], pl.col[x]) += v;
    }
  }
  return rdm;
}

ReducedDensityMatrix ReductionPlan::reduce_at(const MultiSectorState& state,
                                              double t) const {
  std::vector<Eigen::VectorXcd> amps;
  amps.reserve(state.sector_count());
  for (std::size_t k = 0; k < state.sector_count(); ++k)
    amps.push_back(state.sector(k).amplitudes(t));
  return reduce(state, amps);
}

}  // namespace lgt
