#include "lgt/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>
#include <unordered_map>

namespace lgt {

namespace {

// Matrix elements of the probe between raw sector states: nonzero only when
// the complement labels agree, value c(occ_A(bra), occ_A(ket)).
Eigen::MatrixXcd probe_in_basis(const SectorBasis& bra, const SectorBasis& ket,
                                SubsystemSpec sub, const ProbeOperator& probe) {
  const int ell = sub.ell;
  Eigen::MatrixXcd op = Eigen::MatrixXcd::Zero(bra.size(), ket.size());
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> ket_by_comp;
  for (std::size_t k = 0; k < ket.size(); ++k)
    ket_by_comp[complement_label(ket, k, ell)].push_back(k);
  for (std::size_t b = 0; b < bra.size(); ++b) {
    auto it = ket_by_comp.find(complement_label(bra, b, ell));
    if (it == ket_by_comp.end()) continue;
    const std::uint64_t occ_b = label_occ_bits(subsystem_label(bra, b, ell), ell);
    for (std::size_t k : it->second) {
      const std::uint64_t occ_k =
          label_occ_bits(subsystem_label(ket, k, ell), ell);
      op(b, k) = probe.c(static_cast<Eigen::Index>(occ_b),
                         static_cast<Eigen::Index>(occ_k));
    }
  }
  return op;
}

// Clusters sorted eigenvalues into chains of gaps below tol. Returns
// [start, end) index ranges.
std::vector<std::pair<Eigen::Index, Eigen::Index>> degeneracy_clusters(
    const Eigen::VectorXd& e, double tol) {
  std::vector<std::pair<Eigen::Index, Eigen::Index>> out;
  Eigen::Index start = 0;
  for (Eigen::Index i = 1; i <= e.size(); ++i) {
    if (i == e.size() || e(i) - e(i - 1) > tol) {
      out.emplace_back(start, i);
      start = i;
    }
  }
  return out;
}

}  // namespace

ProbeOperator ProbeOperator::all_ones(int ell) {
  ProbeOperator p;
  const Eigen::Index d = Eigen::Index{1} << ell;
  p.c = Eigen::MatrixXcd::Ones(d, d);
  return p;
}

ProbeOperator ProbeOperator::identity(int ell) {
  ProbeOperator p;
  const Eigen::Index d = Eigen::Index{1} << ell;
  p.c = Eigen::MatrixXcd::Identity(d, d);
  return p;
}

ProbeOperator ProbeOperator::seeded_random(int ell, std::uint64_t seed) {
  ProbeOperator p;
  const Eigen::Index d = Eigen::Index{1} << ell;
  p.c.resize(d, d);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j) {
      // Rejection-sample the unit disk so entries are isotropic in phase.
      double re = 0.0, im = 0.0;
      do {
        re = u(rng);
        im = u(rng);
      } while (re * re + im * im > 1.0);
      p.c(i, j) = cplx(re, im);
    }
  return p;
}

ProbeOperator ProbeOperator::unit_elements() {
  ProbeOperator p;
  p.mode = Mode::UnitElements;
  return p;
}

double GapDistribution::representative(long long key) const {
  const double w = abs_weight.at(key);
  if (w <= 0.0) return static_cast<double>(key) * bin_width;
  return omega_moment.at(key) / w;
}

cplx GapDistribution::zero_frequency() const {
  auto it = bins.find(0);
  return it == bins.end() ? cplx{0.0, 0.0} : it->second;
}

double GapDistribution::total_abs_weight() const {
  double s = 0.0;
  for (const auto& [k, w] : abs_weight) s += w;
  return s;
}

cplx GapDistribution::reconstruct(double t) const {
  cplx s{0.0, 0.0};
  for (const auto& [k, z] : bins)
    s += z * std::exp(cplx(0.0, -representative(k) * t));
  return s;
}

GapDistribution gap_distribution(const MultiSectorState& state,
                                 std::size_t bra_sector,
                                 std::size_t ket_sector, SubsystemSpec sub,
                                 const ProbeOperator& probe, double bin_width) {
  if (bin_width <= 0.0) throw std::invalid_argument("bin_width must be > 0");
  if (bra_sector >= state.sector_count() || ket_sector >= state.sector_count())
    throw std::invalid_argument("probed sector pair is not in the state");
  const SectorState& sb = state.sector(bra_sector);
  const SectorState& sk = state.sector(ket_sector);
  const cplx pref = sb.alpha() * std::conj(sk.alpha());

  Eigen::MatrixXcd o_eig;
  if (probe.mode == ProbeOperator::Mode::UnitElements) {
    o_eig = Eigen::MatrixXcd::Ones(sk.eigensystem().vectors.cols(),
                                   sb.eigensystem().vectors.cols());
  } else {
    const Eigen::MatrixXcd o_basis =
        probe_in_basis(sk.basis(), sb.basis(), sub, probe);
    if (o_basis.cwiseAbs().sum() == 0.0)
      throw std::invalid_argument(
          "probe connects no basis states between the two sectors");
    // <E_ket n'|O|E_bra n> = (V_ket^dag O_basis V_bra)(n', n)
    o_eig = sk.eigensystem().vectors.adjoint() * o_basis * sb.eigensystem().vectors;
  }

  GapDistribution dist;
  dist.bin_width = bin_width;
  const Eigen::VectorXcd& wb = sb.overlaps();
  const Eigen::VectorXcd& wk = sk.overlaps();
  for (Eigen::Index n = 0; n < wb.size(); ++n) {
    if (std::abs(wb(n)) == 0.0 && probe.mode != ProbeOperator::Mode::UnitElements) {
      // v always carries w_bra(n); skip empty rows.
      continue;
    }
    for (Eigen::Index np = 0; np < wk.size(); ++np) {
      // <E_bra n|rho_ini|E_ket n'> = pref * w_bra(n) w_ket(n')^*
      const cplx v = pref * wb(n) * std::conj(wk(np)) * o_eig(np, n);
      if (v == cplx{0.0, 0.0}) continue;
      const double omega = sb.eigensystem().energies(n) - sk.eigensystem().energies(np);
      const long long key = std::llround(omega / bin_width);
      dist.bins[key] += v;
      const double av = std::abs(v);
      dist.abs_weight[key] += av;
      dist.omega_moment[key] += av * omega;
    }
  }
  return dist;
}

cplx block_signal(const MultiSectorState& state, std::size_t bra_sector,
                  std::size_t ket_sector, SubsystemSpec sub,
                  const ProbeOperator& probe, double t) {
  if (probe.mode == ProbeOperator::Mode::UnitElements)
    throw std::invalid_argument(
        "unit-element probe has no basis-space representation");
  if (bra_sector >= state.sector_count() || ket_sector >= state.sector_count())
    throw std::invalid_argument("probed sector pair is not in the state");
  const SectorState& sb = state.sector(bra_sector);
  const SectorState& sk = state.sector(ket_sector);
  const cplx pref = sb.alpha() * std::conj(sk.alpha());
  const Eigen::MatrixXcd o_basis =
      probe_in_basis(sk.basis(), sb.basis(), sub, probe);
  const Eigen::VectorXcd ab = sb.amplitudes(t);
  const Eigen::VectorXcd ak = sk.amplitudes(t);
  // tr(|psi_bra><psi_ket| O) = <psi_ket|O|psi_bra>
  return pref * (ak.adjoint() * o_basis * ab).value();
}

cplx zero_frequency_diagonal_ensemble(const MultiSectorState& state,
                                      std::size_t bra_sector,
                                      std::size_t ket_sector,
                                      SubsystemSpec sub,
                                      const ProbeOperator& probe,
                                      double degeneracy_tol) {
  if (state.params().j != 0.0)
    throw std::invalid_argument(
        "diagonal-ensemble closed form requires a static gauge field (j = 0)");
  if (probe.mode == ProbeOperator::Mode::UnitElements)
    throw std::invalid_argument(
        "unit-element probe has no basis-space representation");
  const SectorState& sb = state.sector(bra_sector);
  const SectorState& sk = state.sector(ket_sector);
  if (sb.basis().size() != sk.basis().size())
    throw std::invalid_argument("sector dimensions differ; no j=0 pairing");

  // At j = 0 both sectors share the fermionic spectrum; bra eigenbasis is
  // used for both sides and the degeneracy projector keeps the cross terms
  // the enumeration also counts as zero-frequency.
  const Eigen::MatrixXcd o_basis =
      probe_in_basis(sk.basis(), sb.basis(), sub, probe);
  const Eigen::MatrixXcd o_eig =
      sk.eigensystem().vectors.adjoint() * o_basis * sb.eigensystem().vectors;
  const Eigen::VectorXcd& wb = sb.overlaps();
  const Eigen::VectorXcd& wk = sk.overlaps();

  cplx total{0.0, 0.0};
  for (auto [lo, hi] : degeneracy_clusters(sb.eigensystem().energies, degeneracy_tol)) {
    for (Eigen::Index n = lo; n < hi; ++n)
      for (Eigen::Index np = lo; np < hi; ++np)
        total += wb(n) * std::conj(wk(np)) * o_eig(np, n);
  }
  return sb.alpha() * std::conj(sk.alpha()) * total;
}

std::vector<Peak> peak_statistics(const GapDistribution& dist,
                                  double coarse_bin, double threshold_rel) {
  if (coarse_bin <= 0.0) throw std::invalid_argument("coarse_bin must be > 0");
  // all weights below are |z| of the binned complex sum, matching the
  // plotted quantity; cancellation within a fine bin reduces its weight
  std::map<long long, double> coarse;
  for (const auto& [k, z] : dist.bins)
    coarse[std::llround(dist.representative(k) / coarse_bin)] += std::abs(z);
  if (coarse.empty()) return {};
  double wmax = 0.0;
  for (const auto& [k, w] : coarse) wmax = std::max(wmax, w);
  const double thr = threshold_rel * wmax;

  // Contiguous runs of above-threshold coarse bins form one peak each.
  std::vector<std::pair<long long, long long>> runs;  // [first, last] keys
  long long run_start = 0;
  bool in_run = false;
  long long prev = 0;
  for (const auto& [k, w] : coarse) {
    const bool above = w >= thr;
    if (above && (!in_run || k != prev + 1)) {
      if (in_run) runs.emplace_back(run_start, prev);
      run_start = k;
      in_run = true;
    } else if (!above && in_run) {
      runs.emplace_back(run_start, prev);
      in_run = false;
    }
    if (above) prev = k;
  }
  if (in_run) runs.emplace_back(run_start, prev);

  std::vector<Peak> peaks;
  for (auto [k0, k1] : runs) {
    const double lo = (static_cast<double>(k0) - 0.5) * coarse_bin;
    const double hi = (static_cast<double>(k1) + 0.5) * coarse_bin;
    Peak p;
    double m1 = 0.0, m2 = 0.0;
    for (const auto& [k, z] : dist.bins) {
      const double om = dist.representative(k);
      if (om < lo || om >= hi) continue;
      const double w = std::abs(z);
      p.weight += w;
      m1 += w * om;
      m2 += w * om * om;
    }
    if (p.weight > 0.0) {
      p.center = m1 / p.weight;
      const double var = std::max(0.0, m2 / p.weight - p.center * p.center);
      p.sigma = std::sqrt(var);
    }
    peaks.push_back(p);
  }
  return peaks;
}

double weight_near_multiples(const GapDistribution& dist, double spacing,
                             double half_width) {
  if (spacing <= 0.0) throw std::invalid_argument("spacing must be > 0");
  double near = 0.0, total = 0.0;
  for (const auto& [k, z] : dist.bins) {
    const double w = std::abs(z);
    total += w;
    const double om = dist.representative(k);
    const double r = om - spacing * std::round(om / spacing);
    if (std::abs(r) <= half_width) near += w;
  }
  return total > 0.0 ? near / total : 0.0;
}

}  // namespace lgt
