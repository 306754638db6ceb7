#include "lgt/asymmetry.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>

namespace lgt {

double von_neumann_entropy(const Eigen::MatrixXcd& rho, double clip_tol) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho);
  if (solver.info() != Eigen::Success)
    throw ModelError("entropy eigendecomposition failed");
  double s = 0.0;
  for (Eigen::Index k = 0; k < solver.eigenvalues().size(); ++k) {
    double lam = solver.eigenvalues()(k);
    if (lam < -1e-8)
      throw ModelError("density matrix has eigenvalue " + std::to_string(lam));
    if (lam <= clip_tol) continue;
    s -= lam * std::log(lam);
  }
  return s;
}

double entanglement_asymmetry(const ReducedDensityMatrix& rdm) {
  return von_neumann_entropy(rdm.symmetric_projection().matrix) -
         von_neumann_entropy(rdm.matrix);
}

double renyi2_asymmetry(const ReducedDensityMatrix& rdm) {
  double p2 = rdm.matrix.cwiseAbs2().sum();
  double pg2 = rdm.symmetric_projection().matrix.cwiseAbs2().sum();
  return -std::log(pg2) + std::log(p2);
}

double trace_distance_asymmetry(const ReducedDensityMatrix& rdm) {
  Eigen::MatrixXcd diff = rdm.matrix - rdm.symmetric_projection().matrix;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(diff);
  if (solver.info() != Eigen::Success)
    throw ModelError("trace-distance eigendecomposition failed");
  return 0.5 * solver.eigenvalues().cwiseAbs().sum();
}

Eigen::MatrixXcd order_parameter_matrix(const SubsystemBasis& basis) {
  const auto dim = static_cast<Eigen::Index>(basis.size());
  const int ell = basis.ell;
  Eigen::MatrixXcd op = Eigen::MatrixXcd::Zero(dim, dim);
  const double elem = 1.0 / std::sqrt(2.0);
  for (Eigen::Index r = 0; r < dim; ++r) {
    for (Eigen::Index c = 0; c < dim; ++c) {
      if (label_occ_bits(basis.labels[r], ell) !=
          label_occ_bits(basis.labels[c], ell))
        continue;
      LinkConfig lr = label_links(basis.labels[r], ell);
      LinkConfig lc = label_links(basis.labels[c], ell);
      int ndiff = 0, step = 0;
      for (int k = 0; k < ell; ++k)
        if (lr[k] != lc[k]) {
          ++ndiff;
          step = std::abs(lr[k] - lc[k]);
        }
      // S^x moves one link by 1; (S^x)^2-(S^y)^2 = (S^+ S^+ + S^- S^-)/2
      // moves it by 2. Every surviving element is 1/sqrt(2) on spin 1.
      if (ndiff == 1 && (step == 1 || step == 2)) op(r, c) = elem;
    }
  }
  return op;
}

double order_parameter(const ReducedDensityMatrix& rdm, ModelKind model) {
  if (model != ModelKind::QuantumLink)
    throw ModelError("order parameter requires spin-1 links");
  Eigen::MatrixXcd op = order_parameter_matrix(rdm.basis);
  return (rdm.matrix * op).trace().real();
}

std::vector<double> moving_average(const std::vector<double>& x, int width) {
  if (width <= 1) return x;
  const int n = static_cast<int>(x.size());
  const int half = width / 2;
  std::vector<double> out(x.size());
  for (int i = 0; i < n; ++i) {
    int lo = std::max(0, i - half);
    int hi = std::min(n - 1, i + half);
    double s = 0.0;
    for (int k = lo; k <= hi; ++k) s += x[k];
    out[i] = s / (hi - lo + 1);
  }
  return out;
}

std::vector<double> detect_crossing(const MetricSeries& a,
                                    const MetricSeries& b, int smooth_width) {
  if (a.times != b.times) throw ModelError("crossing needs a shared time grid");
  if (a.values.size() != a.times.size() || b.values.size() != b.times.size())
    throw ModelError("metric series length mismatch");
  std::vector<double> d(a.values.size());
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = a.values[i] - b.values[i];
  d = moving_average(d, smooth_width);
  std::vector<double> out;
  for (std::size_t i = 0; i + 1 < d.size(); ++i) {
    if (d[i] == 0.0) continue;
    if (d[i] * d[i + 1] < 0.0) {
      double f = d[i] / (d[i] - d[i + 1]);
      out.push_back(a.times[i] + f * (a.times[i + 1] - a.times[i]));
    }
  }
  return out;
}

double fraction_below_after(const MetricSeries& a, const MetricSeries& b,
                            double t_c) {
  std::size_t total = 0, below = 0;
  for (std::size_t i = 0; i < a.times.size(); ++i) {
    if (a.times[i] <= t_c) continue;
    ++total;
    if (a.values[i] < b.values[i]) ++below;
  }
  return total ? static_cast<double>(below) / total : 1.0;
}

}  // namespace lgt
