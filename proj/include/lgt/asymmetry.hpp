#pragma once

#include <vector>

#include "lgt/reduced_density.hpp"

namespace lgt {

// Von Neumann entropy in nats. Eigenvalues below the clip tolerance count as
// zero; an eigenvalue below -1e-8 means the matrix is not a state and throws.
double von_neumann_entropy(const Eigen::MatrixXcd& rho,
                           double clip_tol = 1e-10);

// Entropy cost of projecting away the charge-mixing blocks; zero iff the
// subsystem state is gauge symmetric.
double entanglement_asymmetry(const ReducedDensityMatrix& rdm);

// -log tr(rho_G^2) + log tr(rho^2).
double renyi2_asymmetry(const ReducedDensityMatrix& rdm);

// (1/2) tr |rho - rho_G|.
double trace_distance_asymmetry(const ReducedDensityMatrix& rdm);

// Expectation of the link order parameter
//   O = sum_{links in A} [S^x + ((S^x)^2 - (S^y)^2)/sqrt(2)],
// whose nonzero matrix elements all equal 1/sqrt(2) and connect labels with
// equal occupations differing on exactly one link by 1 or 2. Spin-1 links
// only; throws for the Schwinger model.
double order_parameter(const ReducedDensityMatrix& rdm, ModelKind model);

// Dense matrix of the order parameter on a subsystem label basis.
Eigen::MatrixXcd order_parameter_matrix(const SubsystemBasis& basis);

struct MetricSeries {
  std::vector<double> times;
  std::vector<double> values;
};

// Interpolated sign-change times of a-b after centered moving-average
// smoothing (window shrinks at the edges; no padding).
std::vector<double> detect_crossing(const MetricSeries& a,
                                    const MetricSeries& b,
                                    int smooth_width = 5);

std::vector<double> moving_average(const std::vector<double>& x, int width);

// Fraction of samples strictly after t_c where a < b.
double fraction_below_after(const MetricSeries& a, const MetricSeries& b,
                            double t_c);

}  // namespace lgt
