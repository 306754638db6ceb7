#pragma once

#include <Eigen/Dense>
#include <map>
#include <vector>

#include "lgt/dynamics.hpp"
#include "lgt/reduced_density.hpp"

namespace lgt {

// Subsystem operator used to project the off-diagonal block onto a scalar
// signal. Coefficients live on the 2^ell fermion labels of A; the link labels
// ride along with the block's bra/ket charges. UnitElements replaces every
// eigenstate matrix element by 1 (the generic-operator assumption used for
// the frequency-resolved plots).
struct ProbeOperator {
  enum class Mode { Coefficients, UnitElements };
  Mode mode = Mode::Coefficients;
  Eigen::MatrixXcd c;  // (2^ell) x (2^ell), maps ket fermion label -> bra

  static ProbeOperator all_ones(int ell);
  static ProbeOperator identity(int ell);
  static ProbeOperator seeded_random(int ell, std::uint64_t seed = 0xC0FFEE);
  static ProbeOperator unit_elements();
};

// z(omega): complex weight per frequency bin. Bin representatives are the
// |v|-weighted mean gap within the bin.
struct GapDistribution {
  double bin_width = 0.0;
  std::map<long long, cplx> bins;
  std::map<long long, double> abs_weight;
  std::map<long long, double> omega_moment;  // sum |v| * omega

  double representative(long long key) const;
  cplx zero_frequency() const;
  double total_abs_weight() const;
  // Sum of z(omega) e^{-i omega t} over all bins, using representatives.
  cplx reconstruct(double t) const;
};

// Enumerates all eigenpair gaps between the bra and ket sectors of `state`
// (which must hold exactly the two sectors of the probed block) and
// accumulates v = <E_bra|rho_ini|E_ket><E_ket|O_A|E_bra> into bins.
GapDistribution gap_distribution(const MultiSectorState& state,
                                 std::size_t bra_sector,
                                 std::size_t ket_sector, SubsystemSpec sub,
                                 const ProbeOperator& probe, double bin_width);

// Direct time-domain evaluation of the same signal, tr_A[O_A sigma(t)], used
// as the oracle for the frequency decomposition.
cplx block_signal(const MultiSectorState& state, std::size_t bra_sector,
                  std::size_t ket_sector, SubsystemSpec sub,
                  const ProbeOperator& probe, double t);

// Closed form of the zero-frequency weight when the gauge field is static
// (j = 0): alpha_bra alpha_ket^* tr(rho_D O^f_A), with the diagonal ensemble
// projected onto exact-degeneracy clusters of the fermionic spectrum so the
// expression stays equal to the enumeration bin when levels coincide.
cplx zero_frequency_diagonal_ensemble(const MultiSectorState& state,
                                      std::size_t bra_sector,
                                      std::size_t ket_sector,
                                      SubsystemSpec sub,
                                      const ProbeOperator& probe,
                                      double degeneracy_tol = 1e-10);

struct Peak {
  double center = 0.0;   // |z|-weighted mean over the peak support
  double weight = 0.0;   // integrated |z|
  double sigma = 0.0;    // weighted standard deviation
};

// Coarse-bins |z|, keeps contiguous runs above threshold_rel of the largest
// coarse bin, and reports weighted center/weight/sigma of each run from the
// fine bins.
std::vector<Peak> peak_statistics(const GapDistribution& dist,
                                  double coarse_bin,
                                  double threshold_rel = 0.05);

// Fraction of total |z| weight within half_width of an integer multiple of
// spacing (bin representatives decide membership).
double weight_near_multiples(const GapDistribution& dist, double spacing,
                             double half_width);

}  // namespace lgt
