#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lgt {

using cplx = std::complex<double>;

enum class ModelKind { Schwinger, QuantumLink };

std::string to_string(ModelKind m);
std::optional<ModelKind> model_from_string(const std::string& s);

// Fermion occupations, site 1 first. Packed form keeps site 1 in the most
// significant of the N used bits, so ascending packed order is lexicographic.
using FermionConfig = std::vector<std::uint8_t>;
// Electric field values on links 1..N-1 (boundary links are fixed, not stored).
using LinkConfig = std::vector<int>;
// Gauss charges g_1..g_N.
using GaugeSector = std::vector<int>;

std::uint32_t pack_occ(const FermionConfig& occ);
FermionConfig unpack_occ(std::uint32_t bits, int n_sites);

struct ModelParams {
  double w = 1.0;    // hopping
  double m = 0.0;    // (staggered) mass
  double j = 0.0;    // electric coupling
  double theta = 0.0;  // topological angle
};

// Subsystem A = sites 1..ell plus links 1..ell (left-anchored).
struct SubsystemSpec {
  int ell = 2;
};

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ModelError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace lgt
