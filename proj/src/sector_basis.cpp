#include "lgt/sector_basis.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>

namespace lgt {

std::string to_string(ModelKind m) {
  return m == ModelKind::Schwinger ? "schwinger" : "quantumlink";
}

std::optional<ModelKind> model_from_string(const std::string& s) {
  if (s == "schwinger") return ModelKind::Schwinger;
  if (s == "quantumlink" || s == "qlm") return ModelKind::QuantumLink;
  return std::nullopt;
}

std::uint32_t pack_occ(const FermionConfig& occ) {
  std::uint32_t bits = 0;
  for (auto o : occ) bits = (bits << 1) | (o ? 1u : 0u);
  return bits;
}

FermionConfig unpack_occ(std::uint32_t bits, int n_sites) {
  FermionConfig occ(n_sites);
  for (int s = 0; s < n_sites; ++s)
    occ[s] = (bits >> (n_sites - 1 - s)) & 1u;
  return occ;
}

std::optional<LinkConfig> reconstruct_links(ModelKind model, int n_sites,
                                            const GaugeSector& g,
                                            const FermionConfig& occ,
                                            int boundary_left,
                                            int boundary_right) {
  if (static_cast<int>(g.size()) != n_sites ||
      static_cast<int>(occ.size()) != n_sites)
    throw ModelError("gauge sector / occupation size mismatch");
  LinkConfig links(n_sites - 1);
  int prev = boundary_left;
  for (int n = 1; n < n_sites; ++n) {
    int cur;
    if (model == ModelKind::Schwinger) {
      // g_n = L_n - L_{n-1} - psi^dag psi + (1 - (-1)^n)/2
      cur = prev + g[n - 1] + occ[n - 1] - (n % 2 ? 1 : 0);
    } else {
      // g_n = (-1)^{n+1} (S^z_n + S^z_{n-1} + psi^dag psi)
      int sign = (n % 2 ? 1 : -1);
      cur = sign * g[n - 1] - prev - occ[n - 1];
      if (cur < -1 || cur > 1) return std::nullopt;
    }
    links[n - 1] = cur;
    prev = cur;
  }
  if (gauss_charge(model, n_sites, prev, boundary_right, occ[n_sites - 1]) !=
      g[n_sites - 1])
    return std::nullopt;
  return links;
}

int gauss_charge(ModelKind model, int site, int link_left, int link_right,
                 int occ) {
  if (model == ModelKind::Schwinger)
    return link_right - link_left - occ + (site % 2 ? 1 : 0);
  int sign = (site % 2 ? 1 : -1);
  return sign * (link_right + link_left + occ);
}

SectorBasis::SectorBasis(ModelKind model, int n_sites, GaugeSector charges,
                         std::optional<int> filling, int boundary_left,
                         int boundary_right)
    : model_(model),
      n_(n_sites),
      charges_(std::move(charges)),
      filling_(filling),
      bl_(boundary_left),
      br_(boundary_right) {
  if (n_ < 2 || n_ > 24) throw ModelError("system size out of range");
  if (static_cast<int>(charges_.size()) != n_)
    throw ModelError("gauge sector length must equal the site count");
  const std::uint32_t top = 1u << n_;
  for (std::uint32_t bits = 0; bits < top; ++bits) {
    if (filling_ && std::popcount(bits) != *filling_) continue;
    FermionConfig occ = unpack_occ(bits, n_);
    auto links = reconstruct_links(model_, n_, charges_, occ, bl_, br_);
    if (!links) continue;
    index_.emplace(bits, occs_.size());
    occs_.push_back(bits);
    links_.push_back(std::move(*links));
  }
}

std::optional<std::size_t> SectorBasis::find_occ(std::uint32_t bits) const {
  auto it = index_.find(bits);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t SectorBasis::dimension(ModelKind model, int n_sites,
                                   const GaugeSector& charges,
                                   std::optional<int> filling,
                                   int boundary_left, int boundary_right) {
  std::size_t count = 0;
  const std::uint32_t top = 1u << n_sites;
  for (std::uint32_t bits = 0; bits < top; ++bits) {
    if (filling && std::popcount(bits) != *filling) continue;
    FermionConfig occ = unpack_occ(bits, n_sites);
    if (reconstruct_links(model, n_sites, charges, occ, boundary_left,
                          boundary_right))
      ++count;
  }
  return count;
}

namespace {
// Links are packed as 6-bit offset values; |L| up to 31 is far beyond any
// reachable field at the supported sizes.
constexpr int kLinkBits = 6;
constexpr int kLinkOffset = 32;

std::uint64_t pack_links(const std::vector<int>& links, int from, int to) {
  std::uint64_t key = 0;
  for (int k = from; k < to; ++k) {
    int v = links[k] + kLinkOffset;
    if (v < 0 || v >= (1 << kLinkBits))
      throw ModelError("link value out of packable range");
    key = (key << kLinkBits) | static_cast<std::uint64_t>(v);
  }
  return key;
}
}  // namespace

std::uint64_t subsystem_label(const SectorBasis& basis, std::size_t i,
                              int ell) {
  const int n = basis.n_sites();
  if (ell < 1 || ell > n - 2)
    throw ModelError("subsystem must leave at least two complement sites");
  std::uint64_t occ_a = basis.occ_bits(i) >> (n - ell);
  return (pack_links(basis.links(i), 0, ell) << ell) | occ_a;
}

std::uint64_t complement_label(const SectorBasis& basis, std::size_t i,
                               int ell) {
  const int n = basis.n_sites();
  std::uint64_t occ_rest = basis.occ_bits(i) & ((1u << (n - ell)) - 1u);
  return (pack_links(basis.links(i), ell, n - 1) << (n - ell)) | occ_rest;
}

std::uint32_t label_occ_bits(std::uint64_t label, int ell) {
  return static_cast<std::uint32_t>(label & ((1u << ell) - 1u));
}

LinkConfig label_links(std::uint64_t label, int ell) {
  LinkConfig links(ell);
  std::uint64_t packed = label >> ell;
  for (int k = ell - 1; k >= 0; --k) {
    links[k] = static_cast<int>(packed & ((1u << kLinkBits) - 1u)) -
               kLinkOffset;
    packed >>= kLinkBits;
  }
  return links;
}

GaugeSector label_charges(ModelKind model, std::uint64_t label, int ell,
                          int boundary_left) {
  LinkConfig links = label_links(label, ell);
  std::uint32_t occ = label_occ_bits(label, ell);
  GaugeSector g(ell);
  int prev = boundary_left;
  for (int n = 1; n <= ell; ++n) {
    int o = (occ >> (ell - n)) & 1u;
    g[n - 1] = gauss_charge(model, n, prev, links[n - 1], o);
    prev = links[n - 1];
  }
  return g;
}

GaugeSector padded_sector(const std::vector<int>& charges_on_a, int n_sites) {
  GaugeSector g(n_sites, 0);
  if (static_cast<int>(charges_on_a.size()) > n_sites)
    throw ModelError("more charges than sites");
  std::copy(charges_on_a.begin(), charges_on_a.end(), g.begin());
  return g;
}

FermionConfig neel_state(int n_sites) {
  FermionConfig occ(n_sites);
  for (int s = 0; s < n_sites; ++s) occ[s] = (s % 2 == 0) ? 1 : 0;
  return occ;
}

FermionConfig vacuum_state(int n_sites) {
  return FermionConfig(n_sites, 0);
}

}  // namespace lgt
