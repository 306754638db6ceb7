#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "lgt/types.hpp"

namespace lgt {

// Solves the Gauss-law recursion left to right and checks the final site
// against the right boundary. Returns nullopt if the chain is inconsistent
// (charge imbalance) or, for the quantum link model, leaves |S^z| <= 1.
std::optional<LinkConfig> reconstruct_links(ModelKind model, int n_sites,
                                            const GaugeSector& g,
                                            const FermionConfig& occ,
                                            int boundary_left = 0,
                                            int boundary_right = 0);

// Gauss charge at site n (1-based) from the surrounding links and occupation.
int gauss_charge(ModelKind model, int site, int link_left, int link_right,
                 int occ);

// Basis of one gauge sector: every fermion configuration whose link chain
// closes. Links are stored per state; within a sector they are a function of
// the occupations, so the occupation bits index states uniquely.
class SectorBasis {
 public:
  SectorBasis(ModelKind model, int n_sites, GaugeSector charges,
              std::optional<int> filling = std::nullopt,
              int boundary_left = 0, int boundary_right = 0);

  ModelKind model() const { return model_; }
  int n_sites() const { return n_; }
  const GaugeSector& charges() const { return charges_; }
  std::optional<int> filling() const { return filling_; }
  int boundary_left() const { return bl_; }
  int boundary_right() const { return br_; }

  std::size_t size() const { return occs_.size(); }
  std::uint32_t occ_bits(std::size_t i) const { return occs_[i]; }
  int occ(std::size_t i, int site) const {  // site 1-based
    return (occs_[i] >> (n_ - site)) & 1u;
  }
  const std::vector<int>& links(std::size_t i) const { return links_[i]; }

  std::optional<std::size_t> find_occ(std::uint32_t bits) const;

  // Counts the sector dimension without materializing anything else.
  static std::size_t dimension(ModelKind model, int n_sites,
                               const GaugeSector& charges,
                               std::optional<int> filling = std::nullopt,
                               int boundary_left = 0, int boundary_right = 0);

 private:
  ModelKind model_;
  int n_;
  GaugeSector charges_;
  std::optional<int> filling_;
  int bl_, br_;
  std::vector<std::uint32_t> occs_;
  std::vector<std::vector<int>> links_;
  std::unordered_map<std::uint32_t, std::size_t> index_;
};

// Packed label of the A-part of a basis state: occupations of sites 1..ell
// and links 1..ell. Distinct gauge charges on A give distinct labels.
std::uint64_t subsystem_label(const SectorBasis& basis, std::size_t i, int ell);
// Packed label of the complement: occupations of sites ell+1..N and links
// ell+1..N-1. Two states coherently connect in the reduced state only if
// these match exactly.
std::uint64_t complement_label(const SectorBasis& basis, std::size_t i,
                               int ell);

// Recovers the A-side gauge charges g_1..g_ell encoded in a subsystem label.
GaugeSector label_charges(ModelKind model, std::uint64_t label, int ell,
                          int boundary_left = 0);
// Occupation bits (site 1 most significant of ell bits) of a subsystem label.
std::uint32_t label_occ_bits(std::uint64_t label, int ell);
// Link values 1..ell of a subsystem label.
LinkConfig label_links(std::uint64_t label, int ell);

GaugeSector padded_sector(const std::vector<int>& charges_on_a, int n_sites);

FermionConfig neel_state(int n_sites);
FermionConfig vacuum_state(int n_sites);

}  // namespace lgt
