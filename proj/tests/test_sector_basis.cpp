#include <doctest.h>

#include <algorithm>
#include <set>

#include "lgt/sector_basis.hpp"

using namespace lgt;

namespace {

int popcount(std::uint32_t v) {
  int c = 0;
  for (; v; v >>= 1) c += v & 1u;
  return c;
}

}  // namespace

TEST_CASE("occupation packing round trips with site 1 most significant") {
  FermionConfig occ{1, 0, 1, 1, 0, 0};
  std::uint32_t bits = pack_occ(occ);
  CHECK(bits == 0b101100u);
  CHECK(unpack_occ(bits, 6) == occ);
  for (std::uint32_t b = 0; b < 16; ++b) CHECK(pack_occ(unpack_occ(b, 4)) == b);
}

TEST_CASE("seed configurations") {
  CHECK(neel_state(4) == FermionConfig{1, 0, 1, 0});
  CHECK(neel_state(6) == FermionConfig{1, 0, 1, 0, 1, 0});
  CHECK(vacuum_state(4) == FermionConfig{0, 0, 0, 0});
  CHECK(padded_sector({1, -1}, 6) == GaugeSector{1, -1, 0, 0, 0, 0});
}

TEST_CASE("link chain reconstruction, staggered-charge model") {
  // Neutral sector, N=4. Solving left to right:
  //   occ 1010 -> links (0,0,0), occ 0101 -> links (-1,0,-1).
  auto l1 = reconstruct_links(ModelKind::Schwinger, 4, {0, 0, 0, 0},
                              {1, 0, 1, 0});
  REQUIRE(l1.has_value());
  CHECK(*l1 == LinkConfig{0, 0, 0});
  auto l2 = reconstruct_links(ModelKind::Schwinger, 4, {0, 0, 0, 0},
                              {0, 1, 0, 1});
  REQUIRE(l2.has_value());
  CHECK(*l2 == LinkConfig{-1, 0, -1});
  // Total charge 1 with half filling cannot close at the right boundary.
  CHECK_FALSE(reconstruct_links(ModelKind::Schwinger, 4, {1, 0, 0, 0},
                                {1, 0, 1, 0})
                  .has_value());
}

TEST_CASE("link chain reconstruction, spin-1 link model") {
  // S^z_n = (-1)^(n+1) g_n - S^z_(n-1) - occ_n with S^z_0 = 0.
  auto l = reconstruct_links(ModelKind::QuantumLink, 4, {0, 0, 0, 0},
                             {1, 0, 0, 1});
  REQUIRE(l.has_value());
  CHECK(*l == LinkConfig{-1, 1, -1});
  // A chain forcing |S^z| = 2 is rejected: g = (1,1,..) with empty sites
  // needs S^z_2 = -2.
  CHECK_FALSE(reconstruct_links(ModelKind::QuantumLink, 4, {1, 1, 0, 0},
                                {0, 0, 0, 0})
                  .has_value());
}

TEST_CASE("gauss charge matches the divergence of the link field") {
  // Staggered model: g = L_n - L_(n-1) - occ + (n odd).
  CHECK(gauss_charge(ModelKind::Schwinger, 1, 0, 0, 1) == 0);
  CHECK(gauss_charge(ModelKind::Schwinger, 1, 0, -1, 0) == 0);
  CHECK(gauss_charge(ModelKind::Schwinger, 2, -1, 0, 1) == 0);
  CHECK(gauss_charge(ModelKind::Schwinger, 3, 0, 1, 0) == 2);
  // Link model: g = (-1)^(n+1) (S^z_n + S^z_(n-1) + occ).
  CHECK(gauss_charge(ModelKind::QuantumLink, 1, 0, -1, 1) == 0);
  CHECK(gauss_charge(ModelKind::QuantumLink, 2, -1, 1, 0) == 0);
  CHECK(gauss_charge(ModelKind::QuantumLink, 2, 0, 1, 1) == -2);
}

TEST_CASE("neutral spin-1 sector at N=4 enumerates exactly six states") {
  SectorBasis b(ModelKind::QuantumLink, 4, {0, 0, 0, 0});
  REQUIRE(b.size() == 6);
  // Occupations ascend lexicographically; links follow from the recursion.
  struct Row {
    std::uint32_t occ;
    LinkConfig links;
  };
  const Row expect[] = {
      {0b0000, {0, 0, 0}},  {0b0011, {0, 0, -1}}, {0b0110, {0, -1, 0}},
      {0b1001, {-1, 1, -1}}, {0b1100, {-1, 0, 0}}, {0b1111, {-1, 0, -1}},
  };
  for (std::size_t i = 0; i < 6; ++i) {
    CHECK(b.occ_bits(i) == expect[i].occ);
    CHECK(b.links(i) == expect[i].links);
  }
}

TEST_CASE("every enumerated state satisfies the charge constraint site by site") {
  auto verify = [](const SectorBasis& b) {
    for (std::size_t i = 0; i < b.size(); ++i) {
      const auto& links = b.links(i);
      for (int site = 1; site <= b.n_sites(); ++site) {
        int ll = site == 1 ? b.boundary_left() : links[site - 2];
        int lr = site == b.n_sites() ? b.boundary_right() : links[site - 1];
        CHECK(gauss_charge(b.model(), site, ll, lr, b.occ(i, site)) ==
              b.charges()[site - 1]);
      }
    }
  };
  verify(SectorBasis(ModelKind::Schwinger, 8, padded_sector({0, 0}, 8), 4));
  verify(SectorBasis(ModelKind::Schwinger, 8, padded_sector({2, -2}, 8), 4));
  verify(SectorBasis(ModelKind::QuantumLink, 6, padded_sector({1, -1}, 6)));
  verify(SectorBasis(ModelKind::QuantumLink, 6, padded_sector({-1, 1}, 6)));
  verify(SectorBasis(ModelKind::QuantumLink, 6, padded_sector({1, 0, -1}, 6)));
}

TEST_CASE("sector dimensions at production sizes") {
  // Staggered model at half filling: every bit pattern closes in the sector
  // whose charges it generates, so the neutral-subsystem family spans C(N,N/2).
  CHECK(SectorBasis::dimension(ModelKind::Schwinger, 10,
                               padded_sector({0, 0}, 10), 5) == 252);
  CHECK(SectorBasis::dimension(ModelKind::Schwinger, 10,
                               padded_sector({1, -1}, 10), 5) == 252);
  CHECK(SectorBasis::dimension(ModelKind::Schwinger, 12,
                               padded_sector({0, 0}, 12), 6) == 924);
  // Spin-1 link model: the |S^z| <= 1 constraint prunes the count.
  CHECK(SectorBasis::dimension(ModelKind::QuantumLink, 10,
                               padded_sector({1, -1}, 10)) == 197);
  CHECK(SectorBasis::dimension(ModelKind::QuantumLink, 10,
                               padded_sector({0, 0}, 10)) == 197);
  CHECK(SectorBasis::dimension(ModelKind::QuantumLink, 10,
                               padded_sector({-1, 1}, 10)) == 108);
  CHECK(SectorBasis::dimension(ModelKind::QuantumLink, 4, {0, 0, 0, 0}) == 6);
}

TEST_CASE("dimension counter agrees with materialized size") {
  for (auto charges : {padded_sector({0, 0}, 8), padded_sector({1, -1}, 8),
                       padded_sector({2, 0, -2}, 8)}) {
    SectorBasis b(ModelKind::Schwinger, 8, charges, 4);
    CHECK(SectorBasis::dimension(ModelKind::Schwinger, 8, charges, 4) ==
          b.size());
  }
  for (auto charges : {padded_sector({0, 0}, 8), padded_sector({1, -1}, 8)}) {
    SectorBasis b(ModelKind::QuantumLink, 8, charges);
    CHECK(SectorBasis::dimension(ModelKind::QuantumLink, 8, charges) ==
          b.size());
  }
}

TEST_CASE("filling restriction keeps only the requested particle number") {
  SectorBasis b(ModelKind::Schwinger, 8, padded_sector({1, -1}, 8), 4);
  REQUIRE(b.size() > 0);
  for (std::size_t i = 0; i < b.size(); ++i)
    CHECK(popcount(b.occ_bits(i)) == 4);
}

TEST_CASE("find_occ inverts enumeration and rejects foreign patterns") {
  SectorBasis b(ModelKind::QuantumLink, 6, padded_sector({1, -1}, 6));
  for (std::size_t i = 0; i < b.size(); ++i) {
    auto idx = b.find_occ(b.occ_bits(i));
    REQUIRE(idx.has_value());
    CHECK(*idx == i);
  }
  SectorBasis other(ModelKind::QuantumLink, 6, padded_sector({0, 0}, 6));
  std::set<std::uint32_t> mine;
  for (std::size_t i = 0; i < b.size(); ++i) mine.insert(b.occ_bits(i));
  for (std::size_t i = 0; i < other.size(); ++i)
    if (!mine.count(other.occ_bits(i)))
      CHECK_FALSE(b.find_occ(other.occ_bits(i)).has_value());
}

TEST_CASE("nonzero right boundary shifts the admissible set") {
  // With S^z_N pinned to +1 the neutral N=4 spin-1 sector changes content.
  SectorBasis shifted(ModelKind::QuantumLink, 4, {0, 0, 0, 0}, std::nullopt,
                      0, 1);
  CHECK(shifted.size() != 6);
  for (std::size_t i = 0; i < shifted.size(); ++i) {
    const auto& links = shifted.links(i);
    for (int site = 1; site <= 4; ++site) {
      int ll = site == 1 ? 0 : links[site - 2];
      int lr = site == 4 ? 1 : links[site - 1];
      CHECK(gauss_charge(ModelKind::QuantumLink, site, ll, lr,
                         shifted.occ(i, site)) == 0);
    }
  }
}

TEST_CASE("subsystem and complement labels jointly identify a state") {
  for (int ell : {1, 2, 3}) {
    SectorBasis b(ModelKind::Schwinger, 8, padded_sector({1, -1}, 8), 4);
    std::set<std::pair<std::uint64_t, std::uint64_t>> seen;
    for (std::size_t i = 0; i < b.size(); ++i) {
      auto key = std::make_pair(subsystem_label(b, i, ell),
                                complement_label(b, i, ell));
      CHECK(seen.insert(key).second);
    }
  }
}

TEST_CASE("subsystem labels decode to the leading occupations and links") {
  SectorBasis b(ModelKind::QuantumLink, 6, padded_sector({1, 0, -1}, 6));
  const int ell = 3;
  for (std::size_t i = 0; i < b.size(); ++i) {
    std::uint64_t lab = subsystem_label(b, i, ell);
    CHECK(label_occ_bits(lab, ell) == (b.occ_bits(i) >> (6 - ell)));
    LinkConfig lead(b.links(i).begin(), b.links(i).begin() + ell);
    CHECK(label_links(lab, ell) == lead);
    GaugeSector lead_g(b.charges().begin(), b.charges().begin() + ell);
    CHECK(label_charges(b.model(), lab, ell) == lead_g);
  }
}

TEST_CASE("label charge recovery matches both models") {
  SectorBasis s(ModelKind::Schwinger, 8, padded_sector({2, -2}, 8), 4);
  REQUIRE(s.size() > 0);
  CHECK(label_charges(ModelKind::Schwinger, subsystem_label(s, 0, 2), 2) ==
        GaugeSector{2, -2});
  SectorBasis q(ModelKind::QuantumLink, 6, padded_sector({-1, 1}, 6));
  REQUIRE(q.size() > 0);
  CHECK(label_charges(ModelKind::QuantumLink, subsystem_label(q, 0, 2), 2) ==
        GaugeSector{-1, 1});
}

TEST_CASE("distinct A-side charge assignments produce distinct labels") {
  // Same leading occupations can appear in two sectors; the label must still
  // differ because the links differ.
  SectorBasis a(ModelKind::Schwinger, 8, padded_sector({0, 0}, 8), 4);
  SectorBasis c(ModelKind::Schwinger, 8, padded_sector({1, -1}, 8), 4);
  std::set<std::uint64_t> la, lc;
  for (std::size_t i = 0; i < a.size(); ++i)
    la.insert(subsystem_label(a, i, 2));
  for (std::size_t i = 0; i < c.size(); ++i)
    lc.insert(subsystem_label(c, i, 2));
  for (std::uint64_t v : la) CHECK_FALSE(lc.count(v));
}
