#pragma once

// K_0 of the split sextic del Pezzo surface in (rank, c1, chi) coordinates.
// The coordinates identify K_0 with Z^6: chi(O_S) = 1 and
// c1.(c1 - K_S) is always even, so every integer triple is realized.

#include <array>
#include <string>
#include <vector>

#include "dp6/cohomology.hpp"
#include "dp6/hexagon.hpp"
#include "dp6/lattice.hpp"

namespace dp6::ktheory {

using hexagon::HexSymmetry;
using hexagon::LineClass;
using hexagon::PicClass;

struct KZeroClass {
  long rank = 0;
  PicClass c1{};
  long chi = 0;

  /// 2 * ch_2, which is an integer (ch_2 itself lies in (1/2)Z).
  long twice_ch2() const;
  /// (rank, H, E0, E1, E2, chi).
  std::array<long, 6> coordinates() const;
  static KZeroClass from_coordinates(const std::array<long, 6>& v);
  std::string to_string() const;

  friend KZeroClass operator+(const KZeroClass& a, const KZeroClass& b);
  friend KZeroClass operator-(const KZeroClass& a, const KZeroClass& b);
  friend KZeroClass operator-(const KZeroClass& a);
  friend bool operator==(const KZeroClass&, const KZeroClass&) = default;
};

/// [L(D)] via Riemann-Roch: chi = 1 + (D^2 - K_S.D) / 2.
KZeroClass class_of_line_bundle(const PicClass& d);

/// [O_S].
KZeroClass structure_sheaf();

/// Ring structure through the Chern character; unit [O_S].
KZeroClass k0_product(const KZeroClass& a, const KZeroClass& b);

/// [O_P] for a rational point P: (0, 0, 1).
KZeroClass class_of_point();

/// [O_D] = [O_S] - [L(-D)] for a line D.
KZeroClass class_of_curve(const LineClass& line);

/// Class of a direct sum of structure sheaves of lines.
KZeroClass class_of_curves(const std::vector<LineClass>& lines);

/// Rows: [O_S], [L(-m1-l0-m2)], [L(-l1-m0-l2)], [L(-l0-m1)], [L(-l0-m2)],
/// [L(-l1-m2)], in coordinates (rank, H, E0, E1, E2, chi).
IntMatrix phi_generator_matrix();

/// The six divisors D with [L(D)] a generator (D = 0 for [O_S]).
std::vector<PicClass> phi_generator_divisors();

KZeroClass k0_galois_action(const HexSymmetry& s, const KZeroClass& a);

/// The five classes [O_l0 + O_m1], [O_l0 + O_m2], [O_l1 + O_m2],
/// [O_m1 + O_l0 + O_m2], [O_l1 + O_m0 + O_l2]. They are not a basis of
/// K_0^(1): the first three sum to the last two, since l0 + m2 = m0 + l2
/// in Pic, so they span a rank-4 sublattice.
std::vector<KZeroClass> filtration_one_basis();

/// The five curve configurations behind filtration_one_basis().
std::vector<std::vector<LineClass>> filtration_one_curves();

/// K_0^(1) (rank 0 classes) and K_0^(2) (rank 0, c1 = 0) as G-lattices in
/// the coordinates (H, E0, E1, E2, chi) and {[O_P]}.
cohomology::GLattice filtration_one_lattice(const cohomology::Subgroup& g);
cohomology::GLattice filtration_two_lattice(const cohomology::Subgroup& g);

struct Identity {
  std::string name;
  KZeroClass lhs;
  KZeroClass rhs;
  bool holds() const { return lhs == rhs; }
};

/// The resolutions of O_P, of O_S through skew m-lines and skew l-lines, and
/// the divisor resolution 0 -> L(-D) -> O_S -> O_D -> 0, for all index
/// choices, each evaluated in coordinates.
std::vector<Identity> resolution_identities();

/// [O_{l_k}] = [O_S] - [L(-l_k - m_i)] - [L(-l_k - m_j)] + [L(-m_i - l_k - m_j)]
/// and its l <-> m mirror, for every k with {i, j, k} = {0, 1, 2}.
std::vector<Identity> curve_generation_identities();

}  // namespace dp6::ktheory
