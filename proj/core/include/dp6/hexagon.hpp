#pragma once

// The split sextic del Pezzo surface: its hexagon of lines, the Picard
// lattice in the blow-up basis (H, E0, E1, E2), and the S2 x S3 symmetry of
// the hexagon.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "dp6/lattice.hpp"

namespace dp6::hexagon {

enum class LineKind : std::uint8_t { l, m };

struct LineClass {
  LineKind kind;
  int index;  // 0, 1, 2

  /// Position in the fixed ordering l0, l1, l2, m0, m1, m2.
  std::size_t ordinal() const { return (kind == LineKind::l ? 0 : 3) + static_cast<std::size_t>(index); }
  static LineClass from_ordinal(std::size_t k);
  std::string name() const;

  friend bool operator==(const LineClass&, const LineClass&) = default;
};

/// The six lines in the canonical order l0, l1, l2, m0, m1, m2.
const std::array<LineClass, 6>& all_lines();

/// Divisor class in Pic of the split surface, coordinates (H, E0, E1, E2).
struct PicClass {
  std::array<long, 4> coords{};

  friend PicClass operator+(const PicClass& a, const PicClass& b);
  friend PicClass operator-(const PicClass& a, const PicClass& b);
  friend PicClass operator-(const PicClass& a);
  friend PicClass operator*(long k, const PicClass& a);
  friend bool operator==(const PicClass&, const PicClass&) = default;
  friend auto operator<=>(const PicClass&, const PicClass&) = default;

  std::string to_string() const;
};

/// An element (swap, perm) of S2 x S3. `perm` is in one-line notation: index
/// i goes to perm[i]. Composition is right to left: (g * h)(x) = g(h(x)).
struct HexSymmetry {
  bool swap = false;
  std::array<std::uint8_t, 3> perm{0, 1, 2};

  static HexSymmetry identity() { return {}; }
  /// The S2 generator exchanging l_i and m_i.
  static HexSymmetry swap_only() { return {true, {0, 1, 2}}; }

  LineClass apply(const LineClass& line) const;
  HexSymmetry inverse() const;
  bool is_identity() const { return !swap && perm == std::array<std::uint8_t, 3>{0, 1, 2}; }

  /// Dense index in [0, 12): swap * 6 + lexicographic rank of perm.
  std::size_t index() const;
  static HexSymmetry from_index(std::size_t k);
  /// "012" for the identity, "*120" when the swap is present.
  std::string to_string() const;

  friend HexSymmetry operator*(const HexSymmetry& g, const HexSymmetry& h);
  friend bool operator==(const HexSymmetry&, const HexSymmetry&) = default;
};

/// All twelve elements ordered by index().
std::vector<HexSymmetry> all_symmetries();

PicClass line_to_pic(const LineClass& line);

/// Bilinear form with H^2 = 1, E_i^2 = -1, mixed products 0.
long intersection_number(const PicClass& a, const PicClass& b);

/// Gram matrix of the intersection form in the basis (H, E0, E1, E2).
IntMatrix intersection_gram();

/// K_S = -3H + E0 + E1 + E2.
PicClass canonical_class();

/// Linear action on Pic induced by the permutation of lines.
PicClass symmetry_action(const HexSymmetry& s, const PicClass& a);
/// 4 x 4 matrix of symmetry_action acting on coordinate columns.
IntMatrix pic_action_matrix(const HexSymmetry& s);
/// 6 x 6 permutation matrix of the action on Z[lines].
IntMatrix line_action_matrix(const HexSymmetry& s);
/// 2 x 2 action on the triangles {l0,l1,l2}, {m0,m1,m2}.
IntMatrix triangle_action_matrix(const HexSymmetry& s);
/// 3 x 3 action on the pairs {l_i, m_i}.
IntMatrix pair_action_matrix(const HexSymmetry& s);

/// 4 x 6 matrix sending each line to its Picard class.
IntMatrix lines_to_pic_matrix();
/// 2 x 6: each line to the triangle containing it.
IntMatrix lines_to_triangles_matrix();
/// 3 x 6: each line to the opposite pair containing it.
IntMatrix lines_to_pairs_matrix();
/// 1 x 5: difference of augmentations on Z[triangles] + Z[pairs].
IntMatrix augmentation_difference_matrix();

/// Saturated rank-2 basis (6 x 2, column Hermite form) of the character
/// lattice, i.e. the kernel of lines_to_pic_matrix().
IntMatrix character_lattice_basis();

/// 6 x 6 intersection table of the lines computed from a Gram matrix on Pic.
IntMatrix line_intersection_table(const IntMatrix& gram);
/// The table the lines must realize: -1 on the diagonal, l_i.m_j = 1 for
/// i != j, everything else 0.
IntMatrix expected_line_intersection_table();

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Exactness at every position of
///   0 -> T^ -> Z[lines] -> Z[triangles] + Z[pairs] -> Z -> 0
///   0 -> T^ -> Z[lines]/Z -> Z[triangles]/Z + Z[pairs]/Z -> 0
/// together with the Picard presentation Z[lines] -> Pic -> 0 and
/// equivariance of every map under all twelve symmetries.
std::vector<CheckResult> verify_module_sequences();

}  // namespace dp6::hexagon
