#pragma once

// Finite Galois images G <= S2 x S3, G-lattices, fixed sublattices and
// first cohomology H^1(G, M).

#include <functional>
#include <string>
#include <vector>

#include "dp6/hexagon.hpp"
#include "dp6/lattice.hpp"

namespace dp6::cohomology {

using hexagon::HexSymmetry;

/// A subgroup of S2 x S3, elements sorted by HexSymmetry::index().
using Subgroup = std::vector<HexSymmetry>;

/// Every subgroup of S2 x S3 (16 of them), ordered by (order, element
/// indices). Deduplicated as sets, not up to conjugacy.
std::vector<Subgroup> enumerate_subgroups();

/// Smallest subgroup containing `generators`.
Subgroup generated_subgroup(const std::vector<HexSymmetry>& generators);

bool is_subgroup(const std::vector<HexSymmetry>& elements);

std::string subgroup_label(const Subgroup& g);

enum class KShape { field, split };
enum class LShape { field, field_times_quadratic, split };

struct EtaleShape {
  KShape k_shape;
  LShape l_shape;
  friend bool operator==(const EtaleShape&, const EtaleShape&) = default;
};

std::string to_string(KShape s);
std::string to_string(LShape s);

/// Shapes of K and L read off the orbits of G on the two triangles and the
/// three opposite pairs.
EtaleShape etale_shape(const Subgroup& g);

/// Free Z-module of finite rank with a linear action of a finite subgroup of
/// S2 x S3. Construction checks the homomorphism property.
class GLattice {
 public:
  GLattice(Subgroup group, std::size_t rank, const std::function<IntMatrix(const HexSymmetry&)>& action);

  std::size_t rank() const { return rank_; }
  const Subgroup& group() const { return group_; }
  const IntMatrix& action(std::size_t element) const { return action_[element]; }
  const IntMatrix& action(const HexSymmetry& g) const;

 private:
  Subgroup group_;
  std::size_t rank_;
  std::vector<IntMatrix> action_;
};

/// Saturated basis of M^G.
IntMatrix lattice_invariants(const GLattice& m);

/// H^1(G, M) = Z^1 / B^1 with cocycle conditions imposed for all pairs (g, h).
FinAbGroup lattice_h1(const GLattice& m);

/// Rank over Q of the span of all images (g - 1) M.
std::size_t augmentation_image_rank(const GLattice& m);

// Standard lattices of the hexagon restricted to G.
GLattice lines_lattice(const Subgroup& g);      // Z[KL/F]
GLattice triangles_lattice(const Subgroup& g);  // Z[K/F]
GLattice pairs_lattice(const Subgroup& g);      // Z[L/F]
GLattice picard_lattice(const Subgroup& g);     // Pic
GLattice character_lattice(const Subgroup& g);  // T^
/// Z with the swap acting by -1; every element of G acts by (-1)^swap.
GLattice sign_lattice(const Subgroup& g);

}  // namespace dp6::cohomology
