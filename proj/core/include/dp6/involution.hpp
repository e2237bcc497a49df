#pragma once

// M_3(K) for K = F x F as pairs (M, N) of rational 3x3 matrices, with the
// unitary involution tau(M, N) = (N^T, M^T) and L = diagonal pairs (D, D).

#include <array>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "dp6/hexagon.hpp"

namespace dp6::involution {

using Rational = mpq_class;
using Matrix3 = std::array<std::array<Rational, 3>, 3>;

Matrix3 matrix_product(const Matrix3& a, const Matrix3& b);
Matrix3 transpose(const Matrix3& a);
Matrix3 all_ones();
Matrix3 unit_matrix(int i, int j);
Rational entry_sum(const Matrix3& a);

struct UnitaryElement {
  Matrix3 m{};
  Matrix3 n{};

  /// Coordinates in Q^18: entries of m row-major, then entries of n.
  std::vector<Rational> coordinates() const;
  static UnitaryElement from_coordinates(const std::vector<Rational>& v);

  friend UnitaryElement operator*(const UnitaryElement& a, const UnitaryElement& b);
  friend UnitaryElement operator+(const UnitaryElement& a, const UnitaryElement& b);
  friend UnitaryElement operator*(const Rational& k, const UnitaryElement& a);
  friend bool operator==(const UnitaryElement&, const UnitaryElement&) = default;
};

UnitaryElement tau(const UnitaryElement& x);
UnitaryElement one();
/// t = (J, J), J the all-ones matrix.
UnitaryElement hermitian_t();
/// The 18 matrix units (E_ij, 0) and (0, E_ij).
std::vector<UnitaryElement> standard_basis();

/// Rank of a list of vectors over Q.
std::size_t rational_rank(const std::vector<std::vector<Rational>>& vectors);

struct RemarkReport {
  std::vector<hexagon::CheckResult> checks;
  std::size_t two_sided_span_dim = 0;  // span of t x t over the basis
  std::size_t symmetric_part_dim = 0;  // its intersection with Sym
  std::size_t sym_dim = 0;
  std::size_t f_plus_l_perp_dim = 0;

  bool passed() const;
};

/// Checks tau(t) = t, span{t x t} = span_K(t) with Sym-part span_F(t), and
/// span_F(t) inside F + L^perp, plus the structural facts about tau.
RemarkReport verify_hermitian_remark();

}  // namespace dp6::involution
