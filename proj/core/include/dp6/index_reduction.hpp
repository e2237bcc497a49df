#pragma once

// Index of a central simple F-algebra D after extension to the function
// field of the surface S(B, Q, KL).

#include <cstdint>
#include <string>
#include <vector>

#include "dp6/brauer.hpp"

namespace dp6::index_reduction {

using brauer::BrauerClass;
using brauer::SurfaceData;

/// A central simple F-algebra up to Morita equivalence plus its degree.
class CentralSimpleData {
 public:
  /// Throws std::invalid_argument unless `cls` lives over F and its index
  /// divides `degree`.
  CentralSimpleData(BrauerClass cls, std::int64_t degree);

  const BrauerClass& cls() const { return cls_; }
  std::int64_t degree() const { return degree_; }
  std::int64_t index() const;

 private:
  BrauerClass cls_;
  std::int64_t degree_;
};

enum class Part { base, b_component, q_component };

/// Rank of the image of a simple module of one factor of F x B x Q (x) D.
struct RankTerm {
  Part part = Part::base;
  std::size_t component = 0;
  int multiplier = 1;  // degree over F of the component
  std::int64_t index = 1;  // ind of D (x) (component class)
  std::int64_t rank = 1;  // multiplier * deg(D) * index
  bool split_factor = false;  // the B or Q component is split

  std::string label() const;
};

/// Index over each component of res(D) + x.
std::vector<std::int64_t> twisted_indices(const CentralSimpleData& d, const BrauerClass& x);

/// One term for D, one per K-component of B and one per L-component of Q.
std::vector<RankTerm> rank_terms(const CentralSimpleData& d, const SurfaceData& s);

std::int64_t rank_of_simple_image(Part part, std::size_t component, const CentralSimpleData& d, const SurfaceData& s);

/// gcd of all rank terms divided by deg(D).
std::int64_t reduced_index(const CentralSimpleData& d, const SurfaceData& s);

/// Same, omitting terms whose B or Q component is split.
std::int64_t reduced_index_without_split_terms(const CentralSimpleData& d, const SurfaceData& s);

/// gcd of precomputed terms divided by `degree`, optionally skipping split ones.
std::int64_t reduced_index(const std::vector<RankTerm>& terms, std::int64_t degree, bool skip_split);

enum class IndexCase { i, ii, iii, iv, v };
std::string to_string(IndexCase c);

/// i: K, L fields; ii: K = F x F, L a field; iii: K a field, L = F x E;
/// iv: K a field, L = F x F x F; v: neither a field.
IndexCase index_case(const SurfaceData& s);

/// The case-by-case gcd formula, computed directly from component indices.
/// Throws std::invalid_argument when (B, Q) is invalid or a class that the
/// case requires to be split is not.
std::int64_t reduced_index_by_case(const CentralSimpleData& d, const SurfaceData& s);

}  // namespace dp6::index_reduction
