#pragma once

// Brauer classes over a finite model of a global field. Every place carries
// the invariant group Q/Z; an etale algebra is described by how each of its
// field components splits over each base place, and local extensions are
// treated as cyclic (unramified), so K_w (x) L_u over a base place is
// gcd(a, b) copies of a field of degree lcm(a, b).

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dp6/qz.hpp"

namespace dp6::brauer {

class GlobalFieldModel {
 public:
  /// Labels must be unique, non-empty, and free of ':'.
  explicit GlobalFieldModel(std::vector<std::string> places);

  std::size_t size() const { return places_.size(); }
  const std::string& label(std::size_t v) const { return places_[v]; }
  const std::vector<std::string>& labels() const { return places_; }
  std::optional<std::size_t> find(std::string_view label) const;

  friend bool operator==(const GlobalFieldModel&, const GlobalFieldModel&) = default;

 private:
  std::vector<std::string> places_;
};

/// One field component of an etale algebra: its degree over F and, for each
/// base place, the local degrees of the places above it.
struct Component {
  int degree = 1;
  std::vector<std::vector<int>> splitting;

  friend bool operator==(const Component&, const Component&) = default;
};

struct Place {
  std::size_t component;
  std::size_t base;  // index of the base place below
  std::size_t slot;  // position within splitting[base]
  int local_degree;

  friend bool operator==(const Place&, const Place&) = default;
};

class EtaleAlgebra {
 public:
  EtaleAlgebra(GlobalFieldModel model, std::vector<Component> components);

  /// F itself: one component of degree 1.
  static EtaleAlgebra base_field(const GlobalFieldModel& model);

  const GlobalFieldModel& model() const { return model_; }
  int degree() const { return degree_; }
  const std::vector<Component>& components() const { return components_; }
  std::size_t component_count() const { return components_.size(); }
  const std::vector<Place>& places() const { return places_; }
  bool is_base_field() const { return degree_ == 1; }
  /// A single field component.
  bool is_field() const { return components_.size() == 1; }

  /// "<component>:<base label>:<slot>"; for F the base label alone.
  std::string place_id(std::size_t i) const;
  std::optional<std::size_t> find_place(std::string_view id) const;
  std::vector<std::size_t> places_over(std::size_t base) const;
  std::vector<std::size_t> places_of_component(std::size_t component) const;

  friend bool operator==(const EtaleAlgebra& a, const EtaleAlgebra& b) {
    return a.model_ == b.model_ && a.components_ == b.components_;
  }

 private:
  GlobalFieldModel model_;
  std::vector<Component> components_;
  std::vector<Place> places_;
  int degree_ = 0;
};

using AlgebraPtr = std::shared_ptr<const EtaleAlgebra>;

/// Quadratic K: one component of degree 2, or two of degree 1.
bool is_quadratic_shape(const EtaleAlgebra& k);
/// Cubic L: components [3], [1, 2] or [1, 1, 1].
bool is_cubic_shape(const EtaleAlgebra& l);

/// `upper` as an extension of `lower`: below[w] is the place of `lower` under
/// the place w of `upper`.
struct Embedding {
  AlgebraPtr lower;
  AlgebraPtr upper;
  std::vector<std::size_t> below;

  int relative_degree(std::size_t w) const;
};

/// The algebra over F.
Embedding base_embedding(const AlgebraPtr& upper);

/// K, L and KL = K (x)_F L with the projections of KL-places to K and L.
/// KL components are indexed by pairs (K component, L component).
struct CompositeAlgebra {
  AlgebraPtr k;
  AlgebraPtr l;
  AlgebraPtr kl;
  std::vector<std::size_t> over_k;
  std::vector<std::size_t> over_l;

  Embedding k_to_kl() const { return Embedding{k, kl, over_k}; }
  Embedding l_to_kl() const { return Embedding{l, kl, over_l}; }
};

/// Throws std::invalid_argument unless K is quadratic and L cubic over one
/// model.
CompositeAlgebra compose_etale(const AlgebraPtr& k, const AlgebraPtr& l);

class BrauerClass {
 public:
  /// Throws std::invalid_argument on a size mismatch or when the invariants
  /// of some field component do not sum to zero.
  BrauerClass(AlgebraPtr algebra, std::vector<QZ> invariants);
  static BrauerClass zero(AlgebraPtr algebra);

  const EtaleAlgebra& algebra() const { return *algebra_; }
  const AlgebraPtr& algebra_ptr() const { return algebra_; }
  const std::vector<QZ>& invariants() const { return invariants_; }
  const QZ& at(std::size_t place) const { return invariants_[place]; }
  bool is_zero() const;
  /// Nonzero invariants as "id=num/den", comma separated; "0" when split.
  std::string to_string() const;

  friend BrauerClass operator+(const BrauerClass& a, const BrauerClass& b);
  friend BrauerClass operator-(const BrauerClass& a);
  friend BrauerClass operator*(std::int64_t k, const BrauerClass& a);
  friend bool operator==(const BrauerClass& a, const BrauerClass& b) {
    return a.invariants_ == b.invariants_ && (a.algebra_ == b.algebra_ || *a.algebra_ == *b.algebra_);
  }

 private:
  friend struct BrauerAccess;
  struct Unchecked {};
  BrauerClass(Unchecked, AlgebraPtr algebra, std::vector<QZ> invariants)
      : algebra_(std::move(algebra)), invariants_(std::move(invariants)) {}

  AlgebraPtr algebra_;
  std::vector<QZ> invariants_;
};

/// Invariant at each upper place = relative local degree * invariant below.
/// Throws std::invalid_argument when x does not live on embedding.lower.
BrauerClass restriction(const BrauerClass& x, const Embedding& embedding);
/// Invariant at each lower place = sum of the invariants above it.
BrauerClass corestriction(const BrauerClass& x, const Embedding& embedding);
/// Corestriction all the way down to F.
BrauerClass corestriction(const BrauerClass& x);

/// Per field component, lcm of the denominators of its local invariants.
std::vector<std::int64_t> index(const BrauerClass& x);

/// Push-forward along the nontrivial automorphism of a quadratic K: swaps the
/// two places over split base places (or the two components of F x F).
BrauerClass k_conjugation_pushforward(const BrauerClass& x);

/// Bijection of the places of L; image[u] is where u goes.
struct PlacePermutation {
  std::vector<std::size_t> image;
  friend bool operator==(const PlacePermutation&, const PlacePermutation&) = default;
};

/// Throws std::invalid_argument unless `h` is a bijection that preserves base
/// places and local degrees and maps whole components onto components.
void validate_automorphism(const EtaleAlgebra& l, const PlacePermutation& h);

/// (h_* x)(h(u)) = x(u).
BrauerClass pushforward(const BrauerClass& x, const PlacePermutation& h);

/// Automorphisms used when none are declared: the rotation of a cubic field
/// split only as [3] or [1,1,1] everywhere (a Galois cubic), the conjugation
/// of E in F x E, and the transposition (0 1) and rotation (0 1 2) of the
/// components of F x F x F.
std::vector<PlacePermutation> standard_l_automorphisms(const EtaleAlgebra& l);

/// Reasons (B, Q) fails to define a sextic del Pezzo surface; empty when valid.
std::vector<std::string> pair_violations(const CompositeAlgebra& algebras, const BrauerClass& b, const BrauerClass& q);
bool validate_pair(const CompositeAlgebra& algebras, const BrauerClass& b, const BrauerClass& q);

struct Generator;

class SurfaceData {
 public:
  /// Throws std::invalid_argument when the classes live on the wrong
  /// algebras, an automorphism is invalid, or validate_pair fails.
  SurfaceData(std::shared_ptr<const CompositeAlgebra> algebras, BrauerClass b, BrauerClass q,
              std::vector<PlacePermutation> l_automorphisms = {});

  const CompositeAlgebra& algebras() const { return *algebras_; }
  const std::shared_ptr<const CompositeAlgebra>& algebras_ptr() const { return algebras_; }
  const BrauerClass& b() const { return b_; }
  const BrauerClass& q() const { return q_; }
  const std::vector<PlacePermutation>& l_automorphisms() const { return l_automorphisms_; }

  SurfaceData with_classes(BrauerClass b, BrauerClass q) const;

 private:
  struct Unchecked {};
  SurfaceData(Unchecked, std::shared_ptr<const CompositeAlgebra> algebras, BrauerClass b, BrauerClass q,
              std::vector<PlacePermutation> l_automorphisms);
  friend SurfaceData g_action(const Generator& g, const SurfaceData& s);

  std::shared_ptr<const CompositeAlgebra> algebras_;
  BrauerClass b_;
  BrauerClass q_;
  std::vector<PlacePermutation> l_automorphisms_;
};

struct Generator {
  enum class Kind { k_conjugation, l_automorphism };
  Kind kind = Kind::k_conjugation;
  std::size_t automorphism = 0;  // index into l_automorphisms for Kind::l_automorphism

  static Generator k_conjugation() { return {}; }
  static Generator l_automorphism(std::size_t i) { return {Kind::l_automorphism, i}; }
};

/// K-generator: B -> -B (the opposite algebra). L-automorphism h: Q -> h_* Q.
SurfaceData g_action(const Generator& g, const SurfaceData& s);

/// The orbit of (B, Q) under the group generated by all generators of `s`,
/// in discovery order starting with s itself.
std::vector<SurfaceData> orbit(const SurfaceData& s);

/// Both surfaces must share literally identical K and L.
bool same_surface(const SurfaceData& s1, const SurfaceData& s2);

bool has_rational_point(const SurfaceData& s);

/// Classes over `algebra` with invariants in (1/bound)Z/Z and reciprocity on
/// every component. Lexicographic order.
std::vector<BrauerClass> enumerate_classes(const AlgebraPtr& algebra, std::int64_t bound);

/// Classes over `algebra` with invariants in (1/bound)Z/Z, reciprocity on
/// every component, and trivial corestriction to F. Lexicographic order.
std::vector<BrauerClass> enumerate_cor_trivial_classes(const AlgebraPtr& algebra, std::int64_t bound);

/// All (B, Q) with invariants in (1/bound)Z/Z, cor_{K/F} B = 0,
/// cor_{L/F} Q = 0 and res_{KL/K} B = res_{KL/L} Q. `bound` must divide 6.
/// Sorted by (B, Q) invariant vectors.
std::vector<SurfaceData> enumerate_valid_pairs(const std::shared_ptr<const CompositeAlgebra>& algebras,
                                               std::int64_t bound,
                                               const std::vector<PlacePermutation>& l_automorphisms = {});

/// Every model on places v1..vn (1 <= n <= max_places) with every quadratic
/// and cubic splitting configuration.
std::vector<std::shared_ptr<const CompositeAlgebra>> enumerate_small_configurations(std::size_t max_places);

std::string describe_shape(const EtaleAlgebra& a);

}  // namespace dp6::brauer
