#pragma once

// JSON description of surface data:
//   {"places": [...],
//    "K": {"components": [{"degree": d, "splitting": {place: [local degrees]}}]},
//    "L": {...},
//    "B": {"invariants": {place_id: "num/den"}}, "Q": {...},
//    "D": {"degree": n, "invariants": {place: "num/den"}}  or  {name: {...}},
//    "L_automorphisms": [{place_id: place_id}] or "standard"}
// Omitted invariants are zero; omitted automorphism entries are fixed.

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dp6/brauer.hpp"
#include "dp6/index_reduction.hpp"

namespace dp6::surface_io {

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SurfaceInput {
  std::shared_ptr<const brauer::CompositeAlgebra> algebras;
  brauer::BrauerClass b;
  brauer::BrauerClass q;
  std::vector<brauer::PlacePermutation> l_automorphisms;
  bool standard_automorphisms = false;
  std::vector<std::pair<std::string, index_reduction::CentralSimpleData>> algebras_d;

  /// Throws std::invalid_argument when (B, Q) is not a valid pair.
  brauer::SurfaceData surface() const;
};

/// Throws InputError on malformed JSON or any schema violation. Unknown
/// top-level keys (such as a previously emitted "report") are ignored.
SurfaceInput parse_surface(std::string_view text);
SurfaceInput load_surface_file(const std::string& path);

/// Canonical JSON for the input (places and components in input order,
/// nonzero invariants only, D always as a name -> block map).
std::string normalized_json(const SurfaceInput& input, int indent = 2);

}  // namespace dp6::surface_io
