#pragma once

// The full self-check run by `dp6 verify`.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dp6/hexagon.hpp"
#include "dp6/lattice.hpp"

namespace dp6::verification {

using hexagon::CheckResult;

struct Options {
  std::int64_t bound = 6;
  std::size_t max_places = 3;
  /// Replaces the computed 6 x 6 line intersection table.
  std::optional<IntMatrix> line_table;
};

struct Section {
  std::string name;
  std::vector<CheckResult> checks;
};

/// Intersection table, K_S^2, and the module sequences.
std::vector<CheckResult> geometry_checks(const IntMatrix& line_table);
/// H^1 of the permutation and K_0 lattices over all 16 subgroups.
std::vector<CheckResult> cohomology_checks();
/// The phi basis and the resolution identities.
std::vector<CheckResult> ktheory_checks();

/// Totals gathered while sweeping every small configuration.
struct ArithmeticSummary {
  std::size_t configurations = 0;
  std::size_t matched_pairs = 0;
  std::size_t max_orbit = 0;
  std::size_t index_inputs = 0;
};

/// Divisibility for matched (x, y), agreement of enumerate_valid_pairs with
/// validate_pair, orbit sizes, K-conjugation, and index reduction, over all
/// configurations on at most `max_places` places.
std::vector<CheckResult> arithmetic_checks(std::int64_t bound, std::size_t max_places,
                                           ArithmeticSummary* summary = nullptr);
std::vector<CheckResult> involution_checks();

std::vector<Section> run_verification(const Options& options);

/// First failing check as "section: name", if any.
std::optional<std::string> first_failure(const std::vector<Section>& sections);

}  // namespace dp6::verification
