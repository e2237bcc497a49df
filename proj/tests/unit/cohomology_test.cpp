#include "doctest.h"

#include <algorithm>
#include <array>
#include <set>

#include "dp6/cohomology.hpp"
#include "dp6/ktheory.hpp"

using namespace dp6::cohomology;
using dp6::IntMatrix;
using dp6::hexagon::all_lines;
using dp6::hexagon::all_symmetries;
using dp6::hexagon::LineClass;

namespace {

using Perm = std::array<std::size_t, 6>;

Perm as_permutation(const HexSymmetry& g) {
  Perm p{};
  for (std::size_t k = 0; k < 6; ++k) p[k] = g.apply(LineClass::from_ordinal(k)).ordinal();
  return p;
}

Perm compose(const Perm& a, const Perm& b) {
  Perm c{};
  for (std::size_t k = 0; k < 6; ++k) c[k] = a[b[k]];
  return c;
}

// Subgroups as subsets of the twelve line permutations, by brute force.
std::size_t brute_force_subgroup_count() {
  std::vector<Perm> elems;
  for (const auto& g : all_symmetries()) elems.push_back(as_permutation(g));
  std::size_t count = 0;
  for (unsigned mask = 1; mask < (1u << 12); ++mask) {
    std::set<Perm> s;
    for (std::size_t k = 0; k < 12; ++k)
      if (mask & (1u << k)) s.insert(elems[k]);
    bool closed = true;
    for (const auto& a : s) {
      for (const auto& b : s)
        if (!s.count(compose(a, b))) {
          closed = false;
          break;
        }
      if (!closed) break;
    }
    count += closed;
  }
  return count;
}

std::size_t element_order(const HexSymmetry& g) {
  std::size_t n = 1;
  for (HexSymmetry x = g; !x.is_identity(); x = g * x) ++n;
  return n;
}

std::optional<HexSymmetry> cyclic_generator(const Subgroup& g) {
  for (const auto& x : g)
    if (element_order(x) == g.size()) return x;
  return std::nullopt;
}

// H^1 of a cyclic group <g>: ker(norm) / im(g - 1).
dp6::FinAbGroup cyclic_h1(const GLattice& m, const HexSymmetry& gen) {
  const std::size_t n = m.rank();
  IntMatrix a = m.action(gen);
  IntMatrix norm = IntMatrix::zero(n, n), power = IntMatrix::identity(n);
  for (std::size_t i = 0; i < m.group().size(); ++i) {
    norm = norm + power;
    power = a * power;
  }
  IntMatrix ker = dp6::kernel_basis(norm);
  IntMatrix boundary = a - IntMatrix::identity(n);
  if (ker.cols() == 0) return {};
  auto coords = dp6::solve_integer(ker, boundary);
  REQUIRE(coords.has_value());
  return dp6::cokernel(*coords);
}

}  // namespace

TEST_CASE("subgroup enumeration") {
  auto subgroups = enumerate_subgroups();
  CHECK(subgroups.size() == 16);
  CHECK(brute_force_subgroup_count() == 16);
  for (const auto& g : subgroups) CHECK(is_subgroup(g));
  CHECK(subgroups.front().size() == 1);
  CHECK(subgroups.back().size() == 12);
  CHECK(generated_subgroup({HexSymmetry::swap_only()}).size() == 2);
  CHECK(generated_subgroup({HexSymmetry{false, {1, 2, 0}}, HexSymmetry{false, {1, 0, 2}}}).size() == 6);
}

TEST_CASE("etale shapes") {
  CHECK(etale_shape(generated_subgroup({})) == EtaleShape{KShape::split, LShape::split});
  CHECK(etale_shape(all_symmetries()) == EtaleShape{KShape::field, LShape::field});
  CHECK(etale_shape(generated_subgroup({HexSymmetry::swap_only()})) == EtaleShape{KShape::field, LShape::split});
  CHECK(etale_shape(generated_subgroup({HexSymmetry{false, {1, 0, 2}}})) ==
        EtaleShape{KShape::split, LShape::field_times_quadratic});
  for (const auto& g : enumerate_subgroups()) {
    bool has_swap = std::any_of(g.begin(), g.end(), [](const HexSymmetry& x) { return x.swap; });
    CHECK((etale_shape(g).k_shape == KShape::field) == has_swap);
  }
}

TEST_CASE("fixed lattices") {
  auto trivial = generated_subgroup({});
  CHECK(lattice_invariants(picard_lattice(trivial)).cols() == 4);

  IntMatrix fixed = lattice_invariants(picard_lattice(all_symmetries()));
  REQUIRE(fixed.cols() == 1);
  IntMatrix k_s(4, 1, {-3, 1, 1, 1});
  CHECK(dp6::solve_integer(fixed, k_s).has_value());

  IntMatrix swap_fixed = lattice_invariants(lines_lattice(generated_subgroup({HexSymmetry::swap_only()})));
  CHECK(swap_fixed.cols() == 3);
  IntMatrix l0_plus_m0(6, 1, {1, 0, 0, 1, 0, 0});
  CHECK(dp6::solve_integer(swap_fixed, l0_plus_m0).has_value());
}

TEST_CASE("H1 of the sign lattice") {
  auto s2 = generated_subgroup({HexSymmetry::swap_only()});
  CHECK(lattice_h1(sign_lattice(s2)).to_string() == "Z/2");
  CHECK(cyclic_h1(sign_lattice(s2), HexSymmetry::swap_only()).to_string() == "Z/2");
  CHECK(lattice_h1(sign_lattice(generated_subgroup({}))).is_trivial());
}

TEST_CASE("H1 vanishes on permutation and K_0 lattices") {
  for (const auto& g : enumerate_subgroups()) {
    CAPTURE(subgroup_label(g));
    CHECK(lattice_h1(lines_lattice(g)).is_trivial());
    CHECK(lattice_h1(triangles_lattice(g)).is_trivial());
    CHECK(lattice_h1(pairs_lattice(g)).is_trivial());
    CHECK(lattice_h1(dp6::ktheory::filtration_one_lattice(g)).is_trivial());
    CHECK(lattice_h1(dp6::ktheory::filtration_two_lattice(g)).is_trivial());
  }
}

TEST_CASE("H1 agrees with the cyclic formula") {
  std::size_t cyclic = 0;
  for (const auto& g : enumerate_subgroups()) {
    auto gen = cyclic_generator(g);
    if (!gen) continue;
    ++cyclic;
    CAPTURE(subgroup_label(g));
    for (const auto& m : {lines_lattice(g), pairs_lattice(g), picard_lattice(g), character_lattice(g), sign_lattice(g),
                          dp6::ktheory::filtration_one_lattice(g)})
      CHECK(lattice_h1(m) == cyclic_h1(m, *gen));
  }
  // trivial, seven of order 2, one of order 3, one of order 6
  CHECK(cyclic == 10);
}

TEST_CASE("GLattice rejects a non-homomorphism") {
  auto s2 = generated_subgroup({HexSymmetry::swap_only()});
  CHECK_THROWS(GLattice(s2, 1, [](const HexSymmetry&) { return IntMatrix{{2}}; }));
}
