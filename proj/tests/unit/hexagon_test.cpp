#include "doctest.h"

#include <array>

#include "dp6/hexagon.hpp"

using namespace dp6::hexagon;
using dp6::IntMatrix;

namespace {

// Blow-up of P^2 at three points, written out by hand.
using Vec = std::array<long, 4>;

Vec hand_class(std::size_t ordinal) {
  if (ordinal >= 3) {
    Vec e{0, 0, 0, 0};
    e[1 + ordinal - 3] = 1;
    return e;
  }
  Vec l{1, -1, -1, -1};
  l[1 + ordinal] = 0;
  return l;
}

long hand_dot(const Vec& a, const Vec& b) { return a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3]; }

}  // namespace

TEST_CASE("line classes") {
  CHECK(line_to_pic({LineKind::m, 0}) == PicClass{{0, 1, 0, 0}});
  CHECK(line_to_pic({LineKind::l, 0}) == PicClass{{1, 0, -1, -1}});
  PicClass sum{};
  for (const auto& line : all_lines()) sum = sum + line_to_pic(line);
  CHECK(sum == PicClass{{3, -1, -1, -1}});
  CHECK(sum == -canonical_class());
  for (std::size_t k = 0; k < 6; ++k) {
    CHECK(LineClass::from_ordinal(k).ordinal() == k);
    CHECK(line_to_pic(LineClass::from_ordinal(k)).coords == hand_class(k));
  }
}

TEST_CASE("intersection numbers") {
  const LineClass l0{LineKind::l, 0}, m0{LineKind::m, 0}, m1{LineKind::m, 1};
  CHECK(intersection_number(line_to_pic(l0), line_to_pic(l0)) == -1);
  CHECK(intersection_number(line_to_pic(l0), line_to_pic(m1)) == 1);
  CHECK(intersection_number(line_to_pic(l0), line_to_pic(m0)) == 0);
  CHECK(canonical_class() == PicClass{{-3, 1, 1, 1}});
  CHECK(intersection_number(canonical_class(), canonical_class()) == 6);
}

TEST_CASE("line intersection table matches the hand computation") {
  IntMatrix table = line_intersection_table(intersection_gram());
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) CHECK(table(i, j) == hand_dot(hand_class(i), hand_class(j)));
  CHECK(table == expected_line_intersection_table());
  // The hexagon: each line meets exactly two others.
  for (std::size_t i = 0; i < 6; ++i) {
    int meets = 0;
    for (std::size_t j = 0; j < 6; ++j) meets += (table(i, j) == 1);
    CHECK(meets == 2);
  }
}

TEST_CASE("symmetry group") {
  auto all = all_symmetries();
  REQUIRE(all.size() == 12);
  for (std::size_t k = 0; k < 12; ++k) CHECK(all[k].index() == k);
  for (const auto& g : all) {
    CHECK((g * g.inverse()).is_identity());
    for (const auto& h : all)
      for (const auto& line : all_lines()) CHECK((g * h).apply(line) == g.apply(h.apply(line)));
  }
  CHECK(HexSymmetry::identity().to_string() == "012");
}

TEST_CASE("symmetries act on Pic as isometries compatible with lines") {
  const IntMatrix gram = intersection_gram();
  for (const auto& g : all_symmetries()) {
    IntMatrix a = pic_action_matrix(g);
    CHECK(a.transposed() * gram * a == gram);
    CHECK(a * lines_to_pic_matrix() == lines_to_pic_matrix() * line_action_matrix(g));
    CHECK(symmetry_action(g, canonical_class()) == canonical_class());
  }
  PicClass a{{2, 1, -1, 0}};
  CHECK(symmetry_action(HexSymmetry::identity(), a) == a);
  CHECK(symmetry_action(HexSymmetry::swap_only(), line_to_pic({LineKind::m, 0})) == PicClass{{1, 0, -1, -1}});
}

TEST_CASE("character lattice") {
  IntMatrix t = character_lattice_basis();
  CHECK(t.rows() == 6);
  CHECK(t.cols() == 2);
  CHECK((lines_to_pic_matrix() * t).is_zero());
  CHECK(dp6::is_saturated(t));
  IntMatrix witness(6, 1, {1, -1, 0, -1, 1, 0});
  CHECK(dp6::solve_integer(t, witness).has_value());
  CHECK(dp6::cokernel(lines_to_pic_matrix()).is_trivial());
}

TEST_CASE("module sequences") {
  auto checks = verify_module_sequences();
  CHECK(checks.size() > 5);
  for (const auto& c : checks) {
    CAPTURE(c.name);
    CHECK(c.passed);
  }
  // Skew lines are exactly the lines of one triangle or the two of a pair.
  IntMatrix table = expected_line_intersection_table();
  IntMatrix triangles = lines_to_triangles_matrix(), pairs = lines_to_pairs_matrix();
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) {
      if (i == j) continue;
      bool same_triangle = triangles.column(i) == triangles.column(j);
      bool same_pair = pairs.column(i) == pairs.column(j);
      CHECK((table(i, j) == 0) == (same_triangle || same_pair));
    }
}
