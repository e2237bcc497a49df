#include "doctest.h"

#include <random>

#include "dp6/involution.hpp"

using namespace dp6::involution;

namespace {

UnitaryElement random_element(std::mt19937& rng) {
  std::uniform_int_distribution<int> dist(-4, 4);
  std::vector<Rational> v(18);
  for (auto& x : v) {
    x = Rational(dist(rng), static_cast<unsigned>(1 + rng() % 3));
    x.canonicalize();
  }
  return UnitaryElement::from_coordinates(v);
}

}  // namespace

TEST_CASE("matrix helpers") {
  Matrix3 j = all_ones();
  CHECK(entry_sum(j) == 9);
  Matrix3 jj = matrix_product(j, j);
  for (const auto& row : jj)
    for (const auto& x : row) CHECK(x == 3);
  CHECK(transpose(unit_matrix(0, 2)) == unit_matrix(2, 0));
}

TEST_CASE("tau is a unitary involution") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    UnitaryElement x = random_element(rng), y = random_element(rng);
    CHECK(tau(tau(x)) == x);
    CHECK(tau(x * y) == tau(y) * tau(x));
    CHECK(tau(x + y) == tau(x) + tau(y));
  }
  UnitaryElement e{unit_matrix(0, 1), Matrix3{}};
  CHECK(tau(e).n == unit_matrix(1, 0));
  CHECK(tau(e).m == Matrix3{});
  CHECK(tau(one()) == one());
}

TEST_CASE("t is hermitian and sandwiches to multiples of itself") {
  UnitaryElement t = hermitian_t();
  CHECK(tau(t) == t);
  for (const auto& x : standard_basis()) {
    UnitaryElement y = t * x * t;
    // J X J = (sum of entries of X) J on each factor.
    CHECK(y.m == (entry_sum(x.m) * UnitaryElement{all_ones(), Matrix3{}}).m);
    CHECK(y.n == (entry_sum(x.n) * UnitaryElement{Matrix3{}, all_ones()}).n);
  }
}

TEST_CASE("rational rank") {
  std::vector<std::vector<Rational>> v{{1, 2, 3}, {2, 4, 6}, {0, 1, 0}};
  CHECK(rational_rank(v) == 2);
  CHECK(rational_rank({}) == 0);
  CHECK(standard_basis().size() == 18);
}

TEST_CASE("hermitian element checks") {
  RemarkReport r = verify_hermitian_remark();
  for (const auto& c : r.checks) {
    CAPTURE(c.name);
    CHECK(c.passed);
  }
  CHECK(r.passed());
  CHECK(r.two_sided_span_dim == 2);
  CHECK(r.symmetric_part_dim == 1);
  CHECK(r.sym_dim == 9);
  CHECK(r.f_plus_l_perp_dim == 7);
}
