#include "doctest.h"

#include <random>

#include "dp6/lattice.hpp"

using dp6::FinAbGroup;
using dp6::IntMatrix;
using dp6::Integer;

namespace {

// d_1 d_2 ... d_k = gcd of all k x k minors.
Integer minor_det(const IntMatrix& m, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
  const std::size_t k = rows.size();
  if (k == 0) return 1;
  if (k == 1) return m(rows[0], cols[0]);
  Integer total = 0;
  for (std::size_t c = 0; c < k; ++c) {
    std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
    std::vector<std::size_t> sub_cols;
    for (std::size_t j = 0; j < k; ++j)
      if (j != c) sub_cols.push_back(cols[j]);
    Integer term = m(rows[0], cols[c]) * minor_det(m, sub_rows, sub_cols);
    total += (c % 2 == 0) ? term : Integer(-term);
  }
  return total;
}

void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
             std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

std::vector<Integer> determinantal_factors(const IntMatrix& m) {
  std::vector<Integer> divisors{1};
  for (std::size_t k = 1; k <= std::min(m.rows(), m.cols()); ++k) {
    std::vector<std::vector<std::size_t>> rs, cs;
    std::vector<std::size_t> cur;
    subsets(m.rows(), k, 0, cur, rs);
    subsets(m.cols(), k, 0, cur, cs);
    Integer g = 0;
    for (const auto& r : rs)
      for (const auto& c : cs) g = gcd(g, Integer(minor_det(m, r, c)));
    if (g == 0) break;
    divisors.push_back(g);
  }
  std::vector<Integer> factors;
  for (std::size_t k = 1; k < divisors.size(); ++k) factors.push_back(divisors[k] / divisors[k - 1]);
  return factors;
}

// Dimension of the null space over Q by plain Gaussian elimination.
std::size_t rational_nullity(const IntMatrix& m) {
  std::vector<std::vector<mpq_class>> a(m.rows(), std::vector<mpq_class>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = m(i, j);
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && a[p][c] == 0) ++p;
    if (p == m.rows()) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || a[i][c] == 0) continue;
      mpq_class f = a[i][c] / a[r][c];
      for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return m.cols() - r;
}

IntMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int range) {
  std::uniform_int_distribution<int> dist(-range, range);
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = dist(rng);
  return m;
}

}  // namespace

TEST_CASE("smith normal form of small matrices") {
  auto zero = dp6::smith_normal_form(IntMatrix{{0}});
  CHECK(zero.diagonal == IntMatrix{{0}});
  CHECK(zero.left == IntMatrix{{1}});
  CHECK(zero.right == IntMatrix{{1}});

  CHECK(dp6::smith_normal_form(IntMatrix::identity(2)).diagonal == IntMatrix::identity(2));

  auto s = dp6::smith_normal_form(IntMatrix{{2, 4}, {6, 8}});
  CHECK(s.diagonal == IntMatrix{{2, 0}, {0, 4}});
  CHECK(s.left * IntMatrix{{2, 4}, {6, 8}} * s.right == s.diagonal);
}

TEST_CASE("smith normal form agrees with determinantal divisors") {
  std::mt19937 rng(20261019);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t rows = 1 + rng() % 4, cols = 1 + rng() % 4;
    IntMatrix m = random_matrix(rng, rows, cols, trial % 3 == 0 ? 2 : 9);
    auto s = dp6::smith_normal_form(m);
    CAPTURE(m.to_string());
    CHECK(s.left * m * s.right == s.diagonal);
    CHECK(abs(dp6::determinant(s.left)) == 1);
    CHECK(abs(dp6::determinant(s.right)) == 1);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        if (i != j) CHECK(s.diagonal(i, j) == 0);
    CHECK(s.invariant_factors() == determinantal_factors(m));
  }
}

TEST_CASE("determinant") {
  CHECK(dp6::determinant(IntMatrix{{2, 4}, {6, 8}}) == -8);
  CHECK(dp6::determinant(IntMatrix{{1, 2, 3}, {4, 5, 6}, {7, 8, 10}}) == -3);
  CHECK_THROWS_AS(dp6::determinant(IntMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("kernel basis") {
  CHECK(dp6::kernel_basis(IntMatrix{{1, 1}}) == IntMatrix{{1}, {-1}});
  CHECK(dp6::kernel_basis(IntMatrix::identity(3)).cols() == 0);

  IntMatrix m{{1, 2, 3}};
  IntMatrix k = dp6::kernel_basis(m);
  CHECK(k.cols() == 2);
  CHECK((m * k).is_zero());
  CHECK(dp6::is_saturated(k));

  std::mt19937 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    IntMatrix a = random_matrix(rng, 1 + rng() % 4, 1 + rng() % 5, 3);
    IntMatrix b = dp6::kernel_basis(a);
    CAPTURE(a.to_string());
    CHECK(b.cols() == rational_nullity(a));
    CHECK((a * b).is_zero());
    CHECK(dp6::is_saturated(b));
  }
}

TEST_CASE("cokernel") {
  CHECK(dp6::cokernel(IntMatrix{{2}}).to_string() == "Z/2");
  CHECK(dp6::cokernel(IntMatrix::identity(3)).is_trivial());
  FinAbGroup g = dp6::cokernel(IntMatrix{{2, 4}, {6, 8}});
  CHECK(g.invariant_factors == std::vector<Integer>{2, 4});
  CHECK(g.free_rank == 0);
  CHECK(g.to_string() == "Z/2 + Z/4");
  CHECK(dp6::cokernel(IntMatrix{{1, 0}, {0, 0}}).to_string() == "Z");

  std::mt19937 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    IntMatrix m = random_matrix(rng, 3, 3, 6);
    Integer det = dp6::determinant(m);
    if (det == 0) continue;
    CHECK(dp6::cokernel(m).torsion_order() == abs(det));
  }
}

TEST_CASE("hermite form is an invariant of the lattice") {
  IntMatrix basis{{2, 1}, {0, 3}, {4, 5}};
  IntMatrix h = dp6::column_hermite_form(basis);
  IntMatrix unimodular{{2, 1}, {1, 1}};
  CHECK(dp6::column_hermite_form(basis * unimodular) == h);
  auto c = dp6::solve_integer(h, basis);
  REQUIRE(c.has_value());
  CHECK(abs(dp6::determinant(*c)) == 1);
}

TEST_CASE("solve_integer") {
  IntMatrix a{{2, 0}, {0, 3}};
  auto x = dp6::solve_integer(a, IntMatrix{{4}, {9}});
  REQUIRE(x.has_value());
  CHECK(*x == IntMatrix{{2}, {3}});
  CHECK_FALSE(dp6::solve_integer(a, IntMatrix{{1}, {0}}).has_value());
}

TEST_CASE("saturated quotient") {
  IntMatrix sub{{1}, {-1}, {0}};
  auto q = dp6::saturated_quotient(sub);
  CHECK(q.projection.rows() == 2);
  CHECK((q.projection * sub).is_zero());
  CHECK(q.projection * q.lift == IntMatrix::identity(2));
}

TEST_CASE("exactness of composable maps") {
  CHECK(dp6::is_exact_pair(IntMatrix{{1}, {-1}}, IntMatrix{{1, 1}}));
  CHECK_FALSE(dp6::is_exact_pair(IntMatrix{{2}, {-2}}, IntMatrix{{1, 1}}));
  // The zero map after an isomorphism is exact; a zero map on Z^3 does not compose with it.
  CHECK(dp6::is_exact_pair(IntMatrix::identity(2), IntMatrix::zero(1, 2)));
  CHECK_THROWS_AS(dp6::is_exact_pair(IntMatrix::identity(2), IntMatrix::zero(1, 3)), std::invalid_argument);
  CHECK_FALSE(dp6::is_exact_pair(IntMatrix::identity(2), IntMatrix{{1, 0}}));
  CHECK(dp6::is_exact_pair(IntMatrix::zero(2, 0), IntMatrix::identity(2)));
  CHECK_THROWS_AS(dp6::is_exact_pair(IntMatrix::identity(2), IntMatrix::identity(3)), std::invalid_argument);
}
