#include "dp6/involution.hpp"

#include <algorithm>
#include <stdexcept>

namespace dp6::involution {

using hexagon::CheckResult;
using Vector = std::vector<Rational>;

Matrix3 matrix_product(const Matrix3& a, const Matrix3& b) {
  Matrix3 c{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) c[i][j] += a[i][k] * b[k][j];
  return c;
}

Matrix3 transpose(const Matrix3& a) {
  Matrix3 t{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) t[i][j] = a[j][i];
  return t;
}

Matrix3 all_ones() {
  Matrix3 j{};
  for (auto& row : j) row.fill(Rational(1));
  return j;
}

Matrix3 unit_matrix(int i, int j) {
  Matrix3 e{};
  e[i][j] = 1;
  return e;
}

Rational entry_sum(const Matrix3& a) {
  Rational s = 0;
  for (const auto& row : a)
    for (const auto& x : row) s += x;
  return s;
}

Vector UnitaryElement::coordinates() const {
  Vector v;
  v.reserve(18);
  for (const auto* part : {&m, &n})
    for (const auto& row : *part)
      for (const auto& x : row) v.push_back(x);
  return v;
}

UnitaryElement UnitaryElement::from_coordinates(const Vector& v) {
  if (v.size() != 18) throw std::invalid_argument("expected 18 coordinates");
  UnitaryElement x;
  for (int k = 0; k < 9; ++k) {
    x.m[k / 3][k % 3] = v[k];
    x.n[k / 3][k % 3] = v[9 + k];
  }
  return x;
}

UnitaryElement operator*(const UnitaryElement& a, const UnitaryElement& b) {
  return {matrix_product(a.m, b.m), matrix_product(a.n, b.n)};
}

UnitaryElement operator+(const UnitaryElement& a, const UnitaryElement& b) {
  UnitaryElement c;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      c.m[i][j] = a.m[i][j] + b.m[i][j];
      c.n[i][j] = a.n[i][j] + b.n[i][j];
    }
  return c;
}

UnitaryElement operator*(const Rational& k, const UnitaryElement& a) {
  UnitaryElement c = a;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      c.m[i][j] *= k;
      c.n[i][j] *= k;
    }
  return c;
}

UnitaryElement tau(const UnitaryElement& x) { return {transpose(x.n), transpose(x.m)}; }

UnitaryElement one() {
  Matrix3 id{};
  for (int i = 0; i < 3; ++i) id[i][i] = 1;
  return {id, id};
}

UnitaryElement hermitian_t() { return {all_ones(), all_ones()}; }

std::vector<UnitaryElement> standard_basis() {
  std::vector<UnitaryElement> out;
  for (int side = 0; side < 2; ++side)
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        UnitaryElement e;
        (side == 0 ? e.m : e.n) = unit_matrix(i, j);
        out.push_back(e);
      }
  return out;
}

namespace {

// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> row_reduce(std::vector<Vector>& rows) {
  std::vector<std::size_t> pivots;
  if (rows.empty()) return pivots;
  const std::size_t cols = rows.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    const Rational inv = 1 / rows[r][c];
    for (auto& x : rows[r]) x *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const Rational f = rows[i][c];
      for (std::size_t k = 0; k < cols; ++k) rows[i][k] -= f * rows[r][k];
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

// Basis of {c : sum_j c_j columns[j] = 0}.
std::vector<Vector> null_space(const std::vector<Vector>& columns) {
  if (columns.empty()) return {};
  const std::size_t n = columns.size();
  const std::size_t dim = columns.front().size();
  std::vector<Vector> rows(dim, Vector(n));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < dim; ++i) rows[i][j] = columns[j][i];
  const auto pivots = row_reduce(rows);
  std::vector<Vector> out;
  for (std::size_t free = 0; free < n; ++free) {
    if (std::find(pivots.begin(), pivots.end(), free) != pivots.end()) continue;
    Vector v(n);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -rows[r][free];
    out.push_back(std::move(v));
  }
  return out;
}

bool in_span(const std::vector<Vector>& basis, const Vector& v) {
  std::vector<Vector> with = basis;
  with.push_back(v);
  return rational_rank(with) == rational_rank(basis);
}

Vector combine(const std::vector<Vector>& basis, const Vector& coefficients) {
  Vector out(basis.front().size());
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += coefficients[j] * basis[j][i];
  return out;
}

// Basis of U ∩ W.
std::vector<Vector> intersect(const std::vector<Vector>& u, const std::vector<Vector>& w) {
  std::vector<Vector> columns = u;
  for (const auto& x : w) {
    Vector neg = x;
    for (auto& e : neg) e = -e;
    columns.push_back(std::move(neg));
  }
  std::vector<Vector> out;
  for (const auto& c : null_space(columns)) out.push_back(combine(u, Vector(c.begin(), c.begin() + u.size())));
  return out;
}

Rational trace_pairing(const UnitaryElement& x, const UnitaryElement& y) {
  const Matrix3 p = matrix_product(x.m, y.m);
  return p[0][0] + p[1][1] + p[2][2];
}

CheckResult check(std::string name, bool passed, std::string detail = {}) {
  return CheckResult{std::move(name), passed, std::move(detail)};
}

}  // namespace

std::size_t rational_rank(const std::vector<Vector>& vectors) {
  std::vector<Vector> rows = vectors;
  return row_reduce(rows).size();
}

bool RemarkReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

RemarkReport verify_hermitian_remark() {
  RemarkReport report;
  const auto basis = standard_basis();
  const UnitaryElement t = hermitian_t();

  bool involutive = true, anti = true;
  for (const auto& x : basis) {
    involutive = involutive && tau(tau(x)) == x;
    for (const auto& y : basis) anti = anti && tau(x * y) == tau(y) * tau(x);
  }
  report.checks.push_back(check("tau is an involution", involutive));
  report.checks.push_back(check("tau reverses products", anti));

  std::vector<Vector> l_basis;
  bool fixes_l = true;
  for (int i = 0; i < 3; ++i) {
    const UnitaryElement d{unit_matrix(i, i), unit_matrix(i, i)};
    fixes_l = fixes_l && tau(d) == d;
    l_basis.push_back(d.coordinates());
  }
  report.checks.push_back(check("tau fixes L pointwise", fixes_l));

  report.checks.push_back(check("tau(t) = t", tau(t) == t));

  bool scalar_identity = true;
  for (const auto& x : basis) {
    Matrix3 expected = all_ones();
    for (auto& row : expected)
      for (auto& e : row) e *= entry_sum(x.m);
    scalar_identity = scalar_identity && matrix_product(matrix_product(all_ones(), x.m), all_ones()) == expected;
  }
  report.checks.push_back(check("J M J = (sum of entries of M) J", scalar_identity));

  std::vector<Vector> products;
  for (const auto& x : basis) products.push_back((t * x * t).coordinates());
  std::vector<Vector> span_k_t{UnitaryElement{all_ones(), Matrix3{}}.coordinates(),
                               UnitaryElement{Matrix3{}, all_ones()}.coordinates()};
  report.two_sided_span_dim = rational_rank(products);
  bool equals_span_k = report.two_sided_span_dim == 2;
  for (const auto& p : products) equals_span_k = equals_span_k && in_span(span_k_t, p);
  report.checks.push_back(check("t B t = span_K(t)", equals_span_k,
                                "dim_F = " + std::to_string(report.two_sided_span_dim)));

  // Sym(B, tau) as the kernel of tau - 1.
  std::vector<Vector> tau_minus_one;
  for (const auto& x : basis) tau_minus_one.push_back((tau(x) + Rational(-1) * x).coordinates());
  std::vector<Vector> basis_coordinates;
  for (const auto& x : basis) basis_coordinates.push_back(x.coordinates());
  std::vector<Vector> sym;
  for (const auto& c : null_space(tau_minus_one)) sym.push_back(combine(basis_coordinates, c));
  report.sym_dim = rational_rank(sym);

  const auto symmetric_part = intersect(products, sym);
  report.symmetric_part_dim = rational_rank(symmetric_part);
  const bool is_span_f_t = report.symmetric_part_dim == 1 && in_span(symmetric_part, t.coordinates());
  report.checks.push_back(check("(t B t) ∩ Sym(B, tau) = span_F(t)", is_span_f_t,
                                "dim_F = " + std::to_string(report.symmetric_part_dim)));

  // L^perp inside Sym for the trace pairing, then F + L^perp.
  std::vector<Vector> pairing_columns;
  for (const auto& s : sym) {
    Vector col;
    for (const auto& l : l_basis)
      col.push_back(trace_pairing(UnitaryElement::from_coordinates(s), UnitaryElement::from_coordinates(l)));
    pairing_columns.push_back(std::move(col));
  }
  std::vector<Vector> f_plus_l_perp{one().coordinates()};
  for (const auto& c : null_space(pairing_columns)) f_plus_l_perp.push_back(combine(sym, c));
  report.f_plus_l_perp_dim = rational_rank(f_plus_l_perp);

  bool equal_diagonals = true;
  for (const auto& v : f_plus_l_perp) {
    const auto x = UnitaryElement::from_coordinates(v);
    equal_diagonals = equal_diagonals && tau(x) == x && x.m[0][0] == x.m[1][1] && x.m[1][1] == x.m[2][2];
  }
  report.checks.push_back(check("dim Sym(B, tau) = 9", report.sym_dim == 9, "dim_F = " + std::to_string(report.sym_dim)));
  report.checks.push_back(check("F + L^perp = hermitian matrices with equal diagonal entries",
                                report.f_plus_l_perp_dim == 7 && equal_diagonals,
                                "dim_F = " + std::to_string(report.f_plus_l_perp_dim)));

  bool contained = true;
  for (const auto& v : symmetric_part) contained = contained && in_span(f_plus_l_perp, v);
  report.checks.push_back(check("span_F(t) ⊂ F + L^perp", contained && !symmetric_part.empty()));
  return report;
}

}  // namespace dp6::involution
