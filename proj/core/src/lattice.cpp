#include "dp6/lattice.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace dp6 {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Integer(0)) {}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw std::invalid_argument("IntMatrix: entry count does not match rows * cols");
  }
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("IntMatrix: ragged initializer");
    for (long v : r) entries_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::zero(std::size_t rows, std::size_t cols) { return IntMatrix(rows, cols); }

IntMatrix IntMatrix::from_columns(std::size_t rows, const std::vector<std::vector<Integer>>& columns) {
  IntMatrix m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows) throw std::invalid_argument("from_columns: column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

std::vector<Integer> IntMatrix::row(std::size_t i) const {
  return {entries_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
          entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
}

std::vector<Integer> IntMatrix::column(std::size_t j) const {
  std::vector<Integer> out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.push_back((*this)(i, j));
  return out;
}

IntMatrix IntMatrix::columns(std::size_t first, std::size_t count) const {
  if (first + count > cols_) throw std::out_of_range("IntMatrix::columns");
  IntMatrix out(rows_, count);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < count; ++j) out(i, j) = (*this)(i, first + j);
  return out;
}

IntMatrix IntMatrix::row_block(std::size_t first, std::size_t count) const {
  if (first + count > rows_) throw std::out_of_range("IntMatrix::row_block");
  IntMatrix out(count, cols_);
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(first + i, j);
  return out;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool IntMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Integer& v) { return v == 0; });
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("IntMatrix product: dimension mismatch");
  IntMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("IntMatrix sum: dimension mismatch");
  IntMatrix c = a;
  for (std::size_t k = 0; k < c.entries_.size(); ++k) c.entries_[k] += b.entries_[k];
  return c;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("IntMatrix difference: dimension mismatch");
  IntMatrix c = a;
  for (std::size_t k = 0; k < c.entries_.size(); ++k) c.entries_[k] -= b.entries_[k];
  return c;
}

IntMatrix operator-(const IntMatrix& a) {
  IntMatrix c = a;
  for (auto& v : c.entries_) v = -v;
  return c;
}

bool operator==(const IntMatrix& a, const IntMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

std::vector<Integer> IntMatrix::apply(const std::vector<Integer>& x) const {
  if (x.size() != cols_) throw std::invalid_argument("IntMatrix::apply: dimension mismatch");
  std::vector<Integer> y(rows_, Integer(0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) y[i] += (*this)(i, j) * x[j];
  return y;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) os << ", ";
    os << '[';
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) os << ", ";
      os << (*this)(i, j);
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

IntMatrix hstack(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("hstack: row count mismatch");
  IntMatrix c(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) c(i, a.cols() + j) = b(i, j);
  }
  return c;
}

IntMatrix vstack(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.cols()) throw std::invalid_argument("vstack: column count mismatch");
  IntMatrix c(a.rows() + b.rows(), a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j) {
    for (std::size_t i = 0; i < a.rows(); ++i) c(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i) c(a.rows() + i, j) = b(i, j);
  }
  return c;
}

IntMatrix block_diagonal(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix c(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) c(a.rows() + i, a.cols() + j) = b(i, j);
  return c;
}

Integer FinAbGroup::torsion_order() const {
  Integer order = 1;
  for (const auto& d : invariant_factors) order *= d;
  return order;
}

std::string FinAbGroup::to_string() const {
  if (is_trivial()) return "0";
  std::ostringstream os;
  bool first = true;
  if (free_rank > 0) {
    os << 'Z';
    if (free_rank > 1) os << '^' << free_rank;
    first = false;
  }
  for (const auto& d : invariant_factors) {
    if (!first) os << " + ";
    os << "Z/" << d;
    first = false;
  }
  return os.str();
}

std::vector<Integer> SmithForm::invariant_factors() const {
  std::vector<Integer> out;
  const std::size_t n = std::min(diagonal.rows(), diagonal.cols());
  for (std::size_t i = 0; i < n; ++i)
    if (diagonal(i, i) != 0) out.push_back(diagonal(i, i));
  return out;
}

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

// row_target += factor * row_source
void add_row_multiple(IntMatrix& m, std::size_t target, std::size_t source, const Integer& factor) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(target, j) += factor * m(source, j);
}

void add_col_multiple(IntMatrix& m, std::size_t target, std::size_t source, const Integer& factor) {
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, target) += factor * m(i, source);
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
  IntMatrix d = m;
  IntMatrix u = IntMatrix::identity(m.rows());
  IntMatrix v = IntMatrix::identity(m.cols());
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  const std::size_t steps = std::min(rows, cols);

  for (std::size_t t = 0; t < steps; ++t) {
    bool block_is_zero = false;
    for (;;) {
      // Smallest nonzero |entry| in the active block; first hit wins ties.
      std::size_t pi = rows, pj = cols;
      Integer best;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j) {
          const Integer& e = d(i, j);
          if (e == 0) continue;
          if (pi == rows || abs(e) < best) {
            best = abs(e);
            pi = i;
            pj = j;
          }
        }
      if (pi == rows) {
        block_is_zero = true;
        break;
      }
      swap_rows(d, t, pi);
      swap_rows(u, t, pi);
      swap_cols(d, t, pj);
      swap_cols(v, t, pj);

      bool clean = true;
      const Integer pivot = d(t, t);
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (d(i, t) == 0) continue;
        Integer q = d(i, t) / pivot;  // truncating
        if (q != 0) {
          Integer neg = -q;
          add_row_multiple(d, i, t, neg);
          add_row_multiple(u, i, t, neg);
        }
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (d(t, j) == 0) continue;
        Integer q = d(t, j) / pivot;
        if (q != 0) {
          Integer neg = -q;
          add_col_multiple(d, j, t, neg);
          add_col_multiple(v, j, t, neg);
        }
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Pivot must divide the rest of the block.
      bool divides_all = true;
      for (std::size_t i = t + 1; i < rows && divides_all; ++i)
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (d(i, j) % pivot != 0) {
            add_row_multiple(d, t, i, Integer(1));
            add_row_multiple(u, t, i, Integer(1));
            divides_all = false;
            break;
          }
        }
      if (divides_all) break;
    }
    if (block_is_zero) break;
    if (d(t, t) < 0) {
      for (std::size_t j = 0; j < cols; ++j) d(t, j) = -d(t, j);
      for (std::size_t j = 0; j < rows; ++j) u(t, j) = -u(t, j);
    }
  }
  return SmithForm{std::move(u), std::move(d), std::move(v)};
}

std::size_t rank(const IntMatrix& m) { return smith_normal_form(m).rank(); }

Integer determinant(const IntMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("determinant: matrix is not square");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap_with = n;
      for (std::size_t i = k + 1; i < n; ++i)
        if (a(i, k) != 0) {
          swap_with = i;
          break;
        }
      if (swap_with == n) return 0;
      swap_rows(a, k, swap_with);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

IntMatrix column_hermite_form(const IntMatrix& basis) {
  // Row Hermite form of the transpose: each row is one basis vector.
  IntMatrix h = basis.transposed();
  const std::size_t k = h.rows();
  const std::size_t n = h.cols();
  std::size_t p = 0;
  for (std::size_t c = 0; c < n && p < k; ++c) {
    for (;;) {
      std::size_t best = k;
      for (std::size_t i = p; i < k; ++i)
        if (h(i, c) != 0 && (best == k || abs(h(i, c)) < abs(h(best, c)))) best = i;
      if (best == k) break;
      swap_rows(h, p, best);
      bool others_zero = true;
      for (std::size_t i = p + 1; i < k; ++i) {
        if (h(i, c) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), h(i, c).get_mpz_t(), h(p, c).get_mpz_t());
        add_row_multiple(h, i, p, Integer(-q));
        if (h(i, c) != 0) others_zero = false;
      }
      if (others_zero) break;
    }
    if (p < k && h(p, c) != 0) {
      if (h(p, c) < 0)
        for (std::size_t j = 0; j < n; ++j) h(p, j) = -h(p, j);
      for (std::size_t i = 0; i < p; ++i) {
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), h(i, c).get_mpz_t(), h(p, c).get_mpz_t());
        if (q != 0) add_row_multiple(h, i, p, Integer(-q));
      }
      ++p;
    }
  }
  if (p != k) throw std::invalid_argument("column_hermite_form: columns are linearly dependent");
  return h.transposed();
}

IntMatrix kernel_basis(const IntMatrix& m) {
  const SmithForm snf = smith_normal_form(m);
  const std::size_t r = snf.rank();
  const std::size_t n = m.cols();
  if (r == n) return IntMatrix(n, 0);
  return column_hermite_form(snf.right.columns(r, n - r));
}

FinAbGroup cokernel(const IntMatrix& m) {
  const SmithForm snf = smith_normal_form(m);
  FinAbGroup g;
  std::size_t nonzero = 0;
  for (const auto& d : snf.invariant_factors()) {
    ++nonzero;
    if (d != 1) g.invariant_factors.push_back(d);
  }
  g.free_rank = m.rows() - nonzero;
  return g;
}

std::optional<IntMatrix> solve_integer(const IntMatrix& a, const IntMatrix& x) {
  if (a.rows() != x.rows()) throw std::invalid_argument("solve_integer: row count mismatch");
  const SmithForm snf = smith_normal_form(a);
  const IntMatrix w = snf.left * x;
  const auto factors = snf.invariant_factors();
  const std::size_t r = factors.size();
  IntMatrix y(a.cols(), x.cols());
  for (std::size_t i = 0; i < w.rows(); ++i)
    for (std::size_t j = 0; j < w.cols(); ++j) {
      if (i < r) {
        if (w(i, j) % factors[i] != 0) return std::nullopt;
        y(i, j) = w(i, j) / factors[i];
      } else if (w(i, j) != 0) {
        return std::nullopt;
      }
    }
  return snf.right * y;
}

bool is_saturated(const IntMatrix& basis) {
  const auto factors = smith_normal_form(basis).invariant_factors();
  return std::all_of(factors.begin(), factors.end(), [](const Integer& d) { return d == 1; });
}

QuotientMap saturated_quotient(const IntMatrix& sub) {
  const SmithForm snf = smith_normal_form(sub);
  const auto factors = snf.invariant_factors();
  if (factors.size() != sub.cols() ||
      !std::all_of(factors.begin(), factors.end(), [](const Integer& d) { return d == 1; })) {
    throw std::invalid_argument("saturated_quotient: sublattice is not saturated of full column rank");
  }
  const std::size_t n = sub.rows();
  const std::size_t k = sub.cols();
  // U * S * V = [I; 0], so rows k.. of U kill S and the matching columns of
  // U^{-1} lift them back.
  const IntMatrix projection = snf.left.row_block(k, n - k);
  const auto inverse = solve_integer(snf.left, IntMatrix::identity(n));
  return QuotientMap{projection, inverse->columns(k, n - k)};
}

bool is_exact_pair(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.cols()) throw std::invalid_argument("is_exact_pair: maps are not composable");
  if (!(b * a).is_zero()) return false;
  const IntMatrix kernel = kernel_basis(b);
  const auto coords = solve_integer(kernel, a);
  if (!coords) return false;
  return cokernel(*coords).is_trivial();
}

}  // namespace dp6
