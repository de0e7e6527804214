#include "fanokit/matrix.hpp"

#include <sstream>
#include <utility>

#include "fanokit/combinatorics.hpp"

namespace fanokit {

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, field.zero()) {}

Matrix Matrix::identity(Field field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
  return m;
}

Matrix Matrix::from_rows(Field field, const std::vector<std::vector<Scalar>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix m(field, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw DimensionError("ragged matrix rows");
    for (std::size_t j = 0; j < cols; ++j) {
      if (rows[i][j].field() != field) throw PreconditionError("matrix entry from a different field");
      m(i, j) = rows[i][j];
    }
  }
  return m;
}

Matrix Matrix::from_ints(Field field, std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<std::vector<Scalar>> out;
  for (const auto& r : rows) {
    std::vector<Scalar> row;
    for (long v : r) row.push_back(field.from_int(v));
    out.push_back(std::move(row));
  }
  return from_rows(field, out);
}

std::vector<Scalar> Matrix::row(std::size_t i) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::select(std::span<const std::size_t> row_ids, std::span<const std::size_t> col_ids) const {
  Matrix s(field_, row_ids.size(), col_ids.size());
  for (std::size_t i = 0; i < row_ids.size(); ++i)
    for (std::size_t j = 0; j < col_ids.size(); ++j) s(i, j) = (*this)(row_ids[i], col_ids[j]);
  return s;
}

Matrix Matrix::select_columns(std::span<const std::size_t> col_ids) const {
  Matrix s(field_, rows_, col_ids.size());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < col_ids.size(); ++j) s(i, j) = (*this)(i, col_ids[j]);
  return s;
}

Matrix Matrix::vstack(const Matrix& top, const Matrix& bottom) {
  if (top.cols_ != bottom.cols_) throw DimensionError("vstack: column counts differ");
  if (top.field_ != bottom.field_) throw PreconditionError("vstack: fields differ");
  Matrix m(top.field_, top.rows_ + bottom.rows_, top.cols_);
  std::copy(top.data_.begin(), top.data_.end(), m.data_.begin());
  std::copy(bottom.data_.begin(), bottom.data_.end(),
            m.data_.begin() + static_cast<std::ptrdiff_t>(top.data_.size()));
  return m;
}

Matrix Matrix::hstack(const Matrix& left, const Matrix& right) {
  if (left.rows_ != right.rows_) throw DimensionError("hstack: row counts differ");
  if (left.field_ != right.field_) throw PreconditionError("hstack: fields differ");
  Matrix m(left.field_, left.rows_, left.cols_ + right.cols_);
  for (std::size_t i = 0; i < left.rows_; ++i) {
    for (std::size_t j = 0; j < left.cols_; ++j) m(i, j) = left(i, j);
    for (std::size_t j = 0; j < right.cols_; ++j) m(i, left.cols_ + j) = right(i, j);
  }
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

bool Matrix::operator==(const Matrix& other) const {
  return field_ == other.field_ && rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw DimensionError("matrix product: inner dimensions differ");
  if (a.field_ != b.field_) throw PreconditionError("matrix product: fields differ");
  Matrix c(a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t l = 0; l < a.cols_; ++l) {
      const Scalar& x = a(i, l);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += x * b(l, j);
    }
  }
  return c;
}

Matrix Matrix::scaled(const Scalar& c) const {
  Matrix out = *this;
  for (auto& x : out.data_) x *= c;
  return out;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j).to_string();
    os << ']';
  }
  os << ']';
  return os.str();
}

std::vector<Scalar> multiply(const Matrix& m, std::span<const Scalar> v) {
  if (v.size() != m.cols()) throw DimensionError("matrix-vector product: size mismatch");
  std::vector<Scalar> out(m.rows(), m.field().zero());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i] += m(i, j) * v[j];
  return out;
}

namespace {

using IntGrid = std::vector<std::vector<mpz_class>>;

/// Scales each row of a rational matrix by the lcm of its denominators.
/// Returns the integer grid and the product of the scale factors.
IntGrid clear_denominators(const Matrix& m, mpz_class& scale) {
  IntGrid grid(m.rows(), std::vector<mpz_class>(m.cols()));
  scale = 1;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    mpz_class l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).rational().get_den_mpz_t());
    }
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const mpq_class& q = m(i, j).rational();
      grid[i][j] = q.get_num() * (l / q.get_den());
    }
    scale *= l;
  }
  return grid;
}

/// Bareiss fraction-free elimination on an integer grid. Returns the rank;
/// when the grid is square and nonsingular, `det_out` receives the
/// determinant.
std::size_t bareiss(IntGrid& a, mpz_class* det_out) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a.front().size();
  mpz_class prev = 1;
  int sign = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && a[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != r) {
      std::swap(a[pivot], a[r]);
      sign = -sign;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        mpz_class t = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  if (det_out != nullptr) *det_out = (r == rows && rows == cols) ? mpz_class(sign * prev) : mpz_class(0);
  return r;
}

/// Gauss-Jordan over an arbitrary field; returns pivot columns.
std::vector<std::size_t> gauss_jordan(Matrix& m, Scalar* det_out) {
  std::vector<std::size_t> pivots;
  Scalar det = m.field().one();
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t pivot = r;
    while (pivot < m.rows() && m(pivot, c).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != r) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(pivot, j), m(r, j));
      det = -det;
    }
    const Scalar inv = m(r, c).inverse();
    det *= m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      const Scalar f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  if (det_out != nullptr) *det_out = (r == m.rows() && m.rows() == m.cols()) ? det : m.field().zero();
  return pivots;
}

}  // namespace

Scalar det(const Matrix& m) {
  if (m.rows() != m.cols()) {
    throw DimensionError("det: matrix is " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
  if (m.rows() == 0) return m.field().one();
  if (m.field().is_prime()) {
    Matrix work = m;
    Scalar d;
    gauss_jordan(work, &d);
    return d;
  }
  mpz_class scale;
  IntGrid grid = clear_denominators(m, scale);
  mpz_class d;
  bareiss(grid, &d);
  return Scalar(mpq_class(d, scale));
}

std::size_t rank(const Matrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  if (m.field().is_prime()) {
    Matrix work = m;
    return gauss_jordan(work, nullptr).size();
  }
  mpz_class scale;
  IntGrid grid = clear_denominators(m, scale);
  return bareiss(grid, nullptr);
}

Matrix rref(const Matrix& m, std::vector<std::size_t>* pivots) {
  Matrix work = m;
  auto p = gauss_jordan(work, nullptr);
  if (pivots != nullptr) *pivots = std::move(p);
  return work;
}

std::vector<Scalar> maximal_minors(const Matrix& m) {
  if (m.rows() > m.cols()) {
    throw DimensionError("maximal_minors: more rows (" + std::to_string(m.rows()) + ") than columns (" +
                         std::to_string(m.cols()) + ")");
  }
  std::vector<Scalar> out;
  for (const auto& cols : combinations(m.cols(), m.rows())) out.push_back(det(m.select_columns(cols)));
  return out;
}

std::vector<std::vector<Scalar>> kernel_basis(const Matrix& m) {
  std::vector<std::size_t> pivots;
  Matrix r = rref(m, &pivots);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Scalar>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> v(m.cols(), m.field().zero());
    v[free] = m.field().one();
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace fanokit
