#include "ntt/linalg.hpp"

#include <sstream>
#include <stdexcept>

namespace ntt {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= (1u << 16) || !is_prime(p))
    throw std::invalid_argument("field modulus " + std::to_string(p) + " is not a prime below 65536");
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
  if (a % p_ == 0) throw std::domain_error("inverse of zero");
  std::int64_t t = 0, new_t = 1, r = p_, new_r = a % p_;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  return reduce(t);
}

Matrix::Matrix(PrimeField field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

Matrix::Matrix(PrimeField field, std::size_t rows, std::size_t cols, std::vector<std::uint32_t> entries)
    : field_(field), rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows * cols) throw std::invalid_argument("matrix entry count does not match shape");
  for (auto& e : data_) e %= field_.p();
}

Matrix Matrix::identity(PrimeField field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(PrimeField field, const std::vector<std::vector<std::int64_t>>& rows) {
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rows[r][c]);
  }
  return m;
}

Matrix Matrix::from_columns(PrimeField field, std::size_t rows,
                            const std::vector<std::vector<std::uint32_t>>& columns) {
  Matrix m(field, rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw std::invalid_argument("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r] % field.p();
  }
  return m;
}

bool Matrix::is_zero() const {
  for (auto e : data_)
    if (e != 0) return false;
  return true;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::scaled(std::int64_t c) const {
  std::uint32_t k = field_.reduce(c);
  Matrix out(*this);
  for (auto& e : out.data_) e = field_.mul(e, k);
  return out;
}

Matrix Matrix::column(std::size_t c) const { return select_columns({c}); }

Matrix Matrix::select_columns(const std::vector<std::size_t>& idx) const {
  Matrix out(field_, rows_, idx.size());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t j = 0; j < idx.size(); ++j) out(r, j) = (*this)(r, idx[j]);
  return out;
}

Matrix Matrix::select_rows(const std::vector<std::size_t>& idx) const {
  Matrix out(field_, idx.size(), cols_);
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t c = 0; c < cols_; ++c) out(i, c) = (*this)(idx[i], c);
  return out;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw std::out_of_range("matrix block out of range");
  Matrix out(field_, nr, nc);
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c) out(r, c) = (*this)(r0 + r, c0 + c);
  return out;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& m) {
  if (r0 + m.rows() > rows_ || c0 + m.cols() > cols_) throw std::out_of_range("matrix block out of range");
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) (*this)(r0 + r, c0 + c) = m(r, c);
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (field_ != o.field_) throw std::invalid_argument("matrix product over different fields");
  if (cols_ != o.rows_)
    throw std::invalid_argument("matrix product shape mismatch: " + std::to_string(rows_) + "x" +
                                std::to_string(cols_) + " * " + std::to_string(o.rows_) + "x" +
                                std::to_string(o.cols_));
  Matrix out(field_, rows_, o.cols_);
  std::vector<std::uint64_t> acc(o.cols_);
  const std::uint64_t p = field_.p();
  for (std::size_t i = 0; i < rows_; ++i) {
    std::fill(acc.begin(), acc.end(), 0);
    const std::uint32_t* a = row(i);
    for (std::size_t k = 0; k < cols_; ++k) {
      std::uint64_t aik = a[k];
      if (aik == 0) continue;
      const std::uint32_t* b = o.row(k);
      for (std::size_t j = 0; j < o.cols_; ++j) acc[j] += aik * b[j];
    }
    std::uint32_t* dst = out.row(i);
    for (std::size_t j = 0; j < o.cols_; ++j) dst[j] = static_cast<std::uint32_t>(acc[j] % p);
  }
  return out;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (field_ != o.field_ || rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("matrix sum shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] = field_.add(data_[i], o.data_[i]);
  return *this;
}

Matrix Matrix::operator+(const Matrix& o) const {
  Matrix out(*this);
  out += o;
  return out;
}

Matrix Matrix::operator-() const {
  Matrix out(*this);
  for (auto& e : out.data_) e = field_.neg(e);
  return out;
}

Matrix Matrix::operator-(const Matrix& o) const { return *this + (-o); }

bool Matrix::operator==(const Matrix& o) const {
  return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? "," : "") << (*this)(r, c);
    os << "]";
  }
  os << "] (" << rows_ << "x" << cols_ << " mod " << field_.p() << ")";
  return os.str();
}

Matrix hstack(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("hstack row mismatch");
  Matrix out(a.field(), a.rows(), a.cols() + b.cols());
  out.set_block(0, 0, a);
  out.set_block(0, a.cols(), b);
  return out;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) throw std::invalid_argument("vstack column mismatch");
  Matrix out(a.field(), a.rows() + b.rows(), a.cols());
  out.set_block(0, 0, a);
  out.set_block(a.rows(), 0, b);
  return out;
}

Matrix block_diag(const Matrix& a, const Matrix& b) {
  Matrix out(a.field(), a.rows() + b.rows(), a.cols() + b.cols());
  out.set_block(0, 0, a);
  out.set_block(a.rows(), a.cols(), b);
  return out;
}

RowEchelon rref(const Matrix& m) {
  Matrix r = m;
  const PrimeField& f = m.field();
  const std::uint32_t p = f.p();
  std::vector<std::size_t> pivots;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < r.cols() && pivot_row < r.rows(); ++col) {
    std::size_t sel = pivot_row;
    while (sel < r.rows() && r(sel, col) == 0) ++sel;
    if (sel == r.rows()) continue;
    if (sel != pivot_row)
      for (std::size_t c = col; c < r.cols(); ++c) std::swap(r(sel, c), r(pivot_row, c));
    std::uint32_t inv = f.inv(r(pivot_row, col));
    std::uint32_t* prow = r.row(pivot_row);
    for (std::size_t c = col; c < r.cols(); ++c) prow[c] = f.mul(prow[c], inv);
    for (std::size_t i = 0; i < r.rows(); ++i) {
      if (i == pivot_row) continue;
      std::uint32_t factor = r(i, col);
      if (factor == 0) continue;
      std::uint64_t neg = p - factor;
      std::uint32_t* irow = r.row(i);
      for (std::size_t c = col; c < r.cols(); ++c)
        if (prow[c]) irow[c] = static_cast<std::uint32_t>((irow[c] + neg * prow[c]) % p);
    }
    pivots.push_back(col);
    ++pivot_row;
  }
  return {std::move(r), std::move(pivots)};
}

std::size_t rank(const Matrix& m) {
  if (m.empty()) return 0;
  return rref(m).pivots.size();
}

Matrix kernel_basis(const Matrix& m) {
  const PrimeField& f = m.field();
  RowEchelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free.push_back(c);
  Matrix k(f, m.cols(), free.size());
  for (std::size_t j = 0; j < free.size(); ++j) {
    k(free[j], j) = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) k(e.pivots[i], j) = f.neg(e.reduced(i, free[j]));
  }
  return k;
}

Matrix image_basis(const Matrix& m) {
  if (m.empty()) return Matrix(m.field(), m.rows(), 0);
  return m.select_columns(rref(m).pivots);
}

std::optional<Solution> solve(const Matrix& m, const Matrix& rhs) {
  if (m.rows() != rhs.rows())
    throw std::invalid_argument("solve: row count mismatch (" + std::to_string(m.rows()) + " vs " +
                                std::to_string(rhs.rows()) + ")");
  const std::size_t n = m.cols();
  RowEchelon e = rref(hstack(m, rhs));
  if (!e.pivots.empty() && e.pivots.back() >= n) return std::nullopt;
  Matrix x(m.field(), n, rhs.cols());
  for (std::size_t i = 0; i < e.pivots.size(); ++i)
    for (std::size_t c = 0; c < rhs.cols(); ++c) x(e.pivots[i], c) = e.reduced(i, n + c);
  // Kernel from the same elimination: the left block is rref(m).
  std::vector<bool> is_pivot(n, false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < n; ++c)
    if (!is_pivot[c]) free.push_back(c);
  Matrix k(m.field(), n, free.size());
  for (std::size_t j = 0; j < free.size(); ++j) {
    k(free[j], j) = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i)
      k(e.pivots[i], j) = m.field().neg(e.reduced(i, free[j]));
  }
  return Solution{std::move(x), std::move(k)};
}

Quotient quotient(PrimeField field, std::size_t ambient_dim, const Matrix& subspace_basis) {
  if (subspace_basis.rows() != ambient_dim) throw std::invalid_argument("quotient: subspace not in ambient space");
  const std::size_t k = subspace_basis.cols();
  if (rank(subspace_basis) != k) throw std::invalid_argument("quotient: subspace basis is dependent");
  RowEchelon e = rref(hstack(subspace_basis, Matrix::identity(field, ambient_dim)));
  std::vector<std::size_t> complement;
  for (auto c : e.pivots)
    if (c >= k) complement.push_back(c - k);
  Matrix section(field, ambient_dim, complement.size());
  for (std::size_t j = 0; j < complement.size(); ++j) section(complement[j], j) = 1;
  Matrix full = hstack(subspace_basis, section);
  auto inv = solve(full, Matrix::identity(field, ambient_dim));
  Matrix projection = inv->particular.block(k, 0, complement.size(), ambient_dim);
  return {std::move(projection), std::move(section)};
}

Matrix left_inverse(const Matrix& basis) {
  auto s = solve(basis.transpose(), Matrix::identity(basis.field(), basis.cols()));
  if (!s) throw std::invalid_argument("left_inverse: columns are dependent");
  return s->particular.transpose();
}

}  // namespace ntt
