#include "core/int_matrix.hpp"

#include <algorithm>
#include <bit>

#include "core/errors.hpp"

namespace gl2h {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::all_ones(std::size_t rows, std::size_t cols) {
  IntMatrix m(rows, cols);
  for (auto& x : m.data_) x = 1;
  return m;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const BigInt& x) { return sgn(x) == 0; });
}

BigInt IntMatrix::column_sum(std::size_t c) const {
  BigInt s = 0;
  for (std::size_t r = 0; r < rows_; ++r) s += at(r, c);
  return s;
}

BigInt IntMatrix::row_sum(std::size_t r) const {
  BigInt s = 0;
  for (std::size_t c = 0; c < cols_; ++c) s += at(r, c);
  return s;
}

BigInt IntMatrix::trace() const {
  BigInt s = 0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) s += at(i, i);
  return s;
}

IntMatrix IntMatrix::operator+(const IntMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(ErrorCode::InvalidArgument, "matrix sum: shape mismatch");
  IntMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] + o.data_[i];
  return out;
}

IntMatrix IntMatrix::operator-(const IntMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(ErrorCode::InvalidArgument, "matrix difference: shape mismatch");
  IntMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] - o.data_[i];
  return out;
}

IntMatrix IntMatrix::scaled(const BigInt& s) const {
  IntMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] * s;
  return out;
}

std::size_t IntMatrix::max_bits() const {
  std::size_t bits = 0;
  for (const auto& x : data_) bits = std::max(bits, mpz_sizeinbase(x.get_mpz_t(), 2));
  return bits;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (cols_ != o.rows_) throw Error(ErrorCode::InvalidArgument, "matrix product: inner dimension mismatch");
  IntMatrix out(rows_, o.cols_);
  const std::size_t inner_bits = std::bit_width(cols_ + 1);
  if (max_bits() + o.max_bits() + inner_bits < 62) {
    // Every partial sum fits in a signed 64-bit word.
    std::vector<std::int64_t> a(data_.size()), b(o.data_.size()), c(rows_ * o.cols_, 0);
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = data_[i].get_si();
    for (std::size_t i = 0; i < b.size(); ++i) b[i] = o.data_[i].get_si();
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t k = 0; k < cols_; ++k) {
        const std::int64_t x = a[r * cols_ + k];
        if (x == 0) continue;
        for (std::size_t cc = 0; cc < o.cols_; ++cc) c[r * o.cols_ + cc] += x * b[k * o.cols_ + cc];
      }
    for (std::size_t i = 0; i < c.size(); ++i) out.data_[i] = static_cast<long>(c[i]);
    return out;
  }
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      const BigInt& x = at(r, k);
      if (sgn(x) == 0) continue;
      for (std::size_t cc = 0; cc < o.cols_; ++cc) out.at(r, cc) += x * o.at(k, cc);
    }
  return out;
}

std::vector<BigInt> IntMatrix::apply(const std::vector<BigInt>& v) const {
  if (v.size() != cols_) throw Error(ErrorCode::InvalidArgument, "matrix-vector product: dimension mismatch");
  std::vector<BigInt> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out[r] += at(r, c) * v[c];
  return out;
}

namespace {

// Runs Bareiss elimination in place, pivoting over the remaining rows of each
// column. Returns the number of pivots; `sign` tracks row swaps and
// `last_pivot` ends as the determinant of the leading pivot block.
std::size_t bareiss_eliminate(IntMatrix& a, int& sign, BigInt& last_pivot) {
  const std::size_t rows = a.rows(), cols = a.cols();
  sign = 1;
  last_pivot = 1;
  std::size_t rank = 0;
  BigInt tmp;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rows;
    for (std::size_t r = rank; r < rows; ++r)
      if (sgn(a.at(r, col)) != 0) {
        pivot = r;
        break;
      }
    if (pivot == rows) continue;
    if (pivot != rank) {
      for (std::size_t c = 0; c < cols; ++c) swap(a.at(pivot, c), a.at(rank, c));
      sign = -sign;
    }
    const BigInt& pv = a.at(rank, col);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      const BigInt factor = a.at(r, col);
      for (std::size_t c = col + 1; c < cols; ++c) {
        // a[r][c] = (pv * a[r][c] - factor * a[rank][c]) / last_pivot
        tmp = pv * a.at(r, c);
        tmp -= factor * a.at(rank, c);
        mpz_divexact(a.at(r, c).get_mpz_t(), tmp.get_mpz_t(), last_pivot.get_mpz_t());
      }
      a.at(r, col) = 0;
    }
    last_pivot = pv;
    ++rank;
  }
  return rank;
}

}  // namespace

BigInt exact_determinant(const IntMatrix& m) {
  if (!m.square()) throw Error(ErrorCode::InvalidArgument, "determinant of a non-square matrix");
  if (m.rows() == 0) return 1;
  IntMatrix a = m;
  int sign = 1;
  BigInt last;
  if (bareiss_eliminate(a, sign, last) < m.rows()) return 0;
  return sign < 0 ? BigInt(-last) : last;
}

std::size_t exact_rank(const IntMatrix& m) {
  IntMatrix a = m;
  int sign = 1;
  BigInt last;
  return bareiss_eliminate(a, sign, last);
}

}  // namespace gl2h
