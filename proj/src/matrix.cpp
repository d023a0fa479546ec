#include "dmt/matrix.hpp"

#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace dmt {

namespace {

using Wide = __int128;

long long narrow(Wide v) {
  if (v > std::numeric_limits<long long>::max() ||
      v < std::numeric_limits<long long>::min()) {
    throw std::overflow_error("matrix elimination overflow");
  }
  return static_cast<long long>(v);
}

long long checked_lcm(long long a, long long b) {
  long long g = std::gcd(a, b);
  return narrow(static_cast<Wide>(a / g) * b);
}

}  // namespace

Mat::Mat(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

Mat Mat::identity(std::size_t n) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Mat Mat::operator*(const Mat& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch in product");
  Mat out(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const Rational& b = o(k, j);
        if (!b.is_zero()) out(i, j) += a * b;
      }
    }
  }
  return out;
}

Mat Mat::operator+(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) {
    throw std::invalid_argument("matrix shape mismatch in sum");
  }
  Mat out(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] + o.data_[i];
  return out;
}

Mat Mat::operator-(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) {
    throw std::invalid_argument("matrix shape mismatch in difference");
  }
  Mat out(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] - o.data_[i];
  return out;
}

bool Mat::is_zero() const {
  for (const auto& v : data_) {
    if (!v.is_zero()) return false;
  }
  return true;
}

bool Mat::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if ((*this)(i, j) != Rational(i == j ? 1 : 0)) return false;
    }
  }
  return true;
}

bool Mat::is_integral() const {
  for (const auto& v : data_) {
    if (!v.is_integer()) return false;
  }
  return true;
}

std::size_t Mat::rank() const {
  if (rows_ == 0 || cols_ == 0) return 0;
  // Clear denominators row by row; row scaling preserves rank.
  std::vector<std::vector<long long>> a(rows_, std::vector<long long>(cols_));
  for (std::size_t i = 0; i < rows_; ++i) {
    long long l = 1;
    for (std::size_t j = 0; j < cols_; ++j) l = checked_lcm(l, (*this)(i, j).den());
    for (std::size_t j = 0; j < cols_; ++j) {
      const Rational& v = (*this)(i, j);
      a[i][j] = narrow(static_cast<Wide>(v.num()) * (l / v.den()));
    }
  }
  long long prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
    std::size_t pivot = r;
    while (pivot < rows_ && a[pivot][c] == 0) ++pivot;
    if (pivot == rows_) continue;
    std::swap(a[pivot], a[r]);
    for (std::size_t i = r + 1; i < rows_; ++i) {
      for (std::size_t j = c + 1; j < cols_; ++j) {
        Wide t = static_cast<Wide>(a[i][j]) * a[r][c] - static_cast<Wide>(a[i][c]) * a[r][j];
        a[i][j] = narrow(t / prev);  // Bareiss: division is exact
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

Mat Mat::kernel_basis() const {
  // Rational RREF with pivot-column bookkeeping.
  Mat m = *this;
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
    std::size_t pivot = r;
    while (pivot < rows_ && m(pivot, c).is_zero()) ++pivot;
    if (pivot == rows_) continue;
    for (std::size_t j = 0; j < cols_; ++j) std::swap(m(pivot, j), m(r, j));
    Rational inv = Rational(1) / m(r, c);
    for (std::size_t j = c; j < cols_; ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      Rational f = m(i, c);
      for (std::size_t j = c; j < cols_; ++j) m(i, j) -= f * m(r, j);
    }
    pivot_col.push_back(c);
    ++r;
  }

  std::vector<std::size_t> free_cols;
  {
    std::size_t p = 0;
    for (std::size_t c = 0; c < cols_; ++c) {
      if (p < pivot_col.size() && pivot_col[p] == c) {
        ++p;
      } else {
        free_cols.push_back(c);
      }
    }
  }

  Mat basis(cols_, free_cols.size());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    std::size_t f = free_cols[k];
    basis(f, k) = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i) {
      basis(pivot_col[i], k) = -m(i, f);
    }
  }
  return basis;
}

std::string Mat::dump_rows() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) os << ' ';
      os << (*this)(i, j);
    }
    os << '\n';
  }
  return os.str();
}

Mat hstack(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("hstack row mismatch");
  Mat out(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) out(i, a.cols() + j) = b(i, j);
  }
  return out;
}

}  // namespace dmt
