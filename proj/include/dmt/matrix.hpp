#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "dmt/rational.hpp"

namespace dmt {

// Dense matrix over exact rationals. Rank is computed by fraction-free
// (Bareiss) elimination on a denominator-cleared integer copy; kernels come
// from a rational reduced row echelon form. No floating point anywhere.
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols);  // zero-filled
  static Mat identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Mat operator*(const Mat& o) const;
  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  friend bool operator==(const Mat& a, const Mat& b) = default;

  bool is_zero() const;
  bool is_identity() const;
  bool is_integral() const;

  std::size_t rank() const;
  // Columns form a basis of the null space; (cols x nullity)-shaped.
  Mat kernel_basis() const;

  // Dense rows, entries space-separated, one row per line.
  std::string dump_rows() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

Mat hstack(const Mat& a, const Mat& b);

}  // namespace dmt
