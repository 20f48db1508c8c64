#pragma once

#include <initializer_list>
#include <vector>

#include "grassfrieze/numbers.hpp"

namespace grassfrieze {

/// Dense integer matrix with immutable shape. Row/column accessors are
/// 0-based; column *labels* in subset arguments are 1-based, matching the
/// index conventions used everywhere else in the library.
class Matrix {
 public:
  Matrix(int rows, int cols);
  Matrix(std::initializer_list<std::initializer_list<long>> rows);

  static Matrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Int& at(int i, int j);
  const Int& at(int i, int j) const;

  /// Columns selected by 1-based labels, in the order given.
  Matrix columns(const std::vector<int>& labels) const;

  std::vector<Int> column(int j) const;  // 0-based
  void set_column(int j, const std::vector<Int>& values);

  Matrix transposed() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

  /// Plain matrix product; shapes must be compatible.
  friend Matrix operator*(const Matrix& a, const Matrix& b);

 private:
  int rows_;
  int cols_;
  std::vector<Int> entries_;  // row-major
};

}  // namespace grassfrieze
