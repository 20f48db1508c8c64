#include "grassfrieze/matrix.hpp"

namespace grassfrieze {

Matrix::Matrix(int rows, int cols) : rows_(rows), cols_(cols) {
  require(rows >= 1 && cols >= 1, Errc::kBadShape,
          "matrix dimensions must be positive");
  entries_.assign(static_cast<std::size_t>(rows) * cols, Int(0));
}

Matrix::Matrix(std::initializer_list<std::initializer_list<long>> rows)
    : Matrix(static_cast<int>(rows.size()),
             rows.size() ? static_cast<int>(rows.begin()->size()) : 0) {
  int i = 0;
  for (const auto& row : rows) {
    require(static_cast<int>(row.size()) == cols_, Errc::kBadShape,
            "ragged initializer");
    int j = 0;
    for (long v : row) at(i, j++) = v;
    ++i;
  }
}

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Int& Matrix::at(int i, int j) {
  require(i >= 0 && i < rows_ && j >= 0 && j < cols_, Errc::kBadShape,
          "matrix index out of range");
  return entries_[static_cast<std::size_t>(i) * cols_ + j];
}

const Int& Matrix::at(int i, int j) const {
  require(i >= 0 && i < rows_ && j >= 0 && j < cols_, Errc::kBadShape,
          "matrix index out of range");
  return entries_[static_cast<std::size_t>(i) * cols_ + j];
}

Matrix Matrix::columns(const std::vector<int>& labels) const {
  require(!labels.empty(), Errc::kBadShape, "empty column selection");
  Matrix out(rows_, static_cast<int>(labels.size()));
  for (std::size_t t = 0; t < labels.size(); ++t) {
    int label = labels[t];
    require(label >= 1 && label <= cols_, Errc::kBadShape,
            "column label out of range");
    for (int i = 0; i < rows_; ++i)
      out.at(i, static_cast<int>(t)) = at(i, label - 1);
  }
  return out;
}

std::vector<Int> Matrix::column(int j) const {
  std::vector<Int> out(static_cast<std::size_t>(rows_));
  for (int i = 0; i < rows_; ++i) out[static_cast<std::size_t>(i)] = at(i, j);
  return out;
}

void Matrix::set_column(int j, const std::vector<Int>& values) {
  require(static_cast<int>(values.size()) == rows_, Errc::kBadShape,
          "column length mismatch");
  for (int i = 0; i < rows_; ++i) at(i, j) = values[static_cast<std::size_t>(i)];
}

Matrix Matrix::transposed() const {
  Matrix out(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  require(a.cols() == b.rows(), Errc::kBadShape,
          "incompatible shapes in matrix product");
  Matrix out(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int t = 0; t < a.cols(); ++t) {
      const Int& x = a.at(i, t);
      if (x == 0) continue;
      for (int j = 0; j < b.cols(); ++j) out.at(i, j) += x * b.at(t, j);
    }
  return out;
}

}  // namespace grassfrieze
