#pragma once

#include <cstddef>
#include <vector>

#include "hrds/galois_field.hpp"

namespace hrds {

class FieldSpec;

/// Dense row-major matrix of field elements. Carries no field pointer; every
/// operation that needs arithmetic takes the field explicitly.
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<Elem> data);

  static Matrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Elem operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * cols_ + j]; }
  Elem& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * cols_ + j]; }
  const std::vector<Elem>& data() const noexcept { return data_; }
  bool is_zero() const noexcept;

  friend bool operator==(const Matrix&, const Matrix&) = default;
  friend auto operator<=>(const Matrix& a, const Matrix& b) {
    if (auto c = a.rows_ <=> b.rows_; c != 0) return c;
    if (auto c = a.cols_ <=> b.cols_; c != 0) return c;
    return a.data_ <=> b.data_;
  }

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Elem> data_;
};

Matrix add(const GaloisField& f, const Matrix& a, const Matrix& b);
Matrix sub(const GaloisField& f, const Matrix& a, const Matrix& b);
Matrix mul(const GaloisField& f, const Matrix& a, const Matrix& b);
Matrix scale(const GaloisField& f, Elem s, const Matrix& a);
Matrix transpose(const Matrix& a);
/// conj(A)^T with conj(x) = x^q.
Matrix conj_transpose(const FieldSpec& f, const Matrix& a);
/// [A | B]
Matrix hconcat(const Matrix& a, const Matrix& b);
/// [A ; B]
Matrix vconcat(const Matrix& a, const Matrix& b);

/// Row rank by Gaussian elimination, pivoting on the first nonzero entry of each column.
std::size_t rank(const GaloisField& f, Matrix m);

}  // namespace hrds
