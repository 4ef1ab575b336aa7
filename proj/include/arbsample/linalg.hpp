#pragma once

#include <span>
#include <vector>

namespace arbsample {

/// Relative tolerance below which a pivot or determinant counts as zero.
inline constexpr double kSingularTol = 1e-12;
/// Tolerance on the rank-one update denominator 1 + u^T B[:,j].
inline constexpr double kDenomTol = 1e-12;
/// Denominator magnitude below which samplers refresh B and Z from scratch
/// instead of trusting the incremental update.
inline constexpr double kRefreshDenom = 1e-6;

/// Dense row-major square-friendly matrix of doubles.
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(int rows, int cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, fill) {}

  static Matrix identity(int n);

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }

  double& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  double operator()(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

  std::span<double> row(int r) { return {data_.data() + static_cast<std::size_t>(r) * cols_, static_cast<std::size_t>(cols_)}; }
  std::span<const double> row(int r) const { return {data_.data() + static_cast<std::size_t>(r) * cols_, static_cast<std::size_t>(cols_)}; }

  const std::vector<double>& data() const noexcept { return data_; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  int rows_, cols_;
  std::vector<double> data_;
};

/// Largest absolute row sum; the scale against which tolerances are applied.
double matrix_scale(const Matrix& m);

/// det(m) by LU decomposition with partial pivoting. Throws NonSquare.
double determinant(const Matrix& m);

/// B = m^{-T}, i.e. the transpose of the inverse of m. Throws Singular when
/// a pivot falls below kSingularTol relative to the matrix scale.
Matrix inverse_transpose(const Matrix& m);

/// Multiplicative determinant change under the column update
/// L <- L + u e_j^T, evaluated from b = L^{-T} alone:
///   det(L + u e_j^T) = det(L) * (1 + sum_k u[k] * b(k, j)).
/// O(N) arithmetic.
double det_lemma_factor(const Matrix& b, std::span<const double> u, int j);

/// In-place rank-one inverse maintenance: given b = L^{-T}, after the call
/// b = (L + u e_j^T)^{-T}. O(N^2) arithmetic. Throws SingularUpdate when
/// the denominator 1 + u^T b[:,j] is within kDenomTol of zero (the updated
/// matrix is singular).
void sherman_morrison_update(Matrix& b, std::span<const double> u, int j);

}  // namespace arbsample
