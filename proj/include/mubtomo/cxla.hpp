#pragma once

#include <array>
#include <complex>
#include <vector>

#include "mubtomo/tolerances.hpp"

// Minimal dense complex linear algebra for dimensions up to 27.
namespace mubtomo::cxla {

using Cx = std::complex<double>;
using CVec = std::vector<Cx>;

// Cube roots of unity omega^0, omega^1, omega^2 with omega = exp(2*pi*i/3).
// All phases in the library are produced from integer exponents mod 3, so no
// trigonometric error accumulates.
inline constexpr double kSqrt3Over2 = 0.86602540378443864676;
inline constexpr std::array<Cx, 3> kOmega{
    Cx{1.0, 0.0}, Cx{-0.5, kSqrt3Over2}, Cx{-0.5, -kSqrt3Over2}};

class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols)
      : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols) {}

  static Matrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Cx& operator()(int r, int c) { return e_[static_cast<size_t>(r) * cols_ + c]; }
  const Cx& operator()(int r, int c) const {
    return e_[static_cast<size_t>(r) * cols_ + c];
  }

  CVec col(int j) const;
  void set_col(int j, const CVec& v);

  const std::vector<Cx>& data() const { return e_; }
  std::vector<Cx>& data() { return e_; }

  bool operator==(const Matrix& o) const = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Cx> e_;
};

Matrix matmul(const Matrix& a, const Matrix& b);
Matrix kron(const Matrix& a, const Matrix& b);
Matrix dagger(const Matrix& m);
Matrix add(const Matrix& a, const Matrix& b);
Matrix sub(const Matrix& a, const Matrix& b);
Matrix scale(Cx s, const Matrix& m);

inline Matrix operator*(const Matrix& a, const Matrix& b) { return matmul(a, b); }

Cx trace(const Matrix& m);
double frobenius_norm(const Matrix& m);
double frobenius_distance(const Matrix& a, const Matrix& b);
double max_abs(const Matrix& m);
bool is_hermitian(const Matrix& m, double tolerance = tol::kEig);

// <u|v> with the left argument conjugated.
Cx inner(const CVec& u, const CVec& v);
double norm2(const CVec& v);
CVec apply(const Matrix& m, const CVec& v);
Matrix outer(const CVec& u, const CVec& v);  // |u><v|

struct Eig {
  std::vector<double> values;  // descending
  Matrix vectors;              // columns, aligned with values
};

// Cyclic Jacobi for Hermitian matrices. Contract: m = V diag(e) V^dagger
// with residual below tol::kEig; throws std::invalid_argument when the
// input is not Hermitian within `hermiticity_tolerance`.
Eig hermitian_eig(const Matrix& m, double hermiticity_tolerance = tol::kEig);

// One-sided Jacobi; nonnegative, descending. Exact rank deficiencies come
// out at machine-epsilon level, far below tol::kRank.
std::vector<double> singular_values(const Matrix& m);

}  // namespace mubtomo::cxla
