#include <doctest.h>

#include <cmath>

#include "mubtomo/cxla.hpp"
#include "mubtomo/rng.hpp"

using namespace mubtomo;
using cxla::Cx;
using cxla::CVec;
using cxla::Matrix;

namespace {

Matrix random_matrix(int rows, int cols, rng::Rng& rng) {
  Matrix m(rows, cols);
  for (auto& e : m.data()) e = rng.normal_complex();
  return m;
}

Matrix random_hermitian(int n, rng::Rng& rng) {
  const Matrix g = random_matrix(n, n, rng);
  return cxla::scale(0.5, cxla::add(g, cxla::dagger(g)));
}

Matrix random_unitary(int n, rng::Rng& rng) {
  // eigenvectors of a random Hermitian matrix
  return cxla::hermitian_eig(random_hermitian(n, rng)).vectors;
}

}  // namespace

TEST_SUITE_BEGIN("cxla");

TEST_CASE("matmul basics") {
  rng::Rng rng(7);
  const Matrix m = random_matrix(3, 3, rng);
  CHECK(cxla::frobenius_distance(cxla::matmul(Matrix::identity(3), m), m) == 0.0);

  // Fourier-type unitary times its adjoint
  Matrix f(3, 3);
  const double amp = 1.0 / std::sqrt(3.0);
  for (int l = 0; l < 3; ++l)
    for (int j = 0; j < 3; ++j) f(l, j) = amp * cxla::kOmega[(l * j) % 3];
  CHECK(cxla::frobenius_distance(cxla::matmul(f, cxla::dagger(f)),
                                 Matrix::identity(3)) < 1e-12);

  // permutation . permutation composes
  Matrix p(3, 3), q(3, 3);
  for (int i = 0; i < 3; ++i) {
    p((i + 1) % 3, i) = 1.0;
    q((i + 2) % 3, i) = 1.0;
  }
  CHECK(cxla::frobenius_distance(cxla::matmul(p, q), Matrix::identity(3)) == 0.0);

  CHECK_THROWS_AS(cxla::matmul(Matrix(3, 2), Matrix(3, 2)), std::invalid_argument);
}

TEST_CASE("kron basics and index formula") {
  const Matrix i9 = cxla::kron(Matrix::identity(3), Matrix::identity(3));
  CHECK(cxla::frobenius_distance(i9, Matrix::identity(9)) == 0.0);

  Matrix d(3, 3);
  d(0, 0) = 1.0;
  d(1, 1) = cxla::kOmega[1];
  d(2, 2) = cxla::kOmega[1];
  const Matrix k = cxla::kron(d, Matrix::identity(3));
  for (int i = 0; i < 9; ++i) {
    CHECK(std::abs(k(i, i) - (i < 3 ? Cx{1.0, 0.0} : cxla::kOmega[1])) == 0.0);
    for (int j = 0; j < 9; ++j)
      if (i != j) CHECK(k(i, j) == Cx{});
  }

  // oracle: (a kron b)[i*P + j, k*Q + l] = a[i,k] b[j,l]
  rng::Rng rng(11);
  for (int trial = 0; trial < 5; ++trial) {
    const Matrix a = random_matrix(3, 3, rng);
    const Matrix b = random_matrix(3, 3, rng);
    const Matrix c = random_matrix(3, 3, rng);
    const Matrix ab = cxla::kron(a, b);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k)
          for (int l = 0; l < 3; ++l)
            CHECK(std::abs(ab(i * 3 + j, k * 3 + l) - a(i, k) * b(j, l)) == 0.0);
    CHECK(cxla::frobenius_distance(cxla::kron(cxla::kron(a, b), c),
                                   cxla::kron(a, cxla::kron(b, c))) < 1e-12);
  }
}

TEST_CASE("hermitian_eig on fixed matrices") {
  Matrix d(3, 3);
  d(0, 0) = 3.0;
  d(1, 1) = 1.0;
  d(2, 2) = 2.0;
  const auto eig = cxla::hermitian_eig(d);
  CHECK(eig.values[0] == doctest::Approx(3.0));
  CHECK(eig.values[1] == doctest::Approx(2.0));
  CHECK(eig.values[2] == doctest::Approx(1.0));

  // uniform-superposition projector has eigenvalues (1, 0, 0)
  CVec plus(3, Cx{1.0 / std::sqrt(3.0), 0.0});
  const auto peig = cxla::hermitian_eig(cxla::outer(plus, plus));
  CHECK(peig.values[0] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(peig.values[1]) < 1e-12);
  CHECK(std::abs(peig.values[2]) < 1e-12);
}

TEST_CASE("hermitian_eig reconstructs random Hermitian matrices") {
  rng::Rng rng(23);
  for (int n : {3, 9, 27}) {
    const Matrix h = random_hermitian(n, rng);
    const auto eig = cxla::hermitian_eig(h);

    Matrix vd(n, n);
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i) vd(i, j) = eig.vectors(i, j) * eig.values[j];
    CHECK(cxla::frobenius_distance(cxla::matmul(vd, cxla::dagger(eig.vectors)), h) <
          1e-9);
    CHECK(cxla::frobenius_distance(
              cxla::matmul(cxla::dagger(eig.vectors), eig.vectors),
              Matrix::identity(n)) < 1e-9);

    double sum = 0.0;
    for (double v : eig.values) sum += v;
    CHECK(sum == doctest::Approx(cxla::trace(h).real()).epsilon(1e-9));
  }
  CHECK_THROWS_AS(cxla::hermitian_eig(random_matrix(3, 3, rng)),
                  std::invalid_argument);
}

TEST_CASE("singular values") {
  const auto sv_id = cxla::singular_values(Matrix::identity(3));
  for (double s : sv_id) CHECK(s == doctest::Approx(1.0).epsilon(1e-12));

  rng::Rng rng(5);
  CVec u(3), v(3);
  for (auto& e : u) e = rng.normal_complex();
  for (auto& e : v) e = rng.normal_complex();
  const double nu = cxla::norm2(u), nv = cxla::norm2(v);
  for (auto& e : u) e /= nu;
  for (auto& e : v) e /= nv;
  const auto sv = cxla::singular_values(cxla::outer(u, v));
  CHECK(sv[0] == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(sv[1] < 1e-12);
  CHECK(sv[2] < 1e-12);

  const auto svu = cxla::singular_values(random_unitary(3, rng));
  for (double s : svu) CHECK(s == doctest::Approx(1.0).epsilon(1e-10));

  // non-square input
  Matrix wide(2, 3);
  wide(0, 0) = 2.0;
  wide(1, 2) = 1.0;
  const auto svw = cxla::singular_values(wide);
  REQUIRE(svw.size() == 2);
  CHECK(svw[0] == doctest::Approx(2.0));
  CHECK(svw[1] == doctest::Approx(1.0));
}

TEST_CASE("frobenius norm is submultiplicative") {
  rng::Rng rng(17);
  for (int trial = 0; trial < 10; ++trial) {
    const Matrix a = random_matrix(9, 9, rng);
    const Matrix b = random_matrix(9, 9, rng);
    CHECK(cxla::frobenius_norm(cxla::matmul(a, b)) <=
          cxla::frobenius_norm(a) * cxla::frobenius_norm(b) + 1e-12);
  }
}

TEST_CASE("unitaries preserve vector norms") {
  rng::Rng rng(31);
  for (int trial = 0; trial < 10; ++trial) {
    const Matrix u = random_unitary(9, rng);
    CVec v(9);
    for (auto& e : v) e = rng.normal_complex();
    CHECK(cxla::norm2(cxla::apply(u, v)) ==
          doctest::Approx(cxla::norm2(v)).epsilon(1e-10));
  }
}

TEST_SUITE_END();
