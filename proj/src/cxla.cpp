#include "mubtomo/cxla.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace mubtomo::cxla {

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

CVec Matrix::col(int j) const {
  CVec v(rows_);
  for (int r = 0; r < rows_; ++r) v[r] = (*this)(r, j);
  return v;
}

void Matrix::set_col(int j, const CVec& v) {
  for (int r = 0; r < rows_; ++r) (*this)(r, j) = v[r];
}

Matrix matmul(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows())
    throw std::invalid_argument("cxla: matmul dimension mismatch");
  Matrix out(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const Cx aik = a(i, k);
      if (aik == Cx{}) continue;
      for (int j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const Cx aik = a(i, k);
      for (int j = 0; j < b.rows(); ++j)
        for (int l = 0; l < b.cols(); ++l)
          out(i * b.rows() + j, k * b.cols() + l) = aik * b(j, l);
    }
  return out;
}

Matrix dagger(const Matrix& m) {
  Matrix out(m.cols(), m.rows());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out(j, i) = std::conj(m(i, j));
  return out;
}

static void require_same_shape(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("cxla: shape mismatch");
}

Matrix add(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b);
  Matrix out = a;
  for (size_t i = 0; i < out.data().size(); ++i) out.data()[i] += b.data()[i];
  return out;
}

Matrix sub(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b);
  Matrix out = a;
  for (size_t i = 0; i < out.data().size(); ++i) out.data()[i] -= b.data()[i];
  return out;
}

Matrix scale(Cx s, const Matrix& m) {
  Matrix out = m;
  for (auto& e : out.data()) e *= s;
  return out;
}

Cx trace(const Matrix& m) {
  Cx t{};
  for (int i = 0; i < std::min(m.rows(), m.cols()); ++i) t += m(i, i);
  return t;
}

double frobenius_norm(const Matrix& m) {
  double s = 0.0;
  for (const auto& e : m.data()) s += std::norm(e);
  return std::sqrt(s);
}

double frobenius_distance(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b);
  double s = 0.0;
  for (size_t i = 0; i < a.data().size(); ++i)
    s += std::norm(a.data()[i] - b.data()[i]);
  return std::sqrt(s);
}

double max_abs(const Matrix& m) {
  double mx = 0.0;
  for (const auto& e : m.data()) mx = std::max(mx, std::abs(e));
  return mx;
}

bool is_hermitian(const Matrix& m, double tolerance) {
  if (m.rows() != m.cols()) return false;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = i; j < m.cols(); ++j)
      if (std::abs(m(i, j) - std::conj(m(j, i))) > tolerance) return false;
  return true;
}

Cx inner(const CVec& u, const CVec& v) {
  if (u.size() != v.size())
    throw std::invalid_argument("cxla: inner dimension mismatch");
  Cx s{};
  for (size_t i = 0; i < u.size(); ++i) s += std::conj(u[i]) * v[i];
  return s;
}

double norm2(const CVec& v) {
  double s = 0.0;
  for (const auto& e : v) s += std::norm(e);
  return std::sqrt(s);
}

CVec apply(const Matrix& m, const CVec& v) {
  if (m.cols() != static_cast<int>(v.size()))
    throw std::invalid_argument("cxla: apply dimension mismatch");
  CVec out(m.rows());
  for (int i = 0; i < m.rows(); ++i) {
    Cx s{};
    for (int j = 0; j < m.cols(); ++j) s += m(i, j) * v[j];
    out[i] = s;
  }
  return out;
}

Matrix outer(const CVec& u, const CVec& v) {
  Matrix out(static_cast<int>(u.size()), static_cast<int>(v.size()));
  for (size_t i = 0; i < u.size(); ++i)
    for (size_t j = 0; j < v.size(); ++j) out(int(i), int(j)) = u[i] * std::conj(v[j]);
  return out;
}

// One complex Jacobi rotation. With s carrying the phase of the pivot, the
// 2x2 subproblem reduces to the real symmetric case on (app, |apq|, aqq).
namespace {

struct Rotation {
  double c = 1.0;
  Cx s{0.0, 0.0};
  double t = 0.0;  // tan of the rotation angle
};

Rotation make_rotation(double app, double aqq, Cx apq) {
  Rotation rot;
  const double absg = std::abs(apq);
  const double theta = (aqq - app) / (2.0 * absg);
  const double t = (theta >= 0 ? 1.0 : -1.0) /
                   (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  rot.c = 1.0 / std::sqrt(t * t + 1.0);
  rot.t = t;
  rot.s = (t * rot.c) * (apq / absg);
  return rot;
}

}  // namespace

Eig hermitian_eig(const Matrix& m, double hermiticity_tolerance) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("cxla: hermitian_eig requires a square matrix");
  if (!is_hermitian(m, hermiticity_tolerance))
    throw std::invalid_argument("cxla: hermitian_eig input is not Hermitian");

  const int n = m.rows();
  // symmetrize so the iteration sees an exactly Hermitian matrix
  Matrix a(n, n);
  for (int i = 0; i < n; ++i) {
    a(i, i) = Cx{m(i, i).real(), 0.0};
    for (int j = i + 1; j < n; ++j) {
      const Cx v = 0.5 * (m(i, j) + std::conj(m(j, i)));
      a(i, j) = v;
      a(j, i) = std::conj(v);
    }
  }
  Matrix v = Matrix::identity(n);

  const double scale = std::max(1.0, frobenius_norm(a));
  for (int sweep = 0; sweep < 60; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off += std::norm(a(p, q));
    if (std::sqrt(off) < 1e-14 * scale) break;

    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const Cx apq = a(p, q);
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        if (std::abs(apq) <= 1e-18 * (std::abs(app) + std::abs(aqq) + 1.0))
          continue;
        const Rotation rot = make_rotation(app, aqq, apq);
        const double c = rot.c;
        const Cx s = rot.s;

        a(p, p) = Cx{app - rot.t * std::abs(apq), 0.0};
        a(q, q) = Cx{aqq + rot.t * std::abs(apq), 0.0};
        a(p, q) = Cx{};
        a(q, p) = Cx{};
        for (int r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          const Cx arp = a(r, p);
          const Cx arq = a(r, q);
          a(r, p) = c * arp - std::conj(s) * arq;
          a(r, q) = s * arp + c * arq;
          a(p, r) = std::conj(a(r, p));
          a(q, r) = std::conj(a(r, q));
        }
        for (int r = 0; r < n; ++r) {
          const Cx vrp = v(r, p);
          const Cx vrq = v(r, q);
          v(r, p) = c * vrp - std::conj(s) * vrq;
          v(r, q) = s * vrp + c * vrq;
        }
      }
    }
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int i, int j) { return a(i, i).real() > a(j, j).real(); });

  Eig out;
  out.values.resize(n);
  out.vectors = Matrix(n, n);
  for (int k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]).real();
    for (int r = 0; r < n; ++r) out.vectors(r, k) = v(r, order[k]);
  }
  return out;
}

std::vector<double> singular_values(const Matrix& m) {
  // orthogonalize the columns of the tall side
  Matrix a = m.rows() >= m.cols() ? m : dagger(m);
  const int n = a.cols();
  const int rows = a.rows();

  for (int sweep = 0; sweep < 60; ++sweep) {
    bool changed = false;
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        double hpp = 0.0, hqq = 0.0;
        Cx hpq{};
        for (int r = 0; r < rows; ++r) {
          hpp += std::norm(a(r, p));
          hqq += std::norm(a(r, q));
          hpq += std::conj(a(r, p)) * a(r, q);
        }
        if (hpp == 0.0 || hqq == 0.0) continue;
        if (std::abs(hpq) <= 1e-15 * std::sqrt(hpp * hqq)) continue;
        changed = true;
        const Rotation rot = make_rotation(hpp, hqq, hpq);
        const double c = rot.c;
        const Cx s = rot.s;
        for (int r = 0; r < rows; ++r) {
          const Cx arp = a(r, p);
          const Cx arq = a(r, q);
          a(r, p) = c * arp - std::conj(s) * arq;
          a(r, q) = s * arp + c * arq;
        }
      }
    }
    if (!changed) break;
  }

  std::vector<double> sv(n);
  for (int j = 0; j < n; ++j) {
    double s = 0.0;
    for (int r = 0; r < rows; ++r) s += std::norm(a(r, j));
    sv[j] = std::sqrt(s);
  }
  std::sort(sv.begin(), sv.end(), std::greater<>());
  return sv;
}

}  // namespace mubtomo::cxla
