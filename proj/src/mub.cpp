#include "mubtomo/mub.hpp"

#include <cmath>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mubtomo {

int hardware_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace mubtomo

namespace mubtomo::mub {

using cxla::Cx;
using cxla::kOmega;

Basis standard_basis(int dim, std::string label) {
  return Basis{std::move(label), dim, Matrix::identity(dim),
               Provenance::explicit_fixture};
}

MubSet build_field_mubs(const gf::FieldSpec& spec) {
  const int d = spec.order();
  MubSet set;
  set.dim = d;
  set.field = spec;

  Basis computational = standard_basis(d, "0");
  computational.provenance = Provenance::field_construction;
  set.bases.push_back(std::move(computational));

  const double amp = 1.0 / std::sqrt(static_cast<double>(d));
  for (int ri = 0; ri < d; ++ri) {
    const auto& r = spec.element(ri);
    Basis basis{std::to_string(ri + 1), d, Matrix(d, d),
                Provenance::field_construction};
    for (int ki = 0; ki < d; ++ki) {
      const auto& k = spec.element(ki);
      for (int li = 0; li < d; ++li) {
        const auto& l = spec.element(li);
        const int e =
            spec.trace(spec.add(spec.mul(r, spec.mul(l, l)), spec.mul(k, l)));
        basis.vectors(li, ki) = amp * kOmega[e];
      }
    }
    set.bases.push_back(std::move(basis));
  }
  return set;
}

double pair_deviation(const Matrix& u, const Matrix& v, bool same_basis) {
  const int d = u.rows();
  const double target_off = same_basis ? 0.0 : 1.0 / d;
  const double target_diag = same_basis ? 1.0 : 1.0 / d;
  double worst = 0.0;
  for (int j = 0; j < d; ++j) {
    for (int k = 0; k < d; ++k) {
      Cx ip{};
      for (int l = 0; l < d; ++l) ip += std::conj(u(l, j)) * v(l, k);
      const double overlap = std::norm(ip);
      const double target = (same_basis && j == k) ? target_diag : target_off;
      worst = std::max(worst, std::abs(overlap - target));
    }
  }
  return worst;
}

namespace {

// Per-pair deviations are written into preallocated slots and folded
// serially afterwards, so the parallel policy is bit-identical to the
// serial reference.
void scan_pairs(const MubSet& set, std::vector<PairCheck>& cross,
                std::vector<PairCheck>& self, Exec exec) {
  const int b = static_cast<int>(set.bases.size());
  cross.clear();
  self.clear();
  for (int i = 0; i < b; ++i) {
    self.push_back({i, i, 0.0, false});
    for (int j = i + 1; j < b; ++j) cross.push_back({i, j, 0.0, false});
  }

  auto run_cross = [&](int p) {
    auto& chk = cross[p];
    chk.deviation = pair_deviation(set.bases[chk.i].vectors,
                                   set.bases[chk.j].vectors, false);
  };
  auto run_self = [&](int p) {
    auto& chk = self[p];
    chk.deviation = pair_deviation(set.bases[chk.i].vectors,
                                   set.bases[chk.i].vectors, true);
  };

  const int nc = static_cast<int>(cross.size());
  const int ns = static_cast<int>(self.size());
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(static)
    for (int p = 0; p < nc; ++p) run_cross(p);
#pragma omp parallel for schedule(static)
    for (int p = 0; p < ns; ++p) run_self(p);
  } else {
    for (int p = 0; p < nc; ++p) run_cross(p);
    for (int p = 0; p < ns; ++p) run_self(p);
  }
}

}  // namespace

UnbiasednessReport verify_unbiased(const MubSet& set, double tolerance,
                                   Exec exec) {
  UnbiasednessReport report;
  report.dim = set.dim;
  report.basis_count = static_cast<int>(set.bases.size());
  report.tolerance = tolerance;

  scan_pairs(set, report.cross, report.self, exec);

  for (auto* group : {&report.self, &report.cross}) {
    for (auto& chk : *group) {
      chk.pass = chk.deviation <= tolerance;
      report.all_pass = report.all_pass && chk.pass;
      if (chk.deviation > report.max_deviation) {
        report.max_deviation = chk.deviation;
        report.worst_i = chk.i;
        report.worst_j = chk.j;
      }
    }
  }
  return report;
}

std::vector<Matrix> projectors(const Basis& basis) {
  if (pair_deviation(basis.vectors, basis.vectors, true) > tol::kEq)
    throw std::invalid_argument("mub: projectors of a non-orthonormal basis");
  std::vector<Matrix> out;
  out.reserve(basis.dim);
  for (int k = 0; k < basis.dim; ++k) {
    const auto v = basis.vectors.col(k);
    out.push_back(cxla::outer(v, v));
  }
  return out;
}

BasisMatch match_up_to_phase(const Basis& a, const Basis& b, double tolerance) {
  BasisMatch match;
  if (a.dim != b.dim) return match;
  const int d = a.dim;
  match.permutation.assign(d, -1);

  std::vector<bool> used(d, false);
  double worst = 0.0;
  for (int i = 0; i < d; ++i) {
    const auto u = a.vectors.col(i);
    int hit = -1;
    for (int j = 0; j < d; ++j) {
      const double overlap = std::abs(cxla::inner(u, b.vectors.col(j)));
      const double dev = std::abs(overlap - 1.0);
      if (dev <= tolerance) {
        if (hit >= 0 || used[j]) return match;  // not a permutation
        hit = j;
        worst = std::max(worst, dev);
      } else if (overlap > tolerance) {
        return match;  // neither 0 nor 1: columns genuinely differ
      } else {
        worst = std::max(worst, overlap);
      }
    }
    if (hit < 0) return match;
    used[hit] = true;
    match.permutation[i] = hit;
  }
  match.matched = true;
  match.deviation = worst;
  return match;
}

}  // namespace mubtomo::mub
