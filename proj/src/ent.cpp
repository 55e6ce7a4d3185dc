#include "mubtomo/ent.hpp"

#include <algorithm>
#include <stdexcept>

namespace mubtomo::ent {

using cxla::Matrix;

std::string to_string(EntClass c) {
  switch (c) {
    case EntClass::fully_separable: return "separable";
    case EntClass::biseparable: return "biseparable";
    case EntClass::genuinely_entangled: return "genuinely-entangled";
  }
  return "";
}

int schmidt_rank(const CVec& v, int dim_a, int dim_b, double tolerance) {
  if (static_cast<int>(v.size()) != dim_a * dim_b)
    throw std::invalid_argument("ent: vector does not factor as dim_a * dim_b");
  Matrix m(dim_a, dim_b);
  for (int a = 0; a < dim_a; ++a)
    for (int b = 0; b < dim_b; ++b) m(a, b) = v[a * dim_b + b];
  int rank = 0;
  for (double s : cxla::singular_values(m))
    if (s > tolerance) ++rank;
  return rank;
}

namespace {

// Reshape with qutrit `wire` as the row index and the remaining qutrits, in
// order, as the column index. Qutrit 1 is the most significant base-3 digit.
int rank_across(const CVec& v, int wire, int n, double tolerance) {
  const int cols = static_cast<int>(v.size()) / 3;
  Matrix m(3, cols);
  std::vector<int> weights(n);
  int w = 1;
  for (int q = n; q >= 1; --q) {
    weights[q - 1] = w;
    w *= 3;
  }
  for (int idx = 0; idx < static_cast<int>(v.size()); ++idx) {
    const int a = (idx / weights[wire - 1]) % 3;
    int b = 0;
    for (int q = 1; q <= n; ++q) {
      if (q == wire) continue;
      b = b * 3 + (idx / weights[q - 1]) % 3;
    }
    m(a, b) = v[idx];
  }
  int rank = 0;
  for (double s : cxla::singular_values(m))
    if (s > tolerance) ++rank;
  return rank;
}

}  // namespace

VectorClass classify_vector(const CVec& v, int n_qutrits) {
  if (n_qutrits != 2 && n_qutrits != 3)
    throw std::invalid_argument("ent: classification needs 2 or 3 qutrits");
  const int dim = n_qutrits == 2 ? 9 : 27;
  if (static_cast<int>(v.size()) != dim)
    throw std::invalid_argument("ent: vector dimension does not match qutrit count");

  VectorClass out;
  if (n_qutrits == 2) {
    out.schmidt_ranks = {schmidt_rank(v, 3, 3)};
  } else {
    for (int wire = 1; wire <= 3; ++wire)
      out.schmidt_ranks.push_back(rank_across(v, wire, 3, tol::kRank));
  }

  const int separating =
      static_cast<int>(std::count(out.schmidt_ranks.begin(),
                                  out.schmidt_ranks.end(), 1));
  if (separating == static_cast<int>(out.schmidt_ranks.size())) {
    out.cls = EntClass::fully_separable;
  } else if (separating == 0) {
    out.cls = EntClass::genuinely_entangled;
  } else {
    out.cls = EntClass::biseparable;
    for (size_t i = 0; i < out.schmidt_ranks.size(); ++i)
      if (out.schmidt_ranks[i] == 1) {
        out.biseparable_partition = static_cast<int>(i) + 1;
        break;
      }
  }
  return out;
}

namespace {

std::string ranks_key(const std::vector<int>& ranks) {
  std::string key = "(";
  for (size_t i = 0; i < ranks.size(); ++i) {
    if (i) key += ",";
    key += std::to_string(ranks[i]);
  }
  return key + ")";
}

}  // namespace

StructureCensus census(const std::vector<mub::Basis>& bases, int n_qutrits,
                       Exec exec) {
  if (n_qutrits != 2 && n_qutrits != 3)
    throw std::invalid_argument("ent: census needs 2 or 3 qutrits (no bipartition otherwise)");
  const int dim = n_qutrits == 2 ? 9 : 27;
  for (const auto& basis : bases)
    if (basis.dim != dim)
      throw std::invalid_argument("ent: basis dimension does not match qutrit count");

  // classify every vector of every basis, then aggregate deterministically
  const int nb = static_cast<int>(bases.size());
  std::vector<std::vector<VectorClass>> classes(nb);
  for (auto& c : classes) c.resize(dim);

  const int total = nb * dim;
  auto classify_slot = [&](int slot) {
    const int b = slot / dim;
    const int k = slot % dim;
    classes[b][k] = classify_vector(bases[b].vectors.col(k), n_qutrits);
  };
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (int slot = 0; slot < total; ++slot) classify_slot(slot);
  } else {
    for (int slot = 0; slot < total; ++slot) classify_slot(slot);
  }

  StructureCensus out;
  out.n_qutrits = n_qutrits;
  for (int b = 0; b < nb; ++b) {
    BasisCensus bc;
    bc.label = bases[b].label;
    bc.cls = EntClass::fully_separable;
    for (const auto& vc : classes[b]) {
      bc.cls = std::max(bc.cls, vc.cls);
      bc.uniform = bc.uniform && classes[b][0].cls == vc.cls;
      ++bc.ranks_summary[ranks_key(vc.schmidt_ranks)];
    }
    switch (bc.cls) {
      case EntClass::fully_separable: ++out.separable; break;
      case EntClass::biseparable: ++out.biseparable; break;
      case EntClass::genuinely_entangled: ++out.genuinely_entangled; break;
    }
    out.per_basis.push_back(std::move(bc));
  }
  return out;
}

StructureCensus census(const mub::MubSet& set, Exec exec) {
  const int n = set.dim == 9 ? 2 : set.dim == 27 ? 3 : 0;
  if (n == 0)
    throw std::invalid_argument("ent: census needs 2 or 3 qutrits (no bipartition otherwise)");
  return census(set.bases, n, exec);
}

}  // namespace mubtomo::ent
