#pragma once

#include <map>
#include <string>
#include <vector>

#include "mubtomo/cxla.hpp"
#include "mubtomo/exec.hpp"
#include "mubtomo/mub.hpp"

// Entanglement classification of basis vectors and whole bases.
namespace mubtomo::ent {

using cxla::CVec;

enum class EntClass { fully_separable, biseparable, genuinely_entangled };

std::string to_string(EntClass c);

struct VectorClass {
  EntClass cls = EntClass::fully_separable;
  // 1-based qutrit that splits off, when biseparable (n = 3 only)
  int biseparable_partition = 0;
  // one rank per bipartition: (1|2) for n = 2; (1|23, 2|13, 3|12) for n = 3
  std::vector<int> schmidt_ranks;
};

// Singular values of the dim_a x dim_b reshaping exceeding tol::kRank.
int schmidt_rank(const CVec& v, int dim_a, int dim_b,
                 double tolerance = tol::kRank);

VectorClass classify_vector(const CVec& v, int n_qutrits);

struct BasisCensus {
  std::string label;
  EntClass cls = EntClass::fully_separable;  // maximal vector class
  bool uniform = true;                       // all vectors share one class
  // rank tuple -> how many vectors, e.g. "(1,3,3)" -> 27
  std::map<std::string, int> ranks_summary;
};

struct StructureCensus {
  int n_qutrits = 0;
  int separable = 0;
  int biseparable = 0;
  int genuinely_entangled = 0;
  std::vector<BasisCensus> per_basis;
};

StructureCensus census(const std::vector<mub::Basis>& bases, int n_qutrits,
                       Exec exec = Exec::parallel);
StructureCensus census(const mub::MubSet& set, Exec exec = Exec::parallel);

}  // namespace mubtomo::ent
