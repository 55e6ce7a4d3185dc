#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mubtomo/cxla.hpp"
#include "mubtomo/exec.hpp"
#include "mubtomo/gf.hpp"
#include "mubtomo/tolerances.hpp"

// Construction and verification of complete sets of mutually unbiased bases
// for d = 3, 9, 27.
namespace mubtomo::mub {

using cxla::Matrix;

enum class Provenance { field_construction, gate_decomposition, explicit_fixture };

struct Basis {
  std::string label;
  int dim = 0;
  Matrix vectors;  // column k is the k-th basis vector
  Provenance provenance = Provenance::explicit_fixture;
};

struct MubSet {
  int dim = 0;
  std::vector<Basis> bases;
  std::optional<gf::FieldSpec> field;  // present for field-constructed sets
};

Basis standard_basis(int dim, std::string label = "0");

// The d+1 bases: basis "0" is the computational one; basis "i" (1 <= i <= d)
// has component (1/sqrt d) * omega^Tr(r*l^2 + k*l) at row l, column k, with
// r the (i-1)-th element of the field enumeration.
MubSet build_field_mubs(const gf::FieldSpec& spec);

struct PairCheck {
  int i = 0;
  int j = 0;  // indices into MubSet::bases; i == j means orthonormality check
  double deviation = 0.0;
  bool pass = false;
};

struct UnbiasednessReport {
  int dim = 0;
  int basis_count = 0;
  double tolerance = tol::kEq;
  std::vector<PairCheck> cross;  // one entry per unordered pair i < j
  std::vector<PairCheck> self;   // per-basis orthonormality
  double max_deviation = 0.0;
  int worst_i = 0;
  int worst_j = 0;
  bool all_pass = true;
};

// For every pair of bases and every vector pair, checks |<u|v>|^2 against
// 1/d (different bases) or delta_jk (same basis). Failures are report
// content, never exceptions. Serial and parallel policies give bit-identical
// reports.
UnbiasednessReport verify_unbiased(const MubSet& set, double tolerance = tol::kEq,
                                   Exec exec = Exec::parallel);

// max over vector pairs of the distance of |<u_j|v_k>|^2 from its target.
double pair_deviation(const Matrix& u, const Matrix& v, bool same_basis);

// d rank-1 projectors |a_k><a_k| summing to the identity. Throws when the
// basis is not orthonormal within tol::kEq.
std::vector<Matrix> projectors(const Basis& basis);

// Phase-and-permutation-insensitive basis identity: two bases are the same
// when the matrix of |<u_i|v_j>| is a permutation matrix within `tolerance`.
struct BasisMatch {
  bool matched = false;
  // permutation[i] = column of b matching column i of a (valid when matched)
  std::vector<int> permutation;
  double deviation = 0.0;
};

BasisMatch match_up_to_phase(const Basis& a, const Basis& b,
                             double tolerance = tol::kMatch);

}  // namespace mubtomo::mub
