#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mubtomo/cxla.hpp"
#include "mubtomo/exec.hpp"
#include "mubtomo/mub.hpp"

// Measurement simulation and density-matrix reconstruction, with the
// Gell-Mann expectation-value method as the measurement-count baseline.
namespace mubtomo::tomo {

using cxla::Matrix;

struct DensityMatrix {
  int dim = 0;
  Matrix m;
};

// Validates Hermiticity (1e-9), unit trace (1e-9) and positivity
// (eigenvalues >= -1e-8); throws std::invalid_argument naming the violated
// invariant.
DensityMatrix make_density(Matrix m);
// Trusted constructor for matrices produced by the library itself.
DensityMatrix make_density_unchecked(Matrix m);

DensityMatrix maximally_mixed(int dim);
DensityMatrix pure_state(const cxla::CVec& psi);

struct ProbabilityTable {
  int dim = 0;
  std::vector<std::vector<double>> rows;  // one row of d entries per basis
  std::optional<long long> shots;         // absent = exact Born probabilities
};

// Exact Born probabilities p[r][k] = <a_k^(r)| rho |a_k^(r)>.
ProbabilityTable probabilities(const DensityMatrix& rho, const mub::MubSet& set);

// Per basis, a multinomial draw of `shots_per_basis` outcomes returned as
// empirical frequencies. Deterministic for a fixed seed.
ProbabilityTable sample(const ProbabilityTable& table, long long shots_per_basis,
                        uint64_t seed);

// Linear-inversion estimate sum_r sum_k p[r][k] P_k^(r) - I. Hermitian with
// unit trace by construction; not guaranteed positive for noisy input.
Matrix reconstruct_mub(const ProbabilityTable& table, const mub::MubSet& set);

// Nearest physical state under clip-and-redistribute: eigenvalues clipped at
// zero, then the trace surplus removed uniformly from the remaining positive
// eigenvalues (repeating if that clips more). Idempotent.
Matrix project_physical(const Matrix& hermitian_unit_trace);

// lambda_0 = I plus the eight standard traceless Hermitian generators,
// normalized so tr(lambda_j lambda_k) = 2 delta_jk for j, k >= 1.
const std::array<Matrix, 9>& gellmann_ops();

enum class Method { mub, gellmann };

struct Metrics {
  double frobenius_error = 0.0;
  std::optional<double> pure_state_fidelity;  // <psi|rho_hat|psi> when rho is pure
};

struct TomographyResult {
  Method method = Method::mub;
  int measurement_count = 0;
  std::optional<long long> shots;
  std::optional<uint64_t> seed;
  ProbabilityTable probabilities;            // empty for the gellmann method
  std::vector<double> expectation_values;    // gellmann only: tr(rho Lambda_J)
  Matrix raw_estimate;
  std::optional<Matrix> projected_estimate;
  Metrics metrics;
};

// Expansion over tensor products of Gell-Mann operators; every coefficient
// except the identity term counts as one measurement: 3^(2n) - 1 in total.
// Exact expectations reassemble rho to machine precision.
TomographyResult reconstruct_gellmann(const DensityMatrix& rho, int n_qutrits);

// probabilities -> (sample) -> reconstruct_mub -> (project_physical), with
// error metrics against the true state. measurement_count = d + 1.
TomographyResult run_experiment(const DensityMatrix& rho, const mub::MubSet& set,
                                std::optional<long long> shots, uint64_t seed,
                                bool project);

// Batched finite-shot trials on independent Ginibre states; trial t draws
// its own stream from (master_seed, t) so results are schedule-independent.
// Returns the Frobenius error of the raw linear estimate per trial.
std::vector<double> batch_errors(const mub::MubSet& set, long long shots,
                                 int trials, uint64_t master_seed,
                                 Exec exec = Exec::parallel);

// Paired ratio err(shots_lo)/err(shots_hi) per trial, same state both ways.
std::vector<double> batch_error_ratios(const mub::MubSet& set, long long shots_lo,
                                       long long shots_hi, int trials,
                                       uint64_t master_seed,
                                       Exec exec = Exec::parallel);

double median(std::vector<double> xs);

}  // namespace mubtomo::tomo
