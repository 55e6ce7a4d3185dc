#include "mubtomo/tomo.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "mubtomo/rng.hpp"

namespace mubtomo::tomo {

using cxla::CVec;
using cxla::Cx;

DensityMatrix make_density(Matrix m) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("tomo: density matrix must be square");
  if (!cxla::is_hermitian(m, 1e-9))
    throw std::invalid_argument("tomo: density matrix is not Hermitian");
  const double tr = cxla::trace(m).real();
  if (std::abs(tr - 1.0) > 1e-9)
    throw std::invalid_argument("tomo: density matrix trace is not 1");
  const auto eig = cxla::hermitian_eig(m);
  if (eig.values.back() < -1e-8)
    throw std::invalid_argument("tomo: density matrix has a negative eigenvalue");
  return DensityMatrix{m.rows(), std::move(m)};
}

DensityMatrix make_density_unchecked(Matrix m) {
  return DensityMatrix{m.rows(), std::move(m)};
}

DensityMatrix maximally_mixed(int dim) {
  Matrix m = Matrix::identity(dim);
  for (auto& e : m.data()) e /= static_cast<double>(dim);
  return DensityMatrix{dim, std::move(m)};
}

DensityMatrix pure_state(const CVec& psi) {
  CVec v = psi;
  const double n = cxla::norm2(v);
  for (auto& e : v) e /= n;
  return DensityMatrix{static_cast<int>(v.size()), cxla::outer(v, v)};
}

ProbabilityTable probabilities(const DensityMatrix& rho, const mub::MubSet& set) {
  if (rho.dim != set.dim)
    throw std::invalid_argument("tomo: state and basis-set dimensions differ");
  ProbabilityTable table;
  table.dim = set.dim;
  for (const auto& basis : set.bases) {
    std::vector<double> row(set.dim);
    for (int k = 0; k < set.dim; ++k) {
      const auto v = basis.vectors.col(k);
      row[k] = cxla::inner(v, cxla::apply(rho.m, v)).real();
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

ProbabilityTable sample(const ProbabilityTable& table, long long shots_per_basis,
                        uint64_t seed) {
  if (shots_per_basis < 1)
    throw std::invalid_argument("tomo: shots must be at least 1");
  ProbabilityTable out;
  out.dim = table.dim;
  out.shots = shots_per_basis;
  rng::Rng rng(seed);
  for (const auto& row : table.rows) {
    // inverse-CDF multinomial on the normalized row
    std::vector<double> cdf(row.size());
    double total = std::accumulate(row.begin(), row.end(), 0.0);
    double acc = 0.0;
    for (size_t k = 0; k < row.size(); ++k) {
      acc += row[k] / total;
      cdf[k] = acc;
    }
    cdf.back() = 1.0;
    std::vector<long long> counts(row.size(), 0);
    for (long long s = 0; s < shots_per_basis; ++s) {
      const double u = rng.uniform();
      const size_t idx =
          std::upper_bound(cdf.begin(), cdf.end(), u) - cdf.begin();
      ++counts[std::min(idx, row.size() - 1)];
    }
    std::vector<double> freq(row.size());
    for (size_t k = 0; k < row.size(); ++k)
      freq[k] = static_cast<double>(counts[k]) / shots_per_basis;
    out.rows.push_back(std::move(freq));
  }
  return out;
}

Matrix reconstruct_mub(const ProbabilityTable& table, const mub::MubSet& set) {
  if (table.dim != set.dim || table.rows.size() != set.bases.size())
    throw std::invalid_argument("tomo: probability table does not match basis set");
  const int d = set.dim;
  Matrix acc = cxla::scale(-1.0, Matrix::identity(d));
  for (size_t r = 0; r < set.bases.size(); ++r) {
    const auto& basis = set.bases[r];
    for (int k = 0; k < d; ++k) {
      const double p = table.rows[r][k];
      const auto v = basis.vectors.col(k);
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) acc(i, j) += p * v[i] * std::conj(v[j]);
    }
  }
  return acc;
}

Matrix project_physical(const Matrix& hermitian_unit_trace) {
  auto eig = cxla::hermitian_eig(hermitian_unit_trace);
  auto& lam = eig.values;
  const int n = static_cast<int>(lam.size());

  const double sum0 = std::accumulate(lam.begin(), lam.end(), 0.0);
  if (lam.back() >= -1e-15 && std::abs(sum0 - 1.0) <= 1e-12)
    return hermitian_unit_trace;  // already physical

  for (int round = 0; round <= n; ++round) {
    for (auto& l : lam) l = std::max(l, 0.0);
    const double surplus = std::accumulate(lam.begin(), lam.end(), 0.0) - 1.0;
    const int positives =
        static_cast<int>(std::count_if(lam.begin(), lam.end(),
                                       [](double l) { return l > 0.0; }));
    if (positives == 0) break;
    const double delta = surplus / positives;
    bool clipped = false;
    for (auto& l : lam) {
      if (l <= 0.0) continue;
      l -= delta;
      clipped = clipped || l < 0.0;
    }
    if (!clipped) break;
  }

  Matrix out(n, n);
  for (int k = 0; k < n; ++k) {
    if (lam[k] == 0.0) continue;
    const auto v = eig.vectors.col(k);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) out(i, j) += lam[k] * v[i] * std::conj(v[j]);
  }
  return out;
}

const std::array<Matrix, 9>& gellmann_ops() {
  static const std::array<Matrix, 9> ops = [] {
    std::array<Matrix, 9> l;
    for (auto& m : l) m = Matrix(3, 3);
    l[0] = Matrix::identity(3);
    l[1](0, 1) = 1; l[1](1, 0) = 1;
    l[2](0, 1) = Cx{0, -1}; l[2](1, 0) = Cx{0, 1};
    l[3](0, 0) = 1; l[3](1, 1) = -1;
    l[4](0, 2) = 1; l[4](2, 0) = 1;
    l[5](0, 2) = Cx{0, -1}; l[5](2, 0) = Cx{0, 1};
    l[6](1, 2) = 1; l[6](2, 1) = 1;
    l[7](1, 2) = Cx{0, -1}; l[7](2, 1) = Cx{0, 1};
    const double inv_sqrt3 = 1.0 / std::sqrt(3.0);
    l[8](0, 0) = inv_sqrt3; l[8](1, 1) = inv_sqrt3; l[8](2, 2) = -2.0 * inv_sqrt3;
    return l;
  }();
  return ops;
}

TomographyResult reconstruct_gellmann(const DensityMatrix& rho, int n_qutrits) {
  if (n_qutrits != 1 && n_qutrits != 2)
    throw std::invalid_argument("tomo: gellmann reconstruction supports 1 or 2 qutrits");
  const int dim = n_qutrits == 1 ? 3 : 9;
  if (rho.dim != dim)
    throw std::invalid_argument("tomo: state dimension does not match qutrit count");

  const auto& lam = gellmann_ops();
  const int terms = n_qutrits == 1 ? 9 : 81;

  TomographyResult result;
  result.method = Method::gellmann;
  result.measurement_count = terms - 1;  // identity term costs nothing
  result.raw_estimate = Matrix(dim, dim);
  result.probabilities.dim = dim;
  result.expectation_values.reserve(terms);

  for (int t = 0; t < terms; ++t) {
    const int j = n_qutrits == 1 ? t : t / 9;
    const int k = t % 9;
    const Matrix op = n_qutrits == 1 ? lam[j] : cxla::kron(lam[j], lam[k]);
    // expansion coefficient over the orthogonal operator basis
    double norm2 = (j == 0 ? 3.0 : 2.0);
    if (n_qutrits == 2) norm2 *= (k == 0 ? 3.0 : 2.0);
    const double expect = cxla::trace(cxla::matmul(rho.m, op)).real();
    result.expectation_values.push_back(expect);
    result.raw_estimate =
        cxla::add(result.raw_estimate, cxla::scale(expect / norm2, op));
  }

  result.metrics.frobenius_error =
      cxla::frobenius_distance(result.raw_estimate, rho.m);
  return result;
}

namespace {

std::optional<CVec> pure_component(const DensityMatrix& rho) {
  const double purity =
      cxla::trace(cxla::matmul(rho.m, rho.m)).real();
  if (std::abs(purity - 1.0) > 1e-10) return std::nullopt;
  const auto eig = cxla::hermitian_eig(rho.m);
  return eig.vectors.col(0);
}

}  // namespace

TomographyResult run_experiment(const DensityMatrix& rho, const mub::MubSet& set,
                                std::optional<long long> shots, uint64_t seed,
                                bool project) {
  TomographyResult result;
  result.method = Method::mub;
  result.measurement_count = static_cast<int>(set.bases.size());
  result.shots = shots;
  if (shots) result.seed = seed;

  const ProbabilityTable exact = probabilities(rho, set);
  result.probabilities = shots ? sample(exact, *shots, seed) : exact;
  result.raw_estimate = reconstruct_mub(result.probabilities, set);
  if (project) result.projected_estimate = project_physical(result.raw_estimate);

  const Matrix& primary =
      result.projected_estimate ? *result.projected_estimate : result.raw_estimate;
  result.metrics.frobenius_error = cxla::frobenius_distance(primary, rho.m);
  if (const auto psi = pure_component(rho))
    result.metrics.pure_state_fidelity =
        cxla::inner(*psi, cxla::apply(primary, *psi)).real();
  return result;
}

namespace {

double trial_error(const mub::MubSet& set, long long shots, uint64_t seed) {
  rng::Rng rng(seed);
  const auto rho = make_density_unchecked(rng::ginibre_density(set.dim, rng));
  const auto exact = probabilities(rho, set);
  const auto sampled = sample(exact, shots, rng::derive_seed(seed, 1));
  return cxla::frobenius_distance(reconstruct_mub(sampled, set), rho.m);
}

double trial_ratio(const mub::MubSet& set, long long shots_lo, long long shots_hi,
                   uint64_t seed) {
  rng::Rng rng(seed);
  const auto rho = make_density_unchecked(rng::ginibre_density(set.dim, rng));
  const auto exact = probabilities(rho, set);
  const auto lo = sample(exact, shots_lo, rng::derive_seed(seed, 1));
  const auto hi = sample(exact, shots_hi, rng::derive_seed(seed, 2));
  const double err_lo = cxla::frobenius_distance(reconstruct_mub(lo, set), rho.m);
  const double err_hi = cxla::frobenius_distance(reconstruct_mub(hi, set), rho.m);
  return err_lo / err_hi;
}

}  // namespace

std::vector<double> batch_errors(const mub::MubSet& set, long long shots,
                                 int trials, uint64_t master_seed, Exec exec) {
  std::vector<double> errors(trials);
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (int t = 0; t < trials; ++t)
      errors[t] = trial_error(set, shots, rng::derive_seed(master_seed, t));
  } else {
    for (int t = 0; t < trials; ++t)
      errors[t] = trial_error(set, shots, rng::derive_seed(master_seed, t));
  }
  return errors;
}

std::vector<double> batch_error_ratios(const mub::MubSet& set, long long shots_lo,
                                       long long shots_hi, int trials,
                                       uint64_t master_seed, Exec exec) {
  std::vector<double> ratios(trials);
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (int t = 0; t < trials; ++t)
      ratios[t] =
          trial_ratio(set, shots_lo, shots_hi, rng::derive_seed(master_seed, t));
  } else {
    for (int t = 0; t < trials; ++t)
      ratios[t] =
          trial_ratio(set, shots_lo, shots_hi, rng::derive_seed(master_seed, t));
  }
  return ratios;
}

double median(std::vector<double> xs) {
  if (xs.empty()) throw std::invalid_argument("tomo: median of empty sample");
  std::sort(xs.begin(), xs.end());
  const size_t n = xs.size();
  return n % 2 == 1 ? xs[n / 2] : 0.5 * (xs[n / 2 - 1] + xs[n / 2]);
}

}  // namespace mubtomo::tomo
