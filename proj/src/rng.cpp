#include "mubtomo/rng.hpp"

#include <cmath>

namespace mubtomo::rng {

namespace {

uint64_t splitmix64(uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

}  // namespace

uint64_t derive_seed(uint64_t master, uint64_t index) {
  return splitmix64(splitmix64(master) + 0x9E3779B97F4A7C15ULL * (index + 1));
}

double Rng::normal() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  // u1 in (0, 1] so the log is finite
  const double u1 = (static_cast<double>(eng_() >> 11) + 1.0) * 0x1.0p-53;
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * 3.14159265358979323846 * u2;
  spare_ = r * std::sin(angle);
  have_spare_ = true;
  return r * std::cos(angle);
}

cxla::Matrix ginibre_density(int dim, Rng& rng) {
  cxla::Matrix g(dim, dim);
  for (auto& e : g.data()) e = rng.normal_complex();
  cxla::Matrix rho = cxla::matmul(g, cxla::dagger(g));
  const double tr = cxla::trace(rho).real();
  for (auto& e : rho.data()) e /= tr;
  return rho;
}

}  // namespace mubtomo::rng
