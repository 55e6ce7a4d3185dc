// Serial-vs-parallel timing for the three data-parallel kernels: the
// unbiasedness scan, the census classification sweep, and batched
// finite-shot trials.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <string>

#include "mubtomo/ent.hpp"
#include "mubtomo/gates.hpp"
#include "mubtomo/tomo.hpp"

using namespace mubtomo;

namespace {

template <typename F>
double best_ms(int reps, F&& fn) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    const auto t1 = std::chrono::steady_clock::now();
    best = std::min(best,
                    std::chrono::duration<double, std::milli>(t1 - t0).count());
  }
  return best;
}

void report(const char* name, double serial_ms, double parallel_ms) {
  std::printf("%-28s %10.2f ms %10.2f ms %8.2fx\n", name, serial_ms, parallel_ms,
              serial_ms / parallel_ms);
}

}  // namespace

int main(int argc, char** argv) {
  const bool quick = argc > 1 && std::strcmp(argv[1], "--quick") == 0;
  const int reps = quick ? 1 : 5;
  const int trials = quick ? 8 : 64;
  const long long shots = quick ? 1000 : 20000;

  std::printf("threads available: %d\n", hardware_threads());
  std::printf("%-28s %13s %13s %9s\n", "kernel", "serial", "parallel", "speedup");

  const auto set27 = mub::build_field_mubs(gf::FieldSpec::gf(27));
  report("unbiasedness scan d=27",
         best_ms(reps, [&] { mub::verify_unbiased(set27, tol::kEq, Exec::serial); }),
         best_ms(reps, [&] { mub::verify_unbiased(set27, tol::kEq, Exec::parallel); }));

  report("census d=27 (28 bases)",
         best_ms(reps, [&] { ent::census(set27.bases, 3, Exec::serial); }),
         best_ms(reps, [&] { ent::census(set27.bases, 3, Exec::parallel); }));

  const auto& table3 = gates::builtin_table(3);
  report("table III verification",
         best_ms(reps, [&] {
           gates::verify_table(table3, gates::Convention::left_applied_first,
                               gates::PhaseVariant::standard, tol::kEq, Exec::serial);
         }),
         best_ms(reps, [&] {
           gates::verify_table(table3, gates::Convention::left_applied_first,
                               gates::PhaseVariant::standard, tol::kEq,
                               Exec::parallel);
         }));

  const auto set9 = mub::build_field_mubs(gf::FieldSpec::gf(9));
  char label[64];
  std::snprintf(label, sizeof label, "%d sampled trials d=9", trials);
  report(label,
         best_ms(reps, [&] { tomo::batch_errors(set9, shots, trials, 1, Exec::serial); }),
         best_ms(reps, [&] { tomo::batch_errors(set9, shots, trials, 1, Exec::parallel); }));

  return 0;
}
