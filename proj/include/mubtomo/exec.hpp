#pragma once

namespace mubtomo {

// Execution policy for the data-parallel kernels (unbiasedness scans,
// census classification, batched tomography trials). The serial path is
// the reference implementation; the parallel path must produce
// bit-identical results, which the test suite asserts.
enum class Exec { serial, parallel };

// Number of worker threads the parallel policy will use (1 when the
// library was built without OpenMP).
int hardware_threads();

}  // namespace mubtomo
