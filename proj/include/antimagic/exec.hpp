#pragma once

namespace antimagic {

// Execution policy for the data-parallel kernels (BFS layering, edge
// classification, per-slice trail decomposition, per-component labeling,
// vertex sums). Both policies produce identical results; `serial` is the
// reference implementation the equivalence tests compare against.
enum class Exec { serial, openmp };

// Number of threads the openmp policy will use (1 when built without OpenMP).
int max_threads();

}  // namespace antimagic
