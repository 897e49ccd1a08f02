#pragma once

namespace abq {

// Selects between the OpenMP kernels and the serial reference path. Both
// paths produce bit-identical results; `serial` exists for cross-checking
// and for benchmarking.
enum class Exec { serial, parallel };

}  // namespace abq
