#pragma once

#include <cstdint>

namespace ksync {

// Counter-based generator built on the splitmix64 finalizer. Every draw is a
// pure function of (key, counter), so serial and parallel consumers see the
// same stream.

uint64_t mix64(uint64_t x);

/// Stable per-task seed derived from a master seed and a task index.
uint64_t derive_seed(uint64_t master_seed, uint64_t index);

/// Uniform double in [0, 1) determined by (key, counter).
double uniform01(uint64_t key, uint64_t counter);

}  // namespace ksync
