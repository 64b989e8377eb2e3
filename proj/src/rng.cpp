#include "ksync/rng.hpp"

namespace ksync {

namespace {
constexpr uint64_t kGolden = 0x9E3779B97F4A7C15ULL;
}

uint64_t mix64(uint64_t x) {
  x ^= x >> 30;
  x *= 0xBF58476D1CE4E5B9ULL;
  x ^= x >> 27;
  x *= 0x94D049BB133111EBULL;
  x ^= x >> 31;
  return x;
}

uint64_t derive_seed(uint64_t master_seed, uint64_t index) {
  return mix64(master_seed ^ mix64(index + kGolden));
}

double uniform01(uint64_t key, uint64_t counter) {
  uint64_t x = mix64(key + (counter + 1) * kGolden);
  return static_cast<double>(x >> 11) * 0x1.0p-53;
}

}  // namespace ksync
