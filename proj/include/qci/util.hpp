#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace qci {

// Deterministic RNG. mt19937_64 has a standardized sequence, and we avoid
// std distributions (their output is implementation-defined), so seeded
// corpora are bit-identical across platforms.
class Rng {
public:
  explicit Rng(uint64_t seed) : g_(seed) {}
  uint64_t next() { return g_(); }
  uint32_t below(uint32_t m) { return m == 0 ? 0 : static_cast<uint32_t>(next() % m); }

private:
  std::mt19937_64 g_;
};

inline int64_t binomial(int64_t n, int64_t k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  int64_t r = 1;
  for (int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace qci
