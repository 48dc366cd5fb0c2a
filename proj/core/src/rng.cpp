#include "lcsgap/rng.hpp"

namespace lcsgap {

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t seed, Stream stream,
                          std::uint64_t index) {
  const auto tag = static_cast<std::uint64_t>(stream);
  return mix64(mix64(seed ^ (0xd1b54a32d192ed03ULL * tag)) ^
               (0x8cb92ba72f3d8dd7ULL * (index + 1)));
}

std::uint64_t Rng::below(std::uint64_t bound) {
  // Rejection sampling keeps the result unbiased.
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t x = engine_();
  while (x >= limit) x = engine_();
  return x % bound;
}

}  // namespace lcsgap
