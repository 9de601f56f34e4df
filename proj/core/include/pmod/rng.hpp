#pragma once
// Small deterministic RNG (splitmix64) so results are reproducible across
// platforms and standard-library versions.

#include <cstdint>

namespace pmod {

struct Rng {
  std::uint64_t s;
  explicit Rng(std::uint64_t seed) : s(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (s += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  // uniform in [0, n)
  std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }
  std::uint32_t field_elem(std::uint32_t p) { return (std::uint32_t)below(p); }
  std::uint32_t nonzero_field_elem(std::uint32_t p) { return 1 + (std::uint32_t)below(p - 1); }
};

}  // namespace pmod
