#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace latsens {

// FNV-1a over raw bytes; used for input fingerprints in reports.  Stable
// across platforms and runs.
inline uint64_t fnv1a64(std::span<const unsigned char> bytes,
                        uint64_t seed = 0xcbf29ce484222325ull) {
  uint64_t h = seed;
  for (unsigned char b : bytes) {
    h ^= b;
    h *= 0x100000001b3ull;
  }
  return h;
}

inline uint64_t fnv1a64(std::string_view text) {
  return fnv1a64(std::span<const unsigned char>(
      reinterpret_cast<const unsigned char*>(text.data()), text.size()));
}

std::string to_hex16(uint64_t v);

// splitmix64: seed scrambler used to derive independent per-item PRNG seeds
// so parallel sampling stays schedule-independent.
inline uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// Sum of C(n, k) for 1 <= k <= max_size, saturating at `cap + 1` so callers
// can test a candidate budget without overflow.
uint64_t binomial_sum_capped(int n, int max_size, uint64_t cap);

// Bit-vector <-> hex text, most significant hex digit first: bit j of the
// integer value is entry j.  Used by the truth-table and base-cell formats.
std::string hex_from_bits(std::span<const uint64_t> words, uint64_t nbits);
std::vector<uint64_t> bits_from_hex(std::string_view hex, uint64_t nbits);

}  // namespace latsens
