#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "latsens/boolfn.hpp"

namespace latsens {

struct SeparationRecord {
  int n = 0;
  std::string table_hex;
  uint64_t fingerprint = 0;
  int s = 0;
  int bs = 0;
  double ratio = 0.0;  // bs / s^2, 0 for constant functions
  uint64_t witness_input = 0;
  std::vector<BlockMask> witness_family;
};

struct ScanResult {
  int n = 0;
  uint64_t functions_scanned = 0;
  uint64_t seed = 0;  // random scans only
  // best_by_s[s] = record with the largest bs among scanned functions with
  // sensitivity s (smallest table breaking ties); absent if none seen.
  std::vector<std::optional<SeparationRecord>> best_by_s;
  // Records violating bs < e^(s+1) sqrt(s / 2 pi); always expected empty.
  std::vector<SeparationRecord> tripwire_violations;
  const SeparationRecord* best_separation() const;  // max ratio, s >= 1
};

// Every function on n variables (n <= 4), partitioned over table-integer
// ranges; identical output for every worker count.
ScanResult exhaustive_scan(int n, int threads = 0);

// `samples` uniform tables; sample i is drawn from an mt19937_64 seeded with
// splitmix64(seed ^ splitmix64(i + 1)), so the result depends only on
// (n, samples, seed).  n <= 12.
ScanResult random_scan(int n, uint64_t samples, uint64_t seed,
                       int threads = 0);

// Recomputes s and bs from the stored table; true iff both match and the
// stored family replays.
bool replay_record(const SeparationRecord& rec);

}  // namespace latsens
