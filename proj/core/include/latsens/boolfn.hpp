#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "latsens/truth_table.hpp"

namespace latsens {

// A block of variables as a bitmask: bit i-1 stands for variable i.
using BlockMask = uint32_t;

struct MeasureLimits {
  // Maximum block size for the packing search.  0 means "use s(f)", which is
  // sound because every sensitive block contains a minimal one and minimal
  // blocks have size at most s(f).  Raise to n to cross-validate.
  int block_size_cap = 0;
  // Cap on candidate blocks enumerated per input before the packing search.
  uint64_t max_candidate_blocks = uint64_t{1} << 22;
  int threads = 0;  // 0 = available parallelism
};

struct SensitivitySummary {
  int s = 0;   // max over all inputs
  int s0 = 0;  // max over inputs with output 0 (0 if none)
  int s1 = 0;  // max over inputs with output 1 (0 if none)
  uint64_t s_witness = 0;  // lexicographically smallest achiever
  std::optional<uint64_t> s0_witness;
  std::optional<uint64_t> s1_witness;
};

struct BlockSensitivityResult {
  int value = 0;
  uint64_t input = 0;
  std::vector<BlockMask> family;  // disjoint sensitive blocks, ascending
};

struct MeasureReport {
  int n = 0;
  SensitivitySummary sens;
  int bs = 0;
  BlockSensitivityResult bs_witness;
  // bs_l for l = 1..max(1, s); bs_l = bs for every l >= s.
  std::map<int, int> bs_l;
  std::map<int, uint64_t> bs_l_witness;
  int block_size_cap_used = 0;
};

// s(f, x): number of single-bit flips of x that change the output.
int sensitivity_at(const TruthTable& f, uint64_t x);
int sensitivity_at(const FnOracle& f, uint64_t x);

// Per-input sensitivity counts for all 2^n inputs at once.  For each
// variable the table is XORed with itself shifted by 2^(i-1); the set bits
// mark inputs sensitive to that variable and are accumulated per input.
// Equals sensitivity_at pointwise.
std::vector<uint8_t> sensitivity_bitmap(const TruthTable& f);

SensitivitySummary sensitivity(const TruthTable& f);

// All sensitive blocks at x with |B| <= max_size, ascending mask order.
std::vector<BlockMask> sensitive_blocks_at(
    const TruthTable& f, uint64_t x, int max_size,
    uint64_t max_candidates = MeasureLimits{}.max_candidate_blocks);

// True iff no proper nonempty subset of B is sensitive at x.  Throws
// BlockNotSensitiveError if B itself is not sensitive.
bool is_minimal_block(const TruthTable& f, uint64_t x, BlockMask b);

// bs(f, x): exact maximum disjoint-sensitive-block packing at x, computed by
// branch and bound over minimal sensitive blocks in ascending mask order.
// The witness family is the lexicographically smallest maximum packing.
BlockSensitivityResult block_sensitivity_at(const TruthTable& f, uint64_t x,
                                            const MeasureLimits& lim = {});

// bs(f): max of block_sensitivity_at over all inputs.
BlockSensitivityResult block_sensitivity(const TruthTable& f,
                                         const MeasureLimits& lim = {});

// bs_l(f): packing with block size capped at l.
int l_block_sensitivity(const TruthTable& f, int l,
                        const MeasureLimits& lim = {});

// All measures in one pass over the inputs.
MeasureReport measure(const TruthTable& f, const MeasureLimits& lim = {});

// Replays every witness in the report against f; true iff all reproduce
// their reported values.
bool replay_measure_report(const TruthTable& f, const MeasureReport& report);

}  // namespace latsens
