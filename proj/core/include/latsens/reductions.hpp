#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "latsens/boolfn.hpp"
#include "latsens/lattice.hpp"
#include "latsens/truth_table.hpp"

namespace latsens {

struct Inequality {
  std::string name;
  long long lhs = 0;
  long long rhs = 0;
  std::string relation = "<=";
  bool holds = false;
};

// Everything needed to re-check a reduction without redoing the full scan:
// the claimed inequalities with both sides evaluated, plus the witnesses
// that realize each side.
struct ReductionCertificate {
  std::string direction;  // "fn-to-color" | "color-to-fn"
  std::string source_fingerprint;
  std::string target_fingerprint;

  // Shared declarations.
  std::string bit_order = "ascending-variable-index";
  std::string coloring_spec;  // serialized coloring (target or source)
  std::string s_check_mode;   // scan mode backing the s(C) / s(f) claims

  // fn-to-color payload: the normalized function (base input all-zeros,
  // output 0 there) and the blocks used.
  int function_vars = 0;
  bool function_explicit = true;
  std::string function_hex;  // empty when not explicit
  bool output_complemented = false;
  uint64_t x_star = 0;  // original base input, pre-normalization
  std::vector<BlockMask> blocks;

  // color-to-fn payload.
  std::vector<int> reflection_signs;
  std::vector<int64_t> block_sizes;
  int64_t min_width_k = 0;

  // Witnesses.
  int s_f = 0;
  uint64_t s_f_witness = 0;
  int s_C = 0;
  Point s_C_witness;
  int r_C = 0;
  Point r_C_witness;
  std::vector<AxisBlue> axis_blues;

  std::vector<Inequality> inequalities;

  bool all_hold() const;
};

struct FnToColoringResult {
  std::shared_ptr<const MirrorPeriodicColoring> coloring;
  TruthTable normalized;
  ReductionCertificate cert;
};

// Blocks must be pairwise disjoint and each sensitive at x_star.  The
// function is re-based so x_star becomes the all-zeros input with output 0
// (complementing the output if needed), cell m of the base box takes the
// color of f at the input whose first m_i bits of block B_i are 1 (ascending
// variable order), and the box mirror-tiles Z^d.  The certificate carries
// the exact-period scan result s(C) <= s(f).
FnToColoringResult function_to_coloring(const TruthTable& f,
                                        const std::vector<BlockMask>& blocks,
                                        uint64_t x_star,
                                        const ScanLimits& lim = {});

struct ColoringToFnResult {
  int n = 0;  // sum of block sizes
  std::vector<int64_t> block_sizes;
  std::vector<int> signs;  // reflection applied to the source coloring
  std::optional<TruthTable> table;  // present when n <= kMaxTableVars
  FnOracle oracle;
  ReductionCertificate cert;
};

// The coloring must pass check_nontrivial within `cap`.  After reflecting
// every axis toward its nearest blue point, b_i is the nearest positive blue
// distance, input bits split into blocks of sizes b_i, and f(y) asks whether
// the lattice point of per-block ones-counts is blue.  Certificate: f(0)=0,
// all d axis blocks sensitive at 0 (so bs(f) >= d), and s(f) <= k * r(C)
// <= k * s(C), with s(f) exhaustive when the table is explicit.
ColoringToFnResult coloring_to_function(const ColoringPtr& c, int64_t cap = 64,
                                        const ScanLimits& lim = {});

// f from coloring_to_function is invariant under permutations within any one
// block; checks `trials` random within-block permutations per block.
bool block_symmetry_check(const ColoringToFnResult& r, int trials = 100,
                          uint64_t seed = 0);

struct CertificateVerification {
  bool ok = true;
  std::vector<std::string> failures;
};

// Replays every embedded witness against the reconstructed objects and
// re-evaluates every inequality.  Does not rerun whole-domain scans.
CertificateVerification verify_certificate(const ReductionCertificate& cert);

}  // namespace latsens
