#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace latsens {

// Explicit tables are capped at 24 variables (2 MiB of output bits).
inline constexpr int kMaxTableVars = 24;

// A Boolean function on n variables as 2^n packed output bits.
//
// Input x = (x_1, ..., x_n) maps to index(x) = sum_i x_i * 2^(i-1), so x_1 is
// the least significant bit of the index.  Variables are 1-based throughout,
// matching report conventions.
class TruthTable {
 public:
  explicit TruthTable(int n);  // all outputs 0

  int vars() const { return n_; }
  uint64_t size() const { return uint64_t{1} << n_; }

  int eval(uint64_t x) const;  // 0 or 1; throws std::out_of_range
  void set(uint64_t x, int bit);

  // Packed output bits, low word first; bits past 2^n are zero.
  const std::vector<uint64_t>& words() const { return words_; }

  // Hex text, most significant digit first; bit j of the value is the output
  // at input index j.  AND_2 serializes as "8".
  std::string to_hex() const;
  static TruthTable from_hex(int n, std::string_view hex);

  uint64_t fingerprint() const;

  bool operator==(const TruthTable&) const = default;

 private:
  int n_;
  std::vector<uint64_t> words_;
};

// g with eval(g, x) = eval(f, x ^ mask).  All sensitivity measures are
// invariant under this re-indexing.
TruthTable complement_inputs(const TruthTable& f, uint64_t mask);

// g(x_1..x_n) = f(x_perm[1]..x_perm[n]); perm is a 1-based permutation of
// 1..n.  Measure-invariant; used by randomized invariance tests.
TruthTable permute_variables(const TruthTable& f, const std::vector<int>& perm);

// Uniform random table; bits drawn from mt19937_64 seeded with
// splitmix64(seed).
TruthTable random_table(int n, uint64_t seed);

// A Boolean function given as an evaluation callback, for functions too
// large for an explicit table.  Inputs are packed like TruthTable indices;
// n <= 64.
struct FnOracle {
  int n = 0;
  std::function<int(uint64_t)> eval;
};

}  // namespace latsens
