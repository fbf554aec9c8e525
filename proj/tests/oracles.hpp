#pragma once

// Naive reference implementations, kept deliberately independent of the
// library's packed kernels and branch-and-bound search: plain loops over
// inputs, all 2^n - 1 blocks, and unbounded recursion for the packing.
// Only usable for small n.

#include <cstdint>
#include <vector>

#include "latsens/lattice.hpp"
#include "latsens/truth_table.hpp"

namespace oracles {

inline int naive_sensitivity_at(const latsens::TruthTable& f, uint64_t x) {
  int count = 0;
  for (int i = 0; i < f.vars(); ++i)
    if (f.eval(x ^ (uint64_t{1} << i)) != f.eval(x)) count++;
  return count;
}

inline int naive_sensitivity(const latsens::TruthTable& f) {
  int best = 0;
  for (uint64_t x = 0; x < f.size(); ++x)
    best = std::max(best, naive_sensitivity_at(f, x));
  return best;
}

// All sensitive blocks at x of size <= max_size, no minimality filtering.
inline std::vector<uint32_t> naive_sensitive_blocks(const latsens::TruthTable& f,
                                                    uint64_t x, int max_size) {
  std::vector<uint32_t> out;
  const uint32_t limit = uint32_t{1} << f.vars();
  for (uint32_t b = 1; b < limit; ++b)
    if (__builtin_popcount(b) <= max_size && f.eval(x ^ b) != f.eval(x))
      out.push_back(b);
  return out;
}

inline int naive_pack(const std::vector<uint32_t>& blocks, size_t idx,
                      uint32_t used) {
  if (idx == blocks.size()) return 0;
  int best = naive_pack(blocks, idx + 1, used);
  if ((blocks[idx] & used) == 0)
    best = std::max(best, 1 + naive_pack(blocks, idx + 1, used | blocks[idx]));
  return best;
}

inline int naive_block_sensitivity_at(const latsens::TruthTable& f, uint64_t x,
                                      int max_size) {
  auto blocks = naive_sensitive_blocks(f, x, max_size);
  return naive_pack(blocks, 0, 0);
}

inline int naive_block_sensitivity(const latsens::TruthTable& f) {
  int best = 0;
  for (uint64_t x = 0; x < f.size(); ++x)
    best = std::max(best, naive_block_sensitivity_at(f, x, f.vars()));
  return best;
}

inline int naive_l_block_sensitivity(const latsens::TruthTable& f, int l) {
  int best = 0;
  for (uint64_t x = 0; x < f.size(); ++x)
    best = std::max(best, naive_block_sensitivity_at(f, x, l));
  return best;
}

// Brute-force maxima of a coloring over an explicit window, probing the
// oracle directly.
struct NaiveColoringMaxima {
  int s = 0, r = 0, sR = 0, sB = 0;
};

inline NaiveColoringMaxima naive_scan(const latsens::Coloring& c,
                                      const latsens::Point& lo,
                                      const latsens::Point& hi) {
  using namespace latsens;
  const int d = c.dimension();
  NaiveColoringMaxima out;
  Point p = lo;
  for (;;) {
    const Color base = c.color(p);
    int neighbors = 0, axes = 0;
    Point q = p;
    for (int i = 0; i < d; ++i) {
      q[i] += 1;
      const bool up = c.color(q) != base;
      q[i] -= 2;
      const bool down = c.color(q) != base;
      q[i] += 1;
      neighbors += up + down;
      axes += up || down;
    }
    out.s = std::max(out.s, neighbors);
    out.r = std::max(out.r, axes);
    if (base == Color::Red)
      out.sR = std::max(out.sR, axes);
    else
      out.sB = std::max(out.sB, axes);
    int i = d - 1;
    while (i >= 0 && p[i] == hi[i]) {
      p[i] = lo[i];
      --i;
    }
    if (i < 0) break;
    p[i] += 1;
  }
  return out;
}

}  // namespace oracles
