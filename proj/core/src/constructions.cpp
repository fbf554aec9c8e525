#include "latsens/constructions.hpp"

#include <bit>

#include "latsens/errors.hpp"

namespace latsens {

TruthTable sorted_function() {
  TruthTable t(4);
  // Strings read as x1 x2 x3 x4 left to right; x1 is the low index bit.
  static const char* accepted[] = {"0000", "0001", "0011", "0111",
                                   "1000", "1100", "1110", "1111"};
  for (const char* s : accepted) {
    uint64_t idx = 0;
    for (int i = 0; i < 4; ++i)
      if (s[i] == '1') idx |= uint64_t{1} << i;
    t.set(idx, 1);
  }
  return t;
}

namespace {

void require_even(int n) {
  if (n < 2 || n % 2 != 0) throw PreconditionError("n must be even and >= 2");
}

// Accepted g-inputs as index values: one adjacent pair set, rest zero.
inline bool g_accepts(uint64_t y, int n) {
  for (int j = 0; j < n / 2; ++j)
    if (y == (uint64_t{3} << (2 * j))) return true;
  return false;
}

}  // namespace

TruthTable rubinstein_g(int n) {
  require_even(n);
  if (n > kMaxTableVars) throw PreconditionError("n too large for a table");
  TruthTable t(n);
  for (int j = 0; j < n / 2; ++j) t.set(uint64_t{3} << (2 * j), 1);
  return t;
}

RubinsteinF rubinstein_f(int n) {
  require_even(n);
  RubinsteinF out;
  out.n = n;
  out.vars = n * n;
  if (out.vars > 64)
    throw PreconditionError("n^2 must be <= 64 for the oracle form");
  const uint64_t seg_mask = (n * n == 64) ? ~uint64_t{0} >> (64 - n)
                                          : (uint64_t{1} << n) - 1;
  out.oracle.n = out.vars;
  out.oracle.eval = [n, seg_mask](uint64_t x) {
    for (int i = 0; i < n; ++i)
      if (g_accepts((x >> (i * n)) & seg_mask, n)) return 1;
    return 0;
  };
  if (out.vars <= kMaxTableVars) {
    TruthTable t(out.vars);
    for (uint64_t x = 0; x < t.size(); ++x) t.set(x, out.oracle.eval(x));
    out.table = std::move(t);
  }
  return out;
}

std::shared_ptr<const SlicedColoring> slice_coloring(int n) {
  if (n < 1) throw PreconditionError("n must be >= 1");
  GroupedCoordinates gc(n);
  std::vector<Slice> slices;
  slices.reserve(static_cast<size_t>(gc.dims()));
  for (int a = 1; a <= n; ++a) {
    for (int b = 1; b <= gc.width; ++b) {
      Slice s;
      s.axis = gc.flat(a, b);
      s.c = 3;
      for (int t = 1; t <= n - 1; ++t) s.zeros.push_back(gc.flat(a, b + t));
      slices.push_back(std::move(s));
    }
  }
  return std::make_shared<SlicedColoring>(gc.dims(), std::move(slices));
}

std::shared_ptr<const SlicedColoring> slice_group(int n) {
  if (n < 1) throw PreconditionError("n must be >= 1");
  GroupedCoordinates gc(n);
  std::vector<Slice> slices;
  for (int b = 1; b <= gc.width; ++b) {
    Slice s;
    s.axis = b - 1;
    s.c = 3;
    for (int t = 1; t <= n - 1; ++t) s.zeros.push_back(gc.wrap(b + t) - 1);
    slices.push_back(std::move(s));
  }
  return std::make_shared<SlicedColoring>(gc.width, std::move(slices));
}

TruthTable constant_table(int n, int value) {
  TruthTable t(n);
  if (value)
    for (uint64_t x = 0; x < t.size(); ++x) t.set(x, 1);
  return t;
}

TruthTable parity_table(int n) {
  TruthTable t(n);
  for (uint64_t x = 0; x < t.size(); ++x)
    t.set(x, std::popcount(x) & 1);
  return t;
}

}  // namespace latsens
