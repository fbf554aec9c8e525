#pragma once

#include <memory>
#include <optional>

#include "latsens/boolfn.hpp"
#include "latsens/lattice.hpp"
#include "latsens/truth_table.hpp"

namespace latsens {

// Coordinates {i, j} with group i in 1..n and position j in 1..2n-1, flat
// index (i-1)(2n-1) + (j-1).  Position arithmetic wraps modulo 2n-1 back
// into 1..2n-1.
struct GroupedCoordinates {
  int n = 0;
  int width = 0;  // 2n - 1

  explicit GroupedCoordinates(int n_) : n(n_), width(2 * n_ - 1) {}
  int dims() const { return n * width; }
  int wrap(int j) const { return (j - 1) % width + ((j - 1) % width < 0 ? width : 0) + 1; }
  int flat(int group, int j) const { return (group - 1) * width + (wrap(j) - 1); }
};

// The 4-variable "is the input sorted" example: value 1 exactly on
// 0000, 0001, 0011, 0111, 1000, 1100, 1110, 1111 (read as x1 x2 x3 x4).
// Serializes to hex D18B; s = 2, bs = 3.
TruthTable sorted_function();

// n even.  g(x) = 1 iff exactly one adjacent pair x_{2j-1} = x_{2j} = 1 is
// set and every other bit is 0.
TruthTable rubinstein_g(int n);

// OR of n copies of rubinstein_g(n) over consecutive length-n segments of an
// n^2-bit input: bs(f) = s(f)^2 / 2.  Explicit table only when n^2 <= 24.
struct RubinsteinF {
  int n = 0;
  int vars = 0;  // n^2
  std::optional<TruthTable> table;
  FnOracle oracle;
};
RubinsteinF rubinstein_f(int n);

// The d = n(2n-1) slice coloring: slice S_{a,b} fixes x_{a,b} = 3 and
// x_{a,b+1} .. x_{a,b+n-1} = 0 (positions mod 2n-1).  Achieves
// d = 2 r(C)^2 - r(C) with r(C) = n.
std::shared_ptr<const SlicedColoring> slice_coloring(int n);

// One coordinate group of slice_coloring(n): the (2n-1)-dimensional coloring
// with slices S_{1,1} .. S_{1,2n-1}.  Has s^R = 1, so slice_coloring(n) is
// its n-fold repeated coloring.
std::shared_ptr<const SlicedColoring> slice_group(int n);

TruthTable constant_table(int n, int value);
TruthTable parity_table(int n);

}  // namespace latsens
