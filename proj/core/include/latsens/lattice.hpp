#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace latsens {

inline constexpr int kMaxLatticeDim = 64;

enum class Color : uint8_t { Red = 0, Blue = 1 };

// A lattice point; length always equals the coloring's dimension.
using Point = std::vector<int64_t>;

enum class ScanMode { ExactPeriod, ExactRepresentative, BoxScan, Sampled };

const char* to_string(ScanMode mode);

// A finite grid of points, given as sorted value sets per axis.  Exact scan
// domains carry the argument for why the grid maxima equal the maxima over
// all of Z^d (periodicity or representative equivalence).
struct ScanDomain {
  std::vector<std::vector<int64_t>> axis_values;
  ScanMode mode = ScanMode::BoxScan;
  uint64_t volume() const;  // saturating product
};

// A two-coloring of Z^d as a total, deterministic color oracle.  Instances
// are immutable after construction and safe to query from many threads.
class Coloring {
 public:
  virtual ~Coloring() = default;

  int dimension() const { return d_; }
  Color color(std::span<const int64_t> p) const;

  // A finite grid whose sensitivity maxima provably equal the maxima over
  // Z^d, if this kind has one.
  virtual std::optional<ScanDomain> exact_domain() const { return {}; }
  virtual std::string kind() const = 0;

 protected:
  explicit Coloring(int d);

 private:
  virtual Color color_at(std::span<const int64_t> p) const = 0;
  int d_;
};

using ColoringPtr = std::shared_ptr<const Coloring>;

// An axis-aligned hyperplane fragment: x[axis] = c plus x[z] = 0 for each
// z in zeros.  Axes are 0-based here and in file formats; reports print
// them 1-based.
struct Slice {
  int axis = 0;
  int64_t c = 0;  // nonzero
  std::vector<int> zeros;
};

// Blue iff the point lies in some slice.
class SlicedColoring final : public Coloring {
 public:
  SlicedColoring(int d, std::vector<Slice> slices);
  const std::vector<Slice>& slices() const { return slices_; }
  bool in_slice(const Slice& s, std::span<const int64_t> p) const;
  std::optional<ScanDomain> exact_domain() const override;
  std::string kind() const override { return "sliced"; }

 private:
  Color color_at(std::span<const int64_t> p) const override;
  std::vector<Slice> slices_;
};

// Mirror tiling of a base box: coordinate i folds via
//   z = x mod 2(b_i + 1);  y = z <= b_i ? z : 2 b_i + 1 - z
// and the color is the base cell at y.  Folding makes the pattern alternate
// with its reflection, so no color change crosses a box boundary.
class MirrorPeriodicColoring final : public Coloring {
 public:
  // cells are row-major over the (b_1+1) x ... x (b_d+1) box with the first
  // coordinate slowest.
  MirrorPeriodicColoring(std::vector<int64_t> box, std::vector<uint8_t> cells);
  const std::vector<int64_t>& box() const { return box_; }
  const std::vector<uint8_t>& cells() const { return cells_; }
  Color cell(std::span<const int64_t> m) const;  // 0 <= m_i <= b_i
  std::optional<ScanDomain> exact_domain() const override;
  std::string kind() const override { return "mirror-periodic"; }

 private:
  Color color_at(std::span<const int64_t> p) const override;
  std::vector<int64_t> box_;
  std::vector<uint8_t> cells_;
};

// Cartesian power: blue iff some group of `copies` consecutive coordinate
// groups is blue in the inner coloring.  Group i occupies flat coordinates
// [i*k, (i+1)*k) for inner dimension k.
class RepeatedColoring final : public Coloring {
 public:
  RepeatedColoring(ColoringPtr inner, int copies);
  const ColoringPtr& inner() const { return inner_; }
  int copies() const { return copies_; }
  std::optional<ScanDomain> exact_domain() const override;
  std::string kind() const override { return "repeated"; }

 private:
  Color color_at(std::span<const int64_t> p) const override;
  ColoringPtr inner_;
  int copies_;
};

// Each inner point becomes a hypercube of 2^d points: color'(y) = color(x)
// with x_i = ceil(y_i / 2), i.e. 2 x_i - 1 <= y_i <= 2 x_i.  Turns axis
// sensitivity into point sensitivity: s(doubled) = r(inner).
class DoubledColoring final : public Coloring {
 public:
  explicit DoubledColoring(ColoringPtr inner);
  const ColoringPtr& inner() const { return inner_; }
  std::optional<ScanDomain> exact_domain() const override;
  std::string kind() const override { return "doubled"; }

 private:
  Color color_at(std::span<const int64_t> p) const override;
  ColoringPtr inner_;
};

// color'(x) = color(signs * x) with signs in {+1, -1}^d.
class ReflectedColoring final : public Coloring {
 public:
  ReflectedColoring(ColoringPtr inner, std::vector<int> signs);
  const ColoringPtr& inner() const { return inner_; }
  const std::vector<int>& signs() const { return signs_; }
  std::optional<ScanDomain> exact_domain() const override;
  std::string kind() const override { return "reflected"; }

 private:
  Color color_at(std::span<const int64_t> p) const override;
  ColoringPtr inner_;
  std::vector<int> signs_;
};

// Arbitrary user oracle; no exact mode.
class CallbackColoring final : public Coloring {
 public:
  CallbackColoring(int d, std::function<Color(std::span<const int64_t>)> fn);
  std::string kind() const override { return "callback"; }

 private:
  Color color_at(std::span<const int64_t> p) const override;
  std::function<Color(std::span<const int64_t>)> fn_;
};

ColoringPtr double_coloring(ColoringPtr c);
ColoringPtr reflect(ColoringPtr c, std::vector<int> signs);

struct ScanLimits {
  uint64_t max_probes = 100'000'000;  // point probes, neighbors included
  int threads = 0;
};

// Requires s^R(inner) = 1, verified by exact scan when inner has an exact
// domain.  For oracle-only inners pass a check box (verification is then
// only as strong as the box).
ColoringPtr repeated_coloring(ColoringPtr inner, int copies,
                              const ScanLimits& lim = {},
                              const std::optional<std::pair<Point, Point>>&
                                  check_box = std::nullopt);

// s(C, p): differently-colored neighbors among the 2d points p +- e_i.
int point_sensitivity(const Coloring& c, const Point& p);

// r(C, p): axes i with a differently-colored neighbor among p +- e_i.
// Always between s(C, p)/2 and s(C, p).
int axis_sensitivity(const Coloring& c, const Point& p);

struct AxisBlue {
  int axis = 0;  // 1-based
  int64_t distance = 0;
  int sign = +1;  // sign carrying the nearest blue; ties go to +
  Point point;
  bool blue_minus = false;  // a blue at the same or larger distance on -?
};

struct MinWidthResult {
  int64_t k = 0;  // max over axes of the nearest blue distance
  std::vector<AxisBlue> nearest;
};

// Nearest blue axis point per axis within `cap`; throws MinWidthError when
// an axis has none (never silently treated as trivial).
MinWidthResult min_width(const Coloring& c, int64_t cap = 64);

struct NontrivialityReport {
  bool passed = false;
  bool origin_red = false;
  std::optional<MinWidthResult> width;
  // "" | "origin not red" | "no blue within cap on axis <i>"
  std::string failure;
  bool cap_exhausted = false;  // failure is a cap limit, not a counterexample
};

NontrivialityReport check_nontrivial(const Coloring& c, int64_t cap = 64);

struct PointValue {
  int value = 0;
  Point where;
};

struct ColoringReport {
  int d = 0;
  int s = 0;  // max point sensitivity
  int r = 0;  // max axis sensitivity; r <= s <= 2r
  int sR = 0;  // max axis sensitivity over red points
  int sB = 0;  // max axis sensitivity over blue points
  ScanMode mode = ScanMode::BoxScan;
  std::optional<int64_t> min_width_k;
  PointValue s_witness, r_witness;
  std::optional<PointValue> sR_witness, sB_witness;
  uint64_t points = 0, probes = 0;
};

// Exhaustive scan of the kind's exact domain (period box for periodic
// colorings, representative box for sliced ones).  Throws PreconditionError
// when the kind has no exact mode and ResourceLimitError over the probe cap.
ColoringReport exact_report(const Coloring& c, const ScanLimits& lim = {});

// Exhaustive scan of an explicit grid; mode = BoxScan unless the domain says
// otherwise.  No exactness claim beyond the grid.
ColoringReport scan_domain_report(const Coloring& c, const ScanDomain& domain,
                                  const ScanLimits& lim = {});
ColoringReport scan_box_report(const Coloring& c, const Point& lo,
                               const Point& hi, const ScanLimits& lim = {});

// Maxima over `samples` uniform points of [lo, hi] plus every supplied
// witness point; values are lower bounds.  Point i uses an mt19937_64 seeded
// with splitmix64(seed ^ splitmix64(i + 1)), so results are reproducible and
// schedule-independent.
ColoringReport sampled_report(const Coloring& c, const Point& lo,
                              const Point& hi, uint64_t samples, uint64_t seed,
                              const std::vector<Point>& witnesses = {},
                              const ScanLimits& lim = {});
// Same, sampling a value-set domain instead of a box.
ColoringReport sampled_domain_report(const Coloring& c,
                                     const ScanDomain& domain,
                                     uint64_t samples, uint64_t seed,
                                     const std::vector<Point>& witnesses = {},
                                     const ScanLimits& lim = {});

// The finite grid that exactly represents a sliced coloring: each axis keeps
// v-1, v, v+1 around every relevant value (0 and the slice constants on that
// axis) plus one generic far value g = max(relevant) + 3.  Every point of
// Z^d has the same color pattern (itself and all 2d neighbors) as its
// coordinate-wise representative.
ScanDomain representative_box(const SlicedColoring& c);

// Every neighbor step that crosses between a box and its mirror image lands
// in the same folded cell, so no color change crosses a box boundary.
// Verified exhaustively over one period.
bool mirror_boundary_check(const MirrorPeriodicColoring& c,
                           const ScanLimits& lim = {});

}  // namespace latsens
