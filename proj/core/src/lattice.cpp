#include "latsens/lattice.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <set>

#include "latsens/errors.hpp"
#include "latsens/parallel.hpp"
#include "latsens/support.hpp"

namespace latsens {

const char* to_string(ScanMode mode) {
  switch (mode) {
    case ScanMode::ExactPeriod: return "exact-period";
    case ScanMode::ExactRepresentative: return "exact-representative";
    case ScanMode::BoxScan: return "box-scan";
    case ScanMode::Sampled: return "sampled";
  }
  return "?";
}

uint64_t ScanDomain::volume() const {
  uint64_t v = 1;
  for (const auto& vals : axis_values) {
    if (vals.empty()) return 0;
    if (v > std::numeric_limits<uint64_t>::max() / vals.size())
      return std::numeric_limits<uint64_t>::max();
    v *= vals.size();
  }
  return v;
}

Coloring::Coloring(int d) : d_(d) {
  if (d < 1 || d > kMaxLatticeDim)
    throw PreconditionError("dimension must be in 1.." +
                            std::to_string(kMaxLatticeDim));
}

Color Coloring::color(std::span<const int64_t> p) const {
  if (static_cast<int>(p.size()) != d_)
    throw PreconditionError("point dimension mismatch");
  return color_at(p);
}

// --- sliced --------------------------------------------------------------

SlicedColoring::SlicedColoring(int d, std::vector<Slice> slices)
    : Coloring(d), slices_(std::move(slices)) {
  for (auto& s : slices_) {
    if (s.axis < 0 || s.axis >= d)
      throw PreconditionError("slice axis out of range");
    if (s.c == 0) throw PreconditionError("slice constant must be nonzero");
    std::sort(s.zeros.begin(), s.zeros.end());
    s.zeros.erase(std::unique(s.zeros.begin(), s.zeros.end()), s.zeros.end());
    for (int z : s.zeros) {
      if (z < 0 || z >= d) throw PreconditionError("slice zero out of range");
      if (z == s.axis)
        throw PreconditionError("slice axis cannot be in its zero set");
    }
  }
}

bool SlicedColoring::in_slice(const Slice& s,
                              std::span<const int64_t> p) const {
  if (p[s.axis] != s.c) return false;
  for (int z : s.zeros)
    if (p[z] != 0) return false;
  return true;
}

Color SlicedColoring::color_at(std::span<const int64_t> p) const {
  for (const auto& s : slices_)
    if (in_slice(s, p)) return Color::Blue;
  return Color::Red;
}

std::optional<ScanDomain> SlicedColoring::exact_domain() const {
  return representative_box(*this);
}

ScanDomain representative_box(const SlicedColoring& c) {
  ScanDomain dom;
  dom.mode = ScanMode::ExactRepresentative;
  dom.axis_values.resize(c.dimension());
  for (int j = 0; j < c.dimension(); ++j) {
    std::set<int64_t> relevant = {0};
    for (const auto& s : c.slices())
      if (s.axis == j) relevant.insert(s.c);
    std::set<int64_t> vals;
    for (int64_t v : relevant) {
      vals.insert(v - 1);
      vals.insert(v);
      vals.insert(v + 1);
    }
    vals.insert(*relevant.rbegin() + 3);  // generic far value
    dom.axis_values[j].assign(vals.begin(), vals.end());
  }
  return dom;
}

// --- mirror-periodic -------------------------------------------------------

namespace {

inline int64_t pos_mod(int64_t x, int64_t m) {
  int64_t r = x % m;
  return r < 0 ? r + m : r;
}

}  // namespace

MirrorPeriodicColoring::MirrorPeriodicColoring(std::vector<int64_t> box,
                                               std::vector<uint8_t> cells)
    : Coloring(static_cast<int>(box.size())),
      box_(std::move(box)),
      cells_(std::move(cells)) {
  uint64_t expect = 1;
  for (int64_t b : box_) {
    if (b < 1) throw PreconditionError("box sizes must be positive");
    expect *= static_cast<uint64_t>(b + 1);
  }
  if (cells_.size() != expect)
    throw PreconditionError("cell array size must be the product of (b_i+1)");
  for (uint8_t v : cells_)
    if (v > 1) throw PreconditionError("cells must be 0 (red) or 1 (blue)");
}

Color MirrorPeriodicColoring::cell(std::span<const int64_t> m) const {
  uint64_t idx = 0;  // row-major, first coordinate slowest
  for (size_t i = 0; i < box_.size(); ++i)
    idx = idx * static_cast<uint64_t>(box_[i] + 1) + static_cast<uint64_t>(m[i]);
  return cells_[idx] ? Color::Blue : Color::Red;
}

Color MirrorPeriodicColoring::color_at(std::span<const int64_t> p) const {
  uint64_t idx = 0;
  for (size_t i = 0; i < box_.size(); ++i) {
    const int64_t b = box_[i];
    const int64_t z = pos_mod(p[i], 2 * (b + 1));
    const int64_t y = z <= b ? z : 2 * b + 1 - z;
    idx = idx * static_cast<uint64_t>(b + 1) + static_cast<uint64_t>(y);
  }
  return cells_[idx] ? Color::Blue : Color::Red;
}

std::optional<ScanDomain> MirrorPeriodicColoring::exact_domain() const {
  ScanDomain dom;
  dom.mode = ScanMode::ExactPeriod;
  dom.axis_values.resize(box_.size());
  for (size_t i = 0; i < box_.size(); ++i) {
    const int64_t period = 2 * (box_[i] + 1);
    auto& vals = dom.axis_values[i];
    vals.resize(period);
    for (int64_t v = 0; v < period; ++v) vals[v] = v;
  }
  return dom;
}

bool mirror_boundary_check(const MirrorPeriodicColoring& c,
                           const ScanLimits& lim) {
  const auto dom = *c.exact_domain();
  const int d = c.dimension();
  const uint64_t vol = dom.volume();
  if (vol > lim.max_probes / (2 * static_cast<uint64_t>(d) + 1))
    throw ResourceLimitError("period box exceeds probe cap");
  Point p(d, 0);
  std::vector<size_t> digit(d, 0);
  const auto& box = c.box();
  for (uint64_t flat = 0; flat < vol; ++flat) {
    uint64_t rest = flat;
    for (int i = d - 1; i >= 0; --i) {
      digit[i] = rest % dom.axis_values[i].size();
      rest /= dom.axis_values[i].size();
      p[i] = dom.axis_values[i][digit[i]];
    }
    const Color base = c.color(p);
    for (int i = 0; i < d; ++i) {
      const int64_t b = box[i];
      const int64_t z = pos_mod(p[i], 2 * (b + 1));
      for (int dir : {-1, +1}) {
        const bool crossing = dir > 0 ? (z == b || z == 2 * b + 1)
                                      : (z == 0 || z == b + 1);
        if (!crossing) continue;
        p[i] += dir;
        const Color nb = c.color(p);
        p[i] -= dir;
        if (nb != base) return false;
      }
    }
  }
  return true;
}

// --- wrappers --------------------------------------------------------------

RepeatedColoring::RepeatedColoring(ColoringPtr inner, int copies)
    : Coloring(copies * (inner ? inner->dimension() : 0)),
      inner_(std::move(inner)),
      copies_(copies) {
  if (copies < 1) throw PreconditionError("copies must be >= 1");
}

Color RepeatedColoring::color_at(std::span<const int64_t> p) const {
  const int k = inner_->dimension();
  for (int g = 0; g < copies_; ++g)
    if (inner_->color(p.subspan(static_cast<size_t>(g) * k, k)) == Color::Blue)
      return Color::Blue;
  return Color::Red;
}

std::optional<ScanDomain> RepeatedColoring::exact_domain() const {
  auto inner = inner_->exact_domain();
  if (!inner) return {};
  ScanDomain dom;
  dom.mode = inner->mode;
  dom.axis_values.reserve(static_cast<size_t>(copies_) *
                          inner->axis_values.size());
  for (int g = 0; g < copies_; ++g)
    for (const auto& vals : inner->axis_values) dom.axis_values.push_back(vals);
  return dom;
}

DoubledColoring::DoubledColoring(ColoringPtr inner)
    : Coloring(inner ? inner->dimension() : 0), inner_(std::move(inner)) {}

Color DoubledColoring::color_at(std::span<const int64_t> p) const {
  int64_t buf[kMaxLatticeDim];
  for (size_t i = 0; i < p.size(); ++i) buf[i] = (p[i] + 1) >> 1;  // ceil(p/2)
  return inner_->color(std::span<const int64_t>(buf, p.size()));
}

std::optional<ScanDomain> DoubledColoring::exact_domain() const {
  auto inner = inner_->exact_domain();
  if (!inner) return {};
  ScanDomain dom;
  dom.mode = inner->mode;
  dom.axis_values.resize(inner->axis_values.size());
  for (size_t i = 0; i < inner->axis_values.size(); ++i) {
    auto& out = dom.axis_values[i];
    out.reserve(2 * inner->axis_values[i].size());
    for (int64_t v : inner->axis_values[i]) {
      out.push_back(2 * v - 1);
      out.push_back(2 * v);
    }
  }
  return dom;
}

ReflectedColoring::ReflectedColoring(ColoringPtr inner, std::vector<int> signs)
    : Coloring(inner ? inner->dimension() : 0),
      inner_(std::move(inner)),
      signs_(std::move(signs)) {
  if (static_cast<int>(signs_.size()) != dimension())
    throw PreconditionError("signs length must equal dimension");
  for (int s : signs_)
    if (s != 1 && s != -1) throw PreconditionError("signs must be +1 or -1");
}

Color ReflectedColoring::color_at(std::span<const int64_t> p) const {
  int64_t buf[kMaxLatticeDim];
  for (size_t i = 0; i < p.size(); ++i) buf[i] = signs_[i] * p[i];
  return inner_->color(std::span<const int64_t>(buf, p.size()));
}

std::optional<ScanDomain> ReflectedColoring::exact_domain() const {
  auto inner = inner_->exact_domain();
  if (!inner) return {};
  ScanDomain dom;
  dom.mode = inner->mode;
  dom.axis_values.resize(inner->axis_values.size());
  for (size_t i = 0; i < inner->axis_values.size(); ++i) {
    auto vals = inner->axis_values[i];
    if (signs_[i] < 0)
      for (auto& v : vals) v = -v;
    std::sort(vals.begin(), vals.end());
    dom.axis_values[i] = std::move(vals);
  }
  return dom;
}

CallbackColoring::CallbackColoring(
    int d, std::function<Color(std::span<const int64_t>)> fn)
    : Coloring(d), fn_(std::move(fn)) {}

Color CallbackColoring::color_at(std::span<const int64_t> p) const {
  return fn_(p);
}

ColoringPtr double_coloring(ColoringPtr c) {
  return std::make_shared<DoubledColoring>(std::move(c));
}

ColoringPtr reflect(ColoringPtr c, std::vector<int> signs) {
  return std::make_shared<ReflectedColoring>(std::move(c), std::move(signs));
}

ColoringPtr repeated_coloring(
    ColoringPtr inner, int copies, const ScanLimits& lim,
    const std::optional<std::pair<Point, Point>>& check_box) {
  if (!inner) throw PreconditionError("inner coloring required");
  ColoringReport rep;
  if (inner->exact_domain()) {
    rep = exact_report(*inner, lim);
  } else if (check_box) {
    rep = scan_box_report(*inner, check_box->first, check_box->second, lim);
  } else {
    throw PreconditionError(
        "cannot verify s^R(inner) = 1: no exact mode and no check box given");
  }
  if (rep.sR != 1)
    throw PreconditionError("inner coloring has s^R != 1 (s^R = " +
                            std::to_string(rep.sR) + ")");
  return std::make_shared<RepeatedColoring>(std::move(inner), copies);
}

// --- pointwise sensitivities -----------------------------------------------

int point_sensitivity(const Coloring& c, const Point& p) {
  if (static_cast<int>(p.size()) != c.dimension())
    throw PreconditionError("point dimension mismatch");
  Point q = p;
  const Color base = c.color(q);
  int count = 0;
  for (int i = 0; i < c.dimension(); ++i) {
    q[i] += 1;
    count += c.color(q) != base;
    q[i] -= 2;
    count += c.color(q) != base;
    q[i] += 1;
  }
  return count;
}

int axis_sensitivity(const Coloring& c, const Point& p) {
  if (static_cast<int>(p.size()) != c.dimension())
    throw PreconditionError("point dimension mismatch");
  Point q = p;
  const Color base = c.color(q);
  int count = 0;
  for (int i = 0; i < c.dimension(); ++i) {
    q[i] += 1;
    bool differs = c.color(q) != base;
    q[i] -= 2;
    differs = differs || c.color(q) != base;
    q[i] += 1;
    count += differs;
  }
  return count;
}

// --- min-width and non-triviality -------------------------------------------

MinWidthResult min_width(const Coloring& c, int64_t cap) {
  if (cap < 1) throw PreconditionError("cap must be >= 1");
  const int d = c.dimension();
  MinWidthResult res;
  Point probe(d, 0);
  for (int axis = 0; axis < d; ++axis) {
    bool found = false;
    for (int64_t t = 1; t <= cap && !found; ++t) {
      probe[axis] = t;
      const bool plus = c.color(probe) == Color::Blue;
      probe[axis] = -t;
      const bool minus = c.color(probe) == Color::Blue;
      probe[axis] = 0;
      if (plus || minus) {
        AxisBlue ab;
        ab.axis = axis + 1;
        ab.distance = t;
        ab.sign = plus ? +1 : -1;  // ties go to +
        ab.blue_minus = minus;
        ab.point.assign(d, 0);
        ab.point[axis] = plus ? t : -t;
        res.nearest.push_back(std::move(ab));
        res.k = std::max(res.k, t);
        found = true;
      }
    }
    if (!found) throw MinWidthError(axis + 1, cap);
  }
  return res;
}

NontrivialityReport check_nontrivial(const Coloring& c, int64_t cap) {
  NontrivialityReport rep;
  Point origin(c.dimension(), 0);
  rep.origin_red = c.color(origin) == Color::Red;
  if (!rep.origin_red) {
    rep.failure = "origin not red";
    return rep;
  }
  try {
    rep.width = min_width(c, cap);
    rep.passed = true;
  } catch (const MinWidthError& e) {
    rep.failure = e.what();
    rep.cap_exhausted = true;
  }
  return rep;
}

// --- scans -------------------------------------------------------------------

namespace {

struct Extremum {
  int value = -1;
  Point where;
};

void consider(Extremum& e, int value, const Point& p) {
  if (value > e.value) {
    e.value = value;
    e.where = p;
  }
}

struct ScanPartial {
  Extremum s, r, sR, sB;
  uint64_t points = 0;
};

void merge_extremum(Extremum& acc, Extremum&& in) {
  // Chunks merge in index order, so on ties the earlier (lexicographically
  // smaller) witness wins.
  if (in.value > acc.value) acc = std::move(in);
}

void merge_partial(ScanPartial& acc, ScanPartial&& in) {
  merge_extremum(acc.s, std::move(in.s));
  merge_extremum(acc.r, std::move(in.r));
  merge_extremum(acc.sR, std::move(in.sR));
  merge_extremum(acc.sB, std::move(in.sB));
  acc.points += in.points;
}

void scan_point(const Coloring& c, Point& q, ScanPartial& part) {
  const int d = c.dimension();
  const Color base = c.color(q);
  int neighbors = 0, axes = 0;
  for (int i = 0; i < d; ++i) {
    q[i] += 1;
    const bool up = c.color(q) != base;
    q[i] -= 2;
    const bool down = c.color(q) != base;
    q[i] += 1;
    neighbors += up + down;
    axes += up || down;
  }
  consider(part.s, neighbors, q);
  consider(part.r, axes, q);
  consider(base == Color::Red ? part.sR : part.sB, axes, q);
  part.points++;
}

ColoringReport finish_report(const Coloring& c, ScanPartial&& total,
                             ScanMode mode, uint64_t probes) {
  ColoringReport rep;
  rep.d = c.dimension();
  rep.mode = mode;
  rep.points = total.points;
  rep.probes = probes;
  rep.s = std::max(total.s.value, 0);
  rep.r = std::max(total.r.value, 0);
  rep.sR = std::max(total.sR.value, 0);
  rep.sB = std::max(total.sB.value, 0);
  rep.s_witness = {rep.s, std::move(total.s.where)};
  rep.r_witness = {rep.r, std::move(total.r.where)};
  if (total.sR.value >= 0)
    rep.sR_witness = PointValue{rep.sR, std::move(total.sR.where)};
  if (total.sB.value >= 0)
    rep.sB_witness = PointValue{rep.sB, std::move(total.sB.where)};
  return rep;
}

void check_domain(const Coloring& c, const ScanDomain& dom) {
  if (static_cast<int>(dom.axis_values.size()) != c.dimension())
    throw PreconditionError("domain dimension mismatch");
  for (const auto& vals : dom.axis_values)
    if (vals.empty()) throw PreconditionError("empty axis value set");
}

}  // namespace

ColoringReport scan_domain_report(const Coloring& c, const ScanDomain& dom,
                                  const ScanLimits& lim) {
  check_domain(c, dom);
  const int d = c.dimension();
  const uint64_t vol = dom.volume();
  const uint64_t per_point = 2 * static_cast<uint64_t>(d) + 1;
  if (vol == 0) throw PreconditionError("empty scan domain");
  if (vol > lim.max_probes / per_point)
    throw ResourceLimitError(
        "exact scan needs " + std::to_string(vol) + " points x " +
        std::to_string(per_point) + " probes, over the cap of " +
        std::to_string(lim.max_probes));

  auto chunk_fn = [&](uint64_t lo, uint64_t hi) {
    ScanPartial part;
    Point q(d);
    std::vector<size_t> digit(d, 0);
    uint64_t rest = lo;
    for (int i = d - 1; i >= 0; --i) {
      digit[i] = rest % dom.axis_values[i].size();
      rest /= dom.axis_values[i].size();
      q[i] = dom.axis_values[i][digit[i]];
    }
    for (uint64_t flat = lo; flat < hi; ++flat) {
      scan_point(c, q, part);
      // Odometer step, last axis fastest: iteration order is ascending
      // lexicographic over points.
      for (int i = d - 1; i >= 0; --i) {
        if (++digit[i] < dom.axis_values[i].size()) {
          q[i] = dom.axis_values[i][digit[i]];
          break;
        }
        digit[i] = 0;
        q[i] = dom.axis_values[i][0];
      }
    }
    return part;
  };

  auto total = chunked_reduce(uint64_t{0}, vol, 8192, lim.threads,
                              ScanPartial{}, chunk_fn, merge_partial);
  return finish_report(c, std::move(total), dom.mode, vol * per_point);
}

ColoringReport exact_report(const Coloring& c, const ScanLimits& lim) {
  auto dom = c.exact_domain();
  if (!dom)
    throw PreconditionError("no exact scan mode for coloring kind '" +
                            c.kind() + "'");
  return scan_domain_report(c, *dom, lim);
}

ColoringReport scan_box_report(const Coloring& c, const Point& lo,
                               const Point& hi, const ScanLimits& lim) {
  const int d = c.dimension();
  if (static_cast<int>(lo.size()) != d || static_cast<int>(hi.size()) != d)
    throw PreconditionError("box dimension mismatch");
  ScanDomain dom;
  dom.mode = ScanMode::BoxScan;
  dom.axis_values.resize(d);
  uint64_t vol = 1;
  for (int i = 0; i < d; ++i) {
    if (lo[i] > hi[i]) throw PreconditionError("box lo > hi");
    const uint64_t len = static_cast<uint64_t>(hi[i] - lo[i]) + 1;
    if (len > lim.max_probes || vol > lim.max_probes / len)
      throw ResourceLimitError("box exceeds probe cap");
    vol *= len;
  }
  for (int i = 0; i < d; ++i) {
    auto& vals = dom.axis_values[i];
    vals.resize(static_cast<size_t>(hi[i] - lo[i] + 1));
    for (size_t t = 0; t < vals.size(); ++t)
      vals[t] = lo[i] + static_cast<int64_t>(t);
  }
  return scan_domain_report(c, dom, lim);
}

namespace {

ColoringReport sampled_common(
    const Coloring& c, uint64_t samples, uint64_t seed,
    const std::vector<Point>& witnesses, const ScanLimits& lim,
    const std::function<void(std::mt19937_64&, Point&)>& draw) {
  const int d = c.dimension();
  ScanPartial total;
  Point q(d);
  for (const auto& w : witnesses) {
    if (static_cast<int>(w.size()) != d)
      throw PreconditionError("witness dimension mismatch");
    q = w;
    scan_point(c, q, total);
  }
  auto chunk_fn = [&](uint64_t lo, uint64_t hi) {
    ScanPartial part;
    Point p(d);
    for (uint64_t i = lo; i < hi; ++i) {
      std::mt19937_64 rng(splitmix64(seed ^ splitmix64(i + 1)));
      draw(rng, p);
      scan_point(c, p, part);
    }
    return part;
  };
  auto sampled = chunked_reduce(uint64_t{0}, samples, 16384, lim.threads,
                                ScanPartial{}, chunk_fn, merge_partial);
  merge_partial(total, std::move(sampled));
  const uint64_t points = total.points;
  return finish_report(c, std::move(total), ScanMode::Sampled,
                       points * (2 * static_cast<uint64_t>(d) + 1));
}

}  // namespace

ColoringReport sampled_report(const Coloring& c, const Point& lo,
                              const Point& hi, uint64_t samples, uint64_t seed,
                              const std::vector<Point>& witnesses,
                              const ScanLimits& lim) {
  const int d = c.dimension();
  if (static_cast<int>(lo.size()) != d || static_cast<int>(hi.size()) != d)
    throw PreconditionError("box dimension mismatch");
  for (int i = 0; i < d; ++i)
    if (lo[i] > hi[i]) throw PreconditionError("box lo > hi");
  auto draw = [&](std::mt19937_64& rng, Point& p) {
    for (int i = 0; i < d; ++i) {
      const uint64_t span = static_cast<uint64_t>(hi[i] - lo[i]) + 1;
      p[i] = lo[i] + static_cast<int64_t>(rng() % span);
    }
  };
  return sampled_common(c, samples, seed, witnesses, lim, draw);
}

ColoringReport sampled_domain_report(const Coloring& c, const ScanDomain& dom,
                                     uint64_t samples, uint64_t seed,
                                     const std::vector<Point>& witnesses,
                                     const ScanLimits& lim) {
  check_domain(c, dom);
  auto draw = [&](std::mt19937_64& rng, Point& p) {
    for (size_t i = 0; i < dom.axis_values.size(); ++i)
      p[i] = dom.axis_values[i][rng() % dom.axis_values[i].size()];
  };
  return sampled_common(c, samples, seed, witnesses, lim, draw);
}

}  // namespace latsens
