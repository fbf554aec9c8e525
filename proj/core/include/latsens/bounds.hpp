#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "latsens/boolfn.hpp"
#include "latsens/lattice.hpp"

namespace latsens {

using Rational = boost::multiprecision::cpp_rational;

// c_l = (1 + 1/(l-1))^(l-1) / (l-1)! for l >= 2; c_1 = 1 by convention
// (bs_1 = s makes the l = 1 bound tight with constant 1).  Exact rational;
// the double is display-only.
struct KKConstant {
  int l = 1;
  Rational value = 1;
  double approx = 1.0;
};
KKConstant kk_constant(int l);

// Rational lower bound on e: sum_{k<=terms} 1/k!.  Strictly below e, so
// "x < e_lower" certifies "x < e" in exact arithmetic.
Rational e_lower_bound(int terms = 60);

struct KKCheckItem {
  int l = 0;
  int bs_l = 0;
  Rational bound;  // c_l * s^l
  bool holds = false;
};

struct KKCheckReport {
  int n = 0;
  int s = 0;
  int bs = 0;
  std::vector<KKCheckItem> items;  // l = 1..s
  double corollary_rhs = 0.0;      // e^(s+1) * sqrt(s / 2 pi)
  bool corollary_holds = false;    // bs < rhs (vacuous for s = 0)
  bool passed = false;
};

// bs_l(f) <= c_l s(f)^l for every l in 1..s(f), compared in exact rational
// arithmetic, plus the Stirling corollary bs(f) < e^(s+1) sqrt(s / 2 pi).
KKCheckReport kk_check(const TruthTable& f, const MeasureLimits& lim = {});
KKCheckReport kk_check_from_measures(const MeasureReport& m);

struct LatticeLowerBoundReport {
  int d = 0;
  int64_t k = 0;
  int s = 0;  // point-sensitivity maximum
  int r = 0;  // axis-sensitivity maximum (r <= s)
  double bound = 0.0;  // d^(1/k) / e^2
  bool holds_r = false;  // r >= bound - 1e-12 (implies holds_s)
  bool holds_s = false;
  bool passed = false;
};

// s(C) >= d^(1/k) / e^2.  Checked on both the axis maximum r (the stronger
// claim, and the value the slice constructions are stated in) and the point
// maximum s, with 1e-12 slack on the comparison.
LatticeLowerBoundReport lattice_lower_bound_check(int d, int64_t k, int s,
                                                  int r);

// Directed graph on d vertices, one per dimension, after relabeling each
// slice by its non-zero axis: edge i -> j iff dimension i is in the zero
// set of slice j.  Slices i and j intersect iff neither edge is present.
struct SliceGraph {
  int d = 0;
  std::vector<uint32_t> out;         // out[i] bit j = edge i -> j
  std::vector<uint32_t> undirected;  // companion
  std::vector<int64_t> slice_c;      // constant of the slice on axis i
  bool edge(int i, int j) const { return (out[i] >> j) & 1u; }
  bool undirected_edge(int i, int j) const { return (undirected[i] >> j) & 1u; }
  int64_t total_degree() const;
};

// Requires conformance: exactly d slices, distinct non-zero axes covering
// every dimension, all |c| >= 3, d <= 32.
SliceGraph slice_graph(const SlicedColoring& c);

// Exact maximum independent set by branch and bound, vertices explored in
// ascending index order.  adj[i] bit j = edge {i, j}; no self loops.
int max_independent_set(const std::vector<uint32_t>& adj,
                        std::vector<int>* witness = nullptr);

// Largest set of pairwise-intersecting slices.  Pairwise intersection
// implies a common point for the whole set; the witness common point is
// built from the slice constraints and verified to be in every chosen
// slice.  Derived from slice geometry directly, not from slice_graph.
struct MutualIntersection {
  int value = 0;
  std::vector<int> slice_axes;  // 0-based axes of the chosen slices
  Point common_point;
};
MutualIntersection max_mutual_intersection(const SlicedColoring& c);

// How a measured quantity was obtained.
struct MeasuredValue {
  int value = 0;
  std::string basis;  // "exact-scan" | "lemma-derived" | "witness"
};

struct CheckItem {
  std::string name;
  long long lhs = 0;
  long long rhs = 0;
  std::string relation;
  bool holds = false;
  std::string basis;
};

struct BoundCheckReport {
  std::string theorem;
  std::vector<CheckItem> items;
  bool passed = false;
  void add(std::string name, long long lhs, std::string relation,
           long long rhs, std::string basis = "");
};

// The d <= s^R (2 s^B - 1) chain for a conformant sliced coloring:
// |B_i| <= s^B - 1 for every slice, independence number of the slice graph
// <= s^R (and the Turan lower bound d / (avg degree + 1)), the headline
// inequality, and d <= 2 r^2 - r with r = max(s^R, s^B).
BoundCheckReport sliced_bound_check(const SlicedColoring& c, MeasuredValue sR,
                                    MeasuredValue sB);

// For a repeated coloring: verifies s^R(inner) = 1 exactly, the repeated
// lemmas s^R(C) = copies and s^B(C) = s^B(inner) (exact product scan when
// affordable, witness + sampled tripwire otherwise), d <= s^R (2 s^B - 1),
// and the cited-without-proof k <= 2 s^B(inner) - 1 instance on the inner
// coloring (a violation is reported as a finding, distinct from failures).
struct RepeatedBoundReport {
  BoundCheckReport checks;
  int sR = 0, sB = 0;
  std::string sR_basis, sB_basis;
  bool palvolgyi_instance_holds = true;
};
RepeatedBoundReport repeated_bound_check(const RepeatedColoring& c,
                                         const ScanLimits& lim = {},
                                         uint64_t tripwire_samples = 0,
                                         uint64_t seed = 0);

}  // namespace latsens
