#include <algorithm>
#include <random>

#include "doctest.h"
#include "latsens/constructions.hpp"
#include "latsens/errors.hpp"
#include "latsens/lattice.hpp"
#include "oracles.hpp"

using namespace latsens;

namespace {

ColoringPtr checkerboard(int d) {
  return std::make_shared<CallbackColoring>(d, [](std::span<const int64_t> p) {
    int64_t sum = 0;
    for (int64_t v : p) sum += v;
    return (sum % 2 + 2) % 2 ? Color::Blue : Color::Red;
  });
}

ColoringPtr all_red(int d) {
  return std::make_shared<SlicedColoring>(d, std::vector<Slice>{});
}

ColoringPtr all_blue(int d) {
  return std::make_shared<CallbackColoring>(
      d, [](std::span<const int64_t>) { return Color::Blue; });
}

Point pt(std::initializer_list<int64_t> v) { return Point(v); }

}  // namespace

TEST_CASE("point and axis sensitivity") {
  auto board = checkerboard(2);
  CHECK(point_sensitivity(*board, pt({0, 0})) == 4);
  CHECK(point_sensitivity(*board, pt({5, -3})) == 4);
  CHECK(axis_sensitivity(*board, pt({0, 0})) == 2);
  CHECK(axis_sensitivity(*board, pt({5, -3})) == 2);

  auto red = all_red(3);
  CHECK(point_sensitivity(*red, pt({1, 2, 3})) == 0);
  CHECK(axis_sensitivity(*red, pt({1, 2, 3})) == 0);

  auto c2 = slice_coloring(2);
  CHECK(point_sensitivity(*c2, pt({4, 0, 0, 4, 0, 0})) == 2);
  CHECK(axis_sensitivity(*c2, pt({4, 0, 0, 4, 0, 0})) == 2);

  CHECK_THROWS_AS((void)point_sensitivity(*red, pt({0, 0})),
                  PreconditionError);
}

TEST_CASE("axis <= point <= 2 * axis, everywhere sampled") {
  std::mt19937_64 rng(3);
  auto c2 = slice_coloring(2);
  for (int trial = 0; trial < 2000; ++trial) {
    Point p(6);
    for (auto& v : p) v = static_cast<int64_t>(rng() % 11) - 5;
    const int s = point_sensitivity(*c2, p);
    const int r = axis_sensitivity(*c2, p);
    REQUIRE(r <= s);
    REQUIRE(s <= 2 * r);
  }
}

TEST_CASE("min_width") {
  auto c2 = slice_coloring(2);
  auto w = min_width(*c2, 16);
  CHECK(w.k == 3);
  for (const auto& ab : w.nearest) {
    CHECK(ab.distance == 3);
    CHECK(ab.sign == +1);  // blue only on the positive side
    CHECK(!ab.blue_minus);
  }
  CHECK_THROWS_AS((void)min_width(*all_red(2), 8), MinWidthError);
  CHECK_THROWS_AS((void)min_width(*c2, 0), PreconditionError);
  // A cap below the true width is an explicit error, never "trivial".
  CHECK_THROWS_AS((void)min_width(*c2, 2), MinWidthError);
}

TEST_CASE("check_nontrivial") {
  for (int n : {1, 2, 3}) {
    auto rep = check_nontrivial(*slice_coloring(n), 8);
    CHECK(rep.passed);
    CHECK(rep.origin_red);
    CHECK(rep.width->k == 3);
  }
  auto blue = check_nontrivial(*all_blue(2), 8);
  CHECK(!blue.passed);
  CHECK(blue.failure == "origin not red");
  auto red = check_nontrivial(*all_red(2), 8);
  CHECK(!red.passed);
  CHECK(red.cap_exhausted);
  CHECK(red.failure.find("axis 1") != std::string::npos);
}

TEST_CASE("representative_box value sets") {
  auto c2 = slice_coloring(2);
  auto dom = representative_box(*c2);
  const std::vector<int64_t> expected{-1, 0, 1, 2, 3, 4, 6};
  for (const auto& vals : dom.axis_values) CHECK(vals == expected);

  // One slice on axis 1, zero set {2}: axis 2 only sees the 0 predicate.
  SlicedColoring single(2, {Slice{0, 3, {1}}});
  auto sdom = representative_box(single);
  CHECK(sdom.axis_values[0] == expected);
  CHECK(sdom.axis_values[1] == std::vector<int64_t>{-1, 0, 1, 3});
}

TEST_CASE("representative mapping preserves the local color pattern") {
  auto c2 = slice_coloring(2);
  auto dom = representative_box(*c2);
  // Coordinate-wise map to the representative: keep values near a relevant
  // value, send everything else to the generic far value.
  auto map_value = [&](int axis, int64_t v) {
    const auto& keep = dom.axis_values[axis];
    const int64_t g = keep.back();
    if (std::find(keep.begin(), keep.end(), v) != keep.end() && v != g)
      return v;
    return g;
  };
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 10000; ++trial) {
    Point p(6), rep(6);
    for (int i = 0; i < 6; ++i) {
      p[i] = static_cast<int64_t>(rng() % 2001) - 1000;
      rep[i] = map_value(i, p[i]);
    }
    REQUIRE(c2->color(p) == c2->color(rep));
    Point q = p, qr = rep;
    for (int i = 0; i < 6; ++i) {
      for (int dir : {+1, -1}) {
        q[i] += dir;
        qr[i] += dir;
        REQUIRE(c2->color(q) == c2->color(qr));
        q[i] -= dir;
        qr[i] -= dir;
      }
    }
  }
}

TEST_CASE("exact report for sliced colorings") {
  auto c2 = slice_coloring(2);
  auto rep = exact_report(*c2, {.max_probes = 100'000'000, .threads = 0});
  CHECK(rep.mode == ScanMode::ExactRepresentative);
  CHECK(rep.r == 2);
  CHECK(rep.sR == 2);
  CHECK(rep.sB == 2);
  CHECK(rep.d == 6);
  // A blue point in exactly one slice, e.g. (3,0,0,0,0,0), has red
  // neighbors on both sides of its fixed axes: four differing neighbors.
  CHECK(rep.s == 4);
  CHECK(point_sensitivity(*c2, pt({3, 0, 0, 0, 0, 0})) == 4);
  // Axis counts bound neighbor counts both ways.
  CHECK(rep.r <= rep.s);
  CHECK(rep.s <= 2 * rep.r);
  // Independent route: brute window scan covering all value patterns.
  auto naive = oracles::naive_scan(*c2, Point(6, -2), Point(6, 5));
  CHECK(naive.r == rep.r);
  CHECK(naive.s == rep.s);
  CHECK(naive.sR == rep.sR);
  CHECK(naive.sB == rep.sB);
  // Witnesses replay.
  CHECK(point_sensitivity(*c2, rep.s_witness.where) == rep.s);
  CHECK(axis_sensitivity(*c2, rep.r_witness.where) == rep.r);
  REQUIRE(rep.sR_witness.has_value());
  CHECK(c2->color(rep.sR_witness->where) == Color::Red);
  CHECK(axis_sensitivity(*c2, rep.sR_witness->where) == rep.sR);
  REQUIRE(rep.sB_witness.has_value());
  CHECK(c2->color(rep.sB_witness->where) == Color::Blue);
  CHECK(axis_sensitivity(*c2, rep.sB_witness->where) == rep.sB);

  SlicedColoring single(2, {Slice{0, 3, {1}}});
  auto srep = exact_report(single, {});
  CHECK(srep.sB == 2);  // (3,0) has red neighbors along both axes

  auto empty = exact_report(*all_red(2), {});
  CHECK(empty.r == 0);
  CHECK(empty.s == 0);
}

TEST_CASE("exact report for slice groups") {
  auto g2 = slice_group(2);
  auto rep = exact_report(*g2, {});
  CHECK(rep.d == 3);
  CHECK(rep.sR == 1);
  CHECK(rep.sB == 2);
  CHECK(rep.r == 2);
  CHECK(rep.s == 4);

  auto g3 = slice_group(3);
  auto rep3 = exact_report(*g3, {});
  CHECK(rep3.d == 5);
  CHECK(rep3.sR == 1);
  CHECK(rep3.sB == 3);
}

TEST_CASE("exact scans compose through reflected and doubled wrappers") {
  auto g2 = slice_group(2);
  auto base = exact_report(*g2, {});
  // Reflection permutes the lattice; every maximum is preserved.
  auto refl = reflect(g2, {-1, 1, -1});
  auto rrep = exact_report(*refl, {});
  CHECK(rrep.s == base.s);
  CHECK(rrep.r == base.r);
  CHECK(rrep.sR == base.sR);
  CHECK(rrep.sB == base.sB);
  // Doubling after reflecting still turns axis counts into neighbor counts.
  auto dbl = exact_report(*double_coloring(refl), {});
  CHECK(dbl.s == base.r);
  CHECK(dbl.r == base.r);
}

TEST_CASE("measures are independent of the worker count") {
  TruthTable t = random_table(12, 99);
  MeasureLimits one, many;
  one.threads = 1;
  many.threads = 8;
  auto a = measure(t, one);
  auto b = measure(t, many);
  CHECK(a.sens.s == b.sens.s);
  CHECK(a.bs == b.bs);
  CHECK(a.bs_l == b.bs_l);
  CHECK(a.bs_witness.input == b.bs_witness.input);
  CHECK(a.bs_witness.family == b.bs_witness.family);
  CHECK(a.bs_l_witness == b.bs_l_witness);
}

TEST_CASE("min_width records which side carries the nearest blue") {
  SlicedColoring both(1, {Slice{0, 2, {}}, Slice{0, -2, {}}});
  auto w = min_width(both, 4);
  REQUIRE(w.nearest.size() == 1);
  CHECK(w.nearest[0].sign == +1);  // tie resolves to +
  CHECK(w.nearest[0].blue_minus);

  SlicedColoring neg(1, {Slice{0, -3, {}}});
  auto wn = min_width(neg, 4);
  CHECK(wn.nearest[0].sign == -1);
  CHECK(wn.nearest[0].point == Point{-3});
}

TEST_CASE("periodic exact scan") {
  // d=1, b=1, base (Red, Blue): the tiling is R B B R repeating.
  MirrorPeriodicColoring c({1}, {0, 1});
  auto rep = exact_report(c, {});
  CHECK(rep.mode == ScanMode::ExactPeriod);
  CHECK(rep.s == 1);
  CHECK(rep.r == 1);
  auto naive = oracles::naive_scan(c, {-8}, {8});
  CHECK(naive.s == 1);

  MirrorPeriodicColoring red({2, 2}, std::vector<uint8_t>(9, 0));
  auto rrep = exact_report(red, {});
  CHECK(rrep.s == 0);

  // Translation invariance: shifting the scan window by one full period
  // changes nothing.
  auto w1 = scan_box_report(c, {0}, {3}, {});
  auto w2 = scan_box_report(c, {4}, {7}, {});
  CHECK(w1.s == w2.s);
  CHECK(w1.r == w2.r);
  CHECK(w1.sR == w2.sR);
  CHECK(w1.sB == w2.sB);
}

TEST_CASE("exact scans refuse over the probe cap and on oracle kinds") {
  ScanLimits tiny;
  tiny.max_probes = 10;
  CHECK_THROWS_AS((void)exact_report(*slice_coloring(2), tiny),
                  ResourceLimitError);
  CHECK_THROWS_AS((void)exact_report(*checkerboard(2), {}),
                  PreconditionError);
  CHECK_THROWS_AS((void)exact_report(*slice_coloring(3), {}),
                  ResourceLimitError);  // 7^15 representative points
}

TEST_CASE("scan is independent of the worker count") {
  auto c2 = slice_coloring(2);
  ScanLimits one{.max_probes = 100'000'000, .threads = 1};
  ScanLimits many{.max_probes = 100'000'000, .threads = 7};
  auto a = exact_report(*c2, one);
  auto b = exact_report(*c2, many);
  CHECK(a.s == b.s);
  CHECK(a.r == b.r);
  CHECK(a.s_witness.where == b.s_witness.where);
  CHECK(a.r_witness.where == b.r_witness.where);
  CHECK(a.sR_witness->where == b.sR_witness->where);
  CHECK(a.sB_witness->where == b.sB_witness->where);
}

TEST_CASE("sampled report") {
  auto c2 = slice_coloring(2);
  auto dom = representative_box(*c2);
  auto rep = sampled_domain_report(*c2, dom, 100000, 1);
  CHECK(rep.mode == ScanMode::Sampled);
  CHECK(rep.r <= 2);  // lower bounds never exceed the exact value

  auto zero = sampled_report(*all_red(2), pt({0, 0}), pt({0, 0}), 0, 0);
  CHECK(zero.s == 0);
  CHECK(zero.points == 0);

  // Same seed, same result; witnesses always included.
  auto again = sampled_domain_report(*c2, dom, 100000, 1);
  CHECK(again.r_witness.where == rep.r_witness.where);
  Point witness{3, 0, 0, 0, 0, 0};
  auto with_wit = sampled_report(*c2, Point(6, 0), Point(6, 0), 0, 0,
                                 {witness});
  CHECK(with_wit.sB == 2);
}

TEST_CASE("double_coloring") {
  // 1-d checkerboard: s per point drops from 2 to 1, r stays 1.
  auto board = checkerboard(1);
  auto doubled = double_coloring(board);
  auto naive_in = oracles::naive_scan(*board, {-8}, {8});
  CHECK(naive_in.s == 2);
  CHECK(naive_in.r == 1);
  auto naive_out = oracles::naive_scan(*doubled, {-8}, {8});
  CHECK(naive_out.s == 1);
  CHECK(naive_out.r == 1);

  auto red = double_coloring(all_red(2));
  CHECK(point_sensitivity(*red, pt({3, 4})) == 0);

  // s(doubled) = r(original) via exact scans.
  auto g2 = slice_group(2);
  auto inner_rep = exact_report(*g2, {});
  auto doubled_rep = exact_report(*double_coloring(g2), {});
  CHECK(doubled_rep.s == inner_rep.r);
  CHECK(doubled_rep.r == inner_rep.r);
}

TEST_CASE("reflect") {
  SlicedColoring neg(1, {Slice{0, -3, {}}});
  auto refl = reflect(std::make_shared<SlicedColoring>(neg), {-1});
  CHECK(neg.color(pt({-3})) == Color::Blue);
  CHECK(refl->color(pt({3})) == Color::Blue);
  CHECK(refl->color(pt({-3})) == Color::Red);

  auto c2 = slice_coloring(2);
  auto same = reflect(c2, {1, 1, 1, 1, 1, 1});
  auto twice = reflect(reflect(c2, {1, -1, 1, -1, 1, -1}),
                       {1, -1, 1, -1, 1, -1});
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    Point p(6);
    for (auto& v : p) v = static_cast<int64_t>(rng() % 13) - 6;
    CHECK(same->color(p) == c2->color(p));
    CHECK(twice->color(p) == c2->color(p));
  }
  CHECK_THROWS_AS((void)reflect(c2, {1, 1}), PreconditionError);
  CHECK_THROWS_AS((void)reflect(c2, {1, 1, 1, 1, 1, 2}), PreconditionError);
}

TEST_CASE("repeated_coloring verifies its precondition") {
  auto g2 = slice_group(2);
  auto rep2 = repeated_coloring(g2, 2);
  CHECK(rep2->dimension() == 6);

  // copies = 1 is oracle-equal to the inner coloring.
  auto once = repeated_coloring(g2, 1);
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 1000; ++trial) {
    Point p(3);
    for (auto& v : p) v = static_cast<int64_t>(rng() % 13) - 6;
    CHECK(once->color(p) == g2->color(p));
  }

  // slice_coloring(2) has s^R = 2, so it cannot be an inner coloring.
  CHECK_THROWS_AS((void)repeated_coloring(slice_coloring(2), 2),
                  PreconditionError);
  // Oracle-only inner colorings need an explicit check box.
  CHECK_THROWS_AS((void)repeated_coloring(checkerboard(2), 2),
                  PreconditionError);
}

TEST_CASE("repeated slice groups reproduce the full slice coloring") {
  auto direct = slice_coloring(2);
  auto rebuilt = repeated_coloring(slice_group(2), 2);
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 10000; ++trial) {
    Point p(6);
    for (auto& v : p) v = static_cast<int64_t>(rng() % 17) - 8;
    REQUIRE(rebuilt->color(p) == direct->color(p));
  }
  // s^R of the two-copy coloring is 2.
  auto rep = exact_report(*rebuilt, {});
  CHECK(rep.sR == 2);
}

TEST_CASE("mirror boundary crossings never change color") {
  MirrorPeriodicColoring c({1, 2}, {0, 1, 0, 0, 1, 1});
  CHECK(mirror_boundary_check(c));
}

TEST_CASE("slice validation") {
  CHECK_THROWS_AS(SlicedColoring(2, {Slice{0, 0, {}}}), PreconditionError);
  CHECK_THROWS_AS(SlicedColoring(2, {Slice{2, 3, {}}}), PreconditionError);
  CHECK_THROWS_AS(SlicedColoring(2, {Slice{0, 3, {0}}}), PreconditionError);
  CHECK_THROWS_AS(MirrorPeriodicColoring({0}, {0}), PreconditionError);
  CHECK_THROWS_AS(MirrorPeriodicColoring({1}, {0, 1, 0}), PreconditionError);
}
