#include <random>

#include "doctest.h"
#include "latsens/constructions.hpp"
#include "latsens/errors.hpp"
#include "latsens/io.hpp"
#include "latsens/reductions.hpp"
#include "oracles.hpp"

using namespace latsens;

namespace {

const std::vector<BlockMask> kSortedBlocks{0b0001, 0b0010, 0b1100};

}  // namespace

TEST_CASE("function_to_coloring on the sorted example") {
  TruthTable f = sorted_function();
  auto res = function_to_coloring(f, kSortedBlocks, 2);  // x* = 0100
  CHECK(res.coloring->dimension() == 3);
  CHECK(res.coloring->box() == std::vector<int64_t>{1, 1, 2});

  // Normalized base: all-zeros input, output 0, blocks sensitive there.
  CHECK(res.normalized.eval(0) == 0);
  for (BlockMask b : kSortedBlocks)
    CHECK(res.normalized.eval(b) == 1);

  // Origin red, blue at distance b_i on each axis.
  CHECK(res.coloring->color(Point{0, 0, 0}) == Color::Red);
  CHECK(res.coloring->color(Point{1, 0, 0}) == Color::Blue);
  CHECK(res.coloring->color(Point{0, 1, 0}) == Color::Blue);
  CHECK(res.coloring->color(Point{0, 0, 2}) == Color::Blue);

  // Full-period exact scan: s(C) <= s(f) = 2.
  CHECK(res.cert.s_f == 2);
  CHECK(res.cert.s_C <= 2);
  CHECK(res.cert.all_hold());
  CHECK(res.cert.s_check_mode == "exact-period");

  // Mirror tiling: no color change crosses a box boundary.
  CHECK(mirror_boundary_check(*res.coloring));

  // Independent window scan agrees with the certificate's s(C).
  auto naive = oracles::naive_scan(*res.coloring, Point{-9, -9, -13},
                                   Point{9, 9, 13});
  CHECK(naive.s == res.cert.s_C);

  // min-width is the largest block size here.
  CHECK(min_width(*res.coloring, 8).k == 2);

  auto verified = verify_certificate(res.cert);
  CHECK(verified.ok);
}

TEST_CASE("function_to_coloring on rubinstein_f(2)") {
  auto f2 = rubinstein_f(2);
  auto res = function_to_coloring(*f2.table, {0b0011, 0b1100}, 0);
  CHECK(res.coloring->dimension() == 2);
  CHECK(res.cert.s_C <= res.cert.s_f);
  CHECK(res.cert.s_f == 2);
  CHECK(verify_certificate(res.cert).ok);
}

TEST_CASE("function_to_coloring single-bit block") {
  // AND_2 at x* = 11 is sensitive to flipping bit 1 alone.
  TruthTable f = TruthTable::from_hex(2, "8");
  auto res = function_to_coloring(f, {0b01}, 3);
  CHECK(res.coloring->dimension() == 1);
  CHECK(res.cert.output_complemented);  // f(x*) = 1 forces a complement
  CHECK(res.coloring->color(Point{1}) == Color::Blue);
  CHECK(res.cert.s_C == 1);
  CHECK(verify_certificate(res.cert).ok);
}

TEST_CASE("function_to_coloring rejects bad blocks") {
  TruthTable f = sorted_function();
  CHECK_THROWS_AS(
      (void)function_to_coloring(f, {0b0011, 0b0001}, 2),
      PreconditionError);  // overlap
  CHECK_THROWS_AS((void)function_to_coloring(f, {0b1000}, 2),
                  BlockNotSensitiveError);  // {4} not sensitive at 0100
  CHECK_THROWS_AS((void)function_to_coloring(f, {}, 2), PreconditionError);
}

TEST_CASE("coloring_to_function identity case") {
  // Blue exactly at +1 on the single axis: f is the identity on one bit.
  auto c = std::make_shared<SlicedColoring>(
      1, std::vector<Slice>{Slice{0, 1, {}}});
  auto res = coloring_to_function(c, 8);
  CHECK(res.n == 1);
  REQUIRE(res.table.has_value());
  CHECK(res.table->eval(0) == 0);
  CHECK(res.table->eval(1) == 1);
  CHECK(res.cert.s_f == 1);
  CHECK(res.cert.min_width_k == 1);
  CHECK(res.cert.all_hold());
  CHECK(block_symmetry_check(res));  // vacuous for 1-bit blocks
  CHECK(verify_certificate(res.cert).ok);
}

TEST_CASE("coloring_to_function two-axis case") {
  // Blue at (2,0) and (0,1) only.
  auto c = std::make_shared<SlicedColoring>(
      2, std::vector<Slice>{Slice{0, 2, {1}}, Slice{1, 1, {0}}});
  auto res = coloring_to_function(c, 8);
  CHECK(res.block_sizes == std::vector<int64_t>{2, 1});
  CHECK(res.n == 3);
  REQUIRE(res.table.has_value());
  // f = 1 exactly when both bits of block 1 are set and bit 3 clear, or
  // block 1 clear and bit 3 set.
  for (uint64_t y = 0; y < 8; ++y) {
    const int z1 = static_cast<int>((y & 1) + ((y >> 1) & 1));
    const int z2 = static_cast<int>((y >> 2) & 1);
    const bool blue = (z1 == 2 && z2 == 0) || (z1 == 0 && z2 == 1);
    CHECK(res.table->eval(y) == (blue ? 1 : 0));
  }
  CHECK(block_symmetry_check(res));
  CHECK(verify_certificate(res.cert).ok);

  // Toggling one table bit breaks within-block symmetry.
  ColoringToFnResult broken = res;
  broken.table->set(1, 1 - broken.table->eval(1));  // y = 100 (bit 1 only)
  CHECK(!block_symmetry_check(broken));
}

TEST_CASE("coloring_to_function reflects toward the nearest blue") {
  // Blue only at -3: the reflection makes it +3, f becomes AND_3.
  auto c = std::make_shared<SlicedColoring>(
      1, std::vector<Slice>{Slice{0, -3, {}}});
  auto res = coloring_to_function(c, 8);
  CHECK(res.signs == std::vector<int>{-1});
  CHECK(res.block_sizes == std::vector<int64_t>{3});
  REQUIRE(res.table.has_value());
  for (uint64_t y = 0; y < 8; ++y)
    CHECK(res.table->eval(y) == (y == 7 ? 1 : 0));
  CHECK(res.cert.s_f == 3);
  CHECK(res.cert.all_hold());  // s(f) = 3 <= k * r(C) = 3 * 1, tight
  CHECK(verify_certificate(res.cert).ok);

  // Equidistant blue on both sides resolves to +.
  auto both = std::make_shared<SlicedColoring>(
      1, std::vector<Slice>{Slice{0, 2, {}}, Slice{0, -2, {}}});
  auto res2 = coloring_to_function(both, 8);
  CHECK(res2.signs == std::vector<int>{+1});
  CHECK(res2.block_sizes == std::vector<int64_t>{2});
}

TEST_CASE("coloring_to_function requires non-triviality") {
  auto red = std::make_shared<SlicedColoring>(2, std::vector<Slice>{});
  CHECK_THROWS_AS((void)coloring_to_function(red, 8), PreconditionError);
}

TEST_CASE("round trip: coloring_to_function after function_to_coloring") {
  TruthTable f = sorted_function();
  auto fwd = function_to_coloring(f, kSortedBlocks, 2);
  auto back = coloring_to_function(
      std::static_pointer_cast<const Coloring>(fwd.coloring), 8);
  // The derived function has all three axis blocks sensitive at 0, so its
  // block sensitivity is at least the number of blocks.
  REQUIRE(back.table.has_value());
  CHECK(back.table->eval(0) == 0);
  int offset = 0;
  for (int64_t b : back.block_sizes) {
    const uint64_t block = ((uint64_t{1} << b) - 1) << offset;
    CHECK(back.table->eval(block) == 1);
    offset += static_cast<int>(b);
  }
  CHECK(block_sensitivity(*back.table).value >=
        static_cast<int>(kSortedBlocks.size()));
  CHECK(verify_certificate(back.cert).ok);
}

TEST_CASE("tampered certificates fail verification") {
  TruthTable f = sorted_function();
  auto res = function_to_coloring(f, kSortedBlocks, 2);
  auto cert = res.cert;
  cert.s_C += 1;  // witness no longer replays
  CHECK(!verify_certificate(cert).ok);

  auto cert2 = res.cert;
  cert2.inequalities[0].rhs = -1;
  CHECK(!verify_certificate(cert2).ok);
}
