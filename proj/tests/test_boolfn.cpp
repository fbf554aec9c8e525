#include <algorithm>
#include <bit>
#include <random>

#include "doctest.h"
#include "latsens/boolfn.hpp"
#include "latsens/constructions.hpp"
#include "latsens/errors.hpp"
#include "oracles.hpp"

using namespace latsens;

namespace {

TruthTable and2() { return TruthTable::from_hex(2, "8"); }

MeasureLimits single_thread() {
  MeasureLimits lim;
  lim.threads = 1;
  return lim;
}

}  // namespace

TEST_CASE("eval and index convention") {
  TruthTable f = and2();
  CHECK(f.eval(3) == 1);
  CHECK(f.eval(2) == 0);
  CHECK(f.eval(0) == 0);
  CHECK(sorted_function().eval(0) == 1);  // accepts 0000
  CHECK_THROWS_AS((void)f.eval(4), std::out_of_range);
}

TEST_CASE("sensitivity_at") {
  CHECK(sensitivity_at(sorted_function(), 0) == 2);
  TruthTable zero = constant_table(3, 0);
  for (uint64_t x = 0; x < zero.size(); ++x) CHECK(sensitivity_at(zero, x) == 0);
  CHECK(sensitivity_at(and2(), 3) == 2);  // both flips leave the accepted set
}

TEST_CASE("sensitivity summary") {
  auto s = sensitivity(sorted_function());
  CHECK(s.s == 2);
  CHECK(s.s_witness == 0);  // the all-zeros input achieves it

  auto p = sensitivity(parity_table(5));
  CHECK(p.s == 5);
  CHECK(p.s0 == 5);
  CHECK(p.s1 == 5);

  auto f2 = rubinstein_f(2);
  REQUIRE(f2.table.has_value());
  CHECK(oracles::naive_sensitivity(*f2.table) == 2);
  CHECK(sensitivity(*f2.table).s == 2);

  // Restricted maxima over an empty input set are 0.
  auto c1 = sensitivity(constant_table(4, 1));
  CHECK(c1.s == 0);
  CHECK(c1.s0 == 0);
  CHECK(!c1.s0_witness.has_value());
  CHECK(c1.s1_witness.has_value());
}

TEST_CASE("sensitive_blocks_at") {
  TruthTable f = sorted_function();
  auto blocks = sensitive_blocks_at(f, 2, 2);  // x = 0100
  // Ascending mask order; the three blocks realizing bs = 3 are present.
  CHECK(std::is_sorted(blocks.begin(), blocks.end()));
  auto has = [&](BlockMask b) {
    return std::find(blocks.begin(), blocks.end(), b) != blocks.end();
  };
  CHECK(has(0b0001));  // {1}
  CHECK(has(0b0010));  // {2}
  CHECK(has(0b1100));  // {3,4}

  TruthTable zero = constant_table(3, 0);
  CHECK(sensitive_blocks_at(zero, 5, 3).empty());

  auto and_blocks = sensitive_blocks_at(and2(), 0, 2);
  CHECK(and_blocks == std::vector<BlockMask>{0b11});

  CHECK_THROWS_AS((void)sensitive_blocks_at(f, 0, 0), PreconditionError);
  CHECK_THROWS_AS((void)sensitive_blocks_at(f, 0, 5), PreconditionError);
}

TEST_CASE("is_minimal_block") {
  TruthTable f = sorted_function();
  CHECK(is_minimal_block(f, 2, 0b1100));   // {3,4}: neither {3} nor {4} works
  CHECK(is_minimal_block(f, 2, 0b0001));   // singletons are always minimal
  // OR_2 at 00: {1,2} flips the output but {1} already does, so not minimal.
  TruthTable or2 = TruthTable::from_hex(2, "E");
  CHECK(!is_minimal_block(or2, 0, 0b11));
  // For parity a two-bit flip is not sensitive at all: distinct error.
  CHECK_THROWS_AS((void)is_minimal_block(parity_table(2), 0, 0b11),
                  BlockNotSensitiveError);
  CHECK_THROWS_AS((void)is_minimal_block(f, 2, 0b1000),
                  BlockNotSensitiveError);
}

TEST_CASE("block_sensitivity_at") {
  TruthTable f = sorted_function();
  auto at = block_sensitivity_at(f, 2);
  CHECK(at.value == 3);
  CHECK(at.value == oracles::naive_block_sensitivity_at(f, 2, 4));

  TruthTable zero = constant_table(4, 0);
  CHECK(block_sensitivity_at(zero, 7).value == 0);

  auto f4 = rubinstein_f(4);
  REQUIRE(f4.table.has_value());
  auto at0 = block_sensitivity_at(*f4.table, 0);
  CHECK(at0.value == 8);  // the 8 disjoint pair blocks
  CHECK(at0.family.size() == 8);
  for (BlockMask b : at0.family) CHECK(std::popcount(b) == 2);
}

TEST_CASE("block_sensitivity witnesses are lexicographically smallest") {
  TruthTable f = sorted_function();
  auto bs = block_sensitivity(f, single_thread());
  CHECK(bs.value == 3);
  CHECK(bs.value == oracles::naive_block_sensitivity(f));
  // 0000 already realizes three disjoint blocks {2}, {3}, {1,4}.
  CHECK(bs.input == 0);
  CHECK(bs.family == std::vector<BlockMask>{0b0010, 0b0100, 0b1001});

  auto f2 = rubinstein_f(2);
  CHECK(block_sensitivity(*f2.table, single_thread()).value == 2);
  CHECK(oracles::naive_block_sensitivity(*f2.table) == 2);

  CHECK(block_sensitivity(parity_table(6), single_thread()).value == 6);
}

TEST_CASE("l_block_sensitivity") {
  TruthTable f = sorted_function();
  CHECK(l_block_sensitivity(f, 1, single_thread()) == sensitivity(f).s);
  CHECK(l_block_sensitivity(f, 2, single_thread()) == 3);
  CHECK(l_block_sensitivity(f, 2, single_thread()) ==
        oracles::naive_l_block_sensitivity(f, 2));
  CHECK_THROWS_AS((void)l_block_sensitivity(f, 0, single_thread()),
                  PreconditionError);
  CHECK_THROWS_AS((void)l_block_sensitivity(f, 5, single_thread()),
                  PreconditionError);
}

TEST_CASE("complement_inputs") {
  TruthTable f = sorted_function();
  CHECK(complement_inputs(f, 0) == f);
  CHECK(complement_inputs(and2(), 0b11).to_hex() == "1");  // 1 only at x=00
  CHECK(complement_inputs(f, 2).eval(0) == 0);             // f(0100) = 0
}

TEST_CASE("sensitivity_bitmap equals the naive loop") {
  for (uint64_t x = 0; x < 32; ++x) {
    CHECK(sensitivity_bitmap(parity_table(5))[x] == 5);
    CHECK(sensitivity_bitmap(constant_table(5, 1))[x] == 0);
  }
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 10);
    TruthTable t = random_table(n, rng());
    auto counts = sensitivity_bitmap(t);
    for (uint64_t x = 0; x < t.size(); ++x)
      REQUIRE(counts[x] == oracles::naive_sensitivity_at(t, x));
  }
}

TEST_CASE("measure: exhaustive 3-variable self-consistency") {
  for (uint32_t v = 0; v < 256; ++v) {
    TruthTable t(3);
    for (uint64_t x = 0; x < 8; ++x) t.set(x, (v >> x) & 1);
    auto m = measure(t, single_thread());
    CHECK(m.sens.s == std::max(m.sens.s0, m.sens.s1));
    CHECK(m.bs == oracles::naive_block_sensitivity(t));
    if (m.sens.s > 0) {
      CHECK(m.bs_l.at(1) == m.sens.s);
      CHECK(m.bs_l.at(m.sens.s) == m.bs);
      int prev = 0;
      for (const auto& [l, v_l] : m.bs_l) {
        CHECK(v_l >= prev);
        CHECK(v_l == oracles::naive_l_block_sensitivity(t, l));
        prev = v_l;
      }
    }
    CHECK(replay_measure_report(t, m));
    // Raising the size cap to n must not change anything.
    MeasureLimits paranoia = single_thread();
    paranoia.block_size_cap = 3;
    CHECK(measure(t, paranoia).bs == m.bs);
  }
}

TEST_CASE("measures invariant under input complement and permutation") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 5);
    TruthTable t = random_table(n, rng());
    auto m = measure(t, single_thread());

    TruthTable flipped = complement_inputs(t, rng() % t.size());
    auto mf = measure(flipped, single_thread());
    CHECK(mf.sens.s == m.sens.s);
    CHECK(mf.bs == m.bs);

    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i + 1;
    std::shuffle(perm.begin(), perm.end(), rng);
    auto mp = measure(permute_variables(t, perm), single_thread());
    CHECK(mp.sens.s == m.sens.s);
    CHECK(mp.bs == m.bs);
    CHECK(mp.bs_l == m.bs_l);
  }
}

TEST_CASE("candidate cap raises a resource error") {
  MeasureLimits lim = single_thread();
  lim.block_size_cap = 10;
  lim.max_candidate_blocks = 10;
  CHECK_THROWS_AS((void)block_sensitivity_at(parity_table(10), 0, lim),
                  ResourceLimitError);
}

TEST_CASE("constant functions have s = bs = 0") {
  for (int value : {0, 1}) {
    auto m = measure(constant_table(5, value), single_thread());
    CHECK(m.sens.s == 0);
    CHECK(m.bs == 0);
    CHECK(m.bs_l.at(1) == 0);
  }
}
