#include "latsens/search.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "latsens/errors.hpp"
#include "latsens/parallel.hpp"
#include "latsens/support.hpp"

namespace latsens {

namespace {

SeparationRecord record_for(const TruthTable& t, const MeasureReport& m) {
  SeparationRecord rec;
  rec.n = t.vars();
  rec.table_hex = t.to_hex();
  rec.fingerprint = t.fingerprint();
  rec.s = m.sens.s;
  rec.bs = m.bs;
  rec.ratio = m.sens.s > 0 ? static_cast<double>(m.bs) /
                                 (static_cast<double>(m.sens.s) * m.sens.s)
                           : 0.0;
  rec.witness_input = m.bs_witness.input;
  rec.witness_family = m.bs_witness.family;
  return rec;
}

// Larger bs wins; ties go to the smaller table (hex strings have fixed
// width per n, so string order is numeric order).
void merge_record(std::optional<SeparationRecord>& into,
                  std::optional<SeparationRecord>&& from) {
  if (!from) return;
  if (!into || from->bs > into->bs ||
      (from->bs == into->bs && from->table_hex < into->table_hex))
    into = std::move(from);
}

struct ScanPartial {
  std::vector<std::optional<SeparationRecord>> best_by_s;
};

void merge_scan(ScanPartial& acc, ScanPartial&& in) {
  for (size_t s = 0; s < acc.best_by_s.size(); ++s)
    merge_record(acc.best_by_s[s], std::move(in.best_by_s[s]));
}

bool violates_corollary(const SeparationRecord& rec) {
  if (rec.s == 0) return rec.bs != 0;
  const double rhs = std::exp(static_cast<double>(rec.s + 1)) *
                     std::sqrt(rec.s / (2.0 * std::numbers::pi));
  return !(static_cast<double>(rec.bs) < rhs);
}

ScanResult finish(int n, ScanPartial&& total, uint64_t scanned,
                  uint64_t seed) {
  ScanResult out;
  out.n = n;
  out.functions_scanned = scanned;
  out.seed = seed;
  out.best_by_s = std::move(total.best_by_s);
  for (const auto& rec : out.best_by_s)
    if (rec && violates_corollary(*rec)) out.tripwire_violations.push_back(*rec);
  return out;
}

}  // namespace

const SeparationRecord* ScanResult::best_separation() const {
  const SeparationRecord* best = nullptr;
  for (const auto& rec : best_by_s) {
    if (!rec || rec->s < 1) continue;
    if (!best || rec->ratio > best->ratio) best = &*rec;
  }
  return best;
}

ScanResult exhaustive_scan(int n, int threads) {
  if (n < 1 || n > 4)
    throw PreconditionError("exhaustive scan supports n <= 4");
  const uint64_t total = uint64_t{1} << (uint64_t{1} << n);
  MeasureLimits one;
  one.threads = 1;  // parallelism is over tables, not inside measure()

  ScanPartial init;
  init.best_by_s.resize(n + 1);
  auto chunk_fn = [&](uint64_t lo, uint64_t hi) {
    ScanPartial part;
    part.best_by_s.resize(n + 1);
    TruthTable t(n);
    for (uint64_t v = lo; v < hi; ++v) {
      for (uint64_t x = 0; x < t.size(); ++x)
        t.set(x, static_cast<int>((v >> x) & 1));
      auto m = measure(t, one);
      merge_record(part.best_by_s[m.sens.s], record_for(t, m));
    }
    return part;
  };
  auto totals = chunked_reduce(uint64_t{0}, total, 1024, threads,
                               std::move(init), chunk_fn, merge_scan);
  return finish(n, std::move(totals), total, 0);
}

ScanResult random_scan(int n, uint64_t samples, uint64_t seed, int threads) {
  if (n < 1 || n > 12) throw PreconditionError("random scan supports n <= 12");
  MeasureLimits one;
  one.threads = 1;

  ScanPartial init;
  init.best_by_s.resize(n + 1);
  auto chunk_fn = [&](uint64_t lo, uint64_t hi) {
    ScanPartial part;
    part.best_by_s.resize(n + 1);
    TruthTable t(n);
    for (uint64_t i = lo; i < hi; ++i) {
      std::mt19937_64 rng(splitmix64(seed ^ splitmix64(i + 1)));
      for (uint64_t x = 0; x < t.size(); x += 64) {
        uint64_t w = rng();
        for (uint64_t j = 0; j < 64 && x + j < t.size(); ++j)
          t.set(x + j, static_cast<int>((w >> j) & 1));
      }
      auto m = measure(t, one);
      merge_record(part.best_by_s[m.sens.s], record_for(t, m));
    }
    return part;
  };
  auto totals = chunked_reduce(uint64_t{0}, samples, 4096, threads,
                               std::move(init), chunk_fn, merge_scan);
  return finish(n, std::move(totals), samples, seed);
}

bool replay_record(const SeparationRecord& rec) {
  TruthTable t = TruthTable::from_hex(rec.n, rec.table_hex);
  if (t.fingerprint() != rec.fingerprint) return false;
  if (sensitivity(t).s != rec.s) return false;
  const int fx = t.eval(rec.witness_input);
  BlockMask used = 0;
  for (BlockMask b : rec.witness_family) {
    if (b == 0 || (b & used)) return false;
    if (t.eval(rec.witness_input ^ b) == fx) return false;
    used |= b;
  }
  if (static_cast<int>(rec.witness_family.size()) != rec.bs) return false;
  return block_sensitivity(t).value == rec.bs;
}

}  // namespace latsens
