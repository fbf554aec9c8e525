#include "latsens/boolfn.hpp"

#include <algorithm>
#include <bit>
#include <limits>

#include "latsens/errors.hpp"
#include "latsens/parallel.hpp"
#include "latsens/support.hpp"

namespace latsens {

namespace {

inline int bit_at(const std::vector<uint64_t>& w, uint64_t x) {
  return static_cast<int>((w[x >> 6] >> (x & 63)) & 1);
}

// All masks of popcount k over n bits, ascending numeric order (Gosper).
template <class Fn>
void for_each_mask_of_size(int n, int k, Fn&& fn) {
  if (k < 1 || k > n) return;
  const uint32_t limit = (n == 32) ? 0xffffffffu : ((uint32_t{1} << n) - 1);
  uint32_t mask = (uint32_t{1} << k) - 1;
  for (;;) {
    fn(mask);
    if (mask == (limit & ~((uint32_t{1} << (n - k)) - 1))) break;  // highest
    const uint32_t c = mask & (0u - mask);
    const uint32_t r = mask + c;
    mask = r | (((mask ^ r) >> 2) / c);
    if (mask > limit) break;
  }
}

// Minimal sensitive blocks at x with size <= max_size, visited in
// (popcount, numeric) order so every potential minimal subset is already
// known when a candidate is tested.
void minimal_sensitive_blocks(const TruthTable& f, uint64_t x, int max_size,
                              uint64_t max_candidates,
                              std::vector<BlockMask>& out) {
  out.clear();
  const int n = f.vars();
  if (binomial_sum_capped(n, max_size, max_candidates) > max_candidates)
    throw ResourceLimitError(
        "candidate block count exceeds cap " +
        std::to_string(max_candidates) +
        "; lower the block-size cap or raise max_candidate_blocks");
  const auto& w = f.words();
  const int fx = bit_at(w, x);
  for (int k = 1; k <= max_size; ++k) {
    for_each_mask_of_size(n, k, [&](uint32_t mask) {
      if (bit_at(w, x ^ mask) == fx) return;
      for (BlockMask m : out)
        if ((m & mask) == m) return;  // contains a smaller sensitive block
      out.push_back(mask);
    });
  }
}

// Exact maximum disjoint packing; candidates in ascending mask order, branch
// include-first with the remaining-candidates bound, improve strictly.  The
// first maximum found is the lexicographically smallest family.
struct Packer {
  std::span<const BlockMask> cand;
  int best = 0;
  std::vector<BlockMask> best_family;
  std::vector<BlockMask> cur;

  void run() {
    cur.clear();
    best = 0;
    best_family.clear();
    rec(0, 0);
  }

  void rec(size_t idx, BlockMask used) {
    if (static_cast<int>(cur.size()) > best) {
      best = static_cast<int>(cur.size());
      best_family = cur;
    }
    if (idx == cand.size()) return;
    if (static_cast<int>(cur.size() + (cand.size() - idx)) <= best) return;
    if ((cand[idx] & used) == 0) {
      cur.push_back(cand[idx]);
      rec(idx + 1, used | cand[idx]);
      cur.pop_back();
    }
    rec(idx + 1, used);
  }
};

int effective_cap(const TruthTable& f, const MeasureLimits& lim, int s) {
  int cap = lim.block_size_cap > 0 ? lim.block_size_cap : s;
  return std::min(cap, f.vars());
}

}  // namespace

int sensitivity_at(const TruthTable& f, uint64_t x) {
  const int fx = f.eval(x);
  int count = 0;
  for (int i = 0; i < f.vars(); ++i)
    count += f.eval(x ^ (uint64_t{1} << i)) != fx;
  return count;
}

int sensitivity_at(const FnOracle& f, uint64_t x) {
  const int fx = f.eval(x);
  int count = 0;
  for (int i = 0; i < f.n; ++i)
    count += f.eval(x ^ (uint64_t{1} << i)) != fx;
  return count;
}

std::vector<uint8_t> sensitivity_bitmap(const TruthTable& f) {
  const int n = f.vars();
  const auto& w = f.words();
  std::vector<uint8_t> counts(f.size(), 0);
  static constexpr uint64_t kLow[6] = {
      0x5555555555555555ull, 0x3333333333333333ull, 0x0f0f0f0f0f0f0f0full,
      0x00ff00ff00ff00ffull, 0x0000ffff0000ffffull, 0x00000000ffffffffull};
  for (int p = 0; p < n; ++p) {
    for (size_t wi = 0; wi < w.size(); ++wi) {
      uint64_t diff;
      if (p < 6) {
        const uint64_t v = w[wi];
        const uint64_t m = kLow[p];
        const int s = 1 << p;
        diff = v ^ (((v >> s) & m) | ((v & m) << s));
      } else {
        diff = w[wi] ^ w[wi ^ (size_t{1} << (p - 6))];
      }
      const uint64_t base = wi * 64;
      while (diff) {
        counts[base + static_cast<uint64_t>(std::countr_zero(diff))]++;
        diff &= diff - 1;
      }
    }
  }
  return counts;
}

SensitivitySummary sensitivity(const TruthTable& f) {
  const auto counts = sensitivity_bitmap(f);
  const auto& w = f.words();
  SensitivitySummary out;
  int best[2] = {-1, -1};
  uint64_t wit[2] = {0, 0};
  for (uint64_t x = 0; x < f.size(); ++x) {
    const int v = bit_at(w, x);
    if (counts[x] > best[v]) {
      best[v] = counts[x];
      wit[v] = x;
    }
  }
  out.s0 = std::max(best[0], 0);
  out.s1 = std::max(best[1], 0);
  if (best[0] >= 0) out.s0_witness = wit[0];
  if (best[1] >= 0) out.s1_witness = wit[1];
  out.s = std::max(out.s0, out.s1);
  // Lexicographically smallest achiever across both output values.
  if (best[0] == out.s && best[1] == out.s)
    out.s_witness = std::min(wit[0], wit[1]);
  else
    out.s_witness = best[0] == out.s ? wit[0] : wit[1];
  return out;
}

std::vector<BlockMask> sensitive_blocks_at(const TruthTable& f, uint64_t x,
                                           int max_size,
                                           uint64_t max_candidates) {
  const int n = f.vars();
  if (max_size < 1 || max_size > n)
    throw PreconditionError("max_size must be in 1..n");
  if (binomial_sum_capped(n, max_size, max_candidates) > max_candidates)
    throw ResourceLimitError("candidate block count exceeds cap");
  const auto& w = f.words();
  const int fx = f.eval(x);
  std::vector<BlockMask> out;
  for (int k = 1; k <= max_size; ++k)
    for_each_mask_of_size(n, k, [&](uint32_t mask) {
      if (bit_at(w, x ^ mask) != fx) out.push_back(mask);
    });
  std::sort(out.begin(), out.end());
  return out;
}

bool is_minimal_block(const TruthTable& f, uint64_t x, BlockMask b) {
  if (b == 0 || (b >> f.vars()) != 0)
    throw PreconditionError("block mask must be nonempty over 1..n");
  const int fx = f.eval(x);
  if (f.eval(x ^ b) == fx)
    throw BlockNotSensitiveError("block is not sensitive at this input");
  for (BlockMask sub = (b - 1) & b; sub; sub = (sub - 1) & b)
    if (f.eval(x ^ sub) != fx) return false;
  return true;
}

BlockSensitivityResult block_sensitivity_at(const TruthTable& f, uint64_t x,
                                            const MeasureLimits& lim) {
  if (x >= f.size()) throw std::out_of_range("input index out of range");
  const int cap = effective_cap(f, lim, sensitivity(f).s);
  BlockSensitivityResult out{0, x, {}};
  if (cap == 0) return out;  // constant function
  std::vector<BlockMask> cands;
  minimal_sensitive_blocks(f, x, cap, lim.max_candidate_blocks, cands);
  std::sort(cands.begin(), cands.end());
  Packer packer{cands};
  packer.run();
  out.value = packer.best;
  out.family = std::move(packer.best_family);
  return out;
}

namespace {

struct PerL {
  int value = -1;
  uint64_t input = 0;
  std::vector<BlockMask> family;
};

struct SweepPartial {
  std::vector<PerL> per_l;  // index 0 holds l = 1
};

void merge_per_l(PerL& into, PerL&& from) {
  if (from.value > into.value ||
      (from.value == into.value && from.value >= 0 && from.input < into.input))
    into = std::move(from);
}

SweepPartial bs_sweep_chunk(const TruthTable& f, uint64_t lo, uint64_t hi,
                            int cap, int top_l, uint64_t max_candidates) {
  SweepPartial part;
  part.per_l.resize(top_l);
  std::vector<BlockMask> mins, filtered;
  Packer packer;
  for (uint64_t x = lo; x < hi; ++x) {
    minimal_sensitive_blocks(f, x, cap, max_candidates, mins);
    std::sort(mins.begin(), mins.end());
    for (int l = 1; l <= top_l; ++l) {
      filtered.clear();
      for (BlockMask m : mins)
        if (std::popcount(m) <= l) filtered.push_back(m);
      packer.cand = filtered;
      packer.run();
      PerL cand{packer.best, x, packer.best_family};
      merge_per_l(part.per_l[l - 1], std::move(cand));
    }
  }
  return part;
}

SweepPartial bs_sweep(const TruthTable& f, int cap, int top_l,
                      const MeasureLimits& lim) {
  SweepPartial init;
  init.per_l.resize(top_l);
  return chunked_reduce(
      uint64_t{0}, f.size(), 2048, lim.threads, std::move(init),
      [&](uint64_t lo, uint64_t hi) {
        return bs_sweep_chunk(f, lo, hi, cap, top_l, lim.max_candidate_blocks);
      },
      [](SweepPartial& acc, SweepPartial&& in) {
        for (size_t i = 0; i < acc.per_l.size(); ++i)
          merge_per_l(acc.per_l[i], std::move(in.per_l[i]));
      });
}

}  // namespace

BlockSensitivityResult block_sensitivity(const TruthTable& f,
                                         const MeasureLimits& lim) {
  const int s = sensitivity(f).s;
  if (s == 0) return {0, 0, {}};
  const int cap = effective_cap(f, lim, s);
  // A single packing per input suffices: filtering at l = cap keeps all
  // minimal candidates.
  auto sweep = bs_sweep(f, cap, cap, lim);
  const PerL& top = sweep.per_l[cap - 1];
  return {top.value, top.input, top.family};
}

int l_block_sensitivity(const TruthTable& f, int l, const MeasureLimits& lim) {
  if (l < 1 || l > f.vars()) throw PreconditionError("l must be in 1..n");
  const int s = sensitivity(f).s;
  if (s == 0) return 0;
  const int cap = std::min(effective_cap(f, lim, s), l);
  auto part = bs_sweep(f, cap, cap, lim);
  return part.per_l[cap - 1].value;
}

MeasureReport measure(const TruthTable& f, const MeasureLimits& lim) {
  MeasureReport rep;
  rep.n = f.vars();
  rep.sens = sensitivity(f);
  const int s = rep.sens.s;
  if (s == 0) {
    rep.bs = 0;
    rep.bs_witness = {0, 0, {}};
    rep.bs_l[1] = 0;
    rep.bs_l_witness[1] = 0;
    rep.block_size_cap_used = 0;
    return rep;
  }
  const int cap = effective_cap(f, lim, s);
  rep.block_size_cap_used = cap;
  // With a paranoia cap above s(f) the bs packing runs at the raised cap, so
  // a (theoretically impossible) minimal block larger than s would surface
  // as bs != bs_s rather than being filtered away.
  auto sweep = bs_sweep(f, cap, cap, lim);
  for (int l = 1; l <= s; ++l) {
    rep.bs_l[l] = sweep.per_l[l - 1].value;
    rep.bs_l_witness[l] = sweep.per_l[l - 1].input;
  }
  const PerL& top = sweep.per_l[cap - 1];
  rep.bs = top.value;
  rep.bs_witness = {top.value, top.input, top.family};
  return rep;
}

bool replay_measure_report(const TruthTable& f, const MeasureReport& rep) {
  if (sensitivity_at(f, rep.sens.s_witness) != rep.sens.s) return false;
  if (rep.sens.s0_witness &&
      (f.eval(*rep.sens.s0_witness) != 0 ||
       sensitivity_at(f, *rep.sens.s0_witness) != rep.sens.s0))
    return false;
  if (rep.sens.s1_witness &&
      (f.eval(*rep.sens.s1_witness) != 1 ||
       sensitivity_at(f, *rep.sens.s1_witness) != rep.sens.s1))
    return false;
  // The bs family must be disjoint, sensitive blocks at the witness input.
  const auto& fam = rep.bs_witness.family;
  if (static_cast<int>(fam.size()) != rep.bs) return false;
  BlockMask used = 0;
  const int fx = f.eval(rep.bs_witness.input);
  for (BlockMask b : fam) {
    if (b == 0 || (b & used)) return false;
    if (f.eval(rep.bs_witness.input ^ b) == fx) return false;
    used |= b;
  }
  // Each bs_l witness input must reproduce its value under an l-capped
  // packing at that input.
  for (const auto& [l, value] : rep.bs_l) {
    MeasureLimits one;
    one.block_size_cap = l;
    auto at = block_sensitivity_at(f, rep.bs_l_witness.at(l), one);
    if (at.value != value) return false;
  }
  return true;
}

}  // namespace latsens
