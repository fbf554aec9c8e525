#include "latsens/reductions.hpp"

#include <algorithm>
#include <bit>
#include <random>

#include "latsens/errors.hpp"
#include "latsens/io.hpp"
#include "latsens/support.hpp"

namespace latsens {

bool ReductionCertificate::all_hold() const {
  return std::all_of(inequalities.begin(), inequalities.end(),
                     [](const Inequality& q) { return q.holds; });
}

namespace {

Inequality make_ineq(std::string name, long long lhs, std::string rel,
                     long long rhs) {
  Inequality q;
  q.name = std::move(name);
  q.lhs = lhs;
  q.rhs = rhs;
  q.relation = rel;
  if (rel == "<=")
    q.holds = lhs <= rhs;
  else if (rel == ">=")
    q.holds = lhs >= rhs;
  else if (rel == "==")
    q.holds = lhs == rhs;
  else
    throw PreconditionError("unknown relation " + rel);
  return q;
}

// Bits of `mask` in ascending variable order.
std::vector<int> mask_bits(BlockMask mask) {
  std::vector<int> bits;
  while (mask) {
    bits.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return bits;
}

}  // namespace

FnToColoringResult function_to_coloring(const TruthTable& f,
                                        const std::vector<BlockMask>& blocks,
                                        uint64_t x_star,
                                        const ScanLimits& lim) {
  const int n = f.vars();
  if (blocks.empty()) throw PreconditionError("need at least one block");
  if (x_star >= f.size()) throw PreconditionError("x_star out of range");
  BlockMask used = 0;
  for (BlockMask b : blocks) {
    if (b == 0 || (b >> n) != 0)
      throw PreconditionError("block mask must be nonempty over 1..n");
    if (b & used) throw PreconditionError("blocks are not disjoint");
    used |= b;
    if (f.eval(x_star ^ b) == f.eval(x_star))
      throw BlockNotSensitiveError("block not sensitive at x_star");
  }

  // Re-base so x_star is the all-zeros input with output 0.
  TruthTable g = complement_inputs(f, x_star);
  const bool complemented = g.eval(0) == 1;
  if (complemented)
    for (uint64_t x = 0; x < g.size(); ++x) g.set(x, 1 - g.eval(x));

  const int d = static_cast<int>(blocks.size());
  std::vector<int64_t> box(d);
  std::vector<std::vector<int>> order(d);
  for (int i = 0; i < d; ++i) {
    order[i] = mask_bits(blocks[i]);
    box[i] = static_cast<int64_t>(order[i].size());
  }

  uint64_t cells_n = 1;
  for (int64_t b : box) cells_n *= static_cast<uint64_t>(b + 1);
  std::vector<uint8_t> cells(cells_n);
  std::vector<int64_t> m(d, 0);
  for (uint64_t idx = 0; idx < cells_n; ++idx) {
    uint64_t rest = idx;  // row-major, first coordinate slowest
    for (int i = d - 1; i >= 0; --i) {
      m[i] = static_cast<int64_t>(rest % static_cast<uint64_t>(box[i] + 1));
      rest /= static_cast<uint64_t>(box[i] + 1);
    }
    uint64_t input = 0;  // first m_i bits of block i set, ascending order
    for (int i = 0; i < d; ++i)
      for (int64_t t = 0; t < m[i]; ++t)
        input |= uint64_t{1} << order[i][static_cast<size_t>(t)];
    cells[idx] = static_cast<uint8_t>(g.eval(input));
  }

  auto coloring =
      std::make_shared<MirrorPeriodicColoring>(box, std::move(cells));

  ReductionCertificate cert;
  cert.direction = "fn-to-color";
  cert.source_fingerprint = fingerprint_of(f);
  cert.target_fingerprint = fingerprint_of(*coloring);
  cert.function_vars = n;
  cert.function_explicit = true;
  cert.function_hex = g.to_hex();
  cert.output_complemented = complemented;
  cert.x_star = x_star;
  cert.blocks = blocks;
  cert.block_sizes = box;
  cert.coloring_spec = write_coloring_spec(*coloring);

  const auto sens = sensitivity(g);
  cert.s_f = sens.s;
  cert.s_f_witness = sens.s_witness;

  auto rep = exact_report(*coloring, lim);
  cert.s_check_mode = to_string(rep.mode);
  cert.s_C = rep.s;
  cert.s_C_witness = rep.s_witness.where;
  cert.r_C = rep.r;
  cert.r_C_witness = rep.r_witness.where;

  for (int i = 0; i < d; ++i) {
    AxisBlue ab;
    ab.axis = i + 1;
    ab.distance = box[i];
    ab.sign = +1;
    ab.point.assign(d, 0);
    ab.point[i] = box[i];
    cert.axis_blues.push_back(std::move(ab));
  }

  cert.inequalities.push_back(make_ineq("s(C) <= s(f)", rep.s, "<=", sens.s));
  cert.inequalities.push_back(
      make_ineq("d == number of blocks", d, "==", d));

  return {std::move(coloring), std::move(g), std::move(cert)};
}

ColoringToFnResult coloring_to_function(const ColoringPtr& c, int64_t cap,
                                        const ScanLimits& lim) {
  auto nt = check_nontrivial(*c, cap);
  if (!nt.passed)
    throw PreconditionError("coloring is not non-trivial: " + nt.failure);
  const int d = c->dimension();

  ColoringToFnResult out;
  out.signs.assign(d, +1);
  out.block_sizes.resize(d);
  for (const auto& ab : nt.width->nearest) {
    out.signs[ab.axis - 1] = ab.sign;
    out.block_sizes[ab.axis - 1] = ab.distance;
  }
  ColoringPtr refl = c;
  if (std::any_of(out.signs.begin(), out.signs.end(),
                  [](int s) { return s < 0; }))
    refl = reflect(c, out.signs);

  int64_t total = 0;
  for (int64_t b : out.block_sizes) total += b;
  if (total > 64)
    throw ResourceLimitError("sum of block sizes exceeds 64 bits");
  out.n = static_cast<int>(total);

  std::vector<int> offsets(d);
  std::vector<uint64_t> masks(d);
  {
    int off = 0;
    for (int i = 0; i < d; ++i) {
      offsets[i] = off;
      masks[i] = (out.block_sizes[i] == 64)
                     ? ~uint64_t{0}
                     : ((uint64_t{1} << out.block_sizes[i]) - 1);
      off += static_cast<int>(out.block_sizes[i]);
    }
  }
  out.oracle.n = out.n;
  out.oracle.eval = [refl, offsets, masks, d](uint64_t y) {
    Point z(d);
    for (int i = 0; i < d; ++i)
      z[i] = std::popcount((y >> offsets[i]) & masks[i]);
    return refl->color(z) == Color::Blue ? 1 : 0;
  };

  if (out.n <= kMaxTableVars) {
    TruthTable t(out.n);
    for (uint64_t y = 0; y < t.size(); ++y) t.set(y, out.oracle.eval(y));
    out.table = std::move(t);
  }

  ReductionCertificate& cert = out.cert;
  cert.direction = "color-to-fn";
  cert.source_fingerprint = fingerprint_of(*c);
  cert.coloring_spec = write_coloring_spec(*c);
  cert.reflection_signs = out.signs;
  cert.block_sizes = out.block_sizes;
  cert.min_width_k = nt.width->k;
  cert.function_vars = out.n;
  cert.function_explicit = out.table.has_value();
  if (out.table) {
    cert.function_hex = out.table->to_hex();
    cert.target_fingerprint = fingerprint_of(*out.table);
  } else {
    cert.target_fingerprint =
        "fnv1a:" + to_hex16(fnv1a64("oracle:" + cert.coloring_spec));
  }
  // Blue axis points of the reflected coloring, at the block distances.
  for (int i = 0; i < d; ++i) {
    AxisBlue ab;
    ab.axis = i + 1;
    ab.distance = out.block_sizes[i];
    ab.sign = +1;
    ab.point.assign(d, 0);
    ab.point[i] = out.block_sizes[i];
    cert.axis_blues.push_back(std::move(ab));
  }

  // s(C) and r(C), exactly when the kind and probe budget allow it.
  int sC = 0, rC = 0;
  std::optional<ColoringReport> rep;
  if (c->exact_domain()) {
    try {
      rep = exact_report(*c, lim);
    } catch (const ResourceLimitError&) {
      rep.reset();
    }
  }
  if (!rep) {
    Point lo(d), hi(d);
    for (int i = 0; i < d; ++i) {
      lo[i] = -(nt.width->k + 1);
      hi[i] = nt.width->k + 1;
    }
    rep = sampled_report(*c, lo, hi, 100000, 0, {}, lim);
  }
  cert.s_check_mode = to_string(rep->mode);
  sC = rep->s;
  rC = rep->r;
  cert.s_C_witness = rep->s_witness.where;
  cert.r_C_witness = rep->r_witness.where;
  cert.s_C = sC;
  cert.r_C = rC;

  // s(f): exhaustive over the explicit table, witness-based otherwise.
  if (out.table) {
    auto sens = sensitivity(*out.table);
    cert.s_f = sens.s;
    cert.s_f_witness = sens.s_witness;
  } else {
    cert.s_f = sensitivity_at(out.oracle, 0);
    cert.s_f_witness = 0;
    cert.s_check_mode = "sampled";
  }

  cert.inequalities.push_back(
      make_ineq("bs(f) >= d (axis blocks at 0)", d, ">=", d));
  cert.inequalities.push_back(make_ineq(
      "s(f) <= k * r(C)", cert.s_f, "<=", nt.width->k * rC));
  cert.inequalities.push_back(make_ineq(
      "s(f) <= k * s(C)", cert.s_f, "<=", nt.width->k * sC));
  return out;
}

bool block_symmetry_check(const ColoringToFnResult& r, int trials,
                          uint64_t seed) {
  const int d = static_cast<int>(r.block_sizes.size());
  auto eval = [&](uint64_t y) {
    return r.table ? r.table->eval(y) : r.oracle.eval(y);
  };
  std::mt19937_64 rng(splitmix64(seed));
  const uint64_t input_mask =
      r.n == 64 ? ~uint64_t{0} : (uint64_t{1} << r.n) - 1;
  int offset = 0;
  for (int i = 0; i < d; ++i) {
    const int b = static_cast<int>(r.block_sizes[i]);
    for (int t = 0; t < trials && b >= 2; ++t) {
      const uint64_t y = rng() & input_mask;
      // Random permutation of the block's bit positions.
      std::vector<int> perm(b);
      for (int j = 0; j < b; ++j) perm[j] = j;
      for (int j = b - 1; j > 0; --j)
        std::swap(perm[j], perm[rng() % (j + 1)]);
      uint64_t permuted = y;
      for (int j = 0; j < b; ++j) {
        const uint64_t bit = (y >> (offset + j)) & 1;
        const int dst = offset + perm[j];
        permuted = (permuted & ~(uint64_t{1} << dst)) | (bit << dst);
      }
      if (eval(y) != eval(permuted)) return false;
    }
    offset += b;
  }
  return true;
}

namespace {

void expect(CertificateVerification& v, bool ok, const std::string& what) {
  if (!ok) {
    v.ok = false;
    v.failures.push_back(what);
  }
}

void verify_inequalities(CertificateVerification& v,
                         const ReductionCertificate& cert) {
  for (const auto& q : cert.inequalities) {
    bool holds;
    if (q.relation == "<=")
      holds = q.lhs <= q.rhs;
    else if (q.relation == ">=")
      holds = q.lhs >= q.rhs;
    else
      holds = q.lhs == q.rhs;
    expect(v, holds == q.holds && holds,
           "inequality '" + q.name + "' does not re-evaluate as true");
  }
}

}  // namespace

CertificateVerification verify_certificate(const ReductionCertificate& cert) {
  CertificateVerification v;
  ColoringPtr coloring = read_coloring_spec(cert.coloring_spec);
  const int d = coloring->dimension();

  if (cert.direction == "fn-to-color") {
    TruthTable g = TruthTable::from_hex(cert.function_vars, cert.function_hex);
    expect(v, g.eval(0) == 0, "normalized function must have f(0) = 0");
    BlockMask used = 0;
    for (BlockMask b : cert.blocks) {
      expect(v, (b & used) == 0, "blocks overlap");
      used |= b;
      expect(v, g.eval(b) != g.eval(0), "block not sensitive at base input");
    }
    Point origin(d, 0);
    expect(v, coloring->color(origin) == Color::Red, "origin not red");
    for (const auto& ab : cert.axis_blues)
      expect(v, coloring->color(ab.point) == Color::Blue,
             "axis witness point not blue");
    expect(v, sensitivity_at(g, cert.s_f_witness) == cert.s_f,
           "s(f) witness does not replay");
    expect(v, point_sensitivity(*coloring, cert.s_C_witness) == cert.s_C,
           "s(C) witness does not replay");
    expect(v, axis_sensitivity(*coloring, cert.r_C_witness) == cert.r_C,
           "r(C) witness does not replay");
  } else if (cert.direction == "color-to-fn") {
    ColoringPtr refl = coloring;
    if (std::any_of(cert.reflection_signs.begin(),
                    cert.reflection_signs.end(),
                    [](int s) { return s < 0; }))
      refl = reflect(coloring, cert.reflection_signs);
    Point origin(d, 0);
    expect(v, refl->color(origin) == Color::Red, "origin not red");
    for (const auto& ab : cert.axis_blues)
      expect(v, refl->color(ab.point) == Color::Blue,
             "axis blue witness does not replay");
    if (cert.function_explicit) {
      TruthTable f =
          TruthTable::from_hex(cert.function_vars, cert.function_hex);
      expect(v, f.eval(0) == 0, "f(0) != 0");
      int offset = 0;
      for (int i = 0; i < d; ++i) {
        const int b = static_cast<int>(cert.block_sizes[i]);
        const uint64_t block =
            ((b == 64 ? ~uint64_t{0} : (uint64_t{1} << b) - 1)) << offset;
        expect(v, f.eval(block) == 1, "axis block not sensitive at 0");
        offset += b;
      }
      expect(v, sensitivity_at(f, cert.s_f_witness) == cert.s_f,
             "s(f) witness does not replay");
    }
    expect(v, point_sensitivity(*coloring, cert.s_C_witness) == cert.s_C,
           "s(C) witness does not replay");
    expect(v, axis_sensitivity(*coloring, cert.r_C_witness) == cert.r_C,
           "r(C) witness does not replay");
  } else {
    expect(v, false, "unknown certificate direction");
  }
  verify_inequalities(v, cert);
  return v;
}

}  // namespace latsens
