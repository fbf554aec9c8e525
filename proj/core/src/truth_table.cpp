#include "latsens/truth_table.hpp"

#include <random>
#include <stdexcept>

#include "latsens/errors.hpp"
#include "latsens/support.hpp"

namespace latsens {

TruthTable::TruthTable(int n) : n_(n) {
  if (n < 1 || n > kMaxTableVars)
    throw PreconditionError("variable count must be in 1.." +
                            std::to_string(kMaxTableVars));
  words_.assign((size() + 63) / 64, 0);
}

int TruthTable::eval(uint64_t x) const {
  if (x >= size()) throw std::out_of_range("input index out of range");
  return static_cast<int>((words_[x >> 6] >> (x & 63)) & 1);
}

void TruthTable::set(uint64_t x, int bit) {
  if (x >= size()) throw std::out_of_range("input index out of range");
  const uint64_t m = uint64_t{1} << (x & 63);
  if (bit)
    words_[x >> 6] |= m;
  else
    words_[x >> 6] &= ~m;
}

std::string TruthTable::to_hex() const { return hex_from_bits(words_, size()); }

TruthTable TruthTable::from_hex(int n, std::string_view hex) {
  TruthTable t(n);
  t.words_ = bits_from_hex(hex, t.size());
  return t;
}

uint64_t TruthTable::fingerprint() const {
  uint64_t h = fnv1a64("tt:" + std::to_string(n_) + ":");
  for (uint64_t w : words_) {
    unsigned char bytes[8];
    for (int i = 0; i < 8; ++i) bytes[i] = static_cast<unsigned char>(w >> (8 * i));
    h = fnv1a64(std::span<const unsigned char>(bytes, 8), h);
  }
  return h;
}

TruthTable complement_inputs(const TruthTable& f, uint64_t mask) {
  if (mask >= f.size())
    throw PreconditionError("mask has bits past variable count");
  TruthTable g(f.vars());
  for (uint64_t x = 0; x < f.size(); ++x) g.set(x, f.eval(x ^ mask));
  return g;
}

TruthTable permute_variables(const TruthTable& f,
                             const std::vector<int>& perm) {
  const int n = f.vars();
  if (static_cast<int>(perm.size()) != n)
    throw PreconditionError("permutation length mismatch");
  std::vector<bool> seen(n + 1, false);
  for (int p : perm) {
    if (p < 1 || p > n || seen[p])
      throw PreconditionError("not a permutation of 1..n");
    seen[p] = true;
  }
  TruthTable g(n);
  for (uint64_t x = 0; x < f.size(); ++x) {
    uint64_t y = 0;  // g(x) = f(y) with y_{perm[i]} = x_i
    for (int i = 0; i < n; ++i)
      if ((x >> i) & 1) y |= uint64_t{1} << (perm[i] - 1);
    g.set(x, f.eval(y));
  }
  return g;
}

TruthTable random_table(int n, uint64_t seed) {
  TruthTable t(n);
  std::mt19937_64 rng(splitmix64(seed));
  std::vector<uint64_t> words((t.size() + 63) / 64);
  for (auto& w : words) w = rng();
  for (uint64_t x = 0; x < t.size(); ++x)
    t.set(x, static_cast<int>((words[x >> 6] >> (x & 63)) & 1));
  return t;
}

}  // namespace latsens
