#include "latsens/support.hpp"

#include <algorithm>
#include <cctype>

#include "latsens/errors.hpp"

namespace latsens {

std::string to_hex16(uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = digits[v & 0xf];
    v >>= 4;
  }
  return out;
}

uint64_t binomial_sum_capped(int n, int max_size, uint64_t cap) {
  uint64_t total = 0;
  uint64_t c = 1;  // C(n, 0)
  for (int k = 1; k <= max_size && k <= n; ++k) {
    // C(n, k) = C(n, k-1) * (n - k + 1) / k; exact at every step.
    if (c > cap) return cap + 1;
    c = c * static_cast<uint64_t>(n - k + 1) / static_cast<uint64_t>(k);
    total += c;
    if (total > cap) return cap + 1;
  }
  return total;
}

namespace {

int hex_digit(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  throw FormatError(std::string("invalid hex digit '") + c + "'");
}

}  // namespace

std::string hex_from_bits(std::span<const uint64_t> words, uint64_t nbits) {
  const uint64_t digits = (nbits + 3) / 4;
  std::string out(digits, '0');
  static const char* tab = "0123456789ABCDEF";
  for (uint64_t d = 0; d < digits; ++d) {
    const uint64_t bit = d * 4;
    const uint64_t word = bit / 64, off = bit % 64;
    unsigned nib = static_cast<unsigned>((words[word] >> off) & 0xf);
    out[digits - 1 - d] = tab[nib];  // most significant digit first
  }
  return out;
}

std::vector<uint64_t> bits_from_hex(std::string_view hex, uint64_t nbits) {
  const uint64_t digits = (nbits + 3) / 4;
  if (hex.size() != digits)
    throw FormatError("expected " + std::to_string(digits) +
                      " hex digits, got " + std::to_string(hex.size()));
  std::vector<uint64_t> words((nbits + 63) / 64, 0);
  for (uint64_t d = 0; d < digits; ++d) {
    const unsigned nib =
        static_cast<unsigned>(hex_digit(hex[digits - 1 - d]));
    const uint64_t bit = d * 4;
    words[bit / 64] |= static_cast<uint64_t>(nib) << (bit % 64);
  }
  // Reject set bits past nbits (partial top nibble).
  if (nbits % 4 != 0) {
    const uint64_t top = nbits - 1;
    const uint64_t mask = ~((uint64_t{1} << (top % 64 + 1)) - 1);
    if (top % 64 != 63 && (words[top / 64] & mask) != 0)
      throw FormatError("hex value has bits past position " +
                        std::to_string(nbits));
  }
  return words;
}

}  // namespace latsens
