#pragma once

// Word-level helpers for vertex sets stored as packed 64-bit rows.

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace cokernel::bits {

using Word = std::uint64_t;

inline constexpr std::size_t word_count(std::size_t n) { return (n + 63) / 64; }

inline bool test(std::span<const Word> s, int v) {
  return (s[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1U;
}
inline void set(std::span<Word> s, int v) {
  s[static_cast<std::size_t>(v) >> 6] |= Word{1} << (v & 63);
}
inline void reset(std::span<Word> s, int v) {
  s[static_cast<std::size_t>(v) >> 6] &= ~(Word{1} << (v & 63));
}

inline std::size_t count(std::span<const Word> s) {
  std::size_t c = 0;
  for (Word w : s) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

inline bool any(std::span<const Word> s) {
  for (Word w : s)
    if (w) return true;
  return false;
}

inline bool intersects(std::span<const Word> a, std::span<const Word> b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] & b[i]) return true;
  return false;
}

// a ⊆ b
inline bool subset_of(std::span<const Word> a, std::span<const Word> b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] & ~b[i]) return false;
  return true;
}

// Smallest element, or -1 when empty.
inline int first(std::span<const Word> s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s[i]) return static_cast<int>(i * 64 + std::countr_zero(s[i]));
  return -1;
}

template <typename F>
inline void for_each(std::span<const Word> s, F&& f) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    Word w = s[i];
    while (w) {
      const int b = std::countr_zero(w);
      f(static_cast<int>(i * 64 + b));
      w &= w - 1;
    }
  }
}

inline std::vector<int> to_vector(std::span<const Word> s) {
  std::vector<int> out;
  for_each(s, [&](int v) { out.push_back(v); });
  return out;
}

inline std::vector<Word> from_vector(std::size_t n, const std::vector<int>& vs) {
  std::vector<Word> s(word_count(n), 0);
  for (int v : vs) set(s, v);
  return s;
}

}  // namespace cokernel::bits
