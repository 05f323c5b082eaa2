#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace turanlab {

using Vertex = std::uint32_t;
using Word = std::uint64_t;

inline constexpr std::size_t kWordBits = 64;

constexpr std::size_t words_for(std::size_t n) { return (n + kWordBits - 1) / kWordBits; }

// Free functions over raw word spans. Graph rows and VertexSet both expose
// spans, so the hot loops (neighbourhood intersection) share one code path.
namespace bits {

inline bool test(std::span<const Word> s, std::size_t i) {
  return (s[i / kWordBits] >> (i % kWordBits)) & 1U;
}

inline void set(std::span<Word> s, std::size_t i) { s[i / kWordBits] |= Word{1} << (i % kWordBits); }

inline void reset(std::span<Word> s, std::size_t i) {
  s[i / kWordBits] &= ~(Word{1} << (i % kWordBits));
}

inline std::size_t count(std::span<const Word> s) {
  std::size_t c = 0;
  for (Word w : s) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

inline bool any(std::span<const Word> s) {
  return std::any_of(s.begin(), s.end(), [](Word w) { return w != 0; });
}

inline std::size_t count_and(std::span<const Word> a, std::span<const Word> b) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < a.size(); ++i) c += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
  return c;
}

inline void and_into(std::span<Word> dst, std::span<const Word> a, std::span<const Word> b) {
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] = a[i] & b[i];
}

// dst = a & b restricted to indices strictly greater than `after`.
inline void and_above_into(std::span<Word> dst, std::span<const Word> a, std::span<const Word> b,
                           std::size_t after) {
  const std::size_t wi = (after + 1) / kWordBits;
  const std::size_t bi = (after + 1) % kWordBits;
  for (std::size_t i = 0; i < wi && i < dst.size(); ++i) dst[i] = 0;
  for (std::size_t i = wi; i < dst.size(); ++i) dst[i] = a[i] & b[i];
  if (wi < dst.size() && bi != 0) dst[wi] &= ~Word{0} << bi;
}

/// Index of the lowest set bit at position >= from, or `npos` (== s.size()*64).
inline std::size_t next(std::span<const Word> s, std::size_t from) {
  std::size_t wi = from / kWordBits;
  if (wi >= s.size()) return s.size() * kWordBits;
  Word w = s[wi] & (~Word{0} << (from % kWordBits));
  while (true) {
    if (w != 0) return wi * kWordBits + static_cast<std::size_t>(std::countr_zero(w));
    if (++wi >= s.size()) return s.size() * kWordBits;
    w = s[wi];
  }
}

template <typename F>
void for_each(std::span<const Word> s, F&& f) {
  for (std::size_t wi = 0; wi < s.size(); ++wi) {
    Word w = s[wi];
    while (w != 0) {
      f(static_cast<Vertex>(wi * kWordBits + static_cast<std::size_t>(std::countr_zero(w))));
      w &= w - 1;
    }
  }
}

}  // namespace bits

/// Owning fixed-universe bitset of vertices.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe) : universe_(universe), words_(words_for(universe), 0) {}

  static VertexSet full(std::size_t universe) {
    VertexSet s(universe);
    for (std::size_t i = 0; i < universe; ++i) s.insert(static_cast<Vertex>(i));
    return s;
  }

  static VertexSet from_span(std::size_t universe, std::span<const Word> w) {
    VertexSet s(universe);
    std::copy(w.begin(), w.end(), s.words_.begin());
    return s;
  }

  std::size_t universe() const { return universe_; }
  bool contains(Vertex v) const { return v < universe_ && bits::test(words_, v); }
  void insert(Vertex v) { bits::set(words_, v); }
  void erase(Vertex v) { bits::reset(words_, v); }
  std::size_t size() const { return bits::count(words_); }
  bool empty() const { return !bits::any(words_); }

  VertexSet& operator&=(std::span<const Word> other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other[i];
    return *this;
  }
  VertexSet& operator&=(const VertexSet& other) { return *this &= other.words(); }
  VertexSet& subtract(const VertexSet& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
    return *this;
  }

  std::span<const Word> words() const { return words_; }
  std::span<Word> words() { return words_; }

  std::vector<Vertex> to_vector() const {
    std::vector<Vertex> out;
    bits::for_each(words_, [&](Vertex v) { out.push_back(v); });
    return out;
  }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::size_t universe_ = 0;
  std::vector<Word> words_;
};

}  // namespace turanlab
