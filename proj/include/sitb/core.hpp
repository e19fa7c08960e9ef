// Copyright 2026 The sitb authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <bit>
#include <charconv>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace sitb {

/// A hypercube vertex. Bit d of the word is coordinate d (bit 0 least
/// significant), so flipping bit d moves along dimension d.
using Vertex = std::uint32_t;

/// A walk through the cube, encoded as the dimension flipped at each step.
/// Parsed input may carry arbitrary values; the validators report entries
/// that fall outside the ambient cube instead of rejecting them up front.
using TransitionSequence = std::vector<std::uint32_t>;

enum class Kind { snake, coil };

constexpr std::string_view to_string(Kind kind) {
  return kind == Kind::snake ? "snake" : "coil";
}

/// Number of cube dimensions, capped so that every vertex fits one word.
class Dimension {
 public:
  static constexpr int max_value = 31;

  constexpr explicit Dimension(int n) : n_(n) {
    if (n < 1 || n > max_value)
      throw std::invalid_argument("dimension must be in [1, " +
                                  std::to_string(max_value) + "]");
  }

  constexpr int value() const { return n_; }
  constexpr std::uint64_t vertex_count() const {
    return std::uint64_t{1} << n_;
  }
  constexpr bool contains(Vertex v) const { return v < vertex_count(); }

  friend constexpr bool operator==(Dimension, Dimension) = default;

 private:
  int n_;
};

/// Raised by parse_sequence for a token that is not a base-10 non-negative
/// integer (or does not fit a 32-bit word). token_index() is the 0-based
/// position of the offending token.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t token_index)
      : std::runtime_error(what), token_index_(token_index) {}
  std::size_t token_index() const { return token_index_; }

 private:
  std::size_t token_index_;
};

/// Raised by walk when a transition names a dimension outside the cube.
class DimensionOutOfRangeError : public std::out_of_range {
 public:
  DimensionOutOfRangeError(const std::string& what, std::size_t position)
      : std::out_of_range(what), position_(position) {}
  /// Index of the offending transition.
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// True iff u and v differ in exactly one bit.
inline bool is_adjacent(Vertex u, Vertex v) {
  return std::popcount(u ^ v) == 1;
}

/// Tokenizes the ".seq" format: base-10 integers separated by commas and/or
/// whitespace (newlines allowed anywhere between tokens). Empty tokens are
/// skipped, so ",,1, 2,\n3," parses as [1,2,3].
inline TransitionSequence parse_sequence(std::string_view text) {
  const auto is_separator = [](char c) {
    return c == ',' || c == ' ' || c == '\t' || c == '\n' || c == '\r';
  };
  TransitionSequence seq;
  std::size_t index = 0;
  const char* p = text.data();
  const char* const end = p + text.size();
  while (p != end) {
    while (p != end && is_separator(*p)) ++p;
    if (p == end) break;
    const char* const token = p;
    while (p != end && !is_separator(*p)) ++p;
    std::uint32_t value = 0;
    const auto [ptr, ec] = std::from_chars(token, p, value, 10);
    if (ec != std::errc{} || ptr != p)
      throw ParseError("token " + std::to_string(index) + " ('" +
                           std::string(token, p) +
                           "') is not a non-negative integer",
                       index);
    seq.push_back(value);
    ++index;
  }
  return seq;
}

/// Inverse of parse_sequence: one line of comma-separated transitions.
inline std::string format_sequence(const TransitionSequence& seq) {
  std::string out;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i != 0) out += ',';
    out += std::to_string(seq[i]);
  }
  return out;
}

/// Walks seq through Q_n: vertex 0 is start, vertex j+1 is vertex j with bit
/// seq[j] flipped. Returns |seq|+1 vertices; consecutive ones are adjacent.
inline std::vector<Vertex> walk(const TransitionSequence& seq, Dimension n,
                                Vertex start = 0) {
  if (!n.contains(start))
    throw std::invalid_argument("start vertex " + std::to_string(start) +
                                " does not fit a " +
                                std::to_string(n.value()) + "-cube");
  std::vector<Vertex> vertices;
  vertices.reserve(seq.size() + 1);
  Vertex v = start;
  vertices.push_back(v);
  for (std::size_t j = 0; j < seq.size(); ++j) {
    if (seq[j] >= static_cast<std::uint32_t>(n.value()))
      throw DimensionOutOfRangeError(
          "transition " + std::to_string(j) + " names dimension " +
              std::to_string(seq[j]) + " in a " + std::to_string(n.value()) +
              "-cube",
          j);
    v ^= Vertex{1} << seq[j];
    vertices.push_back(v);
  }
  return vertices;
}

/// Relabels every entry through perm, where perm[d] is the new name of
/// dimension d. perm must be a bijection on [0, perm.size()).
inline TransitionSequence apply_dimension_permutation(
    const TransitionSequence& seq, const std::vector<std::uint32_t>& perm) {
  std::vector<bool> seen(perm.size(), false);
  for (const std::uint32_t p : perm) {
    if (p >= perm.size() || seen[p])
      throw std::invalid_argument("not a bijection on [0, " +
                                  std::to_string(perm.size()) + ")");
    seen[p] = true;
  }
  TransitionSequence out;
  out.reserve(seq.size());
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (seq[i] >= perm.size())
      throw DimensionOutOfRangeError(
          "transition " + std::to_string(i) + " names dimension " +
              std::to_string(seq[i]) + ", outside the permutation's domain",
          i);
    out.push_back(perm[seq[i]]);
  }
  return out;
}

/// Renames dimensions so that distinct ones appear, at their first
/// occurrences, as 0,1,2,... in order. Idempotent; preserves walk structure
/// up to automorphism and therefore both validators' verdicts and lengths.
/// Dimension-symmetric sequences share one canonical form.
inline TransitionSequence canonical_relabel(const TransitionSequence& seq) {
  constexpr std::uint32_t unassigned = 0xffffffffu;
  std::array<std::uint32_t, 32> small;
  small.fill(unassigned);
  std::unordered_map<std::uint32_t, std::uint32_t> large;  // entries >= 32
  std::uint32_t next = 0;
  TransitionSequence out(seq.size());
  for (std::size_t i = 0; i < seq.size(); ++i) {
    const std::uint32_t t = seq[i];
    if (t < small.size()) {
      if (small[t] == unassigned) small[t] = next++;
      out[i] = small[t];
    } else {
      const auto [it, inserted] = large.try_emplace(t, next);
      if (inserted) ++next;
      out[i] = it->second;
    }
  }
  return out;
}

/// Set of vertices of Q_n, packed 64 per word.
class VertexSet {
 public:
  explicit VertexSet(Dimension n)
      : words_((n.vertex_count() + 63) / 64, 0) {}

  bool test(Vertex v) const { return (words_[v >> 6] >> (v & 63)) & 1; }
  void set(Vertex v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void reset(Vertex v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

  std::size_t count() const {
    std::size_t c = 0;
    for (const std::uint64_t w : words_) c += std::popcount(w);
    return c;
  }

  /// |this \ other|. Both sets must come from the same Dimension.
  std::size_t count_and_not(const VertexSet& other) const {
    if (words_.size() != other.words_.size())
      throw std::invalid_argument("VertexSet dimensions differ");
    std::size_t c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
      c += std::popcount(words_[i] & ~other.words_[i]);
    return c;
  }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<std::uint64_t> words_;
};

}  // namespace sitb
