// Copyright 2026 The sitb authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <unordered_map>
#include <utility>

#include "sitb/core.hpp"

namespace sitb {

enum class ViolationReason {
  repeated_vertex,
  chord_adjacency,
  not_closed,
  dimension_out_of_range,
  too_short,
};

constexpr std::string_view to_string(ViolationReason reason) {
  switch (reason) {
    case ViolationReason::repeated_vertex: return "RepeatedVertex";
    case ViolationReason::chord_adjacency: return "ChordAdjacency";
    case ViolationReason::not_closed: return "NotClosed";
    case ViolationReason::dimension_out_of_range: return "DimensionOutOfRange";
    case ViolationReason::too_short: return "TooShort";
  }
  return "?";
}

/// One defect in a claimed snake or coil. positions are indices into the
/// walk for RepeatedVertex and ChordAdjacency; for DimensionOutOfRange both
/// hold the transition index; for NotClosed and TooShort they span (0, L).
struct Violation {
  std::pair<std::size_t, std::size_t> positions;
  ViolationReason reason;

  friend bool operator==(const Violation&, const Violation&) = default;
};

/// Verdict for a claimed snake/coil. length counts edges: a valid snake on
/// L transitions has length L (a path on L+1 vertices), a valid coil on L
/// transitions has length L (a cycle on L vertices). Reports collect every
/// defect rather than failing fast, capped to keep pathological inputs sane.
struct ValidationReport {
  Kind kind;
  int dimension;
  long length;
  bool valid;
  std::vector<Violation> violations;

  static constexpr std::size_t max_violations = 100;
};

namespace detail {

inline bool report_full(const std::vector<Violation>& v) {
  return v.size() >= ValidationReport::max_violations;
}

inline void append_range_violations(const TransitionSequence& seq,
                                    Dimension n,
                                    std::vector<Violation>& out) {
  for (std::size_t j = 0; j < seq.size() && !report_full(out); ++j)
    if (seq[j] >= static_cast<std::uint32_t>(n.value()))
      out.push_back({{j, j}, ViolationReason::dimension_out_of_range});
}

// Smallest cube the whole sequence can be walked in (at least n), or 0 when
// some entry does not fit any representable cube. Walking out-of-range
// entries in the enlarged cube keeps the structural diagnostics meaningful
// when a sequence is checked against the wrong dimension.
inline int effective_walk_dimension(const TransitionSequence& seq,
                                    Dimension n) {
  int m = n.value();
  for (const std::uint32_t t : seq) {
    if (t >= static_cast<std::uint32_t>(Dimension::max_value)) return 0;
    m = std::max(m, static_cast<int>(t) + 1);
  }
  return m;
}

inline std::vector<Vertex> walk_unchecked(const TransitionSequence& seq,
                                          Vertex start) {
  std::vector<Vertex> vertices;
  vertices.reserve(seq.size() + 1);
  Vertex v = start;
  vertices.push_back(v);
  for (const std::uint32_t t : seq) vertices.push_back(v ^= Vertex{1} << t);
  return vertices;
}

// Duplicate and chord scan over vertices[0..count). Positions i < j count as
// a chord when lo <= j - i <= hi and the vertices are adjacent.
inline void append_walk_violations(const std::vector<Vertex>& vertices,
                                   std::size_t count, int walk_dim,
                                   std::size_t lo, std::size_t hi,
                                   std::vector<Violation>& out) {
  std::unordered_map<Vertex, std::vector<std::size_t>> positions;
  positions.reserve(count * 2);
  for (std::size_t j = 0; j < count; ++j) {
    auto& at = positions[vertices[j]];
    if (!at.empty() && !report_full(out))
      out.push_back({{at.front(), j}, ViolationReason::repeated_vertex});
    at.push_back(j);
  }
  for (std::size_t i = 0; i < count && !report_full(out); ++i) {
    for (int d = 0; d < walk_dim && !report_full(out); ++d) {
      const auto it = positions.find(vertices[i] ^ (Vertex{1} << d));
      if (it == positions.end()) continue;
      for (const std::size_t j : it->second) {
        if (j <= i) continue;
        if (j - i < lo || j - i > hi) continue;
        if (report_full(out)) break;
        out.push_back({{i, j}, ViolationReason::chord_adjacency});
      }
    }
  }
}

// True when the report is a valid snake, or a snake whose only defect is
// the single chord joining its two endpoints — the shape every proper
// prefix of a coil traversal has (the chord is the future closing edge).
inline bool valid_or_endpoint_chord(const ValidationReport& report,
                                    std::size_t length) {
  if (report.valid) return true;
  return report.violations.size() == 1 &&
         report.violations[0].reason == ViolationReason::chord_adjacency &&
         report.violations[0].positions ==
             std::pair<std::size_t, std::size_t>{0, length};
}

}  // namespace detail

/// Checks that seq walks an induced path of Q_n: entries in range, all
/// vertices distinct, and no two vertices at positions |i - j| >= 2
/// adjacent. All defects are reported; nothing throws. The verdict does not
/// depend on start (walks from different vertices are automorphic images).
inline ValidationReport validate_snake(const TransitionSequence& seq,
                                       Dimension n, Vertex start = 0) {
  if (!n.contains(start))
    throw std::invalid_argument("start vertex does not fit the cube");
  ValidationReport report{Kind::snake, n.value(),
                          static_cast<long>(seq.size()), false, {}};
  detail::append_range_violations(seq, n, report.violations);
  const int m = detail::effective_walk_dimension(seq, n);
  if (m != 0) {
    const auto vertices = detail::walk_unchecked(seq, start);
    detail::append_walk_violations(vertices, vertices.size(), m, 2,
                                   vertices.size(), report.violations);
  }
  report.valid = report.violations.empty();
  return report;
}

/// Checks that seq walks an induced cycle of Q_n: entries in range, at
/// least 4 transitions (the cube is bipartite, so C_4 is the smallest
/// cycle), the walk returns to start — equivalently every dimension is
/// flipped an even number of times — the L cycle vertices are distinct, and
/// no two at cyclic distance >= 2 are adjacent. A sequence that does not
/// return to start gets a NotClosed violation plus path-style diagnostics.
inline ValidationReport validate_coil(const TransitionSequence& seq,
                                      Dimension n, Vertex start = 0) {
  if (!n.contains(start))
    throw std::invalid_argument("start vertex does not fit the cube");
  const std::size_t length = seq.size();
  ValidationReport report{Kind::coil, n.value(), static_cast<long>(length),
                          false, {}};
  detail::append_range_violations(seq, n, report.violations);
  if (length < 4)
    report.violations.push_back({{0, length}, ViolationReason::too_short});
  const int m = detail::effective_walk_dimension(seq, n);
  if (m != 0 && length > 0) {
    const auto vertices = detail::walk_unchecked(seq, start);
    if (vertices.back() != start) {
      report.violations.push_back({{0, length}, ViolationReason::not_closed});
      detail::append_walk_violations(vertices, vertices.size(), m, 2,
                                     vertices.size(), report.violations);
    } else {
      // cyclic scan over the L distinct cycle positions; the pair (0, L-1)
      // is the closing edge, at distance j - i = L - 1 > L - 2
      detail::append_walk_violations(vertices, length, m, 2,
                                     length >= 2 ? length - 2 : 0,
                                     report.violations);
    }
  }
  report.valid = report.violations.empty();
  return report;
}

/// Normalizes a coil to its closed transition sequence. Published coil
/// sequences (the appendix convention) often list only the open path and
/// leave the closing transition implicit; this returns seq unchanged when
/// its walk already returns to start, appends the implied closing
/// transition when the walk ends adjacent to start, and returns nullopt
/// otherwise. Closure only — run validate_coil on the result.
inline std::optional<TransitionSequence> close_coil(
    const TransitionSequence& seq, Dimension n, Vertex start = 0) {
  Vertex end = start;
  for (const std::uint32_t t : seq) {
    if (t >= static_cast<std::uint32_t>(n.value())) return std::nullopt;
    end ^= Vertex{1} << t;
  }
  if (end == start) return seq;
  if (!is_adjacent(end, start)) return std::nullopt;
  TransitionSequence closed = seq;
  closed.push_back(static_cast<std::uint32_t>(std::countr_zero(end ^ start)));
  return closed;
}

}  // namespace sitb
