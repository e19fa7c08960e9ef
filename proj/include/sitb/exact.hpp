// Copyright 2026 The sitb authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <chrono>
#include <cstdint>

#include "sitb/core.hpp"
#include "sitb/validate.hpp"

namespace sitb {

enum class SolveStatus { proven, budget_exhausted };

constexpr std::string_view to_string(SolveStatus status) {
  return status == SolveStatus::proven ? "Proven" : "BudgetExhausted";
}

/// Caps on the exhaustive search. Both bounds must be positive.
struct Budget {
  std::uint64_t max_nodes = 1'000'000'000;
  double max_seconds = 600.0;
};

/// Outcome of an exhaustive search. status == proven means the whole
/// (symmetry-reduced) tree was explored, i.e. no longer object exists in
/// Q_n; budget_exhausted means best_length is only a lower bound. The
/// witness always validates at best_length (empty for "no coil exists").
struct SolveResult {
  Kind kind;
  int dimension;
  long best_length;
  TransitionSequence witness;
  SolveStatus status;
  std::uint64_t nodes_visited;
};

namespace detail {

// Depth-first search over transition sequences from the all-zeros vertex.
//
// Symmetry reduction: a dimension not used yet may only be introduced as the
// smallest unused index, so every path is explored exactly once in its
// canonical_relabel form, eliminating the n! dimension symmetry. Rooting at
// all-zeros removes the 2^n translations (every snake endpoint / coil vertex
// can be translated there).
//
// Legality is incremental: `occupied` marks path vertices, `blocked` counts
// how many interior (non-head) vertices a free vertex is adjacent to; an
// extension is legal iff the target is neither. For coils the start vertex
// never blocks, and a head adjacent to the start (depth >= 2) records the
// closed cycle and is not extended further — an interior vertex adjacent to
// the start would be a chord of every cycle through it.
//
// Iterative so that deep descents in large cubes cannot overflow the stack.
// Memory is O(2^n) bytes.
inline SolveResult exhaustive_search(Dimension dim, Kind kind,
                                     const Budget& budget) {
  if (budget.max_nodes == 0 || budget.max_seconds <= 0)
    throw std::invalid_argument("budget bounds must be positive");
  const auto start_time = std::chrono::steady_clock::now();
  const int n = dim.value();
  const std::uint32_t n32 = static_cast<std::uint32_t>(n);

  VertexSet occupied(dim);
  std::vector<std::uint8_t> blocked(dim.vertex_count(), 0);
  TransitionSequence seq;
  TransitionSequence best_witness;
  long best_length = 0;
  std::uint64_t nodes = 0;
  std::uint64_t next_time_check = 8192;
  bool truncated = false;

  struct Frame {
    Vertex head;
    std::uint32_t next_dim;
    std::uint32_t used;  // distinct dimensions used == {0, ..., used-1}
  };
  std::vector<Frame> stack;

  const auto enter = [&](Vertex head, std::uint32_t used) {
    ++nodes;
    Frame frame{head, 0, used};
    const long depth = static_cast<long>(seq.size());
    if (kind == Kind::snake) {
      if (depth > best_length) {
        best_length = depth;
        best_witness = seq;
      }
    } else if (depth >= 2 && std::popcount(head) == 1) {
      if (depth + 1 >= 4 && depth + 1 > best_length) {
        best_length = depth + 1;
        best_witness = seq;
        best_witness.push_back(
            static_cast<std::uint32_t>(std::countr_zero(head)));
      }
      frame.next_dim = n32;  // closing head: never extend past it
    }
    stack.push_back(frame);
  };

  occupied.set(0);
  enter(0, 0);
  while (!stack.empty()) {
    if (nodes >= budget.max_nodes) {
      truncated = true;
      break;
    }
    if (nodes >= next_time_check) {
      next_time_check = nodes + 8192;
      const std::chrono::duration<double> elapsed =
          std::chrono::steady_clock::now() - start_time;
      if (elapsed.count() > budget.max_seconds) {
        truncated = true;
        break;
      }
    }
    Frame& frame = stack.back();
    const std::uint32_t limit = std::min(frame.used + 1, n32);
    bool extended = false;
    while (frame.next_dim < limit) {
      const std::uint32_t d = frame.next_dim++;
      const Vertex w = frame.head ^ (Vertex{1} << d);
      if (occupied.test(w) || blocked[w] != 0) continue;
      // the old head turns interior and blocks its neighborhood
      if (!(kind == Kind::coil && seq.empty()))
        for (std::uint32_t e = 0; e < n32; ++e)
          ++blocked[frame.head ^ (Vertex{1} << e)];
      occupied.set(w);
      seq.push_back(d);
      const std::uint32_t used = std::max(frame.used, d + 1);
      enter(w, used);  // may invalidate `frame`
      extended = true;
      break;
    }
    if (extended) continue;
    const Vertex head = stack.back().head;
    stack.pop_back();
    if (!seq.empty()) {
      const std::uint32_t d = seq.back();
      seq.pop_back();
      occupied.reset(head);
      const Vertex parent = head ^ (Vertex{1} << d);
      if (!(kind == Kind::coil && seq.empty()))
        for (std::uint32_t e = 0; e < n32; ++e)
          --blocked[parent ^ (Vertex{1} << e)];
    }
  }

  return SolveResult{kind, n, best_length, std::move(best_witness),
                     truncated ? SolveStatus::budget_exhausted
                               : SolveStatus::proven,
                     nodes};
}

}  // namespace detail

/// Longest snake in Q_n by exhaustive symmetry-reduced DFS. Transitions are
/// tried in increasing dimension index, so traversal order and the witness
/// are deterministic.
inline SolveResult optimal_snake_length(Dimension n,
                                        const Budget& budget = {}) {
  return detail::exhaustive_search(n, Kind::snake, budget);
}

/// Longest coil in Q_n, searched over open paths whose closures are
/// harvested whenever the head returns next to the start. Q_1 has no cycle,
/// so n=1 yields best_length 0 with an empty witness.
inline SolveResult optimal_coil_length(Dimension n,
                                       const Budget& budget = {}) {
  return detail::exhaustive_search(n, Kind::coil, budget);
}

/// Independent oracle for tiny cubes: enumerates transition sequences from
/// every start vertex with no pruning machinery beyond the validators
/// themselves — no blocked sets, no symmetry reduction, legality decided by
/// revalidating the whole prefix each step. Throws for n > 4.
inline long brute_force_optimum(Dimension dim, Kind kind) {
  if (dim.value() > 4)
    throw std::invalid_argument(
        "brute_force_optimum handles n <= 4 only (instance too large)");
  const int n = dim.value();
  long best = 0;
  TransitionSequence seq;

  const auto recurse = [&](auto&& self, Vertex start) -> void {
    const ValidationReport as_snake = validate_snake(seq, dim, start);
    if (!detail::valid_or_endpoint_chord(as_snake, seq.size())) return;
    if (kind == Kind::snake && as_snake.valid)
      best = std::max(best, static_cast<long>(seq.size()));
    if (kind == Kind::coil && seq.size() >= 3) {
      Vertex end = start;
      for (const std::uint32_t t : seq) end ^= Vertex{1} << t;
      if (is_adjacent(end, start)) {
        TransitionSequence closed = seq;
        closed.push_back(
            static_cast<std::uint32_t>(std::countr_zero(end ^ start)));
        if (validate_coil(closed, dim, start).valid)
          best = std::max(best, static_cast<long>(closed.size()));
      }
    }
    for (std::uint32_t d = 0; d < static_cast<std::uint32_t>(n); ++d) {
      seq.push_back(d);
      self(self, start);
      seq.pop_back();
    }
  };

  for (Vertex start = 0; start < dim.vertex_count(); ++start)
    recurse(recurse, start);
  return best;
}

}  // namespace sitb
