// Copyright 2026 The sitb authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <random>

#include "sitb/core.hpp"
#include "sitb/validate.hpp"

namespace sitb {

/// Candidate scoring scheme. Only the tightness heuristic exists today;
/// the knob keeps alternatives from becoming an API change.
enum class FitnessKind { tightness };

/// Parameters for one stochastic beam search. Reproducibility contract:
/// identical configs (seed included) produce identical best sequences,
/// provided the wall-clock budget does not cut a run short — a timeout
/// lands between generations at a machine-dependent point.
struct SearchConfig {
  Dimension dimension;
  Kind kind = Kind::snake;
  std::size_t beam_width = 64;
  std::size_t restarts = 0;
  std::uint64_t seed = 0;
  /// Softmax selection pressure; 0 degenerates to deterministic truncation.
  double temperature = 0.0;
  double max_seconds = std::numeric_limits<double>::infinity();
  FitnessKind fitness = FitnessKind::tightness;
};

/// A partial snake rooted at the all-zeros vertex. occupied holds exactly
/// the walked vertices; blocked holds every vertex adjacent to an interior
/// (non-head) path vertex — such vertices would chord the path. In coil
/// runs the start vertex contributes nothing to blocked, leaving the head
/// free to come back next to it for a closure; the price is that a closable
/// candidate carries the one chord its closing edge will become.
struct Candidate {
  TransitionSequence seq;
  Vertex head = 0;
  VertexSet occupied;
  VertexSet blocked;
  double score = 0.0;

  /// The empty candidate at the all-zeros vertex.
  static Candidate initial(Dimension n) {
    Candidate c{{}, 0, VertexSet(n), VertexSet(n), 0.0};
    c.occupied.set(0);
    return c;
  }
};

struct SearchStats {
  std::uint64_t steps = 0;
  std::uint64_t expansions = 0;
  std::size_t restarts_used = 0;
  double seconds = 0.0;
};

/// Best object found over all runs. For coils an empty best with length 0
/// means no coil was found (it is not itself a valid coil sequence).
struct SearchOutcome {
  TransitionSequence best;
  long best_length = 0;
  Kind kind = Kind::snake;
  SearchStats stats;
};

/// Tightness heuristic: long snakes that waste few vertices score higher.
/// Wasted = blocked but not on the path.
inline double fitness(const Candidate& c, Dimension n) {
  (void)n;
  return 100.0 * static_cast<double>(c.seq.size()) -
         static_cast<double>(c.blocked.count_and_not(c.occupied));
}

/// Dimensions along which the candidate may legally grow: the head's
/// neighbor must be neither occupied nor blocked. In coil runs a head
/// adjacent to the start (|seq| >= 2) only closes, never grows — any
/// interior vertex next to the start chords every cycle through it.
inline std::vector<std::uint32_t> legal_extensions(const Candidate& c,
                                                   Dimension n, Kind kind) {
  std::vector<std::uint32_t> dims;
  if (kind == Kind::coil && c.seq.size() >= 2 && std::popcount(c.head) == 1)
    return dims;
  for (std::uint32_t d = 0; d < static_cast<std::uint32_t>(n.value()); ++d) {
    const Vertex w = c.head ^ (Vertex{1} << d);
    if (!c.occupied.test(w) && !c.blocked.test(w)) dims.push_back(d);
  }
  return dims;
}

/// If the head sits next to the start and appending the differing dimension
/// yields a sequence passing validate_coil, returns that closed sequence.
inline std::optional<TransitionSequence> close_if_possible(const Candidate& c,
                                                           Dimension n) {
  if (std::popcount(c.head) != 1) return std::nullopt;
  TransitionSequence closed = c.seq;
  closed.push_back(static_cast<std::uint32_t>(std::countr_zero(c.head)));
  if (!validate_coil(closed, n).valid) return std::nullopt;
  return closed;
}

namespace detail {

inline double score_candidate(const Candidate& c, Dimension n,
                              FitnessKind scheme) {
  switch (scheme) {
    case FitnessKind::tightness:
      return fitness(c, n);
  }
  return fitness(c, n);
}

inline Candidate extend_candidate(const Candidate& parent, std::uint32_t d,
                                  Dimension n, Kind kind,
                                  FitnessKind scheme = FitnessKind::tightness) {
  Candidate child = parent;
  if (!(kind == Kind::coil && parent.seq.empty()))
    for (std::uint32_t e = 0; e < static_cast<std::uint32_t>(n.value()); ++e)
      child.blocked.set(parent.head ^ (Vertex{1} << e));
  child.head = parent.head ^ (Vertex{1} << d);
  child.occupied.set(child.head);
  child.seq.push_back(d);
  child.score = score_candidate(child, n, scheme);
  return child;
}

// 53-bit uniform in [0, 1); spelled out so results do not depend on the
// standard library's distribution implementation.
inline double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline void check_candidate_invariants(const Candidate& c,
                                       const SearchConfig& config) {
  const Dimension n = config.dimension;
  const auto report = validate_snake(c.seq, n);
  const bool shape_ok = config.kind == Kind::snake
                            ? report.valid
                            : valid_or_endpoint_chord(report, c.seq.size());
  if (!shape_ok)
    throw std::logic_error("beam candidate is not a legal partial " +
                           std::string(to_string(config.kind)));
  const auto vertices = walk(c.seq, n);
  VertexSet walked(n);
  for (const Vertex v : vertices) walked.set(v);
  if (!(walked == c.occupied) || !c.occupied.test(c.head))
    throw std::logic_error("beam candidate occupancy out of sync");
  // blocked must cover every neighbor of an interior vertex (minus the
  // start's neighborhood in coil runs)
  const std::size_t first = config.kind == Kind::coil ? 1 : 0;
  for (std::size_t i = first; i + 1 < vertices.size(); ++i)
    for (std::uint32_t e = 0; e < static_cast<std::uint32_t>(n.value()); ++e)
      if (!c.blocked.test(vertices[i] ^ (Vertex{1} << e)))
        throw std::logic_error("beam candidate blocked set out of sync");
}

}  // namespace detail

/// One generation: expands every candidate along every legal dimension,
/// deduplicates dimension-symmetric twins by canonical_relabel key (keeping
/// the lexicographically smallest representative), sorts children by
/// (score descending, canonical form ascending) — a total order, so the
/// outcome is independent of expansion order — and selects beam_width
/// survivors by softmax sampling without replacement at the configured
/// temperature. Returns an empty vector when no candidate can grow
/// (extinction, the caller's end-of-run signal).
inline std::vector<Candidate> step_beam(const std::vector<Candidate>& population,
                                        const SearchConfig& config,
                                        std::mt19937_64& rng) {
  if (config.beam_width < 1)
    throw std::invalid_argument("beam_width must be >= 1");
  if (!(config.temperature >= 0))
    throw std::invalid_argument("temperature must be >= 0");

  std::map<TransitionSequence, Candidate> by_canon;
  for (const Candidate& parent : population) {
    for (const std::uint32_t d :
         legal_extensions(parent, config.dimension, config.kind)) {
      Candidate child = detail::extend_candidate(
          parent, d, config.dimension, config.kind, config.fitness);
      TransitionSequence canon = canonical_relabel(child.seq);
      const auto it = by_canon.find(canon);
      if (it == by_canon.end())
        by_canon.emplace(std::move(canon), std::move(child));
      else if (child.seq < it->second.seq)
        it->second = std::move(child);
    }
  }
  if (by_canon.empty()) return {};

  // by_canon iterates in canonical order already; stable_sort by score
  // keeps that as the tie-break
  std::vector<Candidate> children;
  children.reserve(by_canon.size());
  for (auto& [canon, child] : by_canon) children.push_back(std::move(child));
  std::stable_sort(children.begin(), children.end(),
                   [](const Candidate& a, const Candidate& b) {
                     return a.score > b.score;
                   });

  std::vector<Candidate> survivors;
  if (children.size() <= config.beam_width) {
    survivors = std::move(children);
  } else if (config.temperature == 0) {
    survivors.assign(std::make_move_iterator(children.begin()),
                     std::make_move_iterator(children.begin() +
                                             static_cast<std::ptrdiff_t>(
                                                 config.beam_width)));
  } else {
    const double top_score = children.front().score;
    std::vector<double> weight(children.size());
    for (std::size_t i = 0; i < children.size(); ++i)
      weight[i] = std::exp((children[i].score - top_score) /
                           config.temperature);
    std::vector<std::size_t> available(children.size());
    for (std::size_t i = 0; i < available.size(); ++i) available[i] = i;
    survivors.reserve(config.beam_width);
    for (std::size_t k = 0; k < config.beam_width; ++k) {
      double total = 0;
      for (const std::size_t i : available) total += weight[i];
      std::size_t chosen = available.front();
      if (total > 0) {
        const double r = detail::uniform01(rng) * total;
        double acc = 0;
        chosen = available.back();
        for (const std::size_t i : available) {
          acc += weight[i];
          if (r < acc) {
            chosen = i;
            break;
          }
        }
      }
      survivors.push_back(std::move(children[chosen]));
      available.erase(std::find(available.begin(), available.end(), chosen));
    }
  }

#if defined(SITB_PARANOID) || !defined(NDEBUG)
  for (const Candidate& c : survivors)
    detail::check_candidate_invariants(c, config);
#endif
  return survivors;
}

/// Runs restarts+1 independent beam runs, each from the empty candidate at
/// all-zeros with run seed = seed + run index, stepping until extinction or
/// the time budget. Snake runs track the longest candidate seen; coil runs
/// probe every candidate for closability and track the longest valid coil.
inline SearchOutcome search(const SearchConfig& config) {
  if (config.beam_width < 1)
    throw std::invalid_argument("beam_width must be >= 1");
  if (!(config.temperature >= 0))
    throw std::invalid_argument("temperature must be >= 0");
  const auto start_time = std::chrono::steady_clock::now();
  const auto elapsed = [&] {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start_time)
        .count();
  };

  SearchOutcome out;
  out.kind = config.kind;

  const auto harvest = [&](const std::vector<Candidate>& population) {
    for (const Candidate& c : population) {
      if (config.kind == Kind::snake) {
        if (static_cast<long>(c.seq.size()) > out.best_length) {
          out.best_length = static_cast<long>(c.seq.size());
          out.best = c.seq;
        }
      } else if (const auto closed = close_if_possible(c, config.dimension)) {
        if (static_cast<long>(closed->size()) > out.best_length) {
          out.best_length = static_cast<long>(closed->size());
          out.best = *closed;
        }
      }
    }
  };

  for (std::size_t run = 0; run <= config.restarts; ++run) {
    if (run > 0 && elapsed() > config.max_seconds) break;
    out.stats.restarts_used = run;
    std::mt19937_64 rng(config.seed + run);
    std::vector<Candidate> population{Candidate::initial(config.dimension)};
    while (!population.empty() && elapsed() <= config.max_seconds) {
      for (const Candidate& c : population)
        out.stats.expansions +=
            legal_extensions(c, config.dimension, config.kind).size();
      population = step_beam(population, config, rng);
      ++out.stats.steps;
      harvest(population);
    }
  }
  out.stats.seconds = elapsed();
  return out;
}

}  // namespace sitb
