// Copyright 2026 The sitb authors
// SPDX-License-Identifier: Apache-2.0
//
// Shared generators for randomized validator properties. Samples are
// validator-gated, so every returned object is genuinely valid; the
// properties exercised on them (invariance under relabeling, reversal,
// rotation, translation, ...) do not depend on how samples were drawn.

#pragma once

#include <algorithm>
#include <numeric>
#include <random>

#include "sitb/beam.hpp"
#include "sitb/core.hpp"
#include "sitb/validate.hpp"

namespace sitb_test {

inline std::vector<std::uint32_t> random_permutation(std::mt19937_64& rng,
                                                     int n) {
  std::vector<std::uint32_t> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0u);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

inline sitb::TransitionSequence reversed(const sitb::TransitionSequence& seq) {
  return {seq.rbegin(), seq.rend()};
}

inline sitb::TransitionSequence rotated(const sitb::TransitionSequence& seq,
                                        std::size_t k) {
  if (seq.empty()) return seq;
  k %= seq.size();
  sitb::TransitionSequence out(seq.begin() + static_cast<std::ptrdiff_t>(k),
                               seq.end());
  out.insert(out.end(), seq.begin(),
             seq.begin() + static_cast<std::ptrdiff_t>(k));
  return out;
}

/// Random valid snake: extends along random dimensions while the prefix
/// stays a valid snake, up to max_len or a dead end.
inline sitb::TransitionSequence random_snake(std::mt19937_64& rng,
                                             sitb::Dimension n,
                                             std::size_t max_len = 48) {
  sitb::TransitionSequence seq;
  std::vector<std::uint32_t> dims(static_cast<std::size_t>(n.value()));
  std::iota(dims.begin(), dims.end(), 0u);
  while (seq.size() < max_len) {
    std::shuffle(dims.begin(), dims.end(), rng);
    bool extended = false;
    for (const std::uint32_t d : dims) {
      seq.push_back(d);
      if (sitb::validate_snake(seq, n).valid) {
        extended = true;
        break;
      }
      seq.pop_back();
    }
    if (!extended) break;
  }
  return seq;
}

/// Random valid coil: random legal walk under the coil rules, returning the
/// longest closure harvested. Requires n >= 2 (Q_1 has no cycle).
inline sitb::TransitionSequence random_coil(std::mt19937_64& rng,
                                            sitb::Dimension n,
                                            std::size_t max_tries = 200) {
  sitb::TransitionSequence best;
  for (std::size_t attempt = 0; attempt < max_tries; ++attempt) {
    sitb::Candidate c = sitb::Candidate::initial(n);
    while (true) {
      if (const auto closed = sitb::close_if_possible(c, n))
        if (closed->size() > best.size()) best = *closed;
      const auto dims = sitb::legal_extensions(c, n, sitb::Kind::coil);
      if (dims.empty()) break;
      const std::size_t pick = rng() % dims.size();
      c = sitb::detail::extend_candidate(c, dims[pick], n, sitb::Kind::coil);
    }
    if (!best.empty()) return best;
  }
  return best;  // empty only if every attempt failed to close
}

}  // namespace sitb_test
