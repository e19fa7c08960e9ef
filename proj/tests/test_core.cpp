// Copyright 2026 The sitb authors
// SPDX-License-Identifier: Apache-2.0

#include <catch2/catch_amalgamated.hpp>

#include <numeric>
#include <set>

#include "helpers.hpp"
#include "sitb/core.hpp"
#include "sitb/validate.hpp"

using namespace sitb;
using sitb_test::random_coil;
using sitb_test::random_permutation;
using sitb_test::random_snake;
using sitb_test::reversed;
using sitb_test::rotated;

namespace {

bool has_violation(const ValidationReport& report, ViolationReason reason) {
  for (const Violation& v : report.violations)
    if (v.reason == reason) return true;
  return false;
}

}  // namespace

TEST_CASE("parse_sequence tokenizes commas and whitespace") {
  CHECK(parse_sequence("0,1,2") == TransitionSequence{0, 1, 2});
  CHECK(parse_sequence("0,1,\n2,3") == TransitionSequence{0, 1, 2, 3});
  CHECK(parse_sequence(" 7 \t 8\r\n9 ") == TransitionSequence{7, 8, 9});
  CHECK(parse_sequence(",,1,  ,2,") == TransitionSequence{1, 2});
  CHECK(parse_sequence("") == TransitionSequence{});
  CHECK(parse_sequence("  \n ") == TransitionSequence{});
}

TEST_CASE("parse_sequence flags the offending token") {
  try {
    parse_sequence("0,x,2");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.token_index() == 1);
  }
  CHECK_THROWS_AS(parse_sequence("-1"), ParseError);
  CHECK_THROWS_AS(parse_sequence("3.5"), ParseError);
  CHECK_THROWS_AS(parse_sequence("12,4294967296"), ParseError);  // > 32 bits
}

TEST_CASE("format_sequence round-trips through parse_sequence") {
  const TransitionSequence seq{0, 31, 5, 5, 2};
  CHECK(parse_sequence(format_sequence(seq)) == seq);
  CHECK(format_sequence({}) == "");
}

TEST_CASE("is_adjacent is single-bit difference") {
  CHECK(is_adjacent(0, 1));
  CHECK_FALSE(is_adjacent(0, 3));
  CHECK(is_adjacent(5, 7));
  CHECK_FALSE(is_adjacent(9, 9));
}

TEST_CASE("walk flips one bit per step") {
  const Dimension n10(10);
  CHECK(walk({}, Dimension(3)) == std::vector<Vertex>{0});
  CHECK(walk({0, 1, 2, 3, 0}, n10) ==
        std::vector<Vertex>{0, 1, 3, 7, 15, 14});
  CHECK(walk({0}, Dimension(3), 5) == std::vector<Vertex>{5, 4});

  const auto vertices = walk({0, 1, 0, 2, 1}, Dimension(3));
  REQUIRE(vertices.size() == 6);
  for (std::size_t i = 0; i + 1 < vertices.size(); ++i)
    CHECK(is_adjacent(vertices[i], vertices[i + 1]));
}

TEST_CASE("walk rejects out-of-range transitions and start vertices") {
  try {
    walk({0, 7}, Dimension(3));
    FAIL("expected DimensionOutOfRangeError");
  } catch (const DimensionOutOfRangeError& e) {
    CHECK(e.position() == 1);
  }
  CHECK_THROWS_AS(walk({0}, Dimension(2), 4), std::invalid_argument);
}

TEST_CASE("validate_snake accepts induced paths") {
  CHECK(validate_snake({0}, Dimension(1)).valid);
  CHECK(validate_snake({0}, Dimension(1)).length == 1);
  CHECK(validate_snake({}, Dimension(4)).valid);
  CHECK(validate_snake({}, Dimension(4)).length == 0);
  CHECK(validate_snake({0, 1, 2, 0}, Dimension(3)).valid);
}

TEST_CASE("validate_snake reports chords with walk positions") {
  const auto report = validate_snake({0, 1, 0}, Dimension(2));
  CHECK_FALSE(report.valid);
  REQUIRE(report.violations.size() == 1);
  CHECK(report.violations[0].reason == ViolationReason::chord_adjacency);
  CHECK(report.violations[0].positions == std::pair<std::size_t,
                                                    std::size_t>{0, 3});
}

TEST_CASE("validate_snake reports revisits and range violations") {
  const auto repeat = validate_snake({0, 0}, Dimension(2));
  CHECK_FALSE(repeat.valid);
  CHECK(has_violation(repeat, ViolationReason::repeated_vertex));

  const auto range = validate_snake({0, 5, 1}, Dimension(3));
  CHECK_FALSE(range.valid);
  REQUIRE(has_violation(range, ViolationReason::dimension_out_of_range));
  CHECK(range.violations[0].positions.first == 1);

  // entry 31 exceeds every representable cube; the range violation is
  // still reported
  const auto wrong_dim = validate_snake({0, 1, 31}, Dimension(2));
  CHECK_FALSE(wrong_dim.valid);
  CHECK(has_violation(wrong_dim, ViolationReason::dimension_out_of_range));
}

TEST_CASE("validate_coil accepts induced cycles") {
  const auto square = validate_coil({0, 1, 0, 1}, Dimension(2));
  CHECK(square.valid);
  CHECK(square.length == 4);
  CHECK(validate_coil({0, 1, 2, 0, 1, 2}, Dimension(3)).valid);
}

TEST_CASE("validate_coil rejects open, short, and chorded walks") {
  const auto open = validate_coil({0, 1, 2}, Dimension(3));
  CHECK_FALSE(open.valid);
  CHECK(has_violation(open, ViolationReason::not_closed));

  const auto tiny = validate_coil({0, 0}, Dimension(2));
  CHECK_FALSE(tiny.valid);
  CHECK(has_violation(tiny, ViolationReason::too_short));

  // closed 6-walk in Q_3 whose opposite corners touch: 0-1-3-2-6-4-0 has
  // the chord 0-2 at cyclic distance 3
  const auto chorded = validate_coil({0, 1, 0, 2, 1, 2}, Dimension(3));
  CHECK_FALSE(chorded.valid);
  REQUIRE(has_violation(chorded, ViolationReason::chord_adjacency));

  const auto repeated = validate_coil({0, 1, 0, 1, 0, 1, 0, 1}, Dimension(2));
  CHECK_FALSE(repeated.valid);
  CHECK(has_violation(repeated, ViolationReason::repeated_vertex));
}

TEST_CASE("validate_coil does not flag the closing edge as a chord") {
  // the full 4-cycle: positions 0 and 3 are cyclically consecutive
  const auto report = validate_coil({0, 1, 0, 1}, Dimension(2));
  CHECK(report.violations.empty());
}

TEST_CASE("close_coil completes the published open-path form") {
  const auto closed = close_coil({0, 1, 0}, Dimension(2));
  REQUIRE(closed.has_value());
  CHECK(*closed == TransitionSequence{0, 1, 0, 1});
  CHECK(validate_coil(*closed, Dimension(2)).valid);

  // already closed: unchanged
  CHECK(close_coil({0, 1, 0, 1}, Dimension(2)) ==
        TransitionSequence{0, 1, 0, 1});
  // ends two flips away: not closable
  CHECK_FALSE(close_coil({0, 1}, Dimension(3)).has_value());
  CHECK_FALSE(close_coil({0, 9}, Dimension(3)).has_value());
}

TEST_CASE("apply_dimension_permutation relabels entries") {
  CHECK(apply_dimension_permutation({0, 1, 0}, {1, 0}) ==
        TransitionSequence{1, 0, 1});
  CHECK(apply_dimension_permutation({0, 1, 2}, {0, 1, 2}) ==
        TransitionSequence{0, 1, 2});
  CHECK(apply_dimension_permutation({0, 1, 2}, {2, 0, 1}) ==
        TransitionSequence{2, 0, 1});
  CHECK_THROWS_AS(apply_dimension_permutation({0}, {0, 0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(apply_dimension_permutation({2}, {1, 0}),
                  DimensionOutOfRangeError);
}

TEST_CASE("canonical_relabel renames by first occurrence") {
  CHECK(canonical_relabel({3, 5, 3, 0}) == TransitionSequence{0, 1, 0, 2});
  CHECK(canonical_relabel({0, 1, 2}) == TransitionSequence{0, 1, 2});
  CHECK(canonical_relabel({}) == TransitionSequence{});
  CHECK(canonical_relabel({7, 7, 7}) == TransitionSequence{0, 0, 0});
}

TEST_CASE("canonical_relabel is idempotent and verdict-preserving") {
  std::mt19937_64 rng(42);
  for (int iter = 0; iter < 300; ++iter) {
    const Dimension n(1 + static_cast<int>(rng() % 8));
    const auto seq = random_snake(rng, n);
    const auto canon = canonical_relabel(seq);
    CHECK(canonical_relabel(canon) == canon);
    const auto before = validate_snake(seq, n);
    const auto after = validate_snake(canon, n);
    CHECK(before.valid == after.valid);
    CHECK(before.length == after.length);
  }
}

TEST_CASE("VertexSet counts and set difference") {
  VertexSet a(Dimension(7));
  VertexSet b(Dimension(7));
  a.set(0);
  a.set(100);
  a.set(127);
  b.set(100);
  CHECK(a.count() == 3);
  CHECK(a.count_and_not(b) == 2);
  CHECK(b.count_and_not(a) == 0);
  a.reset(100);
  CHECK_FALSE(a.test(100));
  CHECK(a.count() == 2);
}

TEST_CASE("snake validity is invariant under relabeling, reversal, and "
          "translation") {
  std::mt19937_64 rng(7);
  for (int iter = 0; iter < 500; ++iter) {
    const int nv = 1 + static_cast<int>(rng() % 8);
    const Dimension n(nv);
    const auto seq = random_snake(rng, n);
    REQUIRE(validate_snake(seq, n).valid);

    const auto perm = random_permutation(rng, nv);
    CHECK(validate_snake(apply_dimension_permutation(seq, perm), n).valid);
    CHECK(validate_snake(reversed(seq), n).valid);
    const Vertex start = static_cast<Vertex>(rng() % n.vertex_count());
    CHECK(validate_snake(seq, n, start).valid);
  }
}

TEST_CASE("coil validity is invariant under relabeling, reversal, rotation, "
          "and translation") {
  std::mt19937_64 rng(11);
  for (int iter = 0; iter < 300; ++iter) {
    const int nv = 2 + static_cast<int>(rng() % 7);
    const Dimension n(nv);
    const auto seq = random_coil(rng, n);
    REQUIRE(validate_coil(seq, n).valid);

    const auto perm = random_permutation(rng, nv);
    CHECK(validate_coil(apply_dimension_permutation(seq, perm), n).valid);
    CHECK(validate_coil(reversed(seq), n).valid);
    CHECK(validate_coil(rotated(seq, rng() % seq.size()), n).valid);
    const Vertex start = static_cast<Vertex>(rng() % n.vertex_count());
    CHECK(validate_coil(seq, n, start).valid);
  }
}

TEST_CASE("every prefix of a valid snake is a valid snake") {
  std::mt19937_64 rng(13);
  for (int iter = 0; iter < 200; ++iter) {
    const Dimension n(1 + static_cast<int>(rng() % 8));
    const auto seq = random_snake(rng, n);
    for (std::size_t k = 0; k <= seq.size(); ++k) {
      const TransitionSequence prefix(seq.begin(),
                                      seq.begin() +
                                          static_cast<std::ptrdiff_t>(k));
      CHECK(validate_snake(prefix, n).valid);
    }
  }
}

TEST_CASE("valid coils flip every dimension an even number of times") {
  std::mt19937_64 rng(17);
  for (int iter = 0; iter < 300; ++iter) {
    const Dimension n(2 + static_cast<int>(rng() % 7));
    const auto seq = random_coil(rng, n);
    REQUIRE(validate_coil(seq, n).valid);
    std::vector<int> count(static_cast<std::size_t>(n.value()), 0);
    for (const std::uint32_t t : seq) ++count[t];
    for (const int c : count) CHECK(c % 2 == 0);
  }
}

TEST_CASE("walk vertices are pairwise adjacent exactly when consecutive") {
  std::mt19937_64 rng(19);
  for (int iter = 0; iter < 100; ++iter) {
    const Dimension n(1 + static_cast<int>(rng() % 8));
    const auto seq = random_snake(rng, n);
    const auto vertices = walk(seq, n);
    CHECK(vertices.size() == seq.size() + 1);
    for (std::size_t i = 0; i < vertices.size(); ++i)
      for (std::size_t j = i + 1; j < vertices.size(); ++j)
        CHECK(is_adjacent(vertices[i], vertices[j]) == (j - i == 1));
  }
}

// Independent definition check for tiny cubes: the maximum induced
// path/cycle over all vertex subsets (degree and connectivity conditions
// only) must match the maximum over transition sequences as judged by the
// validators.
namespace {

bool subset_connected(const std::vector<Vertex>& vs) {
  std::set<Vertex> rest(vs.begin() + 1, vs.end());
  std::vector<Vertex> frontier{vs.front()};
  while (!frontier.empty()) {
    const Vertex v = frontier.back();
    frontier.pop_back();
    for (auto it = rest.begin(); it != rest.end();) {
      if (is_adjacent(v, *it)) {
        frontier.push_back(*it);
        it = rest.erase(it);
      } else {
        ++it;
      }
    }
  }
  return rest.empty();
}

long subset_maximum(Dimension n, Kind kind) {
  const std::size_t size = n.vertex_count();
  long best = 0;
  for (std::uint32_t mask = 1; mask < (1u << size); ++mask) {
    std::vector<Vertex> vs;
    for (std::uint32_t v = 0; v < size; ++v)
      if (mask >> v & 1) vs.push_back(v);
    std::vector<int> deg(vs.size(), 0);
    long edges = 0;
    for (std::size_t i = 0; i < vs.size(); ++i)
      for (std::size_t j = i + 1; j < vs.size(); ++j)
        if (is_adjacent(vs[i], vs[j])) {
          ++deg[i];
          ++deg[j];
          ++edges;
        }
    const long k = static_cast<long>(vs.size());
    bool shape;
    if (kind == Kind::snake) {
      const long deg1 =
          static_cast<long>(std::count(deg.begin(), deg.end(), 1));
      shape = k == 1 || (edges == k - 1 && deg1 == 2 &&
                         std::all_of(deg.begin(), deg.end(),
                                     [](int d) { return d <= 2; }));
    } else {
      shape = k >= 4 && edges == k &&
              std::all_of(deg.begin(), deg.end(),
                          [](int d) { return d == 2; });
    }
    if (!shape || !subset_connected(vs)) continue;
    best = std::max(best, kind == Kind::snake ? k - 1 : k);
  }
  return best;
}

long sequence_maximum(Dimension n, Kind kind) {
  long best = 0;
  TransitionSequence seq;
  const auto recurse = [&](auto&& self, Vertex start) -> void {
    const auto as_snake = validate_snake(seq, n, start);
    if (!detail::valid_or_endpoint_chord(as_snake, seq.size())) return;
    if (kind == Kind::snake && as_snake.valid)
      best = std::max(best, as_snake.length);
    if (kind == Kind::coil) {
      if (const auto closed = close_coil(seq, n, start)) {
        const auto report = validate_coil(*closed, n, start);
        if (report.valid) best = std::max(best, report.length);
      }
    }
    for (std::uint32_t d = 0; d < static_cast<std::uint32_t>(n.value());
         ++d) {
      seq.push_back(d);
      self(self, start);
      seq.pop_back();
    }
  };
  for (Vertex start = 0; start < n.vertex_count(); ++start)
    recurse(recurse, start);
  return best;
}

}  // namespace

TEST_CASE("subset enumeration and sequence enumeration agree for n <= 3") {
  for (int nv = 1; nv <= 3; ++nv) {
    const Dimension n(nv);
    CHECK(subset_maximum(n, Kind::snake) == sequence_maximum(n, Kind::snake));
    CHECK(subset_maximum(n, Kind::coil) == sequence_maximum(n, Kind::coil));
  }
}

TEST_CASE("Dimension enforces its bounds") {
  CHECK_THROWS_AS(Dimension(0), std::invalid_argument);
  CHECK_THROWS_AS(Dimension(32), std::invalid_argument);
  CHECK(Dimension(31).vertex_count() == (std::uint64_t{1} << 31));
  CHECK(Dimension(2).contains(3));
  CHECK_FALSE(Dimension(2).contains(4));
}
