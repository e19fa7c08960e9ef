// Copyright 2026 The sitb authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <sstream>
#include <string>

#include "sitb/core.hpp"
#include "sitb/corpus_data.hpp"
#include "sitb/validate.hpp"

namespace sitb {

/// One row of the bounds table. source is the citation key the bound is
/// credited to ("this-paper" for the bundled records, empty when the table
/// carries no reference). A sequence is attached exactly for the bundled
/// rows, already in closed form for coils.
struct RecordEntry {
  int dimension;
  Kind kind;
  long length;
  bool optimal;
  std::string_view source;
  std::optional<TransitionSequence> sequence;
};

/// Parsed line of a corpus manifest:
/// `label kind dimension claimed_length filename`, whitespace-separated.
struct ManifestRow {
  std::string label;
  Kind kind;
  int dimension;
  long claimed_length;
  std::string filename;
};

/// A bundled record: the manifest row, the verbatim asset text, and the
/// parsed sequence normalized to closed form for coils (published coil
/// sequences leave the closing transition implicit; see close_coil).
struct CorpusEntry {
  ManifestRow row;
  std::string_view raw_text;
  TransitionSequence sequence;
};

inline std::vector<ManifestRow> parse_manifest(std::string_view text) {
  std::vector<ManifestRow> rows;
  std::istringstream lines{std::string(text)};
  std::string line;
  while (std::getline(lines, line)) {
    std::istringstream fields(line);
    ManifestRow row;
    std::string kind;
    if (!(fields >> row.label)) continue;  // blank line
    if (!(fields >> kind >> row.dimension >> row.claimed_length >>
          row.filename))
      throw std::runtime_error("malformed manifest line: " + line);
    if (kind == "snake")
      row.kind = Kind::snake;
    else if (kind == "coil")
      row.kind = Kind::coil;
    else
      throw std::runtime_error("manifest kind must be snake|coil, got " +
                               kind);
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace detail {

inline std::string_view corpus_asset_text(std::string_view filename) {
  for (const CorpusAsset& asset : corpus_assets)
    if (asset.filename == filename) return asset.text;
  throw std::runtime_error("corpus asset missing: " + std::string(filename));
}

inline std::vector<CorpusEntry> load_corpus() {
  std::vector<CorpusEntry> entries;
  for (ManifestRow& row : parse_manifest(corpus_manifest)) {
    CorpusEntry entry;
    entry.raw_text = corpus_asset_text(row.filename);
    entry.sequence = parse_sequence(entry.raw_text);
    if (row.kind == Kind::coil) {
      // leave the sequence as parsed if it cannot be closed at all;
      // verify_corpus will then report the defect instead of hiding it
      if (const auto closed =
              close_coil(entry.sequence, Dimension(row.dimension)))
        entry.sequence = *closed;
    }
    entry.row = std::move(row);
    entries.push_back(std::move(entry));
  }
  return entries;
}

}  // namespace detail

/// The embedded record sequences, in publication order.
inline const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> entries = detail::load_corpus();
  return entries;
}

/// Validates every bundled sequence against its manifest header and returns
/// one report per entry, in corpus order. Any invalid report (or a length
/// differing from the claimed one) is a defect in the embedded data.
inline std::vector<ValidationReport> verify_corpus() {
  std::vector<ValidationReport> reports;
  for (const CorpusEntry& entry : corpus()) {
    const Dimension n(entry.row.dimension);
    reports.push_back(entry.row.kind == Kind::snake
                          ? validate_snake(entry.sequence, n)
                          : validate_coil(entry.sequence, n));
  }
  return reports;
}

namespace detail {

struct BoundRow {
  int dimension;
  long snake_length;
  bool snake_optimal;
  std::string_view snake_source;
  long coil_length;
  bool coil_optimal;
  std::string_view coil_source;
};

// Best known lower bounds per dimension; a starred (optimal) bound is an
// exact optimum. Snake bounds for n >= 14 follow from the coil bounds by
// deleting one cycle vertex, hence the constant gap of 2.
inline constexpr BoundRow bound_rows[] = {
    {1, 1, true, "", 0, true, ""},
    {2, 2, true, "Da65", 4, true, "Ka58"},
    {3, 4, true, "Da65", 6, true, "Ka58"},
    {4, 7, true, "Da65", 8, true, "Ka58"},
    {5, 13, true, "Da65", 14, true, "Ka58"},
    {6, 26, true, "Da65", 26, true, "Da65"},
    {7, 50, true, "PRMK94", 48, true, "Ko96"},
    {8, 98, true, "OP15", 96, true, "OP14"},
    {9, 190, false, "Wy12", 188, false, "Wy12"},
    {10, 370, false, "Ki12", 366, false, "this-paper"},
    {11, 712, false, "this-paper", 692, false, "this-paper"},
    {12, 1373, false, "this-paper", 1344, false, "this-paper"},
    {13, 2687, false, "this-paper", 2594, false, "this-paper"},
    {14, 4932, false, "AK91", 4934, false, "AK91"},
    {15, 9866, false, "AK91", 9868, false, "AK91"},
    {16, 19738, false, "AK91", 19740, false, "AK91"},
    {17, 39478, false, "AK91", 39480, false, "AK91"},
    {18, 78958, false, "AK91", 78960, false, "AK91"},
    {19, 157898, false, "AK91", 157900, false, "AK91"},
    {20, 315798, false, "AK91", 315800, false, "AK91"},
};

inline std::vector<RecordEntry> load_bounds_table() {
  std::vector<RecordEntry> entries;
  for (const BoundRow& row : bound_rows) {
    RecordEntry snake{row.dimension, Kind::snake, row.snake_length,
                      row.snake_optimal, row.snake_source, std::nullopt};
    RecordEntry coil{row.dimension, Kind::coil, row.coil_length,
                     row.coil_optimal, row.coil_source, std::nullopt};
    for (const CorpusEntry& c : corpus()) {
      if (c.row.dimension != row.dimension) continue;
      if (c.row.kind == Kind::snake)
        snake.sequence = c.sequence;
      else
        coil.sequence = c.sequence;
    }
    entries.push_back(std::move(snake));
    entries.push_back(std::move(coil));
  }
  return entries;
}

}  // namespace detail

/// All 40 rows (n = 1..20, snake and coil), snake before coil per
/// dimension, bundled sequences attached to the record rows.
inline const std::vector<RecordEntry>& bounds_table() {
  static const std::vector<RecordEntry> entries = detail::load_bounds_table();
  return entries;
}

/// The table row for (n, kind). Throws std::out_of_range above n = 20 (the
/// table ends there; ak_coil_bound covers larger cubes).
inline const RecordEntry& best_known(Dimension n, Kind kind) {
  if (n.value() > 20)
    throw std::out_of_range("bounds table covers n <= 20, got n = " +
                            std::to_string(n.value()));
  for (const RecordEntry& entry : bounds_table())
    if (entry.dimension == n.value() && entry.kind == kind) return entry;
  throw std::out_of_range("no bounds-table row for n = " +
                          std::to_string(n.value()));
}

/// General coil lower bound 77/256 * 2^n for n >= 21, in exact integer
/// arithmetic (77 * 2^(n-8)).
inline std::uint64_t ak_coil_bound(Dimension n) {
  if (n.value() < 21)
    throw std::domain_error(
        "the general coil bound applies for n >= 21; the bounds table "
        "covers n <= 20");
  return std::uint64_t{77} << (n.value() - 8);
}

/// Deletes one vertex of a valid coil: dropping the last two transitions
/// leaves an induced path of length |seq| - 2. Throws if seq is not a valid
/// coil for Q_n.
inline TransitionSequence coil_to_snake(const TransitionSequence& seq,
                                        Dimension n) {
  if (!validate_coil(seq, n).valid)
    throw std::invalid_argument("coil_to_snake requires a valid coil");
  return TransitionSequence(seq.begin(), seq.end() - 2);
}

/// Structural checks over the embedded table; returns human-readable
/// descriptions of any failures (empty means consistent).
inline std::vector<std::string> table_consistency_errors() {
  std::vector<std::string> errors;
  const auto& table = bounds_table();
  if (table.size() != 40)
    errors.push_back("expected 40 rows, found " +
                     std::to_string(table.size()));
  long snake_len[21] = {};
  long coil_len[21] = {};
  for (const RecordEntry& e : table) {
    (e.kind == Kind::snake ? snake_len : coil_len)[e.dimension] = e.length;
    if (e.optimal && e.dimension > 8)
      errors.push_back("optimal marker above n = 8 at n = " +
                       std::to_string(e.dimension));
    if (!e.optimal && e.dimension <= 8)
      errors.push_back("missing optimal marker at n = " +
                       std::to_string(e.dimension));
    if (e.sequence) {
      const Dimension n(e.dimension);
      const auto report = e.kind == Kind::snake
                              ? validate_snake(*e.sequence, n)
                              : validate_coil(*e.sequence, n);
      if (!report.valid || report.length != e.length)
        errors.push_back("attached sequence does not match row n = " +
                         std::to_string(e.dimension) + " " +
                         std::string(to_string(e.kind)));
    }
  }
  for (int n = 14; n <= 20; ++n)
    if (snake_len[n] != coil_len[n] - 2)
      errors.push_back("snake(n) != coil(n) - 2 at n = " + std::to_string(n));
  for (int n = 1; n <= 20; ++n)
    if (snake_len[n] < coil_len[n] - 2)
      errors.push_back("snake(n) < coil(n) - 2 at n = " + std::to_string(n));
  return errors;
}

}  // namespace sitb
