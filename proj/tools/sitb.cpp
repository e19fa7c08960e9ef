// Copyright 2026 The sitb authors
// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end: verification, walking, exact solving, beam
// search, records inspection, and representation conversion.
//
// Exit codes: 0 success / requested check passed, 1 semantic invalidity
// (a bad snake or coil, a walk that breaks), 2 usage or I/O errors.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "sitb/beam.hpp"
#include "sitb/core.hpp"
#include "sitb/exact.hpp"
#include "sitb/records.hpp"
#include "sitb/validate.hpp"

namespace {

constexpr int kExitValid = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitUsage = 2;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

sitb::Kind parse_kind(const std::string& kind) {
  return kind == "snake" ? sitb::Kind::snake : sitb::Kind::coil;
}

void print_report_text(const sitb::ValidationReport& report) {
  std::cout << (report.valid ? "valid" : "invalid") << ", length "
            << report.length << "\n";
  for (const sitb::Violation& v : report.violations)
    std::cout << "violation: " << sitb::to_string(v.reason)
              << " at positions (" << v.positions.first << ", "
              << v.positions.second << ")\n";
}

void print_report_json(const sitb::ValidationReport& report) {
  nlohmann::ordered_json doc;
  doc["kind"] = sitb::to_string(report.kind);
  doc["dimension"] = report.dimension;
  doc["length"] = report.length;
  doc["valid"] = report.valid;
  doc["violations"] = nlohmann::ordered_json::array();
  for (const sitb::Violation& v : report.violations) {
    nlohmann::ordered_json item;
    item["positions"] = {v.positions.first, v.positions.second};
    item["reason"] = sitb::to_string(v.reason);
    doc["violations"].push_back(item);
  }
  std::cout << doc.dump() << "\n";
}

int run_verify(const std::string& kind_name, int dim,
               const std::string& format, const std::string& path) {
  const sitb::Dimension n(dim);
  const sitb::Kind kind = parse_kind(kind_name);
  sitb::TransitionSequence seq = sitb::parse_sequence(read_input(path));
  if (kind == sitb::Kind::coil) {
    // accept the published open-path form (closing transition implicit)
    if (const auto closed = sitb::close_coil(seq, n)) seq = *closed;
  }
  const sitb::ValidationReport report =
      kind == sitb::Kind::snake ? sitb::validate_snake(seq, n)
                                : sitb::validate_coil(seq, n);
  if (format == "json")
    print_report_json(report);
  else
    print_report_text(report);
  return report.valid ? kExitValid : kExitInvalid;
}

int run_walk(int dim, sitb::Vertex start, const std::string& path) {
  const sitb::Dimension n(dim);
  const sitb::TransitionSequence seq =
      sitb::parse_sequence(read_input(path));
  for (const sitb::Vertex v : sitb::walk(seq, n, start))
    std::cout << v << "\n";
  return kExitValid;
}

int run_exact(const std::string& kind_name, int dim, std::uint64_t max_nodes,
              double max_seconds) {
  const sitb::Dimension n(dim);
  const sitb::Budget budget{max_nodes, max_seconds};
  const sitb::SolveResult result =
      parse_kind(kind_name) == sitb::Kind::snake
          ? sitb::optimal_snake_length(n, budget)
          : sitb::optimal_coil_length(n, budget);
  std::cout << "kind: " << sitb::to_string(result.kind) << "\n"
            << "dimension: " << result.dimension << "\n"
            << "best_length: " << result.best_length << "\n"
            << "status: " << sitb::to_string(result.status) << "\n"
            << "nodes: " << result.nodes_visited << "\n"
            << "witness: " << sitb::format_sequence(result.witness) << "\n";
  return kExitValid;
}

int run_search(const std::string& kind_name, int dim, std::size_t beam,
               std::uint64_t seed, std::size_t restarts, double temperature,
               double max_seconds) {
  sitb::SearchConfig config{sitb::Dimension(dim), parse_kind(kind_name),
                            beam,  restarts,      seed,
                            temperature, max_seconds};
  const sitb::SearchOutcome outcome = sitb::search(config);
  std::cout << "kind: " << sitb::to_string(outcome.kind) << "\n"
            << "dimension: " << dim << "\n"
            << "best_length: " << outcome.best_length << "\n"
            << "sequence: " << sitb::format_sequence(outcome.best) << "\n"
            << "steps: " << outcome.stats.steps << "\n"
            << "expansions: " << outcome.stats.expansions << "\n"
            << "restarts_used: " << outcome.stats.restarts_used << "\n"
            << "seconds: " << outcome.stats.seconds << "\n";
  return kExitValid;
}

int run_records(bool check) {
  if (!check) {
    std::printf(" n   kind    length  optimal  source      sequence\n");
    for (const sitb::RecordEntry& e : sitb::bounds_table())
      std::printf("%2d   %-5s  %7ld  %-7s  %-10s  %s\n", e.dimension,
                  std::string(sitb::to_string(e.kind)).c_str(), e.length,
                  e.optimal ? "yes" : "no",
                  e.source.empty() ? "-" : std::string(e.source).c_str(),
                  e.sequence ? "bundled" : "-");
    return kExitValid;
  }
  bool ok = true;
  const auto& entries = sitb::corpus();
  const auto reports = sitb::verify_corpus();
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto& row = entries[i].row;
    const bool good =
        reports[i].valid && reports[i].length == row.claimed_length;
    ok = ok && good;
    std::cout << row.label << " " << sitb::to_string(row.kind)
              << " n=" << row.dimension << ": "
              << (reports[i].valid ? "valid" : "invalid") << ", length "
              << reports[i].length << " (claimed " << row.claimed_length
              << ") " << (good ? "ok" : "MISMATCH") << "\n";
  }
  const auto errors = sitb::table_consistency_errors();
  for (const std::string& e : errors) std::cout << "table: " << e << "\n";
  std::cout << "bounds table: "
            << (errors.empty() ? "consistent" : "INCONSISTENT") << "\n";
  ok = ok && errors.empty();
  return ok ? kExitValid : kExitInvalid;
}

int run_convert(const std::string& from, const std::string& to, int dim,
                sitb::Vertex start, const std::string& path) {
  const sitb::Dimension n(dim);
  const sitb::TransitionSequence tokens =
      sitb::parse_sequence(read_input(path));
  if (from == "transitions" && to == "vertices") {
    for (const sitb::Vertex v : sitb::walk(tokens, n, start))
      std::cout << v << "\n";
    return kExitValid;
  }
  if (from == "vertices" && to == "transitions") {
    sitb::TransitionSequence transitions;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
      if (!n.contains(tokens[i])) {
        std::cerr << "error: vertex " << tokens[i] << " does not fit a "
                  << dim << "-cube\n";
        return kExitInvalid;
      }
      if (i == 0) continue;
      if (!sitb::is_adjacent(tokens[i - 1], tokens[i])) {
        std::cerr << "error: vertices at positions " << i - 1 << " and " << i
                  << " are not adjacent\n";
        return kExitInvalid;
      }
      transitions.push_back(static_cast<std::uint32_t>(
          std::countr_zero(tokens[i - 1] ^ tokens[i])));
    }
    std::cout << sitb::format_sequence(transitions) << "\n";
    return kExitValid;
  }
  std::cerr << "unsupported conversion: " << from << " -> " << to << "\n";
  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"snake-in-the-box toolkit: validate, solve, and search for "
               "induced paths (snakes) and cycles (coils) in hypercubes"};
  app.require_subcommand(1);

  std::string kind = "snake";
  std::string format = "text";
  std::string from = "transitions";
  std::string to = "vertices";
  std::string path = "-";
  int dim = 1;
  sitb::Vertex start = 0;
  std::uint64_t max_nodes = sitb::Budget{}.max_nodes;
  double max_seconds = sitb::Budget{}.max_seconds;
  std::size_t beam = 64;
  std::uint64_t seed = 0;
  std::size_t restarts = 0;
  double temperature = 0.0;
  double search_seconds = 1e18;
  bool check = false;

  const auto kind_opt = CLI::IsMember({"snake", "coil"});

  CLI::App* verify = app.add_subcommand(
      "verify", "validate a transition sequence as a snake or coil");
  verify->add_option("--kind", kind, "snake|coil")
      ->required()
      ->check(kind_opt);
  verify->add_option("--dim", dim, "cube dimension")->required();
  verify->add_option("--format", format, "text|json")
      ->check(CLI::IsMember({"text", "json"}));
  verify->add_option("file", path, "sequence file ('-' for stdin)");

  CLI::App* walk_cmd =
      app.add_subcommand("walk", "print the vertices a sequence visits");
  walk_cmd->add_option("--dim", dim, "cube dimension")->required();
  walk_cmd->add_option("--start", start, "start vertex (default 0)");
  walk_cmd->add_option("file", path, "sequence file ('-' for stdin)");

  CLI::App* exact = app.add_subcommand(
      "exact", "prove the optimal snake/coil length by exhaustive search");
  exact->add_option("--kind", kind, "snake|coil")->required()->check(kind_opt);
  exact->add_option("--dim", dim, "cube dimension")->required();
  exact->add_option("--max-nodes", max_nodes, "search node budget");
  exact->add_option("--max-seconds", max_seconds, "wall-clock budget");

  CLI::App* search_cmd = app.add_subcommand(
      "search", "stochastic beam search for long snakes/coils");
  search_cmd->add_option("--kind", kind, "snake|coil")
      ->required()
      ->check(kind_opt);
  search_cmd->add_option("--dim", dim, "cube dimension")->required();
  search_cmd->add_option("--beam", beam, "beam width")->required();
  search_cmd->add_option("--seed", seed, "RNG seed (reproducible)")
      ->required();
  search_cmd->add_option("--restarts", restarts, "independent restarts");
  search_cmd->add_option("--temp", temperature,
                         "softmax temperature (0 = greedy truncation)");
  search_cmd->add_option("--max-seconds", search_seconds,
                         "wall-clock budget");

  CLI::App* records = app.add_subcommand(
      "records", "show the bounds table and bundled record sequences");
  records->add_flag("--check", check,
                    "verify the bundled corpus and table consistency");

  CLI::App* convert = app.add_subcommand(
      "convert", "convert between transition and vertex representations");
  convert->add_option("--from", from, "transitions|vertices")
      ->required()
      ->check(CLI::IsMember({"transitions", "vertices"}));
  convert->add_option("--to", to, "vertices|transitions")
      ->required()
      ->check(CLI::IsMember({"transitions", "vertices"}));
  convert->add_option("--dim", dim, "cube dimension")->required();
  convert->add_option("--start", start, "start vertex (default 0)");
  convert->add_option("file", path, "input file ('-' for stdin)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help();
    return kExitValid;
  } catch (const CLI::CallForAllHelp&) {
    std::cout << app.help("", CLI::AppFormatMode::All);
    return kExitValid;
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (verify->parsed()) return run_verify(kind, dim, format, path);
    if (walk_cmd->parsed()) return run_walk(dim, start, path);
    if (exact->parsed())
      return run_exact(kind, dim, max_nodes, max_seconds);
    if (search_cmd->parsed())
      return run_search(kind, dim, beam, seed, restarts, temperature,
                        search_seconds);
    if (records->parsed()) return run_records(check);
    if (convert->parsed())
      return run_convert(from, to, dim, start, path);
  } catch (const sitb::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const sitb::DimensionOutOfRangeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
