#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "imkit/classify.hpp"
#include "imkit/construct.hpp"
#include "imkit/containment.hpp"
#include "imkit/criticality.hpp"
#include "imkit/experiments.hpp"
#include "imkit/json.hpp"
#include "imkit/matrix.hpp"

namespace {

using imkit::BinaryMatrix;
using imkit::Cell;
using imkit::ordered_json;
using imkit::UsageError;

struct Digest {
  std::uint64_t state = 1469598103934665603ull;  // FNV-1a 64-bit
  void feed(std::string_view s) {
    for (unsigned char ch : s) {
      state ^= ch;
      state *= 1099511628211ull;
    }
    feed_byte(0);
  }
  void feed_byte(unsigned char ch) {
    state ^= ch;
    state *= 1099511628211ull;
  }
  std::string hex() const {
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 0; i < 16; ++i) out[static_cast<std::size_t>(i)] = digits[(state >> (60 - 4 * i)) & 0xf];
    return out;
  }
};

std::string read_input(const std::string& path, Digest& digest) {
  std::string text;
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    text = buf.str();
  } else {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  digest.feed(text);
  return text;
}

BinaryMatrix load_matrix(const std::string& path, Digest& digest) {
  return BinaryMatrix::parse(read_input(path, digest));
}

BinaryMatrix load_pattern(const std::string& spec, Digest& digest) {
  if (!spec.empty() && spec[0] == '@') return load_matrix(spec.substr(1), digest);
  digest.feed(spec);
  return imkit::pattern_from_name(spec);
}

std::vector<BinaryMatrix> load_pattern_list(const std::string& specs, Digest& digest) {
  std::vector<BinaryMatrix> patterns;
  std::size_t pos = 0;
  while (pos <= specs.size()) {
    std::size_t comma = specs.find(',', pos);
    std::string item = specs.substr(pos, comma == std::string::npos ? comma : comma - pos);
    if (item.empty()) throw UsageError("empty entry in pattern list");
    patterns.push_back(load_pattern(item, digest));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (patterns.empty()) throw UsageError("empty pattern list");
  return patterns;
}

int print_result(const std::string& command, const Digest& digest, ordered_json outputs,
                 int exit_code, bool pretty) {
  ordered_json result = {{"command", command},
                         {"inputsDigest", digest.hex()},
                         {"outputs", std::move(outputs)},
                         {"exitCode", exit_code}};
  std::cout << (pretty ? result.dump(2) : result.dump()) << "\n";
  return exit_code;
}

std::pair<Cell, Cell> parse_pin(const std::string& spec) {
  // format: i,j=>r,c
  std::size_t arrow = spec.find("=>");
  if (arrow == std::string::npos) throw UsageError("pin format is i,j=>r,c");
  auto parse_cell = [](const std::string& s) {
    std::size_t comma = s.find(',');
    if (comma == std::string::npos) throw UsageError("pin format is i,j=>r,c");
    try {
      return Cell{std::stoi(s.substr(0, comma)), std::stoi(s.substr(comma + 1))};
    } catch (const std::exception&) {
      throw UsageError("pin format is i,j=>r,c");
    }
  };
  return {parse_cell(spec.substr(0, arrow)), parse_cell(spec.substr(arrow + 2))};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"interval-minor containment toolkit"};
  app.require_subcommand(1);
  bool pretty = false;
  app.add_flag("--pretty", pretty, "indent JSON output");

  std::string host_path, pattern_spec, forbidden_specs, pin_spec, order_name = "rowmajor";
  std::string experiment_name;
  int repetition = 1, rows = 0, cols = 0, guard_cells = 0;
  int max_row_complexity = -1, experiment_param = 0;
  bool with_oracle = false, with_witness = false;

  auto* cmd_contains = app.add_subcommand("contains", "decide interval-minor containment");
  cmd_contains->add_option("host", host_path, "host matrix file, or - for stdin")->required();
  cmd_contains->add_option("pattern", pattern_spec, "pattern name or @file")->required();
  cmd_contains->add_flag("--oracle", with_oracle, "cross-check with the brute-force oracle");
  cmd_contains->add_flag("--witness", with_witness, "emit a partition witness");
  cmd_contains->add_option("--pin", pin_spec, "require pattern entry i,j to map to host entry r,c");
  cmd_contains->add_option("--guard-cells", guard_cells, "size guard for the oracle (default 36)");

  auto* cmd_classify = app.add_subcommand("classify", "pattern bounding dichotomy and structure");
  cmd_classify->add_option("pattern", pattern_spec)->required();

  auto* cmd_saturate = app.add_subcommand("saturate", "greedily complete an avoider to a critical one");
  cmd_saturate->add_option("host", host_path)->required();
  cmd_saturate->add_option("forbidden", forbidden_specs, "comma-separated pattern list")->required();
  cmd_saturate->add_option("--order", order_name, "rowmajor or colmajor");

  auto* cmd_complexity = app.add_subcommand("complexity", "row and column complexity of a matrix");
  cmd_complexity->add_option("host", host_path)->required();

  auto* cmd_witness = app.add_subcommand("witness", "unbounded-complexity witness for a Q-containing pattern");
  cmd_witness->add_option("pattern", pattern_spec)->required();
  cmd_witness->add_option("p", repetition, "number of 0-runs in the marker row")->required();

  auto* cmd_cover = app.add_subcommand("cover", "minimum line cover");
  cmd_cover->add_option("host", host_path)->required();

  auto* cmd_enumerate = app.add_subcommand("enumerate", "list all critical avoiders of a size");
  cmd_enumerate->add_option("forbidden", forbidden_specs)->required();
  cmd_enumerate->add_option("rows", rows)->required();
  cmd_enumerate->add_option("cols", cols)->required();
  cmd_enumerate->add_option("--max-row-complexity", max_row_complexity,
                            "stream only matrices with row complexity up to this bound");
  cmd_enumerate->add_option("--guard-cells", guard_cells, "enumeration size guard (default 25)");

  auto* cmd_critical_map = app.add_subcommand("critical-map", "per-0-entry criticality report");
  cmd_critical_map->add_option("host", host_path)->required();
  cmd_critical_map->add_option("forbidden", forbidden_specs)->required();

  auto* cmd_experiment = app.add_subcommand("experiment", "run a named verification experiment");
  cmd_experiment->add_option("name", experiment_name,
                             "dichotomy, pro-counter, pro-unbinter or lem-2types")->required();
  cmd_experiment->add_option("--p,--size,--max-dim", experiment_param, "experiment scale parameter");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    Digest digest;
    if (*cmd_contains) {
      digest.feed("contains");
      BinaryMatrix host = load_matrix(host_path, digest);
      BinaryMatrix pattern = load_pattern(pattern_spec, digest);
      ordered_json outputs;
      bool answer;
      if (!pin_spec.empty()) {
        digest.feed(pin_spec);
        auto [pat_entry, host_entry] = parse_pin(pin_spec);
        answer = imkit::contains_pinned(host, pattern, pat_entry, host_entry);
        outputs["pinned"] = {{"patternEntry", imkit::to_json(pat_entry)},
                             {"hostEntry", imkit::to_json(host_entry)}};
        outputs["contains"] = answer;
        if (with_witness && answer) {
          auto part = imkit::find_pinned_partition(host, pattern, pat_entry, host_entry);
          outputs["witness"] = imkit::to_json(*part);
        }
      } else {
        answer = imkit::contains(host, pattern);
        outputs["contains"] = answer;
        if (with_witness) {
          auto part = imkit::find_partition(host, pattern);
          outputs["witness"] = part ? imkit::to_json(*part) : ordered_json(nullptr);
        }
      }
      if (with_oracle) {
        bool oracle = imkit::contains_oracle(host, pattern, guard_cells > 0 ? guard_cells : 36);
        outputs["oracle"] = oracle;
        outputs["agree"] = oracle == answer;
      }
      return print_result("contains", digest, outputs, answer ? 0 : 1, pretty);
    }
    if (*cmd_classify) {
      digest.feed("classify");
      BinaryMatrix pattern = load_pattern(pattern_spec, digest);
      imkit::ClassificationReport report = imkit::classify(pattern);
      return print_result("classify", digest, imkit::to_json(report),
                          report.row_bounding ? 0 : 1, pretty);
    }
    if (*cmd_saturate) {
      digest.feed("saturate");
      BinaryMatrix host = load_matrix(host_path, digest);
      auto forbidden = load_pattern_list(forbidden_specs, digest);
      imkit::SaturationOrder order;
      if (order_name == "rowmajor")
        order = imkit::SaturationOrder::row_major();
      else if (order_name == "colmajor")
        order = imkit::SaturationOrder::column_major();
      else
        throw UsageError("order must be rowmajor or colmajor");
      std::cout << imkit::saturate(host, forbidden, order).to_text();
      return 0;
    }
    if (*cmd_complexity) {
      digest.feed("complexity");
      BinaryMatrix host = load_matrix(host_path, digest);
      ordered_json outputs = {{"rowComplexity", imkit::row_complexity(host)},
                              {"colComplexity", imkit::column_complexity(host)}};
      return print_result("complexity", digest, outputs, 0, pretty);
    }
    if (*cmd_witness) {
      digest.feed("witness");
      BinaryMatrix pattern = load_pattern(pattern_spec, digest);
      imkit::OrientedWitness w = imkit::witness_any_q(pattern, repetition);
      std::cout << w.matrix.to_text();
      return 0;
    }
    if (*cmd_cover) {
      digest.feed("cover");
      BinaryMatrix host = load_matrix(host_path, digest);
      return print_result("cover", digest, imkit::to_json(imkit::min_line_cover(host)), 0,
                          pretty);
    }
    if (*cmd_enumerate) {
      digest.feed("enumerate");
      auto forbidden = load_pattern_list(forbidden_specs, digest);
      digest.feed(std::to_string(rows) + "x" + std::to_string(cols));
      auto critical =
          imkit::enumerate_critical(forbidden, rows, cols, guard_cells > 0 ? guard_cells : 25);
      int max_rc = 0;
      std::int64_t witness_index = -1;
      for (std::size_t i = 0; i < critical.size(); ++i) {
        int rc = imkit::row_complexity(critical[i]);
        if (rc > max_rc || witness_index < 0) {
          max_rc = rc;
          witness_index = static_cast<std::int64_t>(i);
        }
        if (max_row_complexity >= 0 && rc > max_row_complexity) continue;
        std::cout << critical[i].to_text() << "\n";
      }
      ordered_json summary = {{"count", critical.size()},
                              {"maxRowComplexity", critical.empty() ? 0 : max_rc},
                              {"witnessIndex", witness_index}};
      std::cout << (pretty ? summary.dump(2) : summary.dump()) << "\n";
      return 0;
    }
    if (*cmd_critical_map) {
      digest.feed("critical-map");
      BinaryMatrix host = load_matrix(host_path, digest);
      auto forbidden = load_pattern_list(forbidden_specs, digest);
      imkit::CriticalityReport report = imkit::analyze_criticality(host, forbidden);
      return print_result("critical-map", digest, imkit::to_json(report),
                          report.is_critical ? 0 : 1, pretty);
    }
    if (*cmd_experiment) {
      digest.feed("experiment");
      digest.feed(experiment_name);
      digest.feed(std::to_string(experiment_param));
      imkit::ExperimentResult result = imkit::run_experiment(experiment_name, experiment_param);
      ordered_json outputs = {{"pass", result.pass}, {"details", result.details}};
      return print_result("experiment", digest, outputs, result.pass ? 0 : 1, pretty);
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
