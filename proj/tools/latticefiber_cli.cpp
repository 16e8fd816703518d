// Command-line front end: persistence of merge trees, fiber enumeration and
// counting over barcodes, exhaustive small-n listings, validation, and DOT
// export. Exit codes: 0 success, 1 validation error, 2 usage error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "latticefiber/dot.hpp"
#include "latticefiber/enumerate.hpp"
#include "latticefiber/errors.hpp"
#include "latticefiber/fiber.hpp"
#include "latticefiber/persistence.hpp"
#include "latticefiber/text_io.hpp"

namespace {

using namespace latticefiber;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// Optional enumeration-bound override shared by all enumerate kinds.
int bound_or(int fallback) {
  const char* value = std::getenv("LATTICEFIBER_MAX_N");
  if (value == nullptr) return fallback;
  try {
    std::size_t used = 0;
    const int bound = std::stoi(value, &used);
    if (used != std::string(value).size()) throw std::invalid_argument("");
    return bound;
  } catch (const std::exception&) {
    throw ValidationError("LATTICEFIBER_MAX_N must be an integer, got '" + std::string(value) +
                          "'");
  }
}

Barcode parse_full_barcode(const std::string& text) {
  const PartialBarcode pb = parse_barcode_record(text);
  if (!pb.is_full())
    throw ValidationError("expected a full barcode, got stage " + std::to_string(pb.stage()) +
                          " of n=" + std::to_string(pb.n()));
  return to_full(pb);
}

void cmd_persist(const std::string& input) {
  const MergeTree t = parse_tree_record(read_file(input));
  std::cout << print_barcode_record(persistence_map(t));
}

void cmd_fiber(const std::string& input, bool count_only, long long limit,
               const std::string& format) {
  const Barcode b = parse_full_barcode(read_file(input));
  if (count_only) {
    std::cout << fiber_count(b) << "\n";
    return;
  }
  long long emitted = 0;
  fiber_enumerate(b, [&](const MergeTree& t) {
    if (emitted > 0) std::cout << "\n";
    std::cout << (format == "dot" ? tree_to_dot(t) : print_tree_record(t));
    ++emitted;
    return limit == 0 || emitted < limit;
  });
}

void cmd_count(const std::string& input) {
  const Barcode b = parse_full_barcode(read_file(input));
  std::cout << fiber_count(b) << "\n";
}

void cmd_enumerate(int n, const std::string& kind, bool count_only) {
  unsigned long long count = 0;
  const auto separate = [&] {
    if (count > 0) std::cout << "\n";
    ++count;
  };
  if (kind == "trees") {
    for_each_merge_tree(
        n,
        [&](const MergeTree& t) {
          if (count_only) {
            ++count;
            return;
          }
          separate();
          std::cout << print_tree_record(t);
        },
        bound_or(kMaxPartitionChainN));
  } else if (kind == "barcodes") {
    for_each_barcode(
        n,
        [&](const Barcode& b) {
          if (count_only) {
            ++count;
            return;
          }
          separate();
          std::cout << print_barcode_record(b);
        },
        bound_or(kMaxSubsetChainN));
  } else if (kind == "chains-partition") {
    for_each_maximal_partition_chain(
        n,
        [&](const BasedPath<Partition>& chain) {
          if (count_only) {
            ++count;
            return;
          }
          for (std::size_t i = 0; i < chain.elements().size(); ++i) {
            if (i > 0) std::cout << " < ";
            std::cout << to_string(chain.elements()[i]);
          }
          std::cout << "\n";
        },
        bound_or(kMaxPartitionChainN));
  } else if (kind == "chains-subset") {
    for_each_maximal_subset_chain(
        n,
        [&](const BasedPath<Subset>& chain) {
          if (count_only) {
            ++count;
            return;
          }
          for (std::size_t i = 0; i < chain.elements().size(); ++i) {
            if (i > 0) std::cout << " < ";
            std::cout << to_string(chain.elements()[i]);
          }
          std::cout << "\n";
        },
        bound_or(kMaxSubsetChainN));
  }
  if (count_only) std::cout << count << "\n";
}

void cmd_validate(const std::string& input) {
  const std::string text = read_file(input);
  if (detect_record_kind(text) == RecordKind::MergeTreeRecord) {
    const MergeTree t = parse_tree_record(text);
    std::cout << "OK: merge-tree n=" << t.n() << "\n";
  } else {
    const PartialBarcode b = parse_barcode_record(text);
    if (b.is_full())
      std::cout << "OK: barcode n=" << b.n() << "\n";
    else
      std::cout << "OK: partial barcode n=" << b.n() << " k=" << b.stage() << "\n";
  }
}

void cmd_export_dot(const std::string& input) {
  const std::string text = read_file(input);
  if (detect_record_kind(text) == RecordKind::MergeTreeRecord)
    std::cout << tree_to_dot(parse_tree_record(text));
  else
    std::cout << barcode_to_dot(parse_barcode_record(text));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"combinatorial merge trees, barcodes, and persistence fibers"};
  app.require_subcommand(1);

  std::string input;
  bool count_only = false;
  long long limit = 0;
  std::string format = "text";
  int n = 0;
  std::string kind;

  auto* persist = app.add_subcommand("persist", "barcode of a merge tree");
  persist->add_option("input", input, "tree record file")->required();

  auto* fiber = app.add_subcommand("fiber", "all merge trees with the given barcode");
  fiber->add_option("input", input, "barcode record file")->required();
  fiber->add_flag("--count-only", count_only, "print the fiber size only");
  fiber->add_option("--limit", limit, "stop after this many trees")
      ->check(CLI::PositiveNumber);
  fiber->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "dot"}));

  auto* count = app.add_subcommand("count", "fiber size of the given barcode");
  count->add_option("input", input, "barcode record file")->required();

  auto* enumerate = app.add_subcommand("enumerate", "exhaustive small-n listings");
  enumerate->add_option("n", n, "instance size")->required();
  enumerate->add_option("kind", kind, "what to enumerate")
      ->required()
      ->check(CLI::IsMember({"trees", "barcodes", "chains-partition", "chains-subset"}));
  enumerate->add_flag("--count-only", count_only, "print the count only");

  auto* validate = app.add_subcommand("validate", "check a record file");
  validate->add_option("input", input, "record file")->required();

  auto* export_dot = app.add_subcommand("export-dot", "Graphviz rendering of a record");
  export_dot->add_option("input", input, "record file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (persist->parsed()) cmd_persist(input);
    else if (fiber->parsed()) cmd_fiber(input, count_only, limit, format);
    else if (count->parsed()) cmd_count(input);
    else if (enumerate->parsed()) cmd_enumerate(n, kind, count_only);
    else if (validate->parsed()) cmd_validate(input);
    else if (export_dot->parsed()) cmd_export_dot(input);
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
