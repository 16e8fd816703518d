#include "latticefiber/text_io.hpp"

#include <sstream>
#include <vector>

#include "latticefiber/errors.hpp"

namespace latticefiber {

namespace {

struct Line {
  int number = 0;  // 1-based position in the original text
  std::string text;
};

// Non-blank lines with their original numbers, for diagnostics.
std::vector<Line> content_lines(const std::string& text) {
  std::vector<Line> lines;
  std::istringstream in(text);
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back({number, line});
  }
  return lines;
}

[[noreturn]] void fail(int line_number, const std::string& message) {
  throw ValidationError("line " + std::to_string(line_number) + ": " + message);
}

// Parses a header of the form "<keyword> n=<n>".
int parse_header(const Line& line, const std::string& keyword) {
  std::istringstream in(line.text);
  std::string word, nfield;
  if (!(in >> word) || word != keyword || !(in >> nfield) || nfield.rfind("n=", 0) != 0)
    fail(line.number, "expected header '" + keyword + " n=<n>'");
  int n = 0;
  try {
    std::size_t used = 0;
    n = std::stoi(nfield.substr(2), &used);
    if (used != nfield.size() - 2) throw std::invalid_argument("");
  } catch (const std::exception&) {
    fail(line.number, "expected header '" + keyword + " n=<n>'");
  }
  std::string extra;
  if (in >> extra) fail(line.number, "unexpected trailing content after header");
  return n;
}

}  // namespace

RecordKind detect_record_kind(const std::string& text) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw ValidationError("line 1: empty input, expected a record header");
  std::istringstream in(lines.front().text);
  std::string word;
  in >> word;
  if (word == "merge-tree") return RecordKind::MergeTreeRecord;
  if (word == "barcode") return RecordKind::BarcodeRecord;
  fail(lines.front().number, "unknown record header '" + word + "'");
}

MergeTree parse_tree_record(const std::string& text) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw ValidationError("line 1: empty input, expected 'merge-tree n=<n>'");
  const int n = parse_header(lines.front(), "merge-tree");
  if (static_cast<int>(lines.size()) - 1 != n)
    throw ValidationError("expected " + std::to_string(n) + " event lines, got " +
                          std::to_string(lines.size() - 1));
  std::vector<MergeEvent> events;
  events.reserve(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) {
    const Line& line = lines[static_cast<std::size_t>(k)];
    std::istringstream in(line.text);
    int step = 0, a = 0, b = 0;
    char colon = 0;
    if (!(in >> step >> colon >> a >> b) || colon != ':')
      fail(line.number, "expected '<k>: <a> <b>'");
    std::string extra;
    if (in >> extra) fail(line.number, "unexpected trailing content");
    if (step != k)
      fail(line.number, "events must be numbered 1.." + std::to_string(n) + " in order (got " +
                            std::to_string(step) + ", expected " + std::to_string(k) + ")");
    events.push_back({a, b});
  }
  return MergeTree(n, std::move(events));
}

PartialBarcode parse_barcode_record(const std::string& text) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw ValidationError("line 1: empty input, expected 'barcode n=<n>'");
  const int n = parse_header(lines.front(), "barcode");
  const int k = static_cast<int>(lines.size()) - 1;
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(static_cast<std::size_t>(k));
  for (int j = 1; j <= k; ++j) {
    const Line& line = lines[static_cast<std::size_t>(j)];
    std::istringstream in(line.text);
    int birth = 0, death = 0;
    std::string arrow;
    if (!(in >> birth >> arrow >> death) || arrow != "->")
      fail(line.number, "expected '<birth> -> <death>'");
    std::string extra;
    if (in >> extra) fail(line.number, "unexpected trailing content");
    if (death != j)
      fail(line.number, "pairs must be sorted by death 1.." + std::to_string(k) + " (got death " +
                            std::to_string(death) + ", expected " + std::to_string(j) + ")");
    pairs.emplace_back(birth, death);
  }
  return PartialBarcode(n, pairs);
}

std::string print_tree_record(const MergeTree& t) {
  std::ostringstream os;
  os << "merge-tree n=" << t.n() << "\n";
  for (int k = 1; k <= t.n(); ++k) {
    const auto& e = t.events()[static_cast<std::size_t>(k) - 1];
    os << k << ": " << e.a << " " << e.b << "\n";
  }
  return os.str();
}

namespace {

std::string print_barcode_lines(int n, const std::vector<int>& births) {
  std::ostringstream os;
  os << "barcode n=" << n << "\n";
  for (std::size_t j = 0; j < births.size(); ++j) os << births[j] << " -> " << j + 1 << "\n";
  return os.str();
}

}  // namespace

std::string print_barcode_record(const Barcode& b) {
  return print_barcode_lines(b.n(), b.births_by_death());
}

std::string print_barcode_record(const PartialBarcode& b) {
  return print_barcode_lines(b.n(), b.births_by_death());
}

}  // namespace latticefiber
