#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ddc/codeprops.hpp"
#include "ddc/ddc_code.hpp"

namespace ddc {

// -------------------------------------------------------------------------
// Table scan
// -------------------------------------------------------------------------

struct SearchConfig {
  int q = 2;
  long base = 4;       // cyclotomic base for the splittings
  long min_n = 3;      // odd lengths min_n..max_n are scanned
  long max_n = 19;
  bool pure = true;
  bool bordered = true;
  // A (n, kind) group is desk scale iff q^dim <= distance_budget; larger
  // groups are skipped (with a notice) unless deep is set.
  uint64_t distance_budget = kDefaultBudget;
  bool deep = false;
  // Skip tuples with s > t: the (s, t)-mirrored code is permutation
  // equivalent (swap the splitting classes), so column values are unchanged.
  bool dedup = true;
  int workers = 1;
};

// Construction parameters of a witness code, sufficient to rebuild it.
struct Provenance {
  int q = 2;
  long n = 0;
  std::optional<long> base;
  std::vector<long> s1;
  CodeKind kind = CodeKind::pure;
  uint8_t r = 0, s = 0, t = 0;
  uint8_t alpha = 0, beta = 0, gamma = 0;  // bordered only
};

struct CellValue {
  long distance = 0;
  Provenance witness;
};

struct TableRow {
  long n = 0;
  long code_length = 0;
  std::map<std::string, CellValue> cells;  // column -> best (absent = no code)
};

struct ScanResult {
  std::vector<TableRow> rows;  // ascending (n, code_length)
  std::vector<std::string> notices;
};

// Duality columns of the table for GF(q):
// q=2: SD(I), SD(II), NSD; q=4: SD(E), SD(H), NSD; else SD, NSD.
std::vector<std::string> table_columns(int q);

// Scans every canonical coset splitting and parameter tuple in the config's
// range, classifying each code and keeping the per-column maximum minimum
// distance. Deterministic for a fixed config regardless of workers.
ScanResult scan(const SearchConfig& config);

// CSV: header "n,cl,<columns>"; one line per row; blank field = absent cell.
std::string write_table_csv(const ScanResult& result, int q);

struct ParsedTable {
  std::vector<std::string> columns;  // without the leading n, cl
  struct Row {
    long n = 0;
    long code_length = 0;
    std::map<std::string, std::optional<long>> cells;
  };
  std::vector<Row> rows;
};

ParsedTable parse_table_csv(const std::string& text);  // throws std::invalid_argument

// -------------------------------------------------------------------------
// Golden-table diff
// -------------------------------------------------------------------------

enum class DiffState { equal, mismatch, absent };

struct DiffEntry {
  long n = 0;
  long code_length = 0;
  std::string column;  // "*" for a whole row missing on one side
  DiffState state = DiffState::equal;
  std::string left, right;  // rendered cell values ("-" for blank/missing)
};

struct DiffReport {
  std::vector<DiffEntry> entries;  // mismatches and absences only
  long mismatches = 0;
  long absences = 0;
};

// Cell-wise comparison. A row or column present on only one side is reported
// as absent (informational); two present-but-different cells, or a value
// against a blank within a shared row and column, is a mismatch.
DiffReport compare_with_expected(const ParsedTable& actual, const ParsedTable& expected);

// -------------------------------------------------------------------------
// Worked-example registry
// -------------------------------------------------------------------------

struct ExampleEntry {
  std::string id;
  std::string summary;
  int q = 2;
  long n = 0;
  long base = 4;
  std::vector<long> s1;
  CodeKind kind = CodeKind::pure;
  uint8_t r = 0, s = 0, t = 0;
  uint8_t alpha = 0, beta = 0, gamma = 0;

  // Reference facts about the code (used by tests and reports).
  long length = 0;
  long dimension = 0;
  long distance = 0;
  std::optional<uint64_t> min_words;
  std::optional<bool> self_dual;
  std::optional<BinaryType> binary_type;
  std::optional<bool> formally_self_dual;
  std::optional<bool> even_weights;  // all weights even (when known)
};

const std::vector<ExampleEntry>& example_registry();

// Throws std::invalid_argument on unknown id.
const ExampleEntry& find_example(const std::string& id);
DdcCode build_example(const std::string& id);
CodeReport reproduce_example(const std::string& id, const AnalyzeOptions& opts = {});

}  // namespace ddc
