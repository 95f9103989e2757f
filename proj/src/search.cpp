#include "ddc/search.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "ddc/splitting.hpp"

namespace ddc {
namespace {

uint64_t pow_saturating(uint64_t base, uint64_t exp) {
  uint64_t r = 1;
  while (exp--) {
    if (r > std::numeric_limits<uint64_t>::max() / base) return std::numeric_limits<uint64_t>::max();
    r *= base;
  }
  return r;
}

// Columns a classified code contributes to (a GF(4) code can be both
// Euclidean and Hermitian self-dual).
std::vector<std::string> columns_of(const DualityClass& dc, int q) {
  if (q == 2) {
    if (!dc.self_dual_euclidean) return {"NSD"};
    return {dc.binary_type == BinaryType::type_ii ? std::string("SD(II)") : std::string("SD(I)")};
  }
  if (q == 4) {
    std::vector<std::string> cols;
    if (dc.self_dual_euclidean) cols.push_back("SD(E)");
    if (dc.self_dual_hermitian && *dc.self_dual_hermitian) cols.push_back("SD(H)");
    if (cols.empty()) cols.push_back("NSD");
    return cols;
  }
  return {dc.self_dual_euclidean ? std::string("SD") : std::string("NSD")};
}

struct Tuple {
  uint8_t r, s, t, alpha, beta, gamma;
};

// All parameter tuples of a kind, in lexicographic (r,s,t,alpha,beta,gamma)
// order; with dedup, mirrored tuples (s > t) are skipped.
std::vector<Tuple> make_tuples(int q, CodeKind kind, bool dedup) {
  std::vector<Tuple> out;
  const int border_count = kind == CodeKind::bordered ? q * q * q : 1;
  for (int r = 0; r < q; ++r)
    for (int s = 0; s < q; ++s)
      for (int t = 0; t < q; ++t) {
        if (dedup && s > t) continue;
        for (int b = 0; b < border_count; ++b) {
          const int alpha = b / (q * q), beta = (b / q) % q, gamma = b % q;
          out.push_back({uint8_t(r), uint8_t(s), uint8_t(t), uint8_t(alpha), uint8_t(beta),
                         uint8_t(gamma)});
        }
      }
  return out;
}

struct Job {
  std::size_t splitting_index;
  Tuple tuple;
};

// Lexicographic witness order: splitting first (canonical enumeration order is
// ascending in s1), then the parameter tuple.
bool witness_less(const Job& a, const Job& b) {
  return std::tie(a.splitting_index, a.tuple.r, a.tuple.s, a.tuple.t, a.tuple.alpha, a.tuple.beta,
                  a.tuple.gamma) < std::tie(b.splitting_index, b.tuple.r, b.tuple.s, b.tuple.t,
                                            b.tuple.alpha, b.tuple.beta, b.tuple.gamma);
}

struct Incumbent {
  long distance = 0;
  Job job;
  bool set = false;
};

void scan_group(const SearchConfig& config, const Field& f, long n,
                const std::vector<Splitting>& splittings, CodeKind kind, TableRow& row) {
  const auto tuples = make_tuples(config.q, kind, config.dedup);
  std::vector<Job> jobs;
  jobs.reserve(splittings.size() * tuples.size());
  for (std::size_t si = 0; si < splittings.size(); ++si)
    for (const Tuple& t : tuples) jobs.push_back({si, t});

  std::map<std::string, Incumbent> cells;
  for (const std::string& col : table_columns(config.q)) cells[col] = {};
  std::mutex mu;

  auto run_job = [&](const Job& job) {
    const Splitting& sp = splittings[job.splitting_index];
    CirculantSpec cs{&f, sp, element(f, job.tuple.r), element(f, job.tuple.s),
                     element(f, job.tuple.t)};
    DdcCode code = kind == CodeKind::pure
                       ? build_pure(cs)
                       : build_bordered(cs, BorderSpec{element(f, job.tuple.alpha),
                                                       element(f, job.tuple.beta),
                                                       element(f, job.tuple.gamma)});
    const DualityClass dc = classify(code, 0);
    const auto cols = columns_of(dc, config.q);

    long prune = 0;  // 0 = none; else strictly-worse codes may stop early
    {
      std::lock_guard<std::mutex> lk(mu);
      bool all_set = true;
      long lowest = 0;
      for (const auto& col : cols) {
        const Incumbent& inc = cells[col];
        if (!inc.set) {
          all_set = false;
          break;
        }
        lowest = lowest == 0 ? inc.distance : std::min(lowest, inc.distance);
      }
      if (all_set) prune = lowest;
    }

    AcceleratedOptions opts;
    opts.workers = 1;
    opts.count_min_words = false;
    opts.prune_below = prune;
    const DistanceResult dr = min_distance_accelerated(code, opts);
    if (!dr.distance_exact) return;  // strictly below every relevant incumbent

    std::lock_guard<std::mutex> lk(mu);
    for (const auto& col : cols) {
      Incumbent& inc = cells[col];
      if (!inc.set || dr.distance > inc.distance ||
          (dr.distance == inc.distance && witness_less(job, inc.job))) {
        inc = {dr.distance, job, true};
      }
    }
  };

  const int workers = std::max(1, config.workers);
  if (workers == 1) {
    for (const Job& job : jobs) run_job(job);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> threads;
    for (int t = 0; t < workers; ++t)
      threads.emplace_back([&] {
        for (;;) {
          const std::size_t i = next.fetch_add(1);
          if (i >= jobs.size()) break;
          run_job(jobs[i]);
        }
      });
    for (auto& th : threads) th.join();
  }

  for (const auto& [col, inc] : cells) {
    if (!inc.set) continue;
    const Splitting& sp = splittings[inc.job.splitting_index];
    Provenance w;
    w.q = config.q;
    w.n = n;
    w.base = sp.base;
    w.s1 = sp.s1;
    w.kind = kind;
    w.r = inc.job.tuple.r;
    w.s = inc.job.tuple.s;
    w.t = inc.job.tuple.t;
    w.alpha = inc.job.tuple.alpha;
    w.beta = inc.job.tuple.beta;
    w.gamma = inc.job.tuple.gamma;
    row.cells[col] = {inc.distance, std::move(w)};
  }
}

}  // namespace

std::vector<std::string> table_columns(int q) {
  if (q == 2) return {"SD(I)", "SD(II)", "NSD"};
  if (q == 4) return {"SD(E)", "SD(H)", "NSD"};
  return {"SD", "NSD"};
}

ScanResult scan(const SearchConfig& config) {
  const Field& f = Field::of(config.q);
  ScanResult result;
  for (long n = config.min_n | 1; n <= config.max_n; n += 2) {
    if (n < 3) continue;
    if (std::gcd(config.base, n) != 1) {
      result.notices.push_back("n=" + std::to_string(n) + ": skipped, base " +
                               std::to_string(config.base) + " is not coprime to n");
      continue;
    }
    const auto splittings = enumerate_coset_splittings(n, config.base);
    if (splittings.empty()) {
      result.notices.push_back("n=" + std::to_string(n) + ": no coset splittings for base " +
                               std::to_string(config.base));
      continue;
    }
    for (const CodeKind kind : {CodeKind::pure, CodeKind::bordered}) {
      if (kind == CodeKind::pure && !config.pure) continue;
      if (kind == CodeKind::bordered && !config.bordered) continue;
      const long dim = kind == CodeKind::pure ? n : n + 1;
      const long cl = 2 * dim;
      if (!config.deep &&
          pow_saturating(uint64_t(config.q), uint64_t(dim)) > config.distance_budget) {
        result.notices.push_back(
            "row (" + std::to_string(n) + ", " + std::to_string(cl) + "): skipped, " +
            std::to_string(config.q) + "^" + std::to_string(dim) +
            " messages exceed the distance budget; rerun with --deep");
        continue;
      }
      TableRow row;
      row.n = n;
      row.code_length = cl;
      scan_group(config, f, n, splittings, kind, row);
      result.rows.push_back(std::move(row));
    }
  }
  return result;
}

std::string write_table_csv(const ScanResult& result, int q) {
  std::ostringstream out;
  const auto cols = table_columns(q);
  out << "n,cl";
  for (const auto& c : cols) out << ',' << c;
  out << '\n';
  for (const TableRow& row : result.rows) {
    out << row.n << ',' << row.code_length;
    for (const auto& c : cols) {
      out << ',';
      const auto it = row.cells.find(c);
      if (it != row.cells.end()) out << it->second.distance;
    }
    out << '\n';
  }
  return out.str();
}

ParsedTable parse_table_csv(const std::string& text) {
  ParsedTable table;
  std::istringstream in(text);
  std::string line;
  auto split = [](const std::string& s) {
    std::vector<std::string> fields;
    std::string cur;
    for (char ch : s) {
      if (ch == ',') {
        fields.push_back(cur);
        cur.clear();
      } else if (ch != '\r') {
        cur.push_back(ch);
      }
    }
    fields.push_back(cur);
    return fields;
  };
  bool have_header = false;
  long lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto fields = split(line);
    if (!have_header) {
      if (fields.size() < 3 || fields[0] != "n" || fields[1] != "cl")
        throw std::invalid_argument("table CSV must start with header n,cl,<columns>");
      table.columns.assign(fields.begin() + 2, fields.end());
      have_header = true;
      continue;
    }
    if (fields.size() != table.columns.size() + 2)
      throw std::invalid_argument("table CSV line " + std::to_string(lineno) +
                                  ": expected " + std::to_string(table.columns.size() + 2) +
                                  " fields");
    ParsedTable::Row row;
    try {
      row.n = std::stol(fields[0]);
      row.code_length = std::stol(fields[1]);
      for (std::size_t i = 0; i < table.columns.size(); ++i) {
        const std::string& v = fields[i + 2];
        row.cells[table.columns[i]] = v.empty() ? std::optional<long>{} : std::optional<long>{std::stol(v)};
      }
    } catch (const std::logic_error&) {
      throw std::invalid_argument("table CSV line " + std::to_string(lineno) +
                                  ": fields must be integers or blank");
    }
    table.rows.push_back(std::move(row));
  }
  if (!have_header) throw std::invalid_argument("table CSV is empty");
  return table;
}

DiffReport compare_with_expected(const ParsedTable& actual, const ParsedTable& expected) {
  DiffReport report;
  auto key = [](const ParsedTable::Row& r) { return std::make_pair(r.n, r.code_length); };
  std::map<std::pair<long, long>, const ParsedTable::Row*> left, right;
  for (const auto& r : actual.rows) left[key(r)] = &r;
  for (const auto& r : expected.rows) right[key(r)] = &r;

  std::vector<std::string> columns = actual.columns;
  for (const auto& c : expected.columns)
    if (std::find(columns.begin(), columns.end(), c) == columns.end()) columns.push_back(c);

  auto render = [](const std::optional<long>* cell) {
    if (!cell) return std::string("-");          // column/row missing on this side
    if (!cell->has_value()) return std::string("blank");
    return std::to_string(**cell);
  };

  std::map<std::pair<long, long>, int> keys;
  for (const auto& [k, r] : left) keys[k] |= 1;
  for (const auto& [k, r] : right) keys[k] |= 2;

  for (const auto& [k, mask] : keys) {
    if (mask != 3) {
      report.entries.push_back({k.first, k.second, "*", DiffState::absent,
                                mask & 1 ? "row" : "-", mask & 2 ? "row" : "-"});
      ++report.absences;
      continue;
    }
    const ParsedTable::Row* lr = left[k];
    const ParsedTable::Row* rr = right[k];
    for (const auto& col : columns) {
      const auto li = lr->cells.find(col);
      const auto ri = rr->cells.find(col);
      const std::optional<long>* lc = li == lr->cells.end() ? nullptr : &li->second;
      const std::optional<long>* rc = ri == rr->cells.end() ? nullptr : &ri->second;
      if (!lc && !rc) continue;
      if (!lc || !rc) {
        report.entries.push_back(
            {k.first, k.second, col, DiffState::absent, render(lc), render(rc)});
        ++report.absences;
        continue;
      }
      if (*lc != *rc) {
        report.entries.push_back(
            {k.first, k.second, col, DiffState::mismatch, render(lc), render(rc)});
        ++report.mismatches;
      }
    }
  }
  return report;
}

DdcCode build_example(const std::string& id) {
  const ExampleEntry& e = find_example(id);
  const Field& f = Field::of(e.q);
  Splitting sp = verify_splitting(e.n, e.s1, sorted_complement(e.n, e.s1));
  sp.base = e.base;
  CirculantSpec cs{&f, std::move(sp), element(f, e.r), element(f, e.s), element(f, e.t)};
  if (e.kind == CodeKind::pure) return build_pure(cs);
  return build_bordered(cs, BorderSpec{element(f, e.alpha), element(f, e.beta), element(f, e.gamma)});
}

CodeReport reproduce_example(const std::string& id, const AnalyzeOptions& opts) {
  return analyze(build_example(id), opts);
}

const ExampleEntry& find_example(const std::string& id) {
  for (const ExampleEntry& e : example_registry())
    if (e.id == id) return e;
  throw std::invalid_argument("unknown example id: " + id);
}

}  // namespace ddc
