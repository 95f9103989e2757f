#include "ddc/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdint>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ddc/codeprops.hpp"
#include "ddc/ddc_code.hpp"
#include "ddc/gf.hpp"
#include "ddc/json_io.hpp"
#include "ddc/search.hpp"
#include "ddc/splitting.hpp"

namespace ddc {
namespace {

using nlohmann::json;

std::vector<long> parse_long_list(const std::string& text) {
  std::vector<long> out;
  std::stringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    if (tok.empty()) throw std::invalid_argument("empty entry in list: " + text);
    std::size_t used = 0;
    out.push_back(std::stol(tok, &used));
    if (used != tok.size()) throw std::invalid_argument("bad integer in list: " + tok);
  }
  if (out.empty()) throw std::invalid_argument("empty list");
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& text, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) throw std::invalid_argument("cannot open output file: " + out_path);
  file << text;
}

// Construction flags shared by build and analyze.
struct BuildArgs {
  int q = 2;
  long n = 0;
  std::string s1;
  std::optional<long> base;
  std::string kind = "pure";
  std::string r, s, t;
  std::string alpha, beta, gamma;
};

void add_build_flags(CLI::App* cmd, BuildArgs& a, bool required) {
  cmd->add_option("--q", a.q, "Field size (2, 3, 4, 5 or 7)")->capture_default_str();
  auto* n = cmd->add_option("--n", a.n, "Circulant size (odd, >= 3)");
  auto* s1 = cmd->add_option("--s1", a.s1, "First splitting class, comma-separated (s2 is the complement)");
  cmd->add_option("--base", a.base, "Cyclotomic base annotation for the splitting");
  cmd->add_option("--kind", a.kind, "pure | bordered")
      ->check(CLI::IsMember({"pure", "bordered"}))
      ->capture_default_str();
  auto* r = cmd->add_option("--r", a.r, "Diagonal circulant coefficient (field symbol)");
  auto* s = cmd->add_option("--s", a.s, "Circulant coefficient on S1 (field symbol)");
  auto* t = cmd->add_option("--t", a.t, "Circulant coefficient on S2 (field symbol)");
  cmd->add_option("--alpha", a.alpha, "Border corner (bordered only, field symbol)");
  cmd->add_option("--beta", a.beta, "Border row fill (bordered only, field symbol)");
  cmd->add_option("--gamma", a.gamma, "Border column fill (bordered only, field symbol)");
  if (required) {
    n->required();
    s1->required();
    r->required();
    s->required();
    t->required();
  }
}

DdcCode build_from_args(const BuildArgs& a) {
  const Field& f = Field::of(a.q);
  std::vector<long> s1 = parse_long_list(a.s1);
  Splitting sp = verify_splitting(a.n, s1, sorted_complement(a.n, s1));
  sp.base = a.base;

  CirculantSpec spec;
  spec.field = &f;
  spec.splitting = std::move(sp);
  spec.r = element(f, f.parse_symbol(a.r));
  spec.s = element(f, f.parse_symbol(a.s));
  spec.t = element(f, f.parse_symbol(a.t));

  if (a.kind == "pure") {
    if (!a.alpha.empty() || !a.beta.empty() || !a.gamma.empty())
      throw std::invalid_argument("--alpha/--beta/--gamma apply to --kind bordered only");
    return build_pure(spec);
  }
  if (a.alpha.empty() || a.beta.empty() || a.gamma.empty())
    throw std::invalid_argument("--kind bordered needs --alpha, --beta and --gamma");
  BorderSpec border;
  border.alpha = element(f, f.parse_symbol(a.alpha));
  border.beta = element(f, f.parse_symbol(a.beta));
  border.gamma = element(f, f.parse_symbol(a.gamma));
  return build_bordered(spec, border);
}

void print_report_text(const CodeReport& rep, std::ostream& out) {
  const Field& f = *rep.code.circulant.field;
  out << "[" << rep.length << "," << rep.dimension << "," << rep.distance << "] over GF("
      << f.q() << ")\n";
  if (rep.min_words_exact)
    out << "A_" << rep.distance << " = " << rep.min_words << "\n";
  else
    out << "A_" << rep.distance << " = not counted\n";
  out << "self-dual (Euclidean): " << (rep.duality.self_dual_euclidean ? "yes" : "no") << "\n";
  if (rep.duality.self_dual_hermitian)
    out << "self-dual (Hermitian): " << (*rep.duality.self_dual_hermitian ? "yes" : "no") << "\n";
  if (rep.duality.binary_type != BinaryType::none)
    out << "binary type: " << (rep.duality.binary_type == BinaryType::type_ii ? "II" : "I") << "\n";
  if (rep.duality.formally_self_dual)
    out << "formally self-dual: " << (*rep.duality.formally_self_dual ? "yes" : "no") << "\n";
  else
    out << "formally self-dual: unknown (over budget)\n";
  out << "method: " << rep.method << "\n";
}

json registry_entry_to_json(const ExampleEntry& e) {
  const Field& f = Field::of(e.q);
  json j;
  j["id"] = e.id;
  j["summary"] = e.summary;
  j["q"] = e.q;
  j["n"] = e.n;
  j["base"] = e.base;
  j["s1"] = e.s1;
  j["kind"] = e.kind == CodeKind::pure ? "pure" : "bordered";
  j["r"] = f.symbol(e.r);
  j["s"] = f.symbol(e.s);
  j["t"] = f.symbol(e.t);
  if (e.kind == CodeKind::bordered) {
    j["alpha"] = f.symbol(e.alpha);
    j["beta"] = f.symbol(e.beta);
    j["gamma"] = f.symbol(e.gamma);
  }
  json expected;
  expected["length"] = e.length;
  expected["dim"] = e.dimension;
  expected["d"] = e.distance;
  if (e.min_words) expected["a_d"] = *e.min_words;
  if (e.self_dual) expected["self_dual"] = *e.self_dual;
  if (e.binary_type)
    expected["type"] = *e.binary_type == BinaryType::none
                           ? json(nullptr)
                           : json(*e.binary_type == BinaryType::type_ii ? "II" : "I");
  if (e.formally_self_dual) expected["formally_self_dual"] = *e.formally_self_dual;
  if (e.even_weights) expected["even_weights"] = *e.even_weights;
  j["expected"] = expected;
  return j;
}

// Compares the reproduced report against the registry facts; returns the
// list of disagreements (empty = everything checkable matched).
std::vector<std::string> check_against_registry(const ExampleEntry& e, const CodeReport& rep) {
  std::vector<std::string> bad;
  auto expect = [&bad](const std::string& what, const std::string& got, const std::string& want) {
    if (got != want) bad.push_back(what + ": got " + got + ", expected " + want);
  };
  expect("length", std::to_string(rep.length), std::to_string(e.length));
  expect("dim", std::to_string(rep.dimension), std::to_string(e.dimension));
  expect("d", std::to_string(rep.distance), std::to_string(e.distance));
  if (e.min_words && rep.min_words_exact)
    expect("a_d", std::to_string(rep.min_words), std::to_string(*e.min_words));
  if (e.self_dual)
    expect("self_dual", rep.duality.self_dual_euclidean ? "yes" : "no", *e.self_dual ? "yes" : "no");
  if (e.binary_type) {
    auto name = [](BinaryType t) {
      return t == BinaryType::none ? "none" : t == BinaryType::type_ii ? "II" : "I";
    };
    expect("type", name(rep.duality.binary_type), name(*e.binary_type));
  }
  if (e.formally_self_dual && rep.duality.formally_self_dual)
    expect("formally_self_dual", *rep.duality.formally_self_dual ? "yes" : "no",
           *e.formally_self_dual ? "yes" : "no");
  return bad;
}

int run_diff(const std::string& actual_path, const std::string& expected_path, std::ostream& out) {
  ParsedTable actual = parse_table_csv(read_file(actual_path));
  ParsedTable expected = parse_table_csv(read_file(expected_path));
  DiffReport report = compare_with_expected(actual, expected);
  for (const DiffEntry& e : report.entries) {
    out << (e.state == DiffState::mismatch ? "mismatch" : "absent") << " n=" << e.n
        << " cl=" << e.code_length << " [" << e.column << "]: " << e.left << " vs " << e.right
        << "\n";
  }
  out << report.mismatches << " mismatches, " << report.absences << " absences\n";
  if (report.mismatches > 0) {
    out << "TABLES DIFFER\n";
    return 2;
  }
  out << "tables agree on all shared cells\n";
  return 0;
}

}  // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Duadic double circulant codes: construction, analysis, tables"};
  app.set_help_all_flag("--help-all", "Expanded help for every subcommand");
  app.require_subcommand(1);

  // cosets ----------------------------------------------------------------
  auto* cosets_cmd = app.add_subcommand("cosets", "List the cyclotomic cosets of n");
  long co_n = 0;
  long co_base = 4;
  bool co_json = false;
  cosets_cmd->add_option("--n", co_n, "Modulus (odd, >= 3)")->required();
  cosets_cmd->add_option("--base", co_base, "Cyclotomic base")->capture_default_str();
  cosets_cmd->add_flag("--json", co_json, "Emit JSON");

  // splittings ------------------------------------------------------------
  auto* split_cmd = app.add_subcommand("splittings", "Enumerate coset splittings of n");
  long sp_n = 0;
  long sp_base = 4;
  bool sp_json = false;
  split_cmd->add_option("--n", sp_n, "Modulus (odd, >= 3)")->required();
  split_cmd->add_option("--base", sp_base, "Cyclotomic base")->capture_default_str();
  split_cmd->add_flag("--json", sp_json, "Emit JSON");

  // build -----------------------------------------------------------------
  auto* build_cmd = app.add_subcommand("build", "Build a code and print its generator matrix");
  BuildArgs build_args;
  bool build_json = false;
  std::string build_out;
  add_build_flags(build_cmd, build_args, /*required=*/true);
  build_cmd->add_flag("--json", build_json, "Emit the code as JSON instead of matrix text");
  build_cmd->add_option("--out", build_out, "Write to this file instead of stdout");

  // analyze ---------------------------------------------------------------
  auto* an_cmd = app.add_subcommand("analyze", "Distance and duality report for a code");
  BuildArgs an_args;
  std::string an_in;
  bool an_json = false;
  bool an_deep = false;
  bool an_no_count = false;
  uint64_t an_budget = kDefaultBudget;
  int an_workers = 1;
  std::string an_out;
  add_build_flags(an_cmd, an_args, /*required=*/false);
  an_cmd->add_option("--in", an_in, "Read the code from a JSON file emitted by build");
  an_cmd->add_option("--budget", an_budget, "Enumeration cap q^k for exhaustive work")
      ->capture_default_str();
  an_cmd->add_flag("--deep", an_deep, "Raise the enumeration cap to 2^34");
  an_cmd->add_flag("--no-count", an_no_count, "Skip the exact minimum-word count");
  an_cmd->add_option("--workers", an_workers, "Worker threads")->capture_default_str();
  an_cmd->add_flag("--json", an_json, "Emit the report as JSON");
  an_cmd->add_option("--out", an_out, "Write to this file instead of stdout");

  // example ---------------------------------------------------------------
  auto* ex_cmd = app.add_subcommand("example", "Reproduce a registered worked example");
  std::string ex_id;
  bool ex_json = false;
  bool ex_deep = false;
  bool ex_seed = false;
  uint64_t ex_budget = kDefaultBudget;
  int ex_workers = 1;
  ex_cmd->add_option("--id", ex_id, "Example id (omit to list all)");
  ex_cmd->add_flag("--seed-registry", ex_seed, "Dump the whole registry as JSON for audit");
  ex_cmd->add_option("--budget", ex_budget, "Enumeration cap q^k for exhaustive work")
      ->capture_default_str();
  ex_cmd->add_flag("--deep", ex_deep, "Raise the enumeration cap to 2^34");
  ex_cmd->add_option("--workers", ex_workers, "Worker threads")->capture_default_str();
  ex_cmd->add_flag("--json", ex_json, "Emit JSON");

  // table -----------------------------------------------------------------
  auto* tab_cmd = app.add_subcommand("table", "Scan splittings and parameters into a distance table");
  int tab_q = 2;
  long tab_base = 4;
  long tab_min_n = 3;
  long tab_max_n = 19;
  uint64_t tab_budget = kDefaultBudget;
  bool tab_deep = false;
  int tab_workers = 1;
  bool tab_json = false;
  std::string tab_out;
  tab_cmd->add_option("--q", tab_q, "Field size (2, 3, 4, 5 or 7)")->required();
  tab_cmd->add_option("--base", tab_base, "Cyclotomic base for the splittings")->capture_default_str();
  tab_cmd->add_option("--min-n", tab_min_n, "Smallest circulant size")->capture_default_str();
  tab_cmd->add_option("--max-n", tab_max_n, "Largest circulant size")->capture_default_str();
  tab_cmd->add_option("--budget", tab_budget, "Desk-scale cap: skip rows with q^dim above it")
      ->capture_default_str();
  tab_cmd->add_flag("--deep", tab_deep, "Scan rows beyond the desk-scale cap too");
  tab_cmd->add_option("--workers", tab_workers, "Worker threads")->capture_default_str();
  tab_cmd->add_flag("--json", tab_json, "Emit JSON (with witness codes) instead of CSV");
  tab_cmd->add_option("--out", tab_out, "Write to this file instead of stdout");

  // diff ------------------------------------------------------------------
  auto* diff_cmd = app.add_subcommand("diff", "Compare a produced table CSV against a reference");
  std::string diff_actual, diff_expected;
  diff_cmd->add_option("actual", diff_actual, "Produced CSV")->required();
  diff_cmd->add_option("expected", diff_expected, "Reference CSV")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*cosets_cmd) {
      CosetPartition parts = cyclotomic_cosets(co_n, co_base);
      if (co_json) {
        json j;
        j["n"] = co_n;
        j["base"] = co_base;
        j["cosets"] = parts.cosets;
        out << j.dump(2) << "\n";
      } else {
        out << "n=" << co_n << " base=" << co_base << ": " << parts.cosets.size() << " cosets\n";
        for (const auto& coset : parts.cosets) {
          out << "{";
          for (std::size_t i = 0; i < coset.size(); ++i) out << (i ? ", " : "") << coset[i];
          out << "}\n";
        }
      }
      return 0;
    }

    if (*split_cmd) {
      std::vector<Splitting> sps = enumerate_coset_splittings(sp_n, sp_base);
      if (sp_json) {
        json j;
        j["n"] = sp_n;
        j["base"] = sp_base;
        j["count"] = sps.size();
        json list = json::array();
        for (const Splitting& s : sps) list.push_back(splitting_to_json(s));
        j["splittings"] = list;
        out << j.dump(2) << "\n";
      } else {
        out << "n=" << sp_n << " base=" << sp_base << ": " << sps.size() << " splittings\n";
        for (const Splitting& s : sps) {
          out << "s1 =";
          for (long x : s.s1) out << " " << x;
          out << " | witnesses =";
          for (long w : s.witnesses) out << " " << w;
          out << "\n";
        }
      }
      return 0;
    }

    if (*build_cmd) {
      DdcCode code = build_from_args(build_args);
      std::string text = build_json ? code_to_json(code).dump(2) + "\n" : to_text(code.generator);
      write_output(text, build_out, out);
      return 0;
    }

    if (*an_cmd) {
      DdcCode code;
      if (!an_in.empty()) {
        code = code_from_json(json::parse(read_file(an_in)));
      } else {
        if (an_args.n == 0 || an_args.s1.empty() || an_args.r.empty() || an_args.s.empty() ||
            an_args.t.empty())
          throw std::invalid_argument("analyze needs either --in FILE or --n/--s1/--r/--s/--t");
        code = build_from_args(an_args);
      }
      AnalyzeOptions opts;
      opts.budget = an_deep ? (uint64_t{1} << 34) : an_budget;
      opts.workers = an_workers;
      opts.count_min_words = !an_no_count;
      err << "analyzing [" << code.length() << "," << code.dimension() << "] over GF("
          << code.circulant.field->q() << ")...\n";
      CodeReport rep = analyze(code, opts);
      if (an_json) {
        write_output(report_to_json(rep).dump(2) + "\n", an_out, out);
      } else {
        std::ostringstream text;
        print_report_text(rep, text);
        write_output(text.str(), an_out, out);
      }
      return 0;
    }

    if (*ex_cmd) {
      if (ex_seed) {
        json list = json::array();
        for (const ExampleEntry& e : example_registry()) list.push_back(registry_entry_to_json(e));
        out << list.dump(2) << "\n";
        return 0;
      }
      if (ex_id.empty()) {
        for (const ExampleEntry& e : example_registry())
          out << e.id << " — " << e.summary << "\n";
        return 0;
      }
      const ExampleEntry& entry = find_example(ex_id);
      AnalyzeOptions opts;
      opts.budget = ex_deep ? (uint64_t{1} << 34) : ex_budget;
      opts.workers = ex_workers;
      err << "reproducing " << entry.id << ": " << entry.summary << "\n";
      CodeReport rep = reproduce_example(ex_id, opts);
      std::vector<std::string> bad = check_against_registry(entry, rep);
      if (ex_json) {
        json j = report_to_json(rep);
        j["expected"] = registry_entry_to_json(entry)["expected"];
        j["ok"] = bad.empty();
        out << j.dump(2) << "\n";
      } else {
        print_report_text(rep, out);
        if (bad.empty()) {
          out << "matches the registered values\n";
        } else {
          for (const std::string& b : bad) out << "MISMATCH " << b << "\n";
        }
      }
      if (!bad.empty()) {
        err << "example " << ex_id << " disagrees with the registry\n";
        return 1;
      }
      return 0;
    }

    if (*tab_cmd) {
      SearchConfig config;
      config.q = tab_q;
      config.base = tab_base;
      config.min_n = tab_min_n;
      config.max_n = tab_max_n;
      config.distance_budget = tab_budget;
      config.deep = tab_deep;
      config.workers = tab_workers;
      err << "scanning GF(" << tab_q << ") base " << tab_base << ", n = " << tab_min_n << ".."
          << tab_max_n << "\n";
      ScanResult result = scan(config);
      for (const std::string& notice : result.notices) err << "notice: " << notice << "\n";
      std::string text =
          tab_json ? scan_to_json(result, tab_q).dump(2) + "\n" : write_table_csv(result, tab_q);
      write_output(text, tab_out, out);
      return 0;
    }

    if (*diff_cmd) return run_diff(diff_actual, diff_expected, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  err << "error: no subcommand selected\n";
  return 1;
}

}  // namespace ddc
