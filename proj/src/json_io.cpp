#include "ddc/json_io.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace ddc {
namespace {

using nlohmann::json;

std::vector<long> require_list(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_array())
    throw std::invalid_argument(std::string("missing list entry: ") + key);
  return j.at(key).get<std::vector<long>>();
}

uint8_t parse_element(const Field& f, const json& j, const char* key) {
  if (!j.contains(key))
    throw std::invalid_argument(std::string("missing field element entry: ") + key);
  const json& v = j.at(key);
  if (v.is_number_integer()) {
    long raw = v.get<long>();
    if (raw < 0 || raw >= f.q())
      throw std::invalid_argument(std::string("field element out of range: ") + key);
    return static_cast<uint8_t>(raw);
  }
  return f.parse_symbol(v.get<std::string>());
}

json witness_to_json(const Provenance& w) {
  json j;
  j["q"] = w.q;
  j["n"] = w.n;
  j["base"] = w.base ? json(*w.base) : json(nullptr);
  j["s1"] = w.s1;
  j["kind"] = w.kind == CodeKind::pure ? "pure" : "bordered";
  const Field& f = Field::of(w.q);
  j["r"] = f.symbol(w.r);
  j["s"] = f.symbol(w.s);
  j["t"] = f.symbol(w.t);
  if (w.kind == CodeKind::bordered) {
    j["alpha"] = f.symbol(w.alpha);
    j["beta"] = f.symbol(w.beta);
    j["gamma"] = f.symbol(w.gamma);
  }
  return j;
}

}  // namespace

json splitting_to_json(const Splitting& sp) {
  json j;
  j["n"] = sp.n;
  j["s1"] = sp.s1;
  j["s2"] = sp.s2;
  j["witnesses"] = sp.witnesses;
  j["base"] = sp.base ? json(*sp.base) : json(nullptr);
  return j;
}

Splitting splitting_from_json(const json& j) {
  if (!j.contains("n")) throw std::invalid_argument("splitting JSON lacks n");
  long n = j.at("n").get<long>();
  std::vector<long> s1 = require_list(j, "s1");
  std::vector<long> s2 =
      j.contains("s2") && j.at("s2").is_array() ? j.at("s2").get<std::vector<long>>() : sorted_complement(n, s1);
  Splitting sp = verify_splitting(n, s1, s2);
  if (j.contains("base") && j.at("base").is_number_integer()) sp.base = j.at("base").get<long>();
  return sp;
}

json code_to_json(const DdcCode& code) {
  json j;
  const Field& f = *code.circulant.field;
  j["kind"] = code.kind == CodeKind::pure ? "pure" : "bordered";
  j["q"] = f.q();
  j["n"] = code.circulant.splitting.n;
  j["s1"] = code.circulant.splitting.s1;
  j["r"] = f.symbol(code.circulant.r.value);
  j["s"] = f.symbol(code.circulant.s.value);
  j["t"] = f.symbol(code.circulant.t.value);
  if (code.border) {
    j["alpha"] = f.symbol(code.border->alpha.value);
    j["beta"] = f.symbol(code.border->beta.value);
    j["gamma"] = f.symbol(code.border->gamma.value);
  }
  j["generator"] = to_text(code.generator);
  return j;
}

DdcCode code_from_json(const json& j) {
  if (!j.contains("q") || !j.contains("n") || !j.contains("kind"))
    throw std::invalid_argument("code JSON needs kind, q and n");
  const Field& f = Field::of(j.at("q").get<int>());
  long n = j.at("n").get<long>();
  std::vector<long> s1 = require_list(j, "s1");
  Splitting sp = verify_splitting(n, s1, sorted_complement(n, s1));
  if (j.contains("base") && j.at("base").is_number_integer()) sp.base = j.at("base").get<long>();

  CirculantSpec spec;
  spec.field = &f;
  spec.splitting = sp;
  spec.r = element(f, parse_element(f, j, "r"));
  spec.s = element(f, parse_element(f, j, "s"));
  spec.t = element(f, parse_element(f, j, "t"));

  std::string kind = j.at("kind").get<std::string>();
  DdcCode code;
  if (kind == "pure") {
    code = build_pure(spec);
  } else if (kind == "bordered") {
    BorderSpec border;
    border.alpha = element(f, parse_element(f, j, "alpha"));
    border.beta = element(f, parse_element(f, j, "beta"));
    border.gamma = element(f, parse_element(f, j, "gamma"));
    code = build_bordered(spec, border);
  } else {
    throw std::invalid_argument("unknown code kind: " + kind);
  }

  if (j.contains("generator")) {
    Matrix embedded = matrix_from_text(j.at("generator").get<std::string>());
    if (embedded != code.generator)
      throw std::invalid_argument("embedded generator does not match the construction parameters");
  }
  return code;
}

json report_to_json(const CodeReport& report) {
  json j;
  j["length"] = report.length;
  j["dim"] = report.dimension;
  j["d"] = report.distance;
  j["a_d"] = report.min_words_exact ? json(report.min_words) : json(nullptr);
  j["self_dual"] = report.duality.self_dual_euclidean;
  j["hermitian_self_dual"] =
      report.duality.self_dual_hermitian ? json(*report.duality.self_dual_hermitian) : json(nullptr);
  switch (report.duality.binary_type) {
    case BinaryType::type_i:
      j["type"] = "I";
      break;
    case BinaryType::type_ii:
      j["type"] = "II";
      break;
    default:
      j["type"] = nullptr;
  }
  j["formally_self_dual"] =
      report.duality.formally_self_dual ? json(*report.duality.formally_self_dual) : json("unknown");
  j["method"] = report.method;
  j["provenance"] = code_to_json(report.code);
  return j;
}

json scan_to_json(const ScanResult& result, int q) {
  json j;
  j["columns"] = table_columns(q);
  json rows = json::array();
  for (const TableRow& row : result.rows) {
    json r;
    r["n"] = row.n;
    r["cl"] = row.code_length;
    json cells = json::object();
    for (const auto& [column, cell] : row.cells) {
      json c;
      c["d"] = cell.distance;
      c["witness"] = witness_to_json(cell.witness);
      cells[column] = c;
    }
    r["cells"] = cells;
    rows.push_back(r);
  }
  j["rows"] = rows;
  j["notices"] = result.notices;
  return j;
}

}  // namespace ddc
