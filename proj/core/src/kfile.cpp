#include "koszul/kfile.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace koszul {
namespace {

using nlohmann::json;

json parse_json(const std::string& text, const char* what) {
  json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded())
    throw invalid_input(std::string(what) + ": malformed JSON");
  if (!j.is_object()) throw invalid_input(std::string(what) + ": not an object");
  return j;
}

FieldConfig field_from_json(const json& j, const char* what) {
  if (!j.contains("field") || !j["field"].is_object())
    throw invalid_input(std::string(what) + ": missing field object");
  const json& f = j["field"];
  if (!f.contains("kind") || !f["kind"].is_string())
    throw invalid_input(std::string(what) + ": field.kind must be a string");
  const std::string kind = f["kind"].get<std::string>();
  if (kind == "rational") return FieldConfig::rational();
  if (kind == "prime") {
    if (!f.contains("p") || !f["p"].is_string())
      throw invalid_input(std::string(what) +
                          ": field.p must be a decimal string");
    Int p = parse_integer(f["p"].get<std::string>());
    if (p <= 0 || !p.fits_ulong_p())
      throw invalid_input(std::string(what) + ": field.p out of range");
    return FieldConfig::prime(static_cast<std::uint64_t>(p.get_ui()));
  }
  throw invalid_input(std::string(what) + ": unknown field.kind '" + kind + "'");
}

json field_to_json(const FieldConfig& cfg) {
  json f;
  if (cfg.kind == FieldConfig::Kind::rational) {
    f["kind"] = "rational";
  } else {
    f["kind"] = "prime";
    f["p"] = std::to_string(cfg.p);
  }
  return f;
}

Index index_from_json(const json& j, const char* key, const char* what) {
  if (!j.contains(key) || !j[key].is_number_integer())
    throw invalid_input(std::string(what) + ": missing integer '" + key + "'");
  return j[key].get<Index>();
}

std::vector<std::vector<std::string>> basis_from_json(const json& j,
                                                      const char* what) {
  if (!j.contains("basis") || !j["basis"].is_array())
    throw invalid_input(std::string(what) + ": missing basis array");
  std::vector<std::vector<std::string>> rows;
  for (const json& jr : j["basis"]) {
    if (!jr.is_array())
      throw invalid_input(std::string(what) + ": basis row is not an array");
    std::vector<std::string> row;
    for (const json& je : jr) {
      if (!je.is_string())
        throw invalid_input(std::string(what) +
                            ": coefficients must be strings");
      row.push_back(je.get<std::string>());
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string read_file(const std::string& path, const char* what) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw invalid_input(std::string(what) + ": cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

KFileData kfile_parse(const std::string& json_text) {
  json j = parse_json(json_text, "KFile");
  KFileData k;
  k.n = index_from_json(j, "n", "KFile");
  k.field = field_from_json(j, "KFile");
  if (!j.contains("pairs_order") || !j["pairs_order"].is_string() ||
      j["pairs_order"].get<std::string>() != "lex")
    throw invalid_input("KFile: pairs_order must be \"lex\"");
  k.basis = basis_from_json(j, "KFile");
  return k;
}

std::string kfile_dump(const KFileData& k) {
  json j;
  j["n"] = k.n;
  j["field"] = field_to_json(k.field);
  j["pairs_order"] = "lex";
  j["basis"] = k.basis;
  return j.dump(2) + "\n";
}

KFileData kfile_read(const std::string& path) {
  return kfile_parse(read_file(path, "KFile"));
}

void kfile_write(const std::string& path, const KFileData& k) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw invalid_input("KFile: cannot write " + path);
  out << kfile_dump(k);
}

VFileData vfile_parse(const std::string& json_text) {
  json j = parse_json(json_text, "VFile");
  VFileData v;
  v.n = index_from_json(j, "n", "VFile");
  v.field = field_from_json(j, "VFile");
  v.basis = basis_from_json(j, "VFile");
  return v;
}

VFileData vfile_read(const std::string& path) {
  return vfile_parse(read_file(path, "VFile"));
}

std::string Report::to_json() const {
  json j;
  j["command"] = command;
  json in = json::object();
  for (const auto& [k, v] : inputs) in[k] = v;
  j["inputs"] = in;
  j["field"] = field_label;
  json res = json::object();
  for (const auto& [k, v] : results) res[k] = v;
  j["results"] = res;
  j["timing_ms"] = std::to_string(timing_ms);
  return j.dump(2) + "\n";
}

std::string Report::to_text() const {
  std::ostringstream ss;
  ss << command;
  for (const auto& [k, v] : inputs) ss << " " << k << "=" << v;
  ss << "  [" << field_label << "]\n";
  for (const auto& [k, v] : results) ss << k << " = " << v << "\n";
  ss << "time: " << timing_ms << " ms\n";
  return ss.str();
}

}  // namespace koszul
