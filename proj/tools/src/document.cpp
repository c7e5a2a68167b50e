#include "qcdesign/cli/document.hpp"

#include <fstream>
#include <sstream>

#include "qcdesign/rational.hpp"

namespace qcd::cli {

using nlohmann::json;

bool DesignDocument::same_spec(const std::optional<GeneratorSpec>& a,
                               const std::optional<GeneratorSpec>& b) {
  if (a.has_value() != b.has_value()) return false;
  if (!a) return true;
  return a->family == b->family && a->u == b->u && a->v == b->v && a->branch == b->branch;
}

DesignDocument make_document(const GeneratorSpec& spec) {
  return DesignDocument{spec, build_design(spec), std::nullopt};
}

json to_json(const DesignDocument& doc) {
  json j;
  j["schema"] = kSchema;
  if (doc.spec) {
    const auto& s = *doc.spec;
    j["family"] = family_name(s.family);
    j["n"] = s.n();
    j["u"] = s.u;
    j["v"] = s.v;
    j["u0v0"] = s.branch ? json(to_string(*s.branch)) : json(nullptr);
  }
  const auto& d = doc.design;
  j["N"] = d.runs();
  j["q"] = d.factors();
  j["labels"] = d.labels();
  json rows = json::array();
  for (std::int64_t r = 0; r < d.runs(); ++r) {
    json row = json::array();
    for (auto x : d.row(r)) row.push_back(static_cast<int>(x));
    rows.push_back(std::move(row));
  }
  j["rows"] = std::move(rows);
  if (doc.metrics) j["metrics"] = *doc.metrics;
  return j;
}

namespace {

template <typename T>
T field(const json& j, const char* key) {
  if (!j.contains(key)) throw DocumentError(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw DocumentError(std::string("field '") + key + "' has the wrong type");
  }
}

std::vector<Z4> z4_vector(const json& j, const char* key) {
  std::vector<Z4> out;
  for (int x : field<std::vector<int>>(j, key)) {
    if (x < 0 || x > 3) throw DocumentError(std::string("'") + key + "' entries must be in 0..3");
    out.push_back(static_cast<Z4>(x));
  }
  return out;
}

}  // namespace

DesignDocument document_from_json(const json& j) {
  if (!j.is_object()) throw DocumentError("design document must be a JSON object");
  if (field<std::string>(j, "schema") != kSchema) {
    throw DocumentError("unsupported schema, expected " + std::string(kSchema));
  }
  DesignDocument doc;
  const auto labels = field<std::vector<std::string>>(j, "labels");
  const auto runs = field<std::int64_t>(j, "N");
  if (field<int>(j, "q") != static_cast<int>(labels.size())) {
    throw DocumentError("'q' does not match the number of labels");
  }
  const auto& rows = j.contains("rows") ? j.at("rows") : throw DocumentError("missing field 'rows'");
  if (!rows.is_array() || static_cast<std::int64_t>(rows.size()) != runs) {
    throw DocumentError("'rows' must hold N rows");
  }
  std::vector<std::int8_t> entries;
  entries.reserve(static_cast<std::size_t>(runs) * labels.size());
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != labels.size()) throw DocumentError("row length differs from q");
    for (const auto& x : row) {
      if (!x.is_number_integer() || (x.get<int>() != 1 && x.get<int>() != -1)) {
        throw DocumentError("design entries must be +1 or -1");
      }
      entries.push_back(static_cast<std::int8_t>(x.get<int>()));
    }
  }
  doc.design = DesignMatrix(labels, std::move(entries));

  if (j.contains("family")) {
    GeneratorSpec spec;
    try {
      spec.family = parse_family(field<std::string>(j, "family"));
      if (j.contains("u0v0") && !j.at("u0v0").is_null()) {
        spec.branch = parse_branch_pair(field<std::string>(j, "u0v0"));
      }
      spec.u = z4_vector(j, "u");
      spec.v = z4_vector(j, "v");
      if (field<int>(j, "n") != spec.n()) throw DocumentError("'n' does not match the generator length");
      spec.validate();
    } catch (const std::invalid_argument& e) {
      throw DocumentError(e.what());
    }
    if (build_design(spec) != doc.design) throw DocumentError("rows do not match a rebuild from the generator");
    doc.spec = std::move(spec);
  }
  if (j.contains("metrics")) {
    metrics_from_json(j.at("metrics"));  // validate before accepting
    doc.metrics = j.at("metrics");
  }
  return doc;
}

std::string to_csv(const DesignMatrix& design) {
  std::string out;
  const auto& labels = design.labels();
  for (std::size_t c = 0; c < labels.size(); ++c) {
    if (c) out += ',';
    out += labels[c];
  }
  out += '\n';
  for (std::int64_t r = 0; r < design.runs(); ++r) {
    bool first = true;
    for (auto x : design.row(r)) {
      if (!first) out += ',';
      out += x > 0 ? "1" : "-1";
      first = false;
    }
    out += '\n';
  }
  return out;
}

namespace {

std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) {
    const auto a = cell.find_first_not_of(" \t\r");
    const auto b = cell.find_last_not_of(" \t\r");
    out.push_back(a == std::string::npos ? "" : cell.substr(a, b - a + 1));
  }
  return out;
}

}  // namespace

DesignMatrix design_from_csv(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line)) throw DocumentError("empty CSV");
  const auto labels = split_line(line);
  if (labels.empty()) throw DocumentError("CSV header has no columns");
  std::vector<std::int8_t> entries;
  std::int64_t row = 0;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    ++row;
    const auto cells = split_line(line);
    if (cells.size() != labels.size()) {
      throw DocumentError("CSV row " + std::to_string(row) + " has " + std::to_string(cells.size()) +
                          " cells, expected " + std::to_string(labels.size()));
    }
    for (const auto& c : cells) {
      if (c == "1" || c == "+1") {
        entries.push_back(1);
      } else if (c == "-1") {
        entries.push_back(-1);
      } else {
        throw DocumentError("CSV row " + std::to_string(row) + ": entry '" + c + "' is not +1/-1");
      }
    }
  }
  if (row == 0) throw DocumentError("CSV has no rows");
  return DesignMatrix(labels, std::move(entries));
}

FileFormat parse_format(std::string_view name) {
  if (name == "json") return FileFormat::Json;
  if (name == "csv") return FileFormat::Csv;
  throw std::invalid_argument("format must be json or csv");
}

FileFormat format_for(const std::filesystem::path& path, std::optional<FileFormat> requested) {
  if (requested) return *requested;
  return path.extension() == ".csv" ? FileFormat::Csv : FileFormat::Json;
}

DesignDocument read_document(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DocumentError("cannot open " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    try {
      return document_from_json(json::parse(text));
    } catch (const json::parse_error& e) {
      throw DocumentError(path.string() + ": " + e.what());
    }
  }
  return DesignDocument{std::nullopt, design_from_csv(text), std::nullopt};
}

std::string render_document(const DesignDocument& doc, FileFormat format) {
  return format == FileFormat::Csv ? to_csv(doc.design) : to_json(doc).dump(1) + "\n";
}

void write_document(const DesignDocument& doc, const std::filesystem::path& path, FileFormat format) {
  const std::string text = render_document(doc, format);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DocumentError("cannot write " + path.string());
  out << text;
  if (!out) throw DocumentError("write failed for " + path.string());
}

json metrics_to_json(const SpectrumMetrics& metrics, const WordSpectrum& spectrum,
                     std::optional<int> projectivity) {
  json j;
  j["resolution"] = resolution_to_string(metrics.resolution);
  j["resolution_decimal"] = metrics.resolution ? json(to_decimal(*metrics.resolution)) : json(nullptr);
  json wlp = json::array();
  for (const auto& a : metrics.wlp) wlp.push_back(to_string(a));
  j["wlp"] = std::move(wlp);
  json words = json::array();
  for (const auto& e : spectrum.entries()) {
    words.push_back({{"length", e.length}, {"ai", to_string(e.ai)}, {"count", e.count}});
  }
  j["spectrum"] = std::move(words);
  if (projectivity) j["projectivity"] = *projectivity;
  return j;
}

namespace {

Rational exact(const json& j, const char* what) {
  if (!j.is_string()) throw DocumentError(std::string(what) + " must be an exact rational string");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw DocumentError(std::string(what) + ": " + e.what());
  }
}

}  // namespace

SpectrumMetrics metrics_from_json(const json& j) {
  if (!j.is_object()) throw DocumentError("metrics must be an object");
  SpectrumMetrics m;
  const auto res = j.contains("resolution") ? j.at("resolution") : throw DocumentError("missing resolution");
  if (!(res.is_string() && res.get<std::string>() == "Unbounded")) m.resolution = exact(res, "resolution");
  if (!j.contains("wlp") || !j.at("wlp").is_array()) throw DocumentError("missing wlp");
  for (const auto& a : j.at("wlp")) m.wlp.push_back(exact(a, "wlp entry"));
  if (j.contains("spectrum")) spectrum_from_json(j.at("spectrum"));
  return m;
}

WordSpectrum spectrum_from_json(const json& j) {
  if (!j.is_array()) throw DocumentError("spectrum must be an array");
  WordSpectrum s;
  for (const auto& e : j) {
    if (!e.is_object() || !e.contains("length") || !e.contains("ai") || !e.contains("count") ||
        !e.at("length").is_number_integer() || !e.at("count").is_number_integer()) {
      throw DocumentError("spectrum entries need integer length/count and a rational ai");
    }
    s.add(e.at("length").get<int>(), exact(e.at("ai"), "aliasing index"), e.at("count").get<std::int64_t>());
  }
  return s;
}

}  // namespace qcd::cli
