#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "qcdesign/design.hpp"
#include "qcdesign/generator.hpp"
#include "qcdesign/spectrum.hpp"

namespace qcd::cli {

inline constexpr std::string_view kSchema = "qcdesign/1";

/// Malformed or inconsistent input file.
class DocumentError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A design on disk. The generator is absent for externally supplied designs
/// (CSV without provenance).
struct DesignDocument {
  std::optional<GeneratorSpec> spec;
  DesignMatrix design;
  std::optional<nlohmann::json> metrics;

  friend bool operator==(const DesignDocument& a, const DesignDocument& b) {
    return a.design == b.design && a.metrics == b.metrics && same_spec(a.spec, b.spec);
  }

 private:
  static bool same_spec(const std::optional<GeneratorSpec>& a, const std::optional<GeneratorSpec>& b);
};

DesignDocument make_document(const GeneratorSpec& spec);

nlohmann::json to_json(const DesignDocument& doc);
/// Validates the schema tag, the shape, the +-1 entries and, when generator
/// fields are present, that the rows match a rebuild. Throws DocumentError.
DesignDocument document_from_json(const nlohmann::json& j);

/// Header line of labels, then one comma-separated row of +1/-1 per run.
std::string to_csv(const DesignMatrix& design);
DesignMatrix design_from_csv(std::string_view text);

enum class FileFormat { Json, Csv };
FileFormat parse_format(std::string_view name);
/// Explicit choice wins, then the extension; JSON otherwise.
FileFormat format_for(const std::filesystem::path& path, std::optional<FileFormat> requested);

DesignDocument read_document(const std::filesystem::path& path);
std::string render_document(const DesignDocument& doc, FileFormat format);
void write_document(const DesignDocument& doc, const std::filesystem::path& path, FileFormat format);

/// Exact rationals as strings, with presentation-only decimals alongside.
nlohmann::json metrics_to_json(const SpectrumMetrics& metrics, const WordSpectrum& spectrum,
                               std::optional<int> projectivity);
/// Reads the exact fields back; numbers in place of rational strings are rejected.
SpectrumMetrics metrics_from_json(const nlohmann::json& j);
WordSpectrum spectrum_from_json(const nlohmann::json& j);

}  // namespace qcd::cli
