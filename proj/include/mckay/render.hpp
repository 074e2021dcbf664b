#pragma once

#include <filesystem>
#include <map>
#include <string>

#include <json.hpp>

#include "mckay/group.hpp"
#include "mckay/validate.hpp"

namespace mckay {

/// Full report document for one group: speciality data, resolution,
/// clusters, quiver and the validation checks.  Keys are sorted and all
/// array orders come from the modules' canonical orderings, so the dump is
/// byte-stable.  Monomials serialize as exponent pairs [m, n].
nlohmann::json report_json(const GroupParams& g);

// Individual document fragments, usable without running the checks.
nlohmann::json group_json(const GroupParams& g);
nlohmann::json basis_json(const GroupParams& g);
nlohmann::json specials_json(const GroupParams& g);
nlohmann::json resolution_json(const GroupParams& g);
nlohmann::json clusters_json(const GroupParams& g);
nlohmann::json quiver_json(const GroupParams& g);

nlohmann::json validation_json(const ValidationReport& rep);

std::string dual_graph_dot(const GroupParams& g);
std::string quiver_dot(const GroupParams& g);

std::string newton_svg(const GroupParams& g);
std::string clusters_svg(const GroupParams& g);

std::string specials_text(const GroupParams& g);
std::string bg_chart_text(const GroupParams& g);
std::string resolution_text(const GroupParams& g);
std::string clusters_text(const GroupParams& g);
std::string quiver_text(const GroupParams& g);
std::string checks_text(const ValidationReport& rep);

/// Deterministic set of documents describing one group.
struct ReportBundle {
  std::string json_document;
  std::map<std::string, std::string> dot_documents;
  std::map<std::string, std::string> svg_documents;
  std::map<std::string, std::string> text_tables;

  /// Flat filename -> contents view used when writing to disk.
  std::map<std::string, std::string> files() const;
};

ReportBundle emit(const GroupParams& g);

/// Writes every bundle document under dir, creating it if needed.
/// Throws IoError on failure.
void write_bundle(const ReportBundle& bundle, const std::filesystem::path& dir);

}  // namespace mckay
