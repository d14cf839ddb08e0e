#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "spanfact/cayley.hpp"
#include "spanfact/digraph.hpp"
#include "spanfact/factorization.hpp"
#include "spanfact/mms.hpp"
#include "spanfact/schedule.hpp"

namespace spanfact {

// Wire formats. Vertex indices are 0-based; factor indices are 1-based, as in
// the word lists themselves.

nlohmann::json graph_to_json(const Digraph& g);
Digraph graph_from_json(const nlohmann::json& j);

nlohmann::json factorization_to_json(const Factorization& f);
Factorization factorization_from_json(const nlohmann::json& j);

nlohmann::json words_to_json(const WordList& wl);
WordList words_from_json(const nlohmann::json& j);

nlohmann::json schedule_to_json(const Schedule& s);
Schedule schedule_from_json(const nlohmann::json& j);

nlohmann::json metrics_to_json(const UsageMetrics& m);
nlohmann::json report_to_json(const ExchangeReport& r);
nlohmann::json relations_to_json(const RelationReport& r);
nlohmann::json audit_to_json(const LowerBoundAudit& a);

GroupSpec group_spec_from_json(const nlohmann::json& j);
CosetSpec coset_spec_from_json(const nlohmann::json& j);

/// One line per edge; vertices carry their labels when present.
std::string export_dot(const Digraph& g);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);
nlohmann::json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const nlohmann::json& j);

/// FNV-1a 64-bit digest, for the run manifest.
std::string fnv1a_hex(const std::string& bytes);

struct RunManifest {
  std::string command_line;
  std::vector<std::pair<std::string, std::string>> inputs;  // path, digest
  std::vector<std::string> outputs;
  std::string summary;
  long long wall_ms = 0;
};

void write_manifest(const std::string& path, const RunManifest& manifest);

}  // namespace spanfact
