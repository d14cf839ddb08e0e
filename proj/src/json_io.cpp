#include "spanfact/json_io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace spanfact {

using nlohmann::json;

namespace {

json expect(const json& j, const char* key) {
  if (!j.contains(key))
    throw UsageError(std::string("missing key '") + key + "'");
  return j.at(key);
}

}  // namespace

json graph_to_json(const Digraph& g) {
  json j;
  j["n"] = g.vertex_count();
  json edges = json::array();
  for (const Edge& e : g.edges()) edges.push_back(json::array({e.tail, e.head}));
  j["edges"] = std::move(edges);
  if (g.vertex_labels()) j["vertex_labels"] = *g.vertex_labels();
  return j;
}

Digraph graph_from_json(const json& j) {
  const int n = expect(j, "n").get<int>();
  std::vector<Edge> edges;
  for (const auto& e : expect(j, "edges")) {
    if (!e.is_array() || e.size() != 2)
      throw UsageError("edges must be [tail, head] pairs");
    edges.push_back(Edge{e[0].get<int>(), e[1].get<int>()});
  }
  std::optional<std::vector<std::string>> labels;
  if (j.contains("vertex_labels"))
    labels = j.at("vertex_labels").get<std::vector<std::string>>();
  return Digraph(n, std::move(edges), std::move(labels));
}

json factorization_to_json(const Factorization& f) {
  json j;
  j["d"] = f.d;
  j["succ"] = f.succ;
  return j;
}

Factorization factorization_from_json(const json& j) {
  const int d = expect(j, "d").get<int>();
  auto succ = expect(j, "succ").get<std::vector<std::vector<int>>>();
  if (static_cast<int>(succ.size()) != d)
    throw UsageError("succ row count does not match d");
  return make_factorization(std::move(succ));
}

json words_to_json(const WordList& wl) {
  json j;
  j["d"] = wl.d;
  json words = json::array();
  for (const Word& w : wl.words) words.push_back(w.letters);
  j["words"] = std::move(words);
  return j;
}

WordList words_from_json(const json& j) {
  WordList wl;
  wl.d = expect(j, "d").get<int>();
  for (const auto& w : expect(j, "words"))
    wl.words.push_back(Word{w.get<std::vector<int>>()});
  validate_word_list(wl);
  return wl;
}

json schedule_to_json(const Schedule& s) {
  json j = json::array();
  for (const auto& [key, time] : s.entries) {
    json entry;
    entry["word"] = key.first;
    entry["pos"] = key.second;
    entry["time"] = time;
    j.push_back(std::move(entry));
  }
  return j;
}

Schedule schedule_from_json(const json& j) {
  Schedule s;
  for (const auto& entry : j) {
    const int word = expect(entry, "word").get<int>();
    const int pos = expect(entry, "pos").get<int>();
    const int time = expect(entry, "time").get<int>();
    if (!s.entries.emplace(std::pair{word, pos}, time).second)
      throw UsageError("duplicate schedule entry for word " +
                       std::to_string(word) + " position " +
                       std::to_string(pos));
  }
  return s;
}

json metrics_to_json(const UsageMetrics& m) {
  json j;
  j["counts"] = m.counts;
  j["total"] = m.total;
  j["max"] = m.max_count;
  j["avg_ceiling"] = m.avg_ceiling;
  j["theta"] = m.theta;
  j["balanced"] = m.balanced;
  j["short"] = m.short_factorization;
  j["optimal"] = m.optimal;
  j["ordered_chain"] = m.ordered_chain;
  return j;
}

json report_to_json(const ExchangeReport& r) {
  json j;
  j["packets_delivered"] = r.packets_delivered;
  j["makespan"] = r.makespan_observed;
  j["max_link_load"] = r.max_link_load;
  j["destinations_distinct"] = r.destinations_distinct;
  json conflicts = json::array();
  for (const ConflictRecord& c : r.conflicts) {
    json entry;
    entry["tail"] = c.edge.tail;
    entry["head"] = c.edge.head;
    entry["time"] = c.time;
    entry["packet_a"] = json::array({c.packet_a.first, c.packet_a.second});
    entry["packet_b"] = json::array({c.packet_b.first, c.packet_b.second});
    conflicts.push_back(std::move(entry));
  }
  j["conflicts"] = std::move(conflicts);
  return j;
}

json relations_to_json(const RelationReport& r) {
  json j;
  j["q"] = r.q;
  j["g_uses_r_sign"] = r.g_uses_r_sign;
  j["gamma_form"] = r.gamma_form;
  j["representative_family"] = r.representative_family;
  j["all_adopted_pass"] = r.all_adopted_pass;
  json rels = json::array();
  for (const RelationResult& rr : r.relations) {
    json entry;
    entry["relation"] = rr.name;
    entry["status"] = rr.pass ? "pass" : "fail";
    entry["adopted"] = rr.adopted;
    if (!rr.counterexample.empty()) entry["counterexample"] = rr.counterexample;
    rels.push_back(std::move(entry));
  }
  j["relations"] = std::move(rels);
  return j;
}

json audit_to_json(const LowerBoundAudit& a) {
  json j;
  j["distance_sum_bound"] = a.distance_sum_bound;
  j["diam2_closed_form"] = a.diam2_closed_form;
  j["approx_8q_over_3"] = a.approx_8q_over_3;
  j["approx_matches_exact"] = a.approx_matches_exact;
  return j;
}

namespace {

std::vector<std::pair<std::string, Perm>> named_perms_from_json(
    const json& j) {
  std::vector<std::pair<std::string, Perm>> out;
  for (const auto& [name, images] : j.items()) {
    Perm p{images.get<std::vector<int>>()};
    validate_perm(p);
    out.emplace_back(name, std::move(p));
  }
  return out;
}

}  // namespace

GroupSpec group_spec_from_json(const json& j) {
  GroupSpec gs;
  gs.degree = expect(j, "degree").get<int>();
  const auto named = named_perms_from_json(expect(j, "generators"));
  const auto delta_names = expect(j, "delta").get<std::vector<std::string>>();
  for (const std::string& name : delta_names) {
    const auto it =
        std::find_if(named.begin(), named.end(),
                     [&](const auto& entry) { return entry.first == name; });
    if (it == named.end())
      throw UsageError("delta name '" + name + "' is not a generator");
    gs.generators.push_back(*it);
  }
  if (j.contains("element_cap"))
    gs.element_cap = j.at("element_cap").get<long long>();
  for (const auto& [name, p] : gs.generators)
    if (p.degree() != gs.degree)
      throw UsageError("generator '" + name + "' degree mismatch");
  return gs;
}

CosetSpec coset_spec_from_json(const json& j) {
  CosetSpec cs;
  cs.group.degree = expect(j, "degree").get<int>();
  cs.group.generators = named_perms_from_json(expect(j, "generators"));
  if (!j.contains("subgroup"))
    throw UsageError("coset spec needs a 'subgroup' object");
  cs.subgroup_generators = named_perms_from_json(j.at("subgroup"));
  const auto delta_names = expect(j, "delta").get<std::vector<std::string>>();
  for (const std::string& name : delta_names) {
    const auto it = std::find_if(
        cs.group.generators.begin(), cs.group.generators.end(),
        [&](const auto& entry) { return entry.first == name; });
    if (it == cs.group.generators.end())
      throw UsageError("delta name '" + name + "' is not a generator");
    cs.delta.push_back(*it);
  }
  if (j.contains("element_cap")) {
    cs.element_cap = j.at("element_cap").get<long long>();
    cs.group.element_cap = cs.element_cap;
  }
  for (const auto& [name, p] : cs.group.generators)
    if (p.degree() != cs.group.degree)
      throw UsageError("generator '" + name + "' degree mismatch");
  for (const auto& [name, p] : cs.subgroup_generators)
    if (p.degree() != cs.group.degree)
      throw UsageError("subgroup generator '" + name + "' degree mismatch");
  // Subgroup generators join the ambient closure so Gamma = <all named>.
  for (const auto& entry : cs.subgroup_generators)
    cs.group.generators.push_back(entry);
  return cs;
}

std::string export_dot(const Digraph& g) {
  std::ostringstream out;
  out << "digraph G {\n";
  if (g.vertex_labels()) {
    for (int v = 0; v < g.vertex_count(); ++v)
      out << "  " << v << " [label=\"" << (*g.vertex_labels())[v] << "\"];\n";
  }
  for (const Edge& e : g.edges())
    out << "  " << e.tail << " -> " << e.head << ";\n";
  out << "}\n";
  return out.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write '" + path + "'");
  out << content;
}

json read_json_file(const std::string& path) {
  const std::string text = read_text_file(path);
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw UsageError("'" + path + "' is not valid JSON");
  return j;
}

void write_json_file(const std::string& path, const json& j) {
  write_text_file(path, j.dump(2) + "\n");
}

std::string fnv1a_hex(const std::string& bytes) {
  unsigned long long hash = 14695981039346656037ULL;
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 1099511628211ULL;
  }
  char buffer[17];
  std::snprintf(buffer, sizeof(buffer), "%016llx", hash);
  return buffer;
}

void write_manifest(const std::string& path, const RunManifest& manifest) {
  json j;
  j["command"] = manifest.command_line;
  json inputs = json::object();
  for (const auto& [file, digest] : manifest.inputs) inputs[file] = digest;
  j["inputs"] = std::move(inputs);
  j["outputs"] = manifest.outputs;
  j["summary"] = manifest.summary;
  j["wall_ms"] = manifest.wall_ms;
  write_json_file(path, j);
}

}  // namespace spanfact
