#pragma once

// JSON schemas shared by the CLI and tests: presentations and coset-table
// subgroups.  Field order is fixed (ordered_json) so identical inputs give
// byte-identical output.

#include <string>
#include <vector>

#include <json.hpp>

#include "cycpres/io.hpp"
#include "cycpres/present.hpp"
#include "cycpres/rescert.hpp"

namespace cycpres {

using json = nlohmann::ordered_json;

inline json presentation_to_json(const Presentation& p) {
  NameTable names = p.labels.empty()
                        ? NameTable::default_names(p.num_generators)
                        : NameTable(p.labels);
  json j;
  j["generators"] = names.names();
  json rels = json::array();
  for (const auto& r : p.relators) rels.push_back(print_word(r, names));
  j["relators"] = rels;
  return j;
}

inline Presentation presentation_from_json(const json& j) {
  Presentation p;
  std::vector<std::string> gens = j.at("generators").get<std::vector<std::string>>();
  p.num_generators = static_cast<int>(gens.size());
  p.labels = gens;
  NameTable names(gens);
  for (const auto& r : j.at("relators"))
    p.relators.push_back(parse_word(r.get<std::string>(), names));
  p.validate();
  return p;
}

inline json subgroup_to_json(const FiniteIndexSubgroup& h,
                             const NameTable& names) {
  json j;
  j["index"] = h.index;
  json tables = json::object();
  for (int g = 0; g < h.rank; ++g)
    tables[names.name(g)] = h.tables[static_cast<std::size_t>(g)];
  j["tables"] = tables;
  return j;
}

inline FiniteIndexSubgroup subgroup_from_json(const json& j,
                                              const NameTable& names) {
  FiniteIndexSubgroup h;
  h.index = j.at("index").get<int>();
  h.rank = names.rank();
  h.tables.resize(static_cast<std::size_t>(h.rank));
  for (const auto& [name, table] : j.at("tables").items())
    h.tables[static_cast<std::size_t>(names.index(name))] =
        table.get<std::vector<int>>();
  h.validate();
  return h;
}

}  // namespace cycpres
