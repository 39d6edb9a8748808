#include "updown/json_io.hpp"

#include <json.hpp>

#include "updown/errors.hpp"

namespace updown::io {

namespace {

using json = nlohmann::ordered_json;

std::string element_path(const std::string& base, std::size_t index) {
  return base + "/" + std::to_string(index);
}

std::uint64_t require_positive_int(const json& node, const std::string& path) {
  if (!node.is_number_unsigned() || node.get<std::uint64_t>() == 0) {
    throw SchemaError(path, "expected a positive integer");
  }
  return node.get<std::uint64_t>();
}

ObjectId require_id(const json& node, const std::string& path) {
  if (!node.is_array() || node.size() != 2 || !node[0].is_number_unsigned() ||
      !node[1].is_number_unsigned()) {
    throw SchemaError(path, "expected [rank, index] with nonnegative integers");
  }
  return ObjectId{node[0].get<std::size_t>(), node[1].get<std::size_t>()};
}

void reject_unknown_keys(const json& node, const std::string& path,
                         std::initializer_list<const char*> allowed) {
  for (const auto& [key, value] : node.items()) {
    bool known = false;
    for (const char* name : allowed) known = known || key == name;
    if (!known) throw SchemaError(path + "/" + key, "unknown key");
  }
}

}  // namespace

std::string export_json(const UpdownTable& table) {
  json doc;
  doc["name"] = table.name();
  json ranks = json::array();
  for (std::size_t r = 0; r <= table.max_rank(); ++r) {
    json level = json::array();
    for (const auto& rec : table.rank(r)) {
      level.push_back(json{{"label", rec.label}, {"aut", rec.aut_order}});
    }
    ranks.push_back(std::move(level));
  }
  doc["ranks"] = std::move(ranks);
  json edges = json::array();
  for (std::size_t r = 0; r <= table.max_rank(); ++r) {
    for (const auto& rec : table.rank(r)) {
      for (const auto& e : table.covers(rec.id)) {
        edges.push_back(json{{"src", {e.src.rank, e.src.index}},
                             {"dst", {e.dst.rank, e.dst.index}},
                             {"hom", e.hom_size}});
      }
    }
  }
  doc["edges"] = std::move(edges);
  return doc.dump(2) + "\n";
}

UpdownTable import_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& err) {
    throw SchemaError("", std::string("invalid JSON: ") + err.what());
  }
  if (!doc.is_object()) throw SchemaError("", "document must be an object");
  reject_unknown_keys(doc, "", {"name", "ranks", "edges"});
  if (!doc.contains("name") || !doc["name"].is_string()) {
    throw SchemaError("/name", "expected a string");
  }
  if (!doc.contains("ranks") || !doc["ranks"].is_array()) {
    throw SchemaError("/ranks", "expected an array of rank lists");
  }
  if (!doc.contains("edges") || !doc["edges"].is_array()) {
    throw SchemaError("/edges", "expected an array of edges");
  }

  std::vector<std::vector<ObjectSpec>> rank_specs;
  const json& ranks = doc["ranks"];
  if (ranks.empty()) throw SchemaError("/ranks", "at least rank 0 is required");
  for (std::size_t r = 0; r < ranks.size(); ++r) {
    const std::string rank_path = element_path("/ranks", r);
    if (!ranks[r].is_array()) throw SchemaError(rank_path, "expected an array of objects");
    std::vector<ObjectSpec> level;
    for (std::size_t i = 0; i < ranks[r].size(); ++i) {
      const std::string path = element_path(rank_path, i);
      const json& node = ranks[r][i];
      if (!node.is_object()) throw SchemaError(path, "expected an object record");
      reject_unknown_keys(node, path, {"label", "aut"});
      if (!node.contains("label") || !node["label"].is_string()) {
        throw SchemaError(path + "/label", "expected a string");
      }
      if (!node.contains("aut")) throw SchemaError(path + "/aut", "missing");
      level.push_back(ObjectSpec{node["label"].get<std::string>(),
                                 require_positive_int(node["aut"], path + "/aut")});
    }
    rank_specs.push_back(std::move(level));
  }

  std::vector<EdgeSpec> edge_specs;
  const json& edges = doc["edges"];
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const std::string path = element_path("/edges", k);
    const json& node = edges[k];
    if (!node.is_object()) throw SchemaError(path, "expected an edge record");
    reject_unknown_keys(node, path, {"src", "dst", "hom"});
    if (!node.contains("src") || !node.contains("dst") || !node.contains("hom")) {
      throw SchemaError(path, "edge needs src, dst and hom");
    }
    edge_specs.push_back(EdgeSpec{require_id(node["src"], path + "/src"),
                                  require_id(node["dst"], path + "/dst"),
                                  require_positive_int(node["hom"], path + "/hom")});
  }

  // Surface construction failures with the edge's JSON path where possible.
  for (std::size_t k = 0; k < edge_specs.size(); ++k) {
    const auto& e = edge_specs[k];
    if (e.src.rank >= rank_specs.size() || e.src.index >= rank_specs[e.src.rank].size()) {
      throw SchemaError(element_path("/edges", k) + "/src", "no such object");
    }
    if (e.dst.rank >= rank_specs.size() || e.dst.index >= rank_specs[e.dst.rank].size()) {
      throw SchemaError(element_path("/edges", k) + "/dst", "no such object");
    }
    if (e.dst.rank != e.src.rank + 1) {
      throw SchemaError(element_path("/edges", k), "edge must connect adjacent ranks");
    }
    const std::uint64_t aut_src = rank_specs[e.src.rank][e.src.index].aut_order;
    const std::uint64_t aut_dst = rank_specs[e.dst.rank][e.dst.index].aut_order;
    if (e.hom_size % aut_src != 0 || e.hom_size % aut_dst != 0) {
      throw SchemaError(element_path("/edges", k) + "/hom",
                        "hom size must be divisible by both endpoint aut orders");
    }
  }

  try {
    return build_table(doc["name"].get<std::string>(), std::move(rank_specs), edge_specs);
  } catch (const TableSpecError& err) {
    throw SchemaError("/edges", err.what());
  }
}

}  // namespace updown::io
