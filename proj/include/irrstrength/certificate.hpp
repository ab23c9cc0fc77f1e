#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "irrstrength/error.hpp"
#include "irrstrength/graph.hpp"
#include "irrstrength/labeling.hpp"

namespace irrstrength {

// A labeling together with its weights, enough to re-check a strength claim
// without trusting whoever produced it.
struct Certificate {
  Graph graph;
  EdgeLabeling labeling;
  WeightProfile profile;
  LabelingMode mode = LabelingMode::irregular;

  friend bool operator==(const Certificate& a, const Certificate& b) {
    return a.graph == b.graph && a.labeling == b.labeling &&
           a.profile == b.profile && a.mode == b.mode;
  }
};

inline Certificate make_certificate(Graph g, EdgeLabeling f, LabelingMode mode) {
  auto profile = vertex_weights(g, f);
  return Certificate{std::move(g), std::move(f), std::move(profile), mode};
}

// The stored profile equals the one recomputed from graph and labeling.
inline bool profile_matches(const Certificate& c) {
  return c.labeling.size() == c.graph.size() &&
         vertex_weights(c.graph, c.labeling) == c.profile;
}

inline nlohmann::ordered_json to_json_value(const Certificate& c) {
  nlohmann::ordered_json j;
  j["order"] = c.graph.order();
  auto edges = nlohmann::ordered_json::array();
  for (const auto& e : c.graph.edges()) edges.push_back({e.u, e.v});
  j["edges"] = std::move(edges);
  j["labels"] = std::vector<Label>(c.labeling.labels().begin(),
                                   c.labeling.labels().end());
  j["weights"] = c.profile.weights;
  j["residues"] = c.profile.residues;
  j["k"] = c.labeling.max_label();
  j["mode"] = to_string(c.mode);
  return j;
}

// Compact single-line JSON with keys in the fixed order
// order, edges, labels, weights, residues, k, mode.
inline std::string to_json(const Certificate& c) {
  return to_json_value(c).dump();
}

namespace detail {

template <typename Json>
const Json& require(const Json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) {
    throw format_error(std::string("certificate: missing field '") + key + "'");
  }
  return *it;
}

template <typename Json>
std::vector<std::int64_t> int_array(const Json& j, const char* key) {
  const auto& a = require(j, key);
  if (!a.is_array()) {
    throw format_error(std::string("certificate: '") + key +
                       "' must be an array");
  }
  std::vector<std::int64_t> out;
  out.reserve(a.size());
  for (const auto& x : a) {
    if (!x.is_number_integer()) {
      throw format_error(std::string("certificate: '") + key +
                         "' must hold integers");
    }
    out.push_back(x.template get<std::int64_t>());
  }
  return out;
}

}  // namespace detail

inline Certificate certificate_from_json(const nlohmann::ordered_json& j) {
  using detail::int_array;
  using detail::require;
  if (!j.is_object()) throw format_error("certificate: expected a JSON object");

  const auto& order_j = require(j, "order");
  if (!order_j.is_number_integer() || order_j.get<std::int64_t>() < 0 ||
      order_j.get<std::uint64_t>() > kMaxOrder) {
    throw format_error("certificate: order out of range");
  }
  const auto order = order_j.get<std::size_t>();

  const auto& edges_j = require(j, "edges");
  if (!edges_j.is_array()) throw format_error("certificate: 'edges' must be an array");
  std::vector<Edge> edges;
  edges.reserve(edges_j.size());
  for (const auto& e : edges_j) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer()) {
      throw format_error("certificate: each edge must be [u, v]");
    }
    auto u = e[0].get<std::int64_t>();
    auto v = e[1].get<std::int64_t>();
    if (u < 0 || v < 0 || u >= v || static_cast<std::uint64_t>(v) >= order) {
      throw format_error("certificate: bad edge [" + std::to_string(u) + "," +
                         std::to_string(v) + "]");
    }
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }
  const auto input_edges = edges;

  Graph g;
  try {
    g = Graph(order, std::move(edges));
  } catch (const domain_error& e) {
    throw format_error(std::string("certificate: ") + e.what());
  }
  if (!std::equal(input_edges.begin(), input_edges.end(), g.edges().begin())) {
    throw format_error("certificate: edges are not in canonical order");
  }

  auto labels = int_array(j, "labels");
  if (labels.size() != g.size()) {
    throw format_error("certificate: labels not aligned with edges");
  }
  for (auto l : labels) {
    if (l < 1 || l > kMaxLabel) throw format_error("certificate: label out of range");
  }
  auto weights = int_array(j, "weights");
  auto residues = int_array(j, "residues");
  if (weights.size() != order || residues.size() != order) {
    throw format_error("certificate: weights/residues not aligned with vertices");
  }

  const auto& k_j = require(j, "k");
  if (!k_j.is_number_integer()) throw format_error("certificate: 'k' must be an integer");
  EdgeLabeling f(std::move(labels));
  if (k_j.get<std::int64_t>() != f.max_label()) {
    throw format_error("certificate: k does not equal the largest label");
  }

  const auto& mode_j = require(j, "mode");
  if (!mode_j.is_string()) throw format_error("certificate: 'mode' must be a string");
  LabelingMode mode;
  try {
    mode = parse_labeling_mode(mode_j.get<std::string>());
  } catch (const domain_error& e) {
    throw format_error(std::string("certificate: ") + e.what());
  }

  return Certificate{std::move(g), std::move(f),
                     WeightProfile{std::move(weights), std::move(residues)}, mode};
}

inline Certificate parse_certificate(std::string_view text) {
  nlohmann::ordered_json j;
  try {
    j = nlohmann::ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw format_error(std::string("certificate: ") + e.what());
  }
  return certificate_from_json(j);
}

// Graphviz rendering: edge labels become edge `label` attributes and vertex
// weights become vertex labels.
inline void write_dot(std::ostream& os, const Certificate& c) {
  os << "graph labeling {\n";
  for (Vertex v = 0; v < c.graph.order(); ++v) {
    os << "  " << v << " [label=\"" << c.profile.weights[v] << "\"];\n";
  }
  const auto edges = c.graph.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    os << "  " << edges[i].u << " -- " << edges[i].v << " [label=\""
       << c.labeling[i] << "\"];\n";
  }
  os << "}\n";
}

}  // namespace irrstrength
