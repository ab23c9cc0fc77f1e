#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "irrstrength/error.hpp"

namespace irrstrength {

using Vertex = std::uint32_t;

// Input limits accepted by the readers. Weights stay below 2^41 with these.
inline constexpr std::size_t kMaxOrder = 1'000'000;
inline constexpr std::int64_t kMaxLabel = 1'000'000;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend constexpr bool operator==(const Edge&, const Edge&) = default;
  friend constexpr bool operator<(const Edge& a, const Edge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  }
};

// Simple undirected graph on vertices 0..order-1. The edge list is kept in
// canonical order (u < v, sorted lexicographically) and never changes after
// construction.
class Graph {
 public:
  Graph() = default;

  Graph(std::size_t order, std::vector<Edge> edges)
      : order_(order), edges_(std::move(edges)), degrees_(order, 0) {
    for (auto& e : edges_) {
      if (e.u == e.v) {
        throw domain_error("self-loop at vertex " + std::to_string(e.u));
      }
      if (e.u > e.v) std::swap(e.u, e.v);
      if (e.v >= order_) {
        throw domain_error("edge endpoint " + std::to_string(e.v) +
                           " out of range for order " + std::to_string(order_));
      }
    }
    if (!std::is_sorted(edges_.begin(), edges_.end())) {
      std::sort(edges_.begin(), edges_.end());
    }
    auto dup = std::adjacent_find(edges_.begin(), edges_.end());
    if (dup != edges_.end()) {
      throw domain_error("duplicate edge " + std::to_string(dup->u) + " " +
                         std::to_string(dup->v));
    }
    for (const auto& e : edges_) {
      ++degrees_[e.u];
      ++degrees_[e.v];
    }
  }

  std::size_t order() const noexcept { return order_; }
  std::size_t size() const noexcept { return edges_.size(); }
  std::span<const Edge> edges() const noexcept { return edges_; }
  std::size_t degree(Vertex v) const { return degrees_.at(v); }
  std::span<const std::size_t> degrees() const noexcept { return degrees_; }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.order_ == b.order_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t order_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> degrees_;
};

struct BookParams {
  std::size_t n = 1;  // number of triangular pages
};

// Triangular book B_n: n triangles sharing the spine ab.
// Vertex 0 is a, vertex 1 is b, vertex i+1 is the apex c_i.
inline Graph make_triangular_book(BookParams params) {
  const std::size_t n = params.n;
  if (n == 0) throw domain_error("triangular book needs n >= 1");
  if (n + 2 > kMaxOrder) throw domain_error("triangular book too large");
  std::vector<Edge> edges;
  edges.reserve(2 * n + 1);
  edges.push_back({0, 1});
  for (Vertex centre : {Vertex{0}, Vertex{1}}) {
    for (std::size_t i = 1; i <= n; ++i) {
      edges.push_back({centre, static_cast<Vertex>(i + 1)});
    }
  }
  return Graph(n + 2, std::move(edges));
}

enum class Family { path, cycle, star };

// `size` is the vertex count for paths and cycles and the leaf count for stars.
inline Graph make_family(Family kind, std::size_t size) {
  std::vector<Edge> edges;
  switch (kind) {
    case Family::path:
      if (size < 2) throw domain_error("path needs at least 2 vertices");
      for (std::size_t i = 0; i + 1 < size; ++i) {
        edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(i + 1)});
      }
      return Graph(size, std::move(edges));
    case Family::cycle:
      if (size < 3) throw domain_error("cycle needs at least 3 vertices");
      for (std::size_t i = 0; i < size; ++i) {
        edges.push_back(
            {static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % size)});
      }
      return Graph(size, std::move(edges));
    case Family::star:
      if (size < 2) throw domain_error("star needs at least 2 leaves");
      for (std::size_t i = 1; i <= size; ++i) {
        edges.push_back({0, static_cast<Vertex>(i)});
      }
      return Graph(size + 1, std::move(edges));
  }
  throw domain_error("unknown family");
}

inline Family parse_family(std::string_view name) {
  if (name == "path") return Family::path;
  if (name == "cycle") return Family::cycle;
  if (name == "star") return Family::star;
  throw domain_error("unknown family '" + std::string(name) + "'");
}

struct DegreeHistogram {
  std::map<std::size_t, std::size_t> counts;  // degree -> number of vertices
  std::size_t max_degree = 0;

  friend bool operator==(const DegreeHistogram&,
                         const DegreeHistogram&) = default;
};

inline DegreeHistogram degree_histogram(const Graph& g) {
  DegreeHistogram h;
  for (auto d : g.degrees()) {
    ++h.counts[d];
    h.max_degree = std::max(h.max_degree, d);
  }
  return h;
}

// Sizes of the connected components, in order of their smallest vertex.
inline std::vector<std::size_t> component_sizes(const Graph& g) {
  std::vector<Vertex> parent(g.order());
  std::iota(parent.begin(), parent.end(), Vertex{0});
  auto find = [&](Vertex x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (const auto& e : g.edges()) {
    auto ru = find(e.u);
    auto rv = find(e.v);
    if (ru != rv) parent[std::max(ru, rv)] = std::min(ru, rv);
  }
  std::map<Vertex, std::size_t> sizes;
  for (Vertex v = 0; v < g.order(); ++v) ++sizes[find(v)];
  std::vector<std::size_t> out;
  out.reserve(sizes.size());
  for (const auto& [root, count] : sizes) out.push_back(count);
  return out;
}

// True when some component is an isolated vertex or a single edge. Such
// graphs admit no irregular assignment.
inline bool has_small_component(const Graph& g) {
  auto sizes = component_sizes(g);
  return std::any_of(sizes.begin(), sizes.end(),
                     [](std::size_t s) { return s <= 2; });
}

// Edge-list text format: "order m" followed by m lines "u v" with u < v.
inline void write_edge_list(std::ostream& os, const Graph& g) {
  os << g.order() << ' ' << g.size() << '\n';
  for (const auto& e : g.edges()) os << e.u << ' ' << e.v << '\n';
}

inline Graph read_edge_list(std::istream& is) {
  auto next_line = [&](std::string& line) {
    while (std::getline(is, line)) {
      if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
  };
  std::string line;
  if (!next_line(line)) throw format_error("edge list: missing header line");
  std::istringstream header(line);
  long long order = -1;
  long long m = -1;
  std::string rest;
  if (!(header >> order >> m) || (header >> rest)) {
    throw format_error("edge list: header must be 'order m'");
  }
  if (order < 0 || static_cast<unsigned long long>(order) > kMaxOrder) {
    throw format_error("edge list: order out of range");
  }
  const auto max_edges =
      static_cast<long long>(order) * (static_cast<long long>(order) - 1) / 2;
  if (m < 0 || m > max_edges) {
    throw format_error("edge list: edge count out of range");
  }
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    if (!next_line(line)) {
      throw format_error("edge list: expected " + std::to_string(m) +
                         " edges, got " + std::to_string(i));
    }
    std::istringstream ls(line);
    long long u = -1;
    long long v = -1;
    if (!(ls >> u >> v) || (ls >> rest)) {
      throw format_error("edge list: malformed edge line '" + line + "'");
    }
    if (u < 0 || v < 0 || u >= v || v >= order) {
      throw format_error("edge list: bad edge '" + line + "'");
    }
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }
  if (next_line(line)) throw format_error("edge list: trailing content");
  try {
    return Graph(static_cast<std::size_t>(order), std::move(edges));
  } catch (const domain_error& e) {
    throw format_error(std::string("edge list: ") + e.what());
  }
}

}  // namespace irrstrength
