#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "irrstrength/error.hpp"
#include "irrstrength/graph.hpp"

namespace irrstrength {

using Label = std::int64_t;
using Weight = std::int64_t;

// Positive edge labels aligned with a graph's canonical edge list.
class EdgeLabeling {
 public:
  EdgeLabeling() = default;

  explicit EdgeLabeling(std::vector<Label> labels) : labels_(std::move(labels)) {
    for (std::size_t i = 0; i < labels_.size(); ++i) {
      if (labels_[i] < 1) {
        throw domain_error("label " + std::to_string(labels_[i]) +
                           " at edge " + std::to_string(i) + " is not positive");
      }
      max_label_ = std::max(max_label_, labels_[i]);
    }
  }

  std::span<const Label> labels() const noexcept { return labels_; }
  Label operator[](std::size_t i) const { return labels_[i]; }
  std::size_t size() const noexcept { return labels_.size(); }
  // k: the largest label used (0 for an empty labeling).
  Label max_label() const noexcept { return max_label_; }

  friend bool operator==(const EdgeLabeling& a, const EdgeLabeling& b) {
    return a.labels_ == b.labels_;
  }

 private:
  std::vector<Label> labels_;
  Label max_label_ = 0;
};

struct WeightProfile {
  std::vector<Weight> weights;
  std::vector<Weight> residues;  // weights mod order, in [0, order)

  friend bool operator==(const WeightProfile&, const WeightProfile&) = default;
};

enum class LabelingMode { irregular, modular };

inline std::string_view to_string(LabelingMode m) {
  return m == LabelingMode::irregular ? "irregular" : "modular";
}

inline LabelingMode parse_labeling_mode(std::string_view s) {
  if (s == "irregular") return LabelingMode::irregular;
  if (s == "modular") return LabelingMode::modular;
  throw domain_error("unknown labeling mode '" + std::string(s) + "'");
}

inline void check_aligned(const Graph& g, const EdgeLabeling& f) {
  if (f.size() != g.size()) {
    throw domain_error("labeling has " + std::to_string(f.size()) +
                       " labels but graph has " + std::to_string(g.size()) +
                       " edges");
  }
}

inline WeightProfile vertex_weights(const Graph& g, const EdgeLabeling& f) {
  check_aligned(g, f);
  WeightProfile p;
  p.weights.assign(g.order(), 0);
  const auto edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    p.weights[edges[i].u] += f[i];
    p.weights[edges[i].v] += f[i];
  }
  p.residues.resize(g.order());
  const auto order = static_cast<Weight>(g.order());
  for (std::size_t v = 0; v < g.order(); ++v) {
    p.residues[v] = order == 0 ? 0 : p.weights[v] % order;
  }
  return p;
}

// Outcome of a verifier. On failure `collision` names the first pair of
// vertices sharing a weight (or residue): the smallest vertex v whose value
// was already taken, together with the earlier vertex that took it.
struct Verdict {
  std::optional<std::pair<Vertex, Vertex>> collision;

  bool ok() const noexcept { return !collision.has_value(); }
  explicit operator bool() const noexcept { return ok(); }
};

namespace detail {

inline Verdict first_collision(std::span<const Weight> values) {
  if (values.empty()) return Verdict{};
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  const auto span = static_cast<std::uint64_t>(*hi - *lo);

  if (span <= 8 * static_cast<std::uint64_t>(values.size()) + 64) {
    constexpr Vertex kUnset = ~Vertex{0};
    std::vector<Vertex> holder(span + 1, kUnset);
    for (Vertex v = 0; v < values.size(); ++v) {
      auto& slot = holder[static_cast<std::size_t>(values[v] - *lo)];
      if (slot != kUnset) return Verdict{std::pair{slot, v}};
      slot = v;
    }
    return Verdict{};
  }

  // Sparse values: sort (value, vertex). Within a run of equal values the
  // first two entries are the earliest holder and its first repeat; keep
  // the run whose repeat comes first.
  std::vector<std::pair<Weight, Vertex>> order;
  order.reserve(values.size());
  for (Vertex v = 0; v < values.size(); ++v) order.emplace_back(values[v], v);
  std::sort(order.begin(), order.end());
  std::optional<std::pair<Vertex, Vertex>> best;
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (order[i].first != order[i - 1].first) continue;
    if (i >= 2 && order[i - 2].first == order[i].first) continue;
    if (!best || order[i].second < best->second) {
      best = std::pair{order[i - 1].second, order[i].second};
    }
  }
  return Verdict{best};
}

}  // namespace detail

inline Verdict verify_irregular(const Graph& g, const EdgeLabeling& f) {
  return detail::first_collision(vertex_weights(g, f).weights);
}

// Residues are confined to [0, order), so pairwise distinctness is the same
// as hitting every residue exactly once.
inline Verdict verify_modular(const Graph& g, const EdgeLabeling& f) {
  return detail::first_collision(vertex_weights(g, f).residues);
}

inline Verdict verify(const Graph& g, const EdgeLabeling& f, LabelingMode mode) {
  return mode == LabelingMode::irregular ? verify_irregular(g, f)
                                         : verify_modular(g, f);
}

}  // namespace irrstrength
