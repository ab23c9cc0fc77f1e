#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include <json.hpp>

#include "irrstrength/bounds.hpp"
#include "irrstrength/certificate.hpp"
#include "irrstrength/error.hpp"
#include "irrstrength/graph.hpp"
#include "irrstrength/labeling.hpp"

namespace irrstrength {

enum class StrengthMode { s, ms };

inline std::string_view to_string(StrengthMode m) {
  return m == StrengthMode::s ? "s" : "ms";
}

inline StrengthMode parse_strength_mode(std::string_view s) {
  if (s == "s") return StrengthMode::s;
  if (s == "ms") return StrengthMode::ms;
  throw domain_error("unknown strength mode '" + std::string(s) + "'");
}

constexpr LabelingMode labeling_mode(StrengthMode m) {
  return m == StrengthMode::s ? LabelingMode::irregular : LabelingMode::modular;
}

struct SolverConfig {
  Label k_max = 16;
  unsigned threads = 1;
  // Also count every valid labeling at the minimal k.
  bool count_solutions = false;
};

struct SearchStats {
  std::uint64_t nodes = 0;  // label assignments tried, summed over all k
  double seconds = 0.0;
};

enum class Outcome { finite, infinite, unknown };

struct StrengthResult {
  StrengthMode mode = StrengthMode::s;
  Outcome outcome = Outcome::unknown;
  // Minimal k for finite outcomes, the search ceiling for unknown ones.
  Label k = 0;
  std::optional<Certificate> certificate;
  std::optional<std::uint64_t> solutions;
  std::string reason;
  SearchStats stats;
};

namespace detail {

// Depth-first search over edge labels in canonical edge order. A vertex is
// finalized when its last incident edge receives a label; its weight (or
// residue) must then differ from every finalized vertex so far.
class LabelSearch {
 public:
  LabelSearch(const Graph& g, LabelingMode mode, Label k)
      : g_(g), mode_(mode), k_(k) {
    const auto edges = g.edges();
    closes_.resize(edges.size());
    std::vector<std::size_t> last(g.order(), std::numeric_limits<std::size_t>::max());
    for (std::size_t i = 0; i < edges.size(); ++i) {
      last[edges[i].u] = i;
      last[edges[i].v] = i;
    }
    for (Vertex v = 0; v < g.order(); ++v) {
      if (last[v] == std::numeric_limits<std::size_t>::max()) {
        isolated_.push_back(v);
      } else {
        closes_[last[v]].push_back(v);
      }
    }
    const auto max_degree = degree_histogram(g).max_degree;
    key_space_ = mode == LabelingMode::modular
                     ? g.order()
                     : static_cast<std::size_t>(max_degree) *
                               static_cast<std::size_t>(k) + 1;
  }

  struct Run {
    std::optional<std::vector<Label>> first;
    std::uint64_t solutions = 0;
    std::uint64_t nodes = 0;
  };

  // Explores the subtree where edge 0 carries `first_label`. Stops at the
  // first solution unless `count_all`; gives up early once `cancel` says a
  // smaller first label already succeeded.
  Run run(Label first_label, bool count_all,
          const std::atomic<Label>* cancel = nullptr) {
    Run r;
    if (g_.size() == 0) return r;
    labels_.assign(g_.size(), 0);
    weights_.assign(g_.order(), 0);
    used_.assign(key_space_, 0);
    for (auto v : isolated_) {
      if (!claim(v)) return r;
    }
    first_label_ = first_label;
    cancel_ = cancel;
    count_all_ = count_all;
    run_ = &r;
    assign(0, first_label);
    run_ = nullptr;
    return r;
  }

 private:
  std::size_t key(Vertex v) const {
    const auto w = weights_[v];
    return mode_ == LabelingMode::modular
               ? static_cast<std::size_t>(w % static_cast<Weight>(g_.order()))
               : static_cast<std::size_t>(w);
  }

  bool claim(Vertex v) {
    auto& slot = used_[key(v)];
    if (slot) return false;
    slot = 1;
    return true;
  }

  void release(Vertex v) { used_[key(v)] = 0; }

  // Returns true when the search should stop.
  bool assign(std::size_t edge, Label label) {
    ++run_->nodes;
    const auto& e = g_.edges()[edge];
    labels_[edge] = label;
    weights_[e.u] += label;
    weights_[e.v] += label;

    const auto& closing = closes_[edge];
    std::size_t claimed = 0;
    bool feasible = true;
    for (; claimed < closing.size(); ++claimed) {
      if (!claim(closing[claimed])) {
        feasible = false;
        break;
      }
    }

    bool stop = false;
    if (feasible) {
      if (edge + 1 == g_.size()) {
        ++run_->solutions;
        if (!run_->first) run_->first = labels_;
        stop = !count_all_;
      } else if (cancel_ == nullptr || cancel_->load(std::memory_order_relaxed) >= first_label_) {
        for (Label next = 1; next <= k_ && !stop; ++next) {
          stop = assign(edge + 1, next);
        }
      } else {
        stop = true;
      }
    }

    for (std::size_t i = 0; i < claimed; ++i) release(closing[i]);
    weights_[e.u] -= label;
    weights_[e.v] -= label;
    return stop;
  }

  const Graph& g_;
  LabelingMode mode_;
  Label k_;
  std::vector<std::vector<Vertex>> closes_;
  std::vector<Vertex> isolated_;
  std::size_t key_space_ = 0;

  std::vector<Label> labels_;
  std::vector<Weight> weights_;
  std::vector<std::uint8_t> used_;
  Label first_label_ = 1;
  const std::atomic<Label>* cancel_ = nullptr;
  bool count_all_ = false;
  Run* run_ = nullptr;
};

struct Feasibility {
  std::optional<std::vector<Label>> labels;
  std::uint64_t solutions = 0;
  std::uint64_t nodes = 0;
};

// Is there a valid labeling with labels in 1..k? The reported labeling is
// the first one in canonical DFS order regardless of the thread count.
inline Feasibility search_at(const Graph& g, LabelingMode mode, Label k,
                             unsigned threads, bool count_all) {
  Feasibility out;
  const auto branches = static_cast<std::size_t>(k);
  std::vector<LabelSearch::Run> runs(branches);

  if (threads <= 1 || branches <= 1) {
    LabelSearch search(g, mode, k);
    for (Label first = 1; first <= k; ++first) {
      runs[first - 1] = search.run(first, count_all);
      out.nodes += runs[first - 1].nodes;
      if (runs[first - 1].first && !count_all) break;
    }
  } else {
    std::atomic<Label> best{std::numeric_limits<Label>::max()};
    std::atomic<Label> next{1};
    auto worker = [&] {
      LabelSearch search(g, mode, k);
      for (Label first = next++; first <= k; first = next++) {
        if (!count_all && best.load() < first) continue;
        runs[first - 1] = search.run(first, count_all, count_all ? nullptr : &best);
        if (runs[first - 1].first) {
          auto cur = best.load();
          while (first < cur && !best.compare_exchange_weak(cur, first)) {
          }
        }
      }
    };
    std::vector<std::jthread> pool;
    const auto n_workers = std::min<std::size_t>(threads, branches);
    pool.reserve(n_workers);
    for (std::size_t t = 0; t < n_workers; ++t) pool.emplace_back(worker);
    pool.clear();
    for (const auto& r : runs) out.nodes += r.nodes;
  }

  for (auto& r : runs) {
    out.solutions += r.solutions;
    if (!out.labels && r.first) out.labels = std::move(r.first);
  }
  return out;
}

}  // namespace detail

// Exact s(G) or ms(G) by iterative deepening from the lower bound up to
// cfg.k_max. Infinite is reported only for a component of order <= 2 (s)
// or an order of 2 mod 4 (ms); running out of ceiling gives Unknown.
inline StrengthResult solve(const Graph& g, StrengthMode mode,
                            const SolverConfig& cfg = {}) {
  if (g.order() == 0 || g.size() == 0) {
    throw domain_error("solve: graph has no edges");
  }
  if (cfg.k_max < 1) throw domain_error("solve: kmax must be at least 1");
  if (cfg.threads < 1) throw domain_error("solve: thread count must be at least 1");

  const auto start = std::chrono::steady_clock::now();
  StrengthResult result;
  result.mode = mode;
  auto finish = [&] {
    result.stats.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
  };

  const bool small = has_small_component(g);
  if (mode == StrengthMode::ms && modular_infinite(g)) {
    result.outcome = Outcome::infinite;
    result.reason = "order is 2 mod 4";
    return finish();
  }
  if (small) {
    if (mode == StrengthMode::s) {
      result.outcome = Outcome::infinite;
      result.reason = "component of order at most 2";
      return finish();
    }
    throw domain_error(
        "solve: modular irregularity is undefined for graphs with a component "
        "of order at most 2");
  }

  const Label lower = lower_bound_s(g);
  if (cfg.k_max < lower) {
    throw domain_error("solve: kmax " + std::to_string(cfg.k_max) +
                       " is below the lower bound " + std::to_string(lower));
  }

  const auto lmode = labeling_mode(mode);
  for (Label k = lower; k <= cfg.k_max; ++k) {
    auto found = detail::search_at(g, lmode, k, cfg.threads, cfg.count_solutions);
    result.stats.nodes += found.nodes;
    if (found.labels) {
      result.outcome = Outcome::finite;
      result.k = k;
      result.certificate = make_certificate(g, EdgeLabeling(std::move(*found.labels)), lmode);
      if (cfg.count_solutions) result.solutions = found.solutions;
      return finish();
    }
  }
  result.outcome = Outcome::unknown;
  result.k = cfg.k_max;
  return finish();
}

struct LabelingCount {
  std::uint64_t valid = 0;
  std::uint64_t enumerated = 0;
};

// Plain enumeration of all k^m labelings, independent of the search above.
// Limited to instances with m * log2(k) <= 40.
inline LabelingCount count_labelings(const Graph& g, LabelingMode mode, Label k) {
  if (k < 1) throw domain_error("count_labelings: k must be at least 1");
  const double bits = static_cast<double>(g.size()) * std::log2(static_cast<double>(k));
  if (bits > 40.0) {
    throw domain_error("count_labelings: instance too large (m*log2(k) = " +
                       std::to_string(bits) + " > 40)");
  }
  const auto edges = g.edges();
  const auto order = static_cast<Weight>(g.order());
  std::vector<Label> labels(edges.size(), 1);
  std::vector<Weight> weights(g.order(), 0);
  for (const auto& e : edges) {
    ++weights[e.u];
    ++weights[e.v];
  }
  std::vector<Weight> keys(g.order());
  LabelingCount count;
  while (true) {
    ++count.enumerated;
    for (std::size_t v = 0; v < keys.size(); ++v) {
      keys[v] = mode == LabelingMode::modular ? weights[v] % order : weights[v];
    }
    std::sort(keys.begin(), keys.end());
    if (std::adjacent_find(keys.begin(), keys.end()) == keys.end()) ++count.valid;

    // Odometer step over the last edge first.
    std::size_t i = edges.size();
    while (i > 0) {
      --i;
      if (labels[i] < k) {
        ++labels[i];
        ++weights[edges[i].u];
        ++weights[edges[i].v];
        break;
      }
      weights[edges[i].u] -= labels[i] - 1;
      weights[edges[i].v] -= labels[i] - 1;
      labels[i] = 1;
      if (i == 0) return count;
    }
    if (edges.empty()) return count;
  }
}

inline std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::finite: return "finite";
    case Outcome::infinite: return "infinite";
    case Outcome::unknown: return "unknown";
  }
  return "?";
}

// {"mode":..,"outcome":..,"k":..,"certificate":{..}} for finite results;
// infinite results carry "reason" and unknown ones "kmax" instead.
inline std::string to_json(const StrengthResult& r) {
  nlohmann::ordered_json j;
  j["mode"] = to_string(r.mode);
  j["outcome"] = to_string(r.outcome);
  switch (r.outcome) {
    case Outcome::finite:
      j["k"] = r.k;
      if (r.solutions) j["solutions"] = *r.solutions;
      if (r.certificate) j["certificate"] = to_json_value(*r.certificate);
      break;
    case Outcome::infinite:
      j["reason"] = r.reason;
      break;
    case Outcome::unknown:
      j["kmax"] = r.k;
      break;
  }
  return j.dump();
}

}  // namespace irrstrength
