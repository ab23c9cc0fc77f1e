#pragma once

#include <algorithm>

#include "irrstrength/error.hpp"
#include "irrstrength/graph.hpp"
#include "irrstrength/strength.hpp"

namespace irrstrength {

struct BoundReport {
  Label eq1 = 0;       // lower bound on s
  Label ms_lower = 0;  // lower bound on ms when ms is finite
  bool ms_infinite = false;
};

// Degree-class counting bound: the n_i vertices of degree exactly i take
// weights in [i, i*k], so k >= (n_i + i - 1) / i for every occurring i.
inline Label lower_bound_s(const Graph& g) {
  if (has_small_component(g)) {
    throw domain_error("graph has a component of order <= 2; s is infinite");
  }
  Label best = 1;
  for (const auto& [degree, count] : degree_histogram(g).counts) {
    const auto i = static_cast<Label>(degree);
    best = std::max(best, detail::ceil_div(static_cast<Label>(count) + i - 1, i));
  }
  return best;
}

// No modular irregular labeling exists when the order is 2 mod 4.
inline bool modular_infinite(const Graph& g) { return g.order() % 4 == 2; }

// Any modular irregular labeling is also irregular, so s(G) <= ms(G).
inline Strength lower_bound_ms(const Graph& g) {
  auto s = lower_bound_s(g);
  return modular_infinite(g) ? Strength::infinite() : Strength::finite(s);
}

inline BoundReport bound_report(const Graph& g) {
  BoundReport r;
  r.eq1 = lower_bound_s(g);
  r.ms_lower = r.eq1;
  r.ms_infinite = modular_infinite(g);
  return r;
}

}  // namespace irrstrength
