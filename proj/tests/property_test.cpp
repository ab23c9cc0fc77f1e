#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "irrstrength.hpp"
#include "test_support.hpp"

using namespace irrstrength;
using irrstrength::test_support::random_graph;
using irrstrength::test_support::random_labeling;

TEST(Property, HandshakeAndMatrixWeights) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    auto g = random_graph(rng, 3 + i % 10, 0.4);
    auto f = random_labeling(rng, g, 1 + i % 9);
    auto p = vertex_weights(g, f);
    auto total = std::accumulate(p.weights.begin(), p.weights.end(), Weight{0});
    auto labels = std::accumulate(f.labels().begin(), f.labels().end(), Label{0});
    EXPECT_EQ(total, 2 * labels);
    EXPECT_EQ(p.weights, test_support::matrix_weights(g, f));
    for (std::size_t v = 0; v < g.order(); ++v) {
      EXPECT_EQ(p.residues[v], p.weights[v] % static_cast<Weight>(g.order()));
    }
  }
}

TEST(Property, ModularImpliesIrregular) {
  std::mt19937_64 rng(12);
  int modular_hits = 0;
  for (int i = 0; i < 3000; ++i) {
    auto g = random_graph(rng, 3 + i % 4, 0.7);
    auto f = random_labeling(rng, g, 1 + i % 4);
    if (verify_modular(g, f)) {
      ++modular_hits;
      EXPECT_TRUE(verify_irregular(g, f).ok());
    }
  }
  EXPECT_GT(modular_hits, 10);
}

TEST(Property, PermutationEquivariance) {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 200; ++i) {
    auto g = random_graph(rng, 4 + i % 6, 0.5);
    auto f = random_labeling(rng, g, 5);
    std::vector<Vertex> perm(g.order());
    std::iota(perm.begin(), perm.end(), Vertex{0});
    std::shuffle(perm.begin(), perm.end(), rng);

    std::vector<std::pair<Edge, Label>> mapped;
    for (std::size_t e = 0; e < g.size(); ++e) {
      Edge pe{perm[g.edges()[e].u], perm[g.edges()[e].v]};
      if (pe.u > pe.v) std::swap(pe.u, pe.v);
      mapped.emplace_back(pe, f[e]);
    }
    std::sort(mapped.begin(), mapped.end());
    std::vector<Edge> edges;
    std::vector<Label> labels;
    for (auto& [e, l] : mapped) {
      edges.push_back(e);
      labels.push_back(l);
    }
    Graph h(g.order(), edges);
    auto pg = vertex_weights(g, f);
    auto ph = vertex_weights(h, EdgeLabeling(labels));
    for (Vertex v = 0; v < g.order(); ++v) EXPECT_EQ(ph.weights[perm[v]], pg.weights[v]);
  }
}

TEST(Property, CertificateRoundTrip) {
  std::mt19937_64 rng(14);
  for (int i = 0; i < 300; ++i) {
    auto g = random_graph(rng, 3 + i % 12, 0.3);
    auto mode = i % 2 ? LabelingMode::modular : LabelingMode::irregular;
    auto cert = make_certificate(g, random_labeling(rng, g, 1 + i % 20), mode);
    auto text = to_json(cert);
    auto back = parse_certificate(text);
    EXPECT_EQ(to_json(back), text);
    EXPECT_TRUE(profile_matches(back));
  }
}

TEST(Property, SolverMonotoneAndBoundSound) {
  std::mt19937_64 rng(15);
  for (int i = 0; i < 40; ++i) {
    auto g = random_graph(rng, 3 + i % 4, 0.6);
    auto r = solve(g, StrengthMode::s);
    ASSERT_EQ(r.outcome, Outcome::finite);
    EXPECT_GE(r.k, lower_bound_s(g));
    // The certificate at k is valid at every larger ceiling too, and k - 1
    // has nothing.
    EXPECT_TRUE(verify_irregular(g, r.certificate->labeling).ok());
    if (r.k > 1 && g.size() * std::log2(static_cast<double>(r.k - 1)) <= 20) {
      EXPECT_EQ(count_labelings(g, LabelingMode::irregular, r.k - 1).valid, 0u);
    }
    if (g.size() * std::log2(static_cast<double>(r.k)) <= 20) {
      EXPECT_GT(count_labelings(g, LabelingMode::irregular, r.k).valid, 0u);
    }
  }
}
