#include <doctest.h>

#include <stdexcept>

#include "crux/crux_ops.hpp"
#include "crux/generators.hpp"
#include "crux/graph.hpp"
#include "crux/rng.hpp"
#include "oracles.hpp"

using namespace crux;

namespace {

Rational density_of(const Graph& g, const VertexSet& s) {
  return induced_subgraph(g, s).graph.average_degree();
}

}  // namespace

TEST_CASE("crux_exact matches the exhaustive oracle on random graphs") {
  Rng rng(11);
  const Rational alphas[] = {Rational(1, 4), Rational(1, 2), Rational(3, 4),
                             Rational(1)};
  int checked = 0;
  for (int trial = 0; trial < 40; ++trial) {
    int n = 4 + static_cast<int>(rng.next_below(7));  // 4..10
    Graph g = generate_gnp(n, 0.45, rng.next_u64());
    if (g.edge_count() == 0) continue;
    const Rational& alpha = alphas[trial % 4];
    auto got = crux_exact(g, alpha);
    auto want = oracle::crux_exhaustive(g, alpha);
    REQUIRE(got.upper == want.order);
    CHECK(got.lower == got.upper);
    CHECK(got.lower_certified);
    REQUIRE(got.witness.has_value());
    CHECK(got.witness->size() == got.upper);
    // The witness really is dense enough — exact rational comparison.
    CHECK(!(density_of(g, *got.witness) < alpha * g.average_degree()));
    ++checked;
  }
  CHECK(checked >= 35);
}

TEST_CASE("crux known values") {
  CHECK(crux_exact(generate_complete(8), Rational(1, 2)).upper == 5);
  CHECK(crux_exact(generate_hypercube(3), Rational(1, 2)).upper == 4);
  // Tiny alpha: a single edge (density 1) is always enough once
  // alpha*d <= 1, and no single vertex ever is.
  CHECK(crux_exact(generate_complete(8), Rational(1, 100)).upper == 2);
  CHECK(crux_exact(generate_petersen(), Rational(1, 100)).upper == 2);
  // C_5: alpha*d = 1, and a single edge already has density 1.
  CHECK(crux_exact(generate_cycle(5), Rational(1, 2)).upper == 2);
  // C_5 at alpha = 1 needs the whole cycle: every proper subgraph is a
  // union of paths with density < 2.
  CHECK(crux_exact(generate_cycle(5), Rational(1)).upper == 5);
}

TEST_CASE("crux size_cap answers the decision question") {
  Graph k8 = generate_complete(8);  // c_{1/2} = 5
  CruxOptions capped;
  capped.size_cap = 4;
  auto low = crux_exact(k8, Rational(1, 2), capped);
  CHECK(low.lower == 5);  // every order <= 4 exhaustively refuted
  CHECK(low.lower_certified);
  CHECK(!low.witness.has_value());

  capped.size_cap = 5;
  auto hit = crux_exact(k8, Rational(1, 2), capped);
  CHECK(hit.upper == 5);
  REQUIRE(hit.witness.has_value());
  CHECK(hit.witness->size() == 5);
}

TEST_CASE("crux input validation") {
  CHECK_THROWS_AS(crux_exact(generate_complete(4), Rational(0)),
                  std::invalid_argument);
  CHECK_THROWS_AS(crux_exact(generate_complete(4), Rational(3, 2)),
                  std::invalid_argument);
  CHECK_THROWS_AS(crux_exact(Graph(4, {}), Rational(1, 2)),
                  std::invalid_argument);
  // Oversized graphs need a size cap for the decision variant.
  Graph big = generate_gnp(25, 0.3, 1);
  CHECK_THROWS_AS(crux_exact(big, Rational(1, 2)), std::invalid_argument);
  CruxOptions capped;
  capped.size_cap = 3;
  CHECK_NOTHROW(crux_exact(big, Rational(1, 2), capped));
}

TEST_CASE("crux_bounds brackets the exact value") {
  Rng rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    int n = 5 + static_cast<int>(rng.next_below(6));  // 5..10
    Graph g = generate_gnp(n, 0.5, rng.next_u64());
    if (g.edge_count() == 0) continue;
    auto exact = crux_exact(g, Rational(1, 2));
    auto bounds = crux_bounds(g, Rational(1, 2));
    CHECK(bounds.lower <= exact.upper);
    CHECK(bounds.upper >= exact.upper);
    REQUIRE(bounds.witness.has_value());
    CHECK(!(density_of(g, *bounds.witness) <
            Rational(1, 2) * g.average_degree()));
    // The scan threshold covers these sizes, so the lower bound is sharp.
    if (bounds.lower_certified && bounds.lower > exact.upper)
      FAIL("certified lower bound above the exact value");
  }
}

TEST_CASE("expansion profile matches the exhaustive oracle") {
  Rng rng(37);
  const double deltas[] = {0.25, 0.5, 1.0};
  for (int trial = 0; trial < 30; ++trial) {
    int n = 4 + static_cast<int>(rng.next_below(7));  // 4..10
    Graph g = generate_gnp(n, 0.5, rng.next_u64());
    if (g.edge_count() == 0) continue;
    double delta = deltas[trial % 3];
    if (delta * n < 1.0) continue;
    auto got = expansion_profile(g, delta, ProfileMode::Exact);
    auto want = oracle::profile_exhaustive(g, delta);
    REQUIRE(want.has_value());
    CHECK(got.value == *want);
    // The reported argmin attains the value.
    Rational attained = Rational(edge_boundary(g, got.argmin)) /
                        (g.average_degree() * Rational(got.argmin.size()));
    CHECK(attained == got.value);
  }
  CHECK_THROWS_AS(
      expansion_profile(generate_complete(5), 0.1, ProfileMode::Exact),
      std::invalid_argument);
}

TEST_CASE("sampled profile upper-bounds the exact value deterministically") {
  Graph g = generate_gnp(10, 0.5, 99);
  auto exact = expansion_profile(g, 0.5, ProfileMode::Exact);
  ProfileOptions opts;
  opts.seed = 4;
  opts.sample_trials = 300;
  auto s1 = expansion_profile(g, 0.5, ProfileMode::Sampled, opts);
  auto s2 = expansion_profile(g, 0.5, ProfileMode::Sampled, opts);
  CHECK(!(s1.value < exact.value));
  CHECK(s1.value == s2.value);
  CHECK(s1.argmin == s2.argmin);
}

TEST_CASE("profile known value: complete graph") {
  // K_8, |S| <= 4: e(S,S^c) = |S|(8-|S|), d = 7, so the minimum over sizes
  // 1..4 of (8-s)/7 is 4/7 at s = 4.
  auto rep = expansion_profile(generate_complete(8), 0.5, ProfileMode::Exact);
  CHECK(rep.value == Rational(4, 7));
  CHECK(rep.argmin.size() == 4);
}

TEST_CASE("SSE consistency holds on regular examples") {
  for (const Graph& g : {generate_hypercube(3), generate_cycle(8),
                         generate_complete(7), generate_petersen()}) {
    for (const Rational& eps : {Rational(1, 4), Rational(1, 2)}) {
      auto rep = sse_crux_consistency(g, eps);
      CHECK(rep.crux_order >= 2);
      if (rep.delta > 0) {
        CHECK(rep.holds);
        CHECK(rep.phi > rep.one_minus_eps);
      }
    }
  }
}

TEST_CASE("SSE consistency can fail off the regular domain") {
  // K_3 plus an isolated vertex: the isolated vertex drags d(G) down, the
  // crux is the triangle, and the singleton {3} has zero expansion. This is
  // why the regular hypothesis matters.
  Graph g(4, {{0, 1}, {0, 2}, {1, 2}});
  auto rep = sse_crux_consistency(g, Rational(1, 2));
  CHECK(!rep.holds);
}

TEST_CASE("np gadget lands in the target density interval and preserves "
          "omega") {
  Rng rng(51);
  for (int trial = 0; trial < 6; ++trial) {
    Graph g = generate_gnp(8, 0.5, rng.next_u64());
    if (g.edge_count() == 0) continue;
    int k = 3 + static_cast<int>(rng.next_below(2));  // 3..4
    Rational eps(1, 2);
    auto res = np_gadget(g, k, eps);
    Rational lo = (Rational(k - 1) - Rational(1, k)) / eps;
    Rational hi = Rational(k - 1) / eps;
    CHECK(res.density > lo);
    CHECK(!(hi < res.density));
    CHECK(res.omega == max_clique_size(g));
    CHECK(res.density == res.graph.average_degree());
  }
  CHECK_THROWS_AS(np_gadget(generate_complete(5), 2, Rational(1, 2)),
                  std::invalid_argument);
}

TEST_CASE("gadget decision equivalence: crux at most k iff a k-clique") {
  // One instance with a 4-clique and one without; the acceptance sweep runs
  // twenty of these.
  Graph with = generate_complete(5);
  Graph without = generate_cycle(7);
  for (int k = 4; k <= 4; ++k) {
    for (const Graph* g : {&with, &without}) {
      auto res = np_gadget(*g, k, Rational(1, 2));
      CruxOptions capped;
      capped.size_cap = k;
      auto report = crux_exact(res.graph, Rational(1, 2), capped);
      bool crux_small = report.witness.has_value();
      bool has_clique = max_clique_size(*g) >= k;
      CHECK(crux_small == has_clique);
    }
  }
}

TEST_CASE("max clique on known graphs") {
  CHECK(max_clique_size(generate_petersen()) == 2);
  CHECK(max_clique_size(generate_complete(7)) == 7);
  CHECK(max_clique_size(generate_complete_bipartite(3, 3)) == 2);
  CHECK(max_clique_size(generate_cycle(5)) == 2);
  CHECK(max_clique_size(generate_cycle(3)) == 3);
  CHECK(max_clique_size(Graph(3, {})) == 1);
}

TEST_CASE("serial and parallel kernels agree") {
  Graph g = generate_gnp(14, 0.5, 8);
  CruxOptions serial, parallel;
  serial.exec = ExecMode::Serial;
  parallel.exec = ExecMode::Parallel;
  auto a = crux_exact(g, Rational(1, 2), serial);
  auto b = crux_exact(g, Rational(1, 2), parallel);
  CHECK(a.upper == b.upper);
  REQUIRE(a.witness.has_value());
  REQUIRE(b.witness.has_value());
  CHECK(*a.witness == *b.witness);

  ProfileOptions ps, pp;
  ps.exec = ExecMode::Serial;
  pp.exec = ExecMode::Parallel;
  auto pa = expansion_profile(g, 0.5, ProfileMode::Exact, ps);
  auto pb = expansion_profile(g, 0.5, ProfileMode::Exact, pp);
  CHECK(pa.value == pb.value);
  CHECK(pa.argmin == pb.argmin);
}
