#include <doctest.h>

#include <algorithm>
#include <array>
#include <random>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "neumann/distant_graph.hpp"
#include "neumann/errors.hpp"
#include "oracle.hpp"
#include "support.hpp"

using namespace neumann;

namespace {

ProjMat2 P(long a, long b, long c, long d) { return ProjMat2(mat(a, b, c, d)); }

const PVertex inf = PVertex::infinity();

bool cross_unit(const PVertex& u, const PVertex& v) {
  const Integer x = u.p() * v.q() - u.q() * v.p();
  return x == 1 || x == -1;
}

// Brute force over all 24 orderings: some (v1 v2 v3 v4) is a 4-cycle with a diagonal.
bool harmonic_oracle(std::array<PVertex, 4> q) {
  std::sort(q.begin(), q.end());
  do {
    if (cross_unit(q[0], q[1]) && cross_unit(q[1], q[2]) && cross_unit(q[2], q[3]) &&
        cross_unit(q[3], q[0]) && (cross_unit(q[0], q[2]) || cross_unit(q[1], q[3])))
      return true;
  } while (std::next_permutation(q.begin(), q.end()));
  return false;
}

bool has_third(const std::vector<CliqueCompletion>& cs, const PVertex& v) {
  return std::any_of(cs.begin(), cs.end(), [&](const auto& c) { return c.third == v; });
}

}  // namespace

TEST_CASE("build examples") {
  const auto g1 = build(1);
  CHECK(g1.vertices().size() == 4);
  CHECK(g1.edge_count() == 5);
  CHECK_FALSE(g1.adjacent(PVertex(1, 1), PVertex(-1, 1)));
  CHECK(g1.adjacent(inf, PVertex(0, 1)));

  const auto g2 = build(2);
  CHECK(g2.vertices().size() == 8);
  CHECK(g2.contains(PVertex(-2, 1)));
  CHECK(g2.contains(PVertex(1, -2)));

  CHECK_THROWS(build(0));
}

TEST_CASE("graph adjacency matches cross-determinants") {
  const auto g = build(5);
  std::size_t edges = 0;
  const auto& vs = g.vertices();
  for (std::size_t i = 0; i < vs.size(); ++i) {
    CHECK_FALSE(g.adjacent(vs[i], vs[i]));
    CHECK_FALSE(g.neighbours(vs[i]).empty());
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      CHECK(g.adjacent(vs[i], vs[j]) == cross_unit(vs[i], vs[j]));
      CHECK(g.adjacent(vs[i], vs[j]) == g.adjacent(vs[j], vs[i]));
      if (cross_unit(vs[i], vs[j])) ++edges;
    }
  }
  CHECK(edges == g.edge_count());
  CHECK(g.edges().size() == edges);
}

TEST_CASE("maximal clique completions") {
  const auto g1 = build(1);
  const auto c = maximal_cliques_of_edge(g1, inf, PVertex(0, 1));
  REQUIRE(c.size() == 2);
  CHECK(has_third(c, PVertex(1, 1)));
  CHECK(has_third(c, PVertex(-1, 1)));
  for (const auto& x : c) CHECK(x.in_range);

  const auto g2 = build(2);
  const auto c2 = maximal_cliques_of_edge(g2, PVertex(1, 1), PVertex(2, 1));
  REQUIRE(c2.size() == 2);
  for (const auto& x : c2) {
    if (x.third == inf) CHECK(x.in_range);
    else {
      CHECK(x.third == PVertex(3, 2));
      CHECK_FALSE(x.in_range);
    }
  }

  const auto c3 = maximal_cliques_of_edge(g2, inf, PVertex(2, 1));
  REQUIRE(c3.size() == 2);
  CHECK(has_third(c3, PVertex(1, 1)));
  CHECK(has_third(c3, PVertex(3, 1)));

  CHECK_THROWS_AS(maximal_cliques_of_edge(g1, PVertex(1, 1), PVertex(-1, 1)), NotAnEdge);
}

TEST_CASE("is_harmonic") {
  const auto g = build(2);
  const std::array<PVertex, 4> q1{inf, PVertex(0, 1), PVertex(1, 1), PVertex(-1, 1)};
  CHECK(is_harmonic(g, q1));
  CHECK(harmonic_oracle(q1));

  const std::array<PVertex, 4> q2{inf, PVertex(0, 1), PVertex(1, 1), PVertex(2, 1)};
  CHECK(is_harmonic(g, q2) == harmonic_oracle(q2));
  CHECK(is_harmonic(g, q2));

  const std::array<PVertex, 4> q3{PVertex(1, 2), PVertex(-1, 2), PVertex(2, 1), PVertex(-2, 1)};
  CHECK(is_harmonic(g, q3) == harmonic_oracle(q3));
  CHECK_FALSE(is_harmonic(g, q3));

  // exhaustive agreement on build(2)
  const auto& vs = g.vertices();
  for (std::size_t a = 0; a < vs.size(); ++a)
    for (std::size_t b = a + 1; b < vs.size(); ++b)
      for (std::size_t c = b + 1; c < vs.size(); ++c)
        for (std::size_t d = c + 1; d < vs.size(); ++d) {
          const std::array<PVertex, 4> q{vs[a], vs[b], vs[c], vs[d]};
          CHECK(is_harmonic(g, q) == harmonic_oracle(q));
        }
}

TEST_CASE("harmonicity is invariant under the group") {
  const auto g = build(6);
  std::mt19937_64 rng(17);
  const auto& vs = g.vertices();
  std::uniform_int_distribution<std::size_t> pick(0, vs.size() - 1);
  int compared = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const auto x = test_support::random_element(rng, 4);
    std::array<PVertex, 4> q{vs[pick(rng)], vs[pick(rng)], vs[pick(rng)], vs[pick(rng)]};
    if (trial % 2 == 0) {
      // bias toward harmonic samples: a clique plus a neighbour
      q = {inf, PVertex(0, 1), PVertex(1, 1), PVertex(-1, 1)};
    }
    {
      auto s = q;
      std::sort(s.begin(), s.end());
      if (std::adjacent_find(s.begin(), s.end()) != s.end()) continue;
    }
    std::array<PVertex, 4> img{act(x, q[0]), act(x, q[1]), act(x, q[2]), act(x, q[3])};
    if (!std::all_of(img.begin(), img.end(), [&](const auto& v) { return g.contains(v); }))
      continue;
    CHECK(is_harmonic(g, q) == is_harmonic(g, img));
    ++compared;
  }
  CHECK(compared > 50);
}

TEST_CASE("harmonic_chain") {
  const auto g2 = build(2);
  const Triangle c{inf, PVertex(0, 1), PVertex(1, 1)};
  const auto chain = harmonic_chain(g2, c, PVertex(2, 1));
  REQUIRE(chain.size() == 1);
  const auto& cyc = chain[0].cycle;
  CHECK(std::count(cyc.begin(), cyc.end(), PVertex(2, 1)) == 1);
  CHECK(is_harmonic(g2, cyc));

  CHECK(harmonic_chain(g2, c, PVertex(1, 1)).empty());

  CHECK_THROWS_AS(harmonic_chain(build(1), c, PVertex(-2, 1)), NoChainWithinBound);
  const auto far = harmonic_chain(g2, c, PVertex(-2, 1));
  CHECK(far.size() >= 2);
  for (const auto& q : far) CHECK(is_harmonic(g2, q.cycle));
}

TEST_CASE("check_automorphism") {
  CHECK(check_automorphism(base_generator(BaseGenerator::Tau), 3));
  CHECK(check_automorphism(base_generator(BaseGenerator::Nu), 3));
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 20; ++trial)
    CHECK(check_automorphism(test_support::random_element(rng, 8), 5));
}

TEST_CASE("clique_transitivity_map") {
  const Triangle c1{inf, PVertex(0, 1), PVertex(1, 1)};
  const Triangle c2{PVertex(0, 1), inf, PVertex(1, 1)};
  CHECK(clique_transitivity_map(c1, c2) == P(0, 1, 1, 0));
  CHECK(clique_transitivity_map(c1, c1) == ProjMat2::identity());
  const Triangle c3{inf, PVertex(1, 1), PVertex(2, 1)};
  const auto x = clique_transitivity_map(c1, c3);
  CHECK(x == base_generator(BaseGenerator::Tau));
  CHECK(x != P(1, 0, 1, 1));  // z/(z+1) sends infinity to 1, not to infinity
  for (std::size_t i = 0; i < 3; ++i) CHECK(act(x, c1[i]) == c3[i]);

  // composition law on random cliques
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 30; ++trial) {
    const auto a = test_support::random_element(rng, 6);
    const auto b = test_support::random_element(rng, 6);
    const Triangle d1{act(a, c1[0]), act(a, c1[1]), act(a, c1[2])};
    const Triangle d2{act(b, c1[1]), act(b, c1[0]), act(b, c1[2])};
    const auto x12 = clique_transitivity_map(c1, d1);
    const auto x23 = clique_transitivity_map(d1, d2);
    CHECK(compose(x23, x12) == clique_transitivity_map(c1, d2));
  }

  const Triangle notclique{inf, PVertex(1, 1), PVertex(-1, 1)};
  CHECK_THROWS_AS(clique_transitivity_map(c1, notclique), NoSuchMap);
}

TEST_CASE("cayley_vs_distant") {
  const auto w = assemble(std::vector<int>{1, 1, 1});
  const auto r1 = cayley_vs_distant_report(w, 1);
  CHECK(r1.ok);
  CHECK(r1.vertices == 4);
  CHECK(r1.edges_matched == 5);
  CHECK(cayley_vs_distant(w, 2));

  std::vector<Index> iota;
  std::vector<int> delta;
  for (Index n = w.lo(); n <= w.hi(); ++n) {
    iota.push_back(w.iota(n));
    delta.push_back(w.delta(n));
  }
  iota[3] = 2;  // iota(0) := 2, no longer an involution
  CHECK_FALSE(cayley_vs_distant(InvolutionWindow(w.lo(), iota, delta), 1));
}

TEST_CASE("exports") {
  const auto g = build(1);
  std::ostringstream dot;
  write_dot(dot, g);
  const std::string s = dot.str();
  CHECK(s.rfind("graph distant_graph {", 0) == 0);
  CHECK(s.find("label=\"∞\"") != std::string::npos);
  std::size_t edges = 0, pos = 0;
  while ((pos = s.find(" -- ", pos)) != std::string::npos) {
    ++edges;
    pos += 4;
  }
  CHECK(edges == 5);

  std::ostringstream adj;
  write_adjacency(adj, g);
  const auto j = nlohmann::json::parse(adj.str());
  CHECK(j.size() == 4);
  CHECK(j.at("1/0").size() == 3);
  CHECK(j.at("1/1").size() == 2);
}
