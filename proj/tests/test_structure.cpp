#include <doctest.h>

#include <algorithm>
#include <random>
#include <sstream>
#include <vector>

#include "neumann/errors.hpp"
#include "neumann/neumann.hpp"
#include "neumann/structure.hpp"
#include "oracle.hpp"
#include "support.hpp"

using namespace neumann;

namespace {

ProjMat2 P(long a, long b, long c, long d) { return ProjMat2(mat(a, b, c, d)); }

StructureCounts counts(std::int64_t r2, std::int64_t r3, std::int64_t p, std::int64_t m) {
  return StructureCounts{r2, r3, p, m};
}

StructureCounts report_of(const std::vector<int>& cases) {
  return structure_report(cases).counts;
}

// Block placed alone in a window: provenance carries it.
std::pair<InvolutionWindow, BuildingBlock> lone(int c, Index k) {
  const auto b = make_block(c, k);
  return {InvolutionWindow::from_block(b), b};
}

}  // namespace

TEST_CASE("classify_element examples") {
  CHECK(classify_element(base_generator(BaseGenerator::Omega)) == GenClass::Order2);
  const oracle::M s{0, -1, 1, -1};
  CHECK(oracle::is_pm_identity(oracle::mul(oracle::mul(s, s), s)));
  CHECK(classify_element(P(0, -1, 1, -1)) == GenClass::Order3);
  CHECK(classify_element(P(1, -3, 1, -4)) == GenClass::InfiniteMinus);
  CHECK(classify_element(base_generator(BaseGenerator::Tau)) == GenClass::InfinitePlus);
  CHECK(classify_element(base_generator(BaseGenerator::Nu)) == GenClass::Order2);
}

TEST_CASE("structure_report examples") {
  const auto r4 = structure_report(std::vector<int>{4});
  CHECK(r4.counts == counts(1, 0, 0, 1));
  CHECK(r4.constraint2);
  CHECK(r4.constraint3);
  CHECK_FALSE(r4.in_modular_group);

  CHECK(report_of({1, 2, 3}) == counts(1, 1, 2, 0));

  const auto r3 = structure_report(std::vector<int>{3});
  CHECK(r3.counts == counts(0, 0, 2, 0));
  CHECK(r3.constraint2);
  CHECK(r3.in_modular_group);

  for (const std::vector<int>& cs : {std::vector<int>{5}, std::vector<int>{6},
                                     std::vector<int>{4, 1}, std::vector<int>{6, 3}}) {
    const auto r = structure_report(cs);
    CHECK(r.constraint2);
    CHECK(r.constraint3);
  }
}

TEST_CASE("structure_report is additive and order independent") {
  const std::vector<StructureCounts> contrib{counts(1, 0, 0, 0), counts(0, 1, 0, 0),
                                             counts(0, 0, 2, 0), counts(1, 0, 0, 1),
                                             counts(0, 1, 0, 1), counts(0, 0, 2, 1)};
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    auto cases = test_support::random_cases(rng, 8);
    StructureCounts expected;
    for (int c : cases) expected += contrib[static_cast<std::size_t>(c - 1)];
    CHECK(report_of(cases) == expected);
    std::shuffle(cases.begin(), cases.end(), rng);
    CHECK(report_of(cases) == expected);
    CHECK(structure_report(cases).per_block.size() == cases.size());
  }
}

TEST_CASE("structure report serialization") {
  std::ostringstream os;
  write_structure_report(os, structure_report(std::vector<int>{4}));
  const std::string s = os.str();
  CHECK(s.find("r2 1\n") != std::string::npos);
  CHECK(s.find("r3 0\n") != std::string::npos);
  CHECK(s.find("rinf_plus 0\n") != std::string::npos);
  CHECK(s.find("rinf_minus 1\n") != std::string::npos);
  CHECK(s.find("constraint2 ok\n") != std::string::npos);
  CHECK(s.find("constraint3 ok\n") != std::string::npos);
}

TEST_CASE("independent_generators examples") {
  {
    auto [w, b] = lone(3, 0);
    const auto g = independent_generators(w, b);
    REQUIRE(g.size() == 2);
    CHECK(g[0].index == 1);
    CHECK(g[0].cls == GenClass::InfinitePlus);
    CHECK(g[1].index == 2);
    CHECK(g[1].cls == GenClass::InfinitePlus);
  }
  {
    auto [w, b] = lone(1, 4);
    const auto g = independent_generators(w, b);
    REQUIRE(g.size() == 1);
    CHECK(g[0].index == 4);
    CHECK(g[0].cls == GenClass::Order2);
  }
  {
    auto [w, b] = lone(6, 0);
    const auto g = independent_generators(w, b);
    REQUIRE(g.size() == 3);
    CHECK(g[0].index == 1);
    CHECK(g[0].cls == GenClass::InfiniteMinus);
    CHECK(g[1].index == 3);
    CHECK(g[1].cls == GenClass::InfinitePlus);
    CHECK(g[2].index == 4);
    CHECK(g[2].cls == GenClass::InfinitePlus);
  }
  {
    const auto w = assemble(std::vector<int>{1, 1});
    CHECK_THROWS_AS(independent_generators(w, make_block(3, 40)), UnknownBlock);
  }
}

TEST_CASE("classification matches the designated classes at all small bases") {
  for (int c = 1; c <= 6; ++c) {
    for (Index k = -5; k <= 5; ++k) {
      auto [w, b] = lone(c, k);
      for (const auto& g : independent_generators(w, b)) {
        CAPTURE(c);
        CAPTURE(k);
        CHECK(g.matches());
      }
    }
  }
}

TEST_CASE("check_relations") {
  const auto w = assemble(std::vector<int>{1, 1, 1});
  CHECK(check_relations(w));
  // sigma_0 sigma_-1 sigma_-2 is exactly +I
  const auto t = test_support::to_table(w);
  CHECK(oracle::mul(oracle::mul(t.sig(0), t.sig(-1)), t.sig(-2)) == oracle::M{1, 0, 0, 1});

  for (int c = 1; c <= 6; ++c) CHECK(check_relations(InvolutionWindow::from_block(make_block(c, 0))));

  std::vector<Index> iota;
  std::vector<int> delta;
  for (Index n = w.lo(); n <= w.hi(); ++n) {
    iota.push_back(w.iota(n));
    delta.push_back(w.delta(n));
  }
  iota[3] = 2;  // iota(0) := 2
  const InvolutionWindow bad(w.lo(), iota, delta);
  CHECK_FALSE(validate(bad).ok());
  CHECK_FALSE(check_relations(bad));

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const auto wr = assemble(test_support::random_cases(rng, 6));
    CHECK(validate(wr).ok());
    CHECK(check_relations(wr));
  }
}

TEST_CASE("check_tietze") {
  for (int c = 3; c <= 5; ++c) {
    auto [w, b] = lone(c, 0);
    const auto checks = check_tietze(b, w);
    CHECK_FALSE(checks.empty());
    for (const auto& t : checks) {
      CAPTURE(t.identity);
      CHECK(t.holds);
    }
  }
  {
    auto [w, b] = lone(2, 0);
    CHECK(check_tietze(b, w).empty());
  }
  {
    auto [w, b] = lone(6, 0);
    CHECK_FALSE(check_tietze(b, w).empty());
  }
  // Case 4: sigma_3 = sigma_2 sigma_1 by hand
  const auto w4 = InvolutionWindow::from_block(make_block(4, 0));
  const auto t = test_support::to_table(w4);
  CHECK(oracle::canon(t.sig(3)) == oracle::canon(oracle::mul(t.sig(2), t.sig(1))));
}

TEST_CASE("check_independence examples") {
  auto [w, b] = lone(3, 0);
  const std::vector<ClassifiedGenerator> pair{{sigma(w, 1), GenClass::InfinitePlus},
                                              {sigma(w, 2), GenClass::InfinitePlus}};
  CHECK(check_independence(pair, 6));

  const ProjMat2 tau = base_generator(BaseGenerator::Tau);
  const ProjMat2 omega = base_generator(BaseGenerator::Omega);
  const std::vector<ClassifiedGenerator> invs{
      {omega, GenClass::Order2}, {compose(compose(tau, omega), invert(tau)), GenClass::Order2}};
  CHECK(check_independence(invs, 4));

  const std::vector<ClassifiedGenerator> wrong{{omega, GenClass::InfinitePlus}};
  CHECK_FALSE(check_independence(wrong, 2));
  const auto word = find_trivial_word(wrong, 2);
  REQUIRE(word.has_value());
  CHECK(word->size() == 2);

  // tau and tau^2 are dependent
  const std::vector<ClassifiedGenerator> dep{{tau, GenClass::InfinitePlus},
                                             {power(tau, 2), GenClass::InfinitePlus}};
  CHECK_FALSE(check_independence(dep, 3));
}

TEST_CASE("s_intersection_report") {
  const auto w4 = assemble(std::vector<int>{4});
  const auto r = s_intersection_report(w4, 3);
  CHECK(r.index_two);
  CHECK(r.multiplicative);
  CHECK(r.plus_class_closed);
  CHECK(r.det_plus > 0);
  CHECK(r.det_minus > 0);
  REQUIRE(r.alpha_index.has_value());
  const Index k = block_bases(std::vector<int>{4})[0];
  CHECK(*r.alpha_index == k + 1);
  const auto a = sigma(w4, k + 1);
  const auto s2 = sigma(w4, k + 2);
  const auto& gens = r.sample_s_generators;
  CHECK(std::find(gens.begin(), gens.end(), s2) != gens.end());
  CHECK(std::find(gens.begin(), gens.end(), compose(compose(a, s2), invert(a))) != gens.end());
  for (const auto& g : gens) CHECK(g.det() == 1);

  const auto r11 = s_intersection_report(assemble(std::vector<int>{1, 1}), 3);
  CHECK_FALSE(r11.index_two);
  CHECK(r11.note.find("Ŝ⊂M") != std::string::npos);
}

TEST_CASE("synthesize_blocks") {
  const auto a = synthesize_blocks(counts(1, 0, 0, 1), 3, 4);
  CHECK(a.cases == std::vector<int>{4, 3, 3, 3});
  CHECK(a.exact_prefix == 1);
  CHECK(report_of(a.cases) == counts(1, 0, 6, 1));

  const auto b = synthesize_blocks(counts(0, 1, 2, 1), 2, 2);
  CHECK(b.cases == std::vector<int>{5, 3});
  CHECK(report_of(b.cases) == counts(0, 1, 2, 1));

  const auto c = synthesize_blocks(counts(2, 2, 2, 2), 3, 7);
  const std::vector<int> prefix(c.cases.begin(),
                                c.cases.begin() + static_cast<long>(c.exact_prefix));
  CHECK(report_of(prefix) == counts(2, 2, 2, 2));

  CHECK_THROWS_AS(synthesize_blocks(counts(0, 0, 1, 1), 3, 4), Unrealizable);
  CHECK_THROWS_AS(synthesize_blocks(counts(2, 2, 2, 2), 3, 2), TooFewBlocks);
  CHECK_THROWS_AS(synthesize_blocks(counts(0, 0, 0, 3), 3, 8), Unrealizable);
}
