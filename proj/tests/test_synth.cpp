#include <doctest.h>

#include <chrono>
#include <set>
#include <tuple>

#include "support.hpp"
#include "vfk/error.hpp"
#include "vfk/synth.hpp"

using namespace vfk;
using namespace vfk::testing;

namespace {

std::vector<Candidate> collect(const SynthBudget& b, const GroupOracle& group) {
  std::vector<Candidate> out;
  enumerate_candidates(b, group.sigma(), group.involution(), [&](const Candidate& c) {
    out.push_back(c);
    return false;
  });
  return out;
}

std::string key(const Candidate& c) {
  return to_json(c.gog.to_raw()).dump() + "|" + std::to_string(c.hom.base) + "|" + [&] {
    std::string s;
    for (const Word& w : c.hom.images) {
      for (int a : w) s += std::to_string(a) + ",";
      s += ";";
    }
    return s;
  }();
}

SynthBudget budget(int v, int order, int edges, int len) {
  SynthBudget b;
  b.max_vertices = v;
  b.max_group_order = order;
  b.max_edges = edges;
  b.max_image_length = len;
  return b;
}

}  // namespace

TEST_CASE("default catalog") {
  const auto c = default_catalog(4);
  REQUIRE(c.size() == 5);  // Z/1..Z/4 and the Klein group
  CHECK(c[4].order() == 4);
  CHECK(default_catalog(1).size() == 1);
}

TEST_CASE("smallest budget has exactly one candidate") {
  const PresentationOracle trivial(load_presentation("trivial.json"));
  const auto all = collect(budget(1, 1, 0, 0), trivial);
  REQUIRE(all.size() == 1);
  CHECK(all[0].gog.vertices().size() == 1);
  CHECK(all[0].gog.vertices()[0].group.order() == 1);
  CHECK(all[0].hom.images.empty());
}

TEST_CASE("candidate count for a single vertex") {
  // One vertex, group 1 or Z/2 from the catalog, |Σ| = 2, images of length
  // at most 1: the trivial group has no letters and Z/2 has one letter with
  // 1 + |Σ| choices.
  const PresentationOracle z2(load_presentation("z2.json"));
  SynthBudget b = budget(1, 2, 0, 1);
  b.catalog = {FiniteGroupTable::trivial(), FiniteGroupTable::cyclic(2)};
  const auto all = collect(b, z2);
  CHECK(all.size() == 1 + 3);
  std::set<std::string> keys;
  for (const auto& c : all) keys.insert(key(c));
  CHECK(keys.size() == all.size());
}

TEST_CASE("candidate count with one edge") {
  // Counted by hand over the catalog {1, Z/2} with images of length ≤ 1
  // (3 words over Σ = {s, s^-}):
  //   one vertex, no edge:  1 + 3
  //   one vertex, a loop:   loop at 1 (1 slot) 3, loop at Z/2 with edge
  //                         group 1 or Z/2 (2 slots each) 9 + 9
  //   two vertices:         only Z/2 -1- Z/2 is reduced, 2 vertex slots, 9
  const PresentationOracle z2(load_presentation("z2.json"));
  SynthBudget b = budget(2, 2, 1, 1);
  b.catalog = {FiniteGroupTable::trivial(), FiniteGroupTable::cyclic(2)};
  const auto all = collect(b, z2);
  CHECK(all.size() == 4 + 21 + 9);
  for (const auto& c : all) {
    CHECK(is_reduced_gog(c.gog));
    if (c.gog.vertices().size() == 2) {
      REQUIRE(c.gog.edges().size() == 2);
      CHECK(c.gog.edges()[0].src != c.gog.edges()[0].tgt);
    }
  }
}

TEST_CASE("enumeration order and shape") {
  const PresentationOracle dinf(load_presentation("dinf.json"));
  const auto all = collect(budget(2, 2, 1, 1), dinf);
  auto rank = [](const Candidate& c) {
    int orders = 0, length = 0;
    for (const auto& v : c.gog.vertices()) orders += v.group.order();
    for (const auto& e : c.gog.edge_groups()) orders += e.group.order();
    for (std::size_t a = 0; a < c.hom.images.size(); ++a) {
      const DeltaLetter& l = c.gog.letter(static_cast<int>(a));
      if (!l.is_edge || c.gog.edges()[l.edge].forward) length += static_cast<int>(c.hom.images[a].size());
    }
    return std::tuple{c.gog.vertices().size(), c.gog.edges().size(), orders, length};
  };
  for (std::size_t i = 1; i < all.size(); ++i) CHECK(rank(all[i - 1]) <= rank(all[i]));
  for (const auto& c : all) {
    for (std::size_t e = 0; e < c.gog.edges().size(); ++e) {
      const int letter = c.gog.edge_letter(static_cast<int>(e));
      if (c.gog.tree()[e]) CHECK(c.hom.images[letter].empty());
      const int inv = c.gog.edge_letter(c.gog.edges()[e].inverse);
      CHECK(c.hom.images[inv] == invert_word(c.hom.images[letter], dinf.involution()));
    }
  }
}

TEST_CASE("budgets are validated") {
  const PresentationOracle z2(load_presentation("z2.json"));
  CHECK_THROWS_AS(collect(budget(0, 1, 0, 0), z2), Error);
  CHECK_THROWS_AS(collect(budget(1, 0, 0, 0), z2), Error);
  CHECK_THROWS_AS(collect(budget(1, 1, -1, 0), z2), Error);
}

TEST_CASE("synthesis of small groups") {
  SUBCASE("trivial group") {
    const PresentationOracle trivial(load_presentation("trivial.json"));
    const auto c = synthesize(trivial, budget(1, 1, 0, 0));
    REQUIRE(c);
    CHECK(c->gog.vertices()[0].group.order() == 1);
    CHECK(c->hom.images.empty());
  }
  SUBCASE("Z/2") {
    const PresentationOracle z2(load_presentation("z2.json"));
    SynthStats stats;
    const auto c = synthesize(z2, budget(1, 2, 0, 1), &stats);
    REQUIRE(c);
    CHECK(c->gog.vertices().size() == 1);
    CHECK(c->gog.vertices()[0].group.order() == 2);
    CHECK(z2.sigma().render(c->hom.images[0]) == "s");
    CHECK_FALSE(stats.exhausted);
  }
  SUBCASE("D∞ as a segment") {
    const PresentationOracle dinf(load_presentation("dinf.json"));
    const auto start = std::chrono::steady_clock::now();
    const auto c = synthesize(dinf, budget(2, 2, 1, 2));
    MESSAGE("D∞ synthesis took "
            << std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() << " s");
    REQUIRE(c);
    CHECK(c->gog.vertices().size() == 2);
    CHECK(c->gog.edges().size() == 2);
    CHECK(c->gog.edge_groups()[0].group.order() == 1);
    CHECK(verify(c->gog, dinf, c->hom).ok);
  }
  SUBCASE("Z from its word-problem grammar") {
    const GrammarFile gf = load_grammar("wpz.json");
    const GrammarOracle z(gf.grammar, gf.involution);
    const auto c = synthesize(z, budget(1, 1, 1, 1));
    REQUIRE(c);
    CHECK(c->gog.edges().size() == 2);
    CHECK(verify(c->gog, z, c->hom).ok);
  }
  SUBCASE("exhausted budget") {
    const PresentationOracle dinf(load_presentation("dinf.json"));
    SynthStats stats;
    CHECK_FALSE(synthesize(dinf, budget(1, 2, 0, 2), &stats));
    CHECK(stats.exhausted);
    CHECK(stats.candidates == collect(budget(1, 2, 0, 2), dinf).size());
  }
}

TEST_CASE("synthesis is deterministic and monotone in the budget") {
  const PresentationOracle dinf(load_presentation("dinf.json"));
  const auto a = synthesize(dinf, budget(2, 2, 1, 2));
  const auto b = synthesize(dinf, budget(2, 2, 1, 2));
  REQUIRE(a);
  REQUIRE(b);
  CHECK(key(*a) == key(*b));

  bool present = false;
  const std::string wanted = key(*a);
  enumerate_candidates(budget(2, 3, 1, 2), dinf.sigma(), dinf.involution(),
                       [&](const Candidate& c) { return present = key(c) == wanted; });
  CHECK(present);
  const auto c = synthesize(dinf, budget(2, 3, 1, 2));
  REQUIRE(c);
  CHECK(verify(c->gog, dinf, c->hom).ok);
  const auto d = synthesize(dinf, budget(3, 2, 2, 2));
  REQUIRE(d);
  CHECK(verify(d->gog, dinf, d->hom).ok);
}
