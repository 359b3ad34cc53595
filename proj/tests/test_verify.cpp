#include <doctest.h>

#include <set>

#include "support.hpp"
#include "vfk/error.hpp"
#include "vfk/verify.hpp"

using namespace vfk;
using namespace vfk::testing;

namespace {

GogHom load_hom(const GraphOfGroups& g, const GroupOracle& group, const std::string& name) {
  return resolve_hom(g, group, hom_from_json(read_json_file(data_path(name))));
}

struct Dinf {
  PresentationOracle group{load_presentation("dinf.json")};
  GraphOfGroups gog = load_gog("dinf-gog.json");
  GogHom hom = load_hom(gog, group, "dinf-hom.json");
};

RawGog single_vertex(const FiniteGroupTable& t) {
  RawGog raw;
  raw.vertices = {{"P", t.rows()}};
  return raw;
}

}  // namespace

TEST_CASE("homomorphism check on D∞") {
  Dinf d;
  CHECK(check_homomorphism(d.gog, d.group, d.hom).ok);
  const GogHom wrong = load_hom(d.gog, d.group, "dinf-hom-wrong.json");
  const CheckResult r = check_homomorphism(d.gog, d.group, wrong);
  CHECK_FALSE(r.ok);
  CHECK(r.stage == "homomorphism");
  CHECK(r.witness.find("Q.g1 Q.g1") != std::string::npos);
}

TEST_CASE("homomorphism check on a finite group onto itself") {
  const PresentationOracle z2(load_presentation("z2.json"));
  const GraphOfGroups g = GraphOfGroups::build(single_vertex(FiniteGroupTable::cyclic(2)));
  const GogHom h{0, {z2.sigma().parse("s")}};
  CHECK(check_homomorphism(g, z2, h).ok);
  CHECK(check_surjectivity(g, z2, h).ok);
  CHECK(verify(g, z2, h).ok);
}

TEST_CASE("tree edges must map to the identity") {
  Dinf d;
  GogHom h = d.hom;
  h.images[d.gog.delta().at("y")] = d.group.sigma().parse("t");
  h.images[d.gog.delta().at("y^-")] = d.group.sigma().parse("t^-");
  const CheckResult r = check_homomorphism(d.gog, d.group, h);
  CHECK_FALSE(r.ok);
  CHECK(r.witness.find("tree") != std::string::npos);
}

TEST_CASE("surjectivity") {
  Dinf d;
  CHECK(check_surjectivity(d.gog, d.group, d.hom).ok);
  const GogHom empty{0, std::vector<Word>(d.gog.delta().size())};
  const CheckResult r = check_surjectivity(d.gog, d.group, empty);
  CHECK_FALSE(r.ok);
  CHECK(r.stage == "surjectivity");
  REQUIRE(r.witness_word);
  CHECK(*r.witness_word == d.group.sigma().parse("t"));
}

TEST_CASE("surjectivity agrees with brute-force generation") {
  Dinf d;
  // Every normal form with free part of length ≤ 2 is reached by a product
  // of at most 6 generator images.
  std::set<NormalForm> reached;
  const VfPresentation& p = d.group.presentation();
  for_each_word(d.gog.delta().size(), 6, [&](const Word& u) { reached.insert(p.normal_form(apply_hom(d.hom, u))); });
  for_each_word(p.sigma().size(), 2, [&](const Word& w) { CHECK(reached.count(p.normal_form(w)) == 1); });
}

TEST_CASE("injectivity") {
  Dinf d;
  CHECK(check_injectivity(d.gog, d.group, d.hom).ok);
  const GogHom same = load_hom(d.gog, d.group, "dinf-hom-nonsurj.json");
  const CheckResult r = check_injectivity(d.gog, d.group, same);
  CHECK_FALSE(r.ok);
  CHECK(r.stage == "injectivity");
  REQUIRE(r.witness_word);
  const Word& w = *r.witness_word;
  CHECK(w.size() <= 4);
  CHECK_FALSE(w.empty());
  CHECK_FALSE(based_shape_violation(d.gog, 0, w));
  CHECK(reduce_word(d.gog, w) == w);
  CHECK(d.group.is_trivial(apply_hom(same, w)));
}

TEST_CASE("trivial graph of groups onto the trivial group") {
  const PresentationOracle trivial(load_presentation("trivial.json"));
  const GraphOfGroups g = GraphOfGroups::build(single_vertex(FiniteGroupTable::trivial()));
  const GogHom h{0, {}};
  CHECK(check_injectivity(g, trivial, h).ok);
  CHECK(verify(g, trivial, h).ok);
}

TEST_CASE("verify end to end with the three mutations") {
  Dinf d;
  CHECK(verify(d.gog, d.group, d.hom).ok);

  const CheckResult wrong = verify(d.gog, d.group, load_hom(d.gog, d.group, "dinf-hom-wrong.json"));
  CHECK_FALSE(wrong.ok);
  CHECK(wrong.stage == "homomorphism");

  const CheckResult nonsurj = verify(d.gog, d.group, load_hom(d.gog, d.group, "dinf-hom-nonsurj.json"));
  CHECK_FALSE(nonsurj.ok);
  CHECK(nonsurj.stage == "surjectivity");

  const GraphOfGroups loop = load_gog("dinf-loop-gog.json");
  const CheckResult noninj = verify(loop, d.group, load_hom(loop, d.group, "dinf-loop-hom.json"));
  CHECK_FALSE(noninj.ok);
  CHECK(noninj.stage == "injectivity");
  REQUIRE(noninj.witness_word);
  CHECK(loop.delta().render(*noninj.witness_word) == "z");
}

TEST_CASE("verified maps are injective and surjective at desk scale") {
  Dinf d;
  REQUIRE(verify(d.gog, d.group, d.hom).ok);
  for_each_word(d.gog.delta().size(), 5, [&](const Word& u) {
    const bool trivial = gog_wp(d.gog, 0, to_based_form(d.gog, 0, u));
    REQUIRE(trivial == d.group.is_trivial(apply_hom(d.hom, u)));
  });
  const VfPresentation& p = d.group.presentation();
  for (int a = 0; a < p.sigma().size(); ++a) {
    bool found = false;
    for_each_word(d.gog.delta().size(), 6, [&](const Word& u) {
      if (!found && p.normal_form(apply_hom(d.hom, u)) == p.normal_form(Word{a})) found = true;
    });
    CHECK(found);
  }
}

TEST_CASE("grammar backend verifies the loop decomposition of Z") {
  const GrammarFile gf = load_grammar("wpz.json");
  const GrammarOracle z(gf.grammar, gf.involution);
  const GraphOfGroups g = load_gog("z-loop.json");
  const GogHom h = load_hom(g, z, "z-loop-hom.json");
  CHECK(verify(g, z, h).ok);
  GogHom doubled = h;
  doubled.images[g.delta().at("y")] = z.sigma().parse("a a");
  doubled.images[g.delta().at("y^-")] = z.sigma().parse("A A");
  const CheckResult r = verify(g, z, doubled);
  CHECK_FALSE(r.ok);
  CHECK(r.stage == "surjectivity");
}

TEST_CASE("grammar oracle rejects a bad involution") {
  const GrammarFile gf = load_grammar("wpz.json");
  CHECK_THROWS_AS(GrammarOracle(gf.grammar, {0, 0}), Error);
}

TEST_CASE("normalising to the tree keeps the based images") {
  Dinf d;
  const Alphabet& s = d.group.sigma();
  GogHom h = d.hom;
  h.images[d.gog.delta().at("y")] = s.parse("t");
  h.images[d.gog.delta().at("y^-")] = s.parse("t^-");
  h.images[d.gog.delta().at("Q.g1")] = s.parse("s t");
  const GogHom n = normalize_to_tree(d.gog, d.group, h);
  CHECK(n.images[d.gog.delta().at("y")].empty());
  CHECK(verify(d.gog, d.group, n).ok);
  for_each_word(d.gog.delta().size(), 4, [&](const Word& u) {
    const Word based = to_based_form(d.gog, 0, u);
    const VfPresentation& p = d.group.presentation();
    REQUIRE(p.normal_form(apply_hom(h, based)) == p.normal_form(apply_hom(n, based)));
  });
}

TEST_CASE("hom resolution errors") {
  Dinf d;
  RawGogHom raw = hom_from_json(read_json_file(data_path("dinf-hom.json")));
  SUBCASE("missing image") {
    raw.images.pop_back();
    CHECK_THROWS_AS(resolve_hom(d.gog, d.group, raw), Error);
  }
  SUBCASE("unknown letter") {
    raw.images[0].second = {"u"};
    CHECK_THROWS_AS(resolve_hom(d.gog, d.group, raw), Error);
  }
  SUBCASE("unknown base") {
    raw.base = "Z";
    CHECK_THROWS_AS(resolve_hom(d.gog, d.group, raw), Error);
  }
  SUBCASE("round trip") {
    const RawGogHom back = to_raw(d.gog, d.group, d.hom);
    CHECK(resolve_hom(d.gog, d.group, back).images == d.hom.images);
  }
}

TEST_CASE("reduced-word automaton size is quadratic") {
  for (const char* name : {"dinf-gog.json", "dinf-loop-gog.json", "seg23.json"}) {
    const GraphOfGroups g = load_gog(name);
    const Nfa a3 = reduced_word_dfa(g);
    const std::size_t delta = static_cast<std::size_t>(g.delta().size());
    const std::size_t states = 1 + g.vertices().size() + 2 * g.edges().size();
    CHECK(static_cast<std::size_t>(a3.num_states) <= states);
    CHECK(a3.transitions.size() <= states * delta);
    CHECK(a3.transitions.size() <= 3 * delta * delta);
    // Factor avoidance: forbidden factors are rejected, their prefixes are not.
    const Alphabet& d = g.delta();
    if (d.find("P.g1") && d.find("y")) {
      CHECK_FALSE(a3.accepts(d.parse("P.g1 P.g1")));
      CHECK(a3.accepts(d.parse("P.g1 y")));
      CHECK_FALSE(a3.accepts(d.parse("y y^-")));
    }
  }
}
