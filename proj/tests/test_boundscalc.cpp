#include <doctest.h>

#include "support.hpp"
#include "vfk/boundscalc.hpp"
#include "vfk/error.hpp"

using namespace vfk;
using namespace vfk::testing;

namespace {

void check_relations(const BoundSet& b) {
  CHECK(b.R == (3 * b.k * b.K + 1) / 2);
  CHECK(b.phi_len == 4 * (b.R + 1) * (b.Theta + 1) * (b.Theta + 1) * b.Xi);
  CHECK(b.Lambda == 2 * (b.R + 1) * (b.Theta + 1) * b.Theta * b.Xi + b.Theta);
  CHECK(b.Lambda < b.phi_len / 2 + 1);
  for (const auto& [label, value] : b.rows()) {
    INFO(label);
    CHECK(value > 0);
  }
}

}  // namespace

TEST_CASE("presentation bounds for D∞") {
  const BoundSet b = bounds_for_presentation(load_presentation("dinf.json"));
  CHECK(b.source == BoundSet::Source::Presentation);
  CHECK(b.N == 24);
  CHECK(b.d == 4);
  CHECK(b.k == 50);
  CHECK(b.K == 576);
  CHECK(b.R == 43200);
  CHECK(b.Xi == 24);
  CHECK(b.Theta == 24);
  REQUIRE(b.Xi_sharp);
  CHECK(*b.Xi_sharp == 2);
  CHECK(phi_length_bound(b) == BigInt("2592060000"));
  check_relations(b);
}

TEST_CASE("presentation bounds for Z/2") {
  const BoundSet b = bounds_for_presentation(load_presentation("z2.json"));
  CHECK(b.k == 18);
  CHECK(b.K == 64);
  CHECK(b.R == 1728);
  CHECK(b.phi_len == 4481568);
  check_relations(b);
}

TEST_CASE("grammar bounds are computed exactly") {
  const BoundSet b = bounds_for_grammar_params(40, 5, 2);
  CHECK(b.source == BoundSet::Source::Grammar);
  CHECK(b.k == 32);
  CHECK(b.K == BigInt(1) << 99);
  CHECK(b.R == 48 * (BigInt(1) << 99));
  CHECK(b.Xi == BigInt(1) << 394);
  CHECK(b.Theta == BigInt(1) << 395);
  check_relations(b);
}

TEST_CASE("grammar bounds with no productions") {
  const BoundSet b = bounds_for_grammar_params(1, 0, 2);
  CHECK(b.k == 1);
  CHECK(b.K == 64);
  CHECK(b.R == 96);  // 3·64/2
  check_relations(b);
  const BoundSet one = bounds_for_grammar_params(1, 0, 1);
  CHECK(one.K == 1);
  CHECK(one.R == 2);  // 3/2 rounded up
}

TEST_CASE("phi length bound on unit inputs") {
  BoundSet b;
  b.R = b.Theta = b.Xi = 1;
  CHECK(phi_length_bound(b) == 32);
}

TEST_CASE("grammar bounds from a grammar") {
  const GrammarFile gf = load_grammar("wpz.json");
  try {
    bounds_for_grammar(gf.grammar);
    FAIL("accepted a grammar not in Chomsky normal form");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotCnf);
  }
  const Grammar cnf = to_cnf(gf.grammar);
  const BoundSet b = bounds_for_grammar(cnf);
  CHECK(b.k == BigInt(1) << cnf.productions.size());
  CHECK(b.d == 2);
  CHECK(b.N == cnf.size());
  check_relations(b);
}

TEST_CASE("bounds too large to write down are refused") {
  try {
    bounds_for_grammar_params(100, 30, 2);
    FAIL("computed a bound with more than 2^26 bits");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ExplosionGuard);
  }
  // Exponents up to the limit are still exact.
  const BoundSet b = bounds_for_grammar_params(100, 12, 2);
  CHECK(boost::multiprecision::msb(b.Theta) == 12 * 4096 + 11);
}

TEST_CASE("verified desk-scale decompositions respect the bounds") {
  const VfPresentation p = load_presentation("dinf.json");
  const BoundSet b = bounds_for_presentation(p);
  const GraphOfGroups g = load_gog("dinf-gog.json");
  const PresentationOracle group(p);
  const GogHom h = resolve_hom(g, group, hom_from_json(read_json_file(data_path("dinf-hom.json"))));
  REQUIRE(verify(g, group, h).ok);
  for (const auto& v : g.vertices()) CHECK(v.group.order() <= b.Xi);
  CHECK(g.edges().size() / 2 <= b.Theta);
  for (const auto& w : h.images) CHECK(w.size() <= b.phi_len);
}
