#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "support.hpp"
#include "vfk/error.hpp"
#include "vfk/langcore.hpp"

using namespace vfk;
using namespace vfk::testing;

namespace {

Grammar make_grammar(std::vector<std::string> vars, std::vector<std::string> terms,
                     std::vector<std::pair<std::string, std::vector<std::string>>> prods) {
  Grammar g;
  g.variables = std::move(vars);
  g.terminals.names = std::move(terms);
  for (const auto& [lhs, rhs] : prods) {
    Production p;
    p.lhs = static_cast<int>(std::find(g.variables.begin(), g.variables.end(), lhs) - g.variables.begin());
    for (const auto& s : rhs) {
      auto v = std::find(g.variables.begin(), g.variables.end(), s);
      if (v != g.variables.end()) {
        p.body.push_back({false, static_cast<int>(v - g.variables.begin())});
      } else {
        p.body.push_back({true, g.terminals.at(s)});
      }
    }
    g.productions.push_back(p);
  }
  g.validate();
  return g;
}

Grammar wpz() { return load_grammar("wpz.json").grammar; }

bool balanced(const Word& w) {
  return std::count(w.begin(), w.end(), 0) == std::count(w.begin(), w.end(), 1);
}

// Nfa over {a, A} for (a A)*.
Nfa a_abar_star(const Alphabet& sigma) {
  Nfa n;
  n.alphabet = sigma;
  n.num_states = 2;
  n.transitions = {{0, 0, 1}, {1, 1, 0}};
  n.initials = {0};
  n.finals = {0};
  return n;
}

Nfa star_of(const Alphabet& sigma, const Word& loop) {
  Nfa n;
  n.alphabet = sigma;
  n.num_states = static_cast<int>(std::max<std::size_t>(loop.size(), 1));
  for (std::size_t i = 0; i < loop.size(); ++i)
    n.transitions.push_back({static_cast<int>(i), loop[i], static_cast<int>((i + 1) % loop.size())});
  n.initials = {0};
  n.finals = {0};
  return n;
}

// All words of L(n) with length ≤ max_len, by walking the transitions
// (the NFAs used here have no epsilon moves).
std::vector<Word> nfa_words(const Nfa& n, int max_len) {
  std::set<Word> out;
  Word w;
  auto walk = [&](auto&& self, int state) -> void {
    if (std::find(n.finals.begin(), n.finals.end(), state) != n.finals.end()) out.insert(w);
    if (static_cast<int>(w.size()) == max_len) return;
    for (const auto& t : n.transitions) {
      if (t.from != state) continue;
      w.push_back(t.letter);
      self(self, t.to);
      w.pop_back();
    }
  };
  for (int q : n.initials) walk(walk, q);
  return {out.begin(), out.end()};
}

}  // namespace

TEST_CASE("alphabet parse and render") {
  Alphabet a{{"t", "t^-", "s"}};
  CHECK(a.parse("t s t^-") == Word{0, 2, 1});
  CHECK(a.render(Word{2, 0}) == "s t");
  CHECK_THROWS_AS(a.parse("u"), Error);
}

TEST_CASE("grammar validation rejects undeclared symbols") {
  Grammar g;
  g.variables = {"S"};
  g.terminals.names = {"a"};
  g.productions = {{0, {{true, 3}}}};
  CHECK_THROWS_AS(g.validate(), Error);
  g.productions = {{0, {{false, 0}}}};
  g.start = 2;
  CHECK_THROWS_AS(g.validate(), Error);
}

TEST_CASE("grammar size counts variables, terminals and body lengths") {
  CHECK(wpz().size() == 1 + 2 + (2 + 3 + 3 + 0));
}

TEST_CASE("the epsilon grammar is already in CNF") {
  const Grammar g = make_grammar({"S"}, {"a"}, {{"S", {}}});
  CHECK(g.is_cnf());
  const Grammar c = to_cnf(g);
  CHECK(c.is_cnf());
  CHECK(cyk_member(c, Word{}));
  CHECK_FALSE(cyk_member(c, Word{0}));
}

TEST_CASE("unit chains collapse to a terminal production") {
  const Grammar g = make_grammar({"S", "A"}, {"a"}, {{"S", {"A"}}, {"A", {"a"}}});
  CHECK_FALSE(g.is_cnf());
  const Grammar c = to_cnf(g);
  CHECK(c.is_cnf());
  CHECK(cyk_member(c, Word{0}));
  CHECK_FALSE(cyk_member(c, Word{}));
  CHECK_FALSE(cyk_member(c, Word{0, 0}));
  CHECK(c.productions.size() == 1);
}

TEST_CASE("CYK rejects grammars outside CNF") {
  CHECK_THROWS_AS(cyk_member(wpz(), Word{}), Error);
}

TEST_CASE("CNF of the WP(Z) grammar matches the letter-count oracle up to length 8") {
  const Grammar c = to_cnf(wpz());
  CHECK(c.is_cnf());
  CHECK(cyk_member(c, Word{0, 1}));
  CHECK_FALSE(cyk_member(c, Word{0, 0}));
  CHECK(cyk_member(c, Word{}));
  for_each_word(2, 8, [&](const Word& w) { REQUIRE(cyk_member(c, w) == balanced(w)); });
}

TEST_CASE("grammar to PDA preserves the language") {
  const Grammar g = wpz();
  const Grammar c = to_cnf(g);
  const Pda m = grammar_to_pda(g);
  m.validate();
  CHECK(pda_accepts(m, Word{}));
  CHECK(pda_accepts(m, Word{0, 1, 0, 1}));
  for_each_word(2, 6, [&](const Word& w) { REQUIRE(pda_accepts(m, w) == cyk_member(c, w)); });

  const Grammar unit = make_grammar({"S", "A"}, {"a"}, {{"S", {"A"}}, {"A", {"a"}}});
  const Pda mu = grammar_to_pda(unit);
  for_each_word(1, 4, [&](const Word& w) { REQUIRE(pda_accepts(mu, w) == (w.size() == 1)); });
}

TEST_CASE("configuration simulation agrees with the exact decision") {
  const Pda m = grammar_to_pda(to_cnf(wpz()));
  for_each_word(2, 5, [&](const Word& w) { REQUIRE(pda_simulate(m, w, 12) == balanced(w)); });
}

TEST_CASE("PDA to grammar conversion keeps the language") {
  const Pda m = grammar_to_pda(to_cnf(wpz()));
  const Grammar back = to_cnf(pda_to_grammar(m));
  for_each_word(2, 6, [&](const Word& w) { REQUIRE(cyk_member(back, w) == balanced(w)); });
}

TEST_CASE("push normalisation keeps the language") {
  // Reading a pushes two counters, reading A pops one; acceptance needs
  // the counters used up exactly. Pushes on a have length three.
  Pda m;
  m.num_states = 2;
  m.input = wpz().terminals;
  m.stack_size = 2;
  m.finals = {1};
  m.transitions = {{0, 0, 0, 0, {1, 1, 0}}, {0, 0, 1, 0, {1, 1, 1}}, {0, 1, 1, 0, {}}, {0, -1, 0, 1, {0}}};
  auto oracle = [](const Word& w) {
    int height = 0;
    for (int a : w) {
      height += a == 0 ? 2 : -1;
      if (height < 0) return false;
    }
    return height == 0;
  };
  CHECK(m.max_push() == 3);
  const Pda n = normalize_pushes(m);
  CHECK(n.max_push() <= 2);
  for_each_word(2, 7, [&](const Word& w) {
    REQUIRE(pda_accepts(m, w) == oracle(w));
    REQUIRE(pda_accepts(n, w) == oracle(w));
  });
}

TEST_CASE("inverse homomorphism") {
  const Pda wp = grammar_to_pda(wpz());
  SUBCASE("empty image over an epsilon-accepting PDA gives a star") {
    const Grammar eps = make_grammar({"S"}, {"a"}, {{"S", {}}});
    const Pda m = inverse_hom(grammar_to_pda(eps), Alphabet{{"u"}}, {Word{}});
    for (int n = 0; n <= 5; ++n) CHECK(pda_accepts(m, Word(n, 0)));
  }
  SUBCASE("doubling images over WP(Z)") {
    const Pda m = inverse_hom(wp, Alphabet{{"p", "q"}}, {Word{0, 0}, Word{1, 1}});
    CHECK(pda_accepts(m, Word{0, 1}));
    CHECK_FALSE(pda_accepts(m, Word{0, 0}));
  }
  SUBCASE("u ↦ s s over D∞") {
    const VfPresentation d = load_presentation("dinf.json");
    const int s = d.sigma().at("s");
    const Pda m = inverse_hom(d.wp_pda(), Alphabet{{"u"}}, {Word{s, s}});
    CHECK(pda_accepts(m, Word{0}));
    CHECK(pda_accepts(m, Word{}));
  }
  SUBCASE("membership of u equals membership of h(u) for |u| ≤ 5") {
    const std::vector<Word> images{Word{0, 0}, Word{1}, Word{}, Word{1, 0, 1}};
    const Pda m = inverse_hom(wp, Alphabet{{"p", "q", "e", "r"}}, images);
    for_each_word(4, 5, [&](const Word& u) {
      Word h;
      for (int a : u) h.insert(h.end(), images[a].begin(), images[a].end());
      REQUIRE(pda_accepts(m, u) == balanced(h));
    });
  }
}

TEST_CASE("intersection with regular languages") {
  const Grammar g = wpz();
  const Pda wp = grammar_to_pda(g);
  SUBCASE("universal NFA") {
    const Pda m = intersect_pda_nfa(wp, Nfa::universal(g.terminals));
    for_each_word(2, 6, [&](const Word& w) { REQUIRE(pda_accepts(m, w) == balanced(w)); });
  }
  SUBCASE("empty NFA") { CHECK(pda_empty(intersect_pda_nfa(wp, Nfa::empty_language(g.terminals)))); }
  SUBCASE("(a A)*") {
    const Pda m = intersect_pda_nfa(wp, a_abar_star(g.terminals));
    CHECK(pda_accepts(m, Word{0, 1}));
    CHECK_FALSE(pda_accepts(m, Word{1, 0}));
  }
  SUBCASE("alphabet mismatch") {
    CHECK_THROWS_AS(intersect_pda_nfa(wp, Nfa::universal(Alphabet{{"x"}})), Error);
  }
}

TEST_CASE("emptiness") {
  Pda none;
  none.num_states = 1;
  none.input = Alphabet{{"a"}};
  CHECK(pda_empty(none));

  const Grammar g = wpz();
  const Pda wp = grammar_to_pda(g);
  CHECK_FALSE(pda_empty(wp));

  Nfa plus;
  plus.alphabet = g.terminals;
  plus.num_states = 2;
  plus.transitions = {{0, 0, 1}, {1, 0, 1}};
  plus.initials = {0};
  plus.finals = {1};
  const Pda m = intersect_pda_nfa(wp, plus);
  CHECK(pda_empty(m));
  const Grammar triples = to_cnf(pda_to_grammar(m));
  for_each_word(2, 8, [&](const Word& w) { REQUIRE_FALSE(cyk_member(triples, w)); });
}

TEST_CASE("emptiness agrees with bounded search on random small PDAs") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    Pda m;
    m.num_states = 3;
    m.input = Alphabet{{"a", "b"}};
    m.stack_size = 2;
    m.initial = 0;
    if (rng() % 4) m.finals = {static_cast<int>(rng() % 3)};
    const int nt = 1 + static_cast<int>(rng() % 6);
    for (int i = 0; i < nt; ++i) {
      PdaTransition t;
      t.from = static_cast<int>(rng() % 3);
      t.to = static_cast<int>(rng() % 3);
      t.input = static_cast<int>(rng() % 3) - 1;
      t.top = static_cast<int>(rng() % 2);
      const int len = static_cast<int>(rng() % 3);
      for (int k = 0; k < len; ++k) t.push.push_back(static_cast<int>(rng() % 2));
      // Keep the bottom marker in place.
      if (t.top == 0) {
        t.push.erase(std::remove(t.push.begin(), t.push.end(), 0), t.push.end());
        t.push.push_back(0);
      } else {
        t.push.erase(std::remove(t.push.begin(), t.push.end(), 0), t.push.end());
      }
      m.transitions.push_back(t);
    }
    m.validate();
    // |Q|·|Γ|² = 12 bounds the shortest accepted word for these shapes.
    bool found = false;
    for_each_word(2, 12, [&](const Word& w) {
      if (!found && pda_simulate(m, w, 40)) found = true;
    });
    INFO("trial " << trial);
    CHECK(pda_empty(m) == !found);
  }
}

TEST_CASE("rational subset membership") {
  const VfPresentation d = load_presentation("dinf.json");
  const Pda dwp = d.wp_pda();
  const auto dinv = d.involution();
  const int s = d.sigma().at("s"), t = d.sigma().at("t");
  const Nfa s_star = star_of(d.sigma(), Word{s});
  CHECK(rational_member(dwp, dinv, Word{s, s}, s_star));
  CHECK_FALSE(rational_member(dwp, dinv, Word{t}, s_star));

  const VfPresentation z = load_presentation("z.json");
  const int a = z.sigma().at("t"), ab = z.sigma().at("t^-");
  const Nfa even = star_of(z.sigma(), Word{a, a});
  CHECK_FALSE(rational_member(z.wp_pda(), z.involution(), Word{a, ab, a}, even));
  CHECK(rational_member(z.wp_pda(), z.involution(), Word{a, a}, even));
}

TEST_CASE("rational membership agrees with subset enumeration") {
  const VfPresentation d = load_presentation("dinf.json");
  const int s = d.sigma().at("s"), t = d.sigma().at("t"), tb = d.sigma().at("t^-");
  const std::vector<std::pair<Nfa, std::vector<Word>>> cases{
      {star_of(d.sigma(), Word{t, t, s}), {Word{}, Word{s}, Word{t, t, s}, Word{s, t, t}, Word{t}, Word{t, s, t}}},
      {star_of(d.sigma(), Word{t, s, t}), {Word{}, Word{s}, Word{t, t}, Word{tb, s, tb}, Word{s, s, s}}},
  };
  for (const auto& [n, words] : cases) {
    std::set<NormalForm> subset;
    for (const Word& w : nfa_words(n, 12)) subset.insert(d.normal_form(w));
    for (const Word& w : words) {
      CHECK(rational_member(d.wp_pda(), d.involution(), w, n) == (subset.count(d.normal_form(w)) > 0));
    }
  }
}

TEST_CASE("word inversion uses the involution") {
  const std::vector<int> inv{1, 0, 2};
  CHECK(invert_word(Word{0, 2, 0}, inv) == Word{1, 2, 1});
}

TEST_CASE("NFA helpers") {
  const Alphabet ab{{"a", "b"}};
  const Nfa one = Nfa::single_word(ab, Word{0, 1});
  CHECK(one.accepts(Word{0, 1}));
  CHECK_FALSE(one.accepts(Word{0}));
  const Nfa pre = prepend_word(one, Word{1, 1});
  CHECK(pre.accepts(Word{1, 1, 0, 1}));
  CHECK_FALSE(pre.accepts(Word{0, 1}));
  const Nfa both = intersect_nfa(Nfa::universal(ab), star_of(ab, Word{0, 1}));
  CHECK(both.accepts(Word{0, 1, 0, 1}));
  CHECK_FALSE(both.accepts(Word{1}));
  CHECK_THROWS_AS(intersect_nfa(one, Nfa::universal(Alphabet{{"a"}})), Error);
}
