#include <doctest.h>

#include <functional>
#include <map>
#include <random>

#include "support.hpp"
#include "vfk/error.hpp"
#include "vfk/vfpres.hpp"

using namespace vfk;
using namespace vfk::testing;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::InvalidInput;
}

RawPresentation dinf_raw() { return presentation_from_json(read_json_file(data_path("dinf.json"))); }

Word random_word(std::mt19937& rng, int sigma, int max_len) {
  Word w(rng() % (max_len + 1));
  for (int& a : w) a = static_cast<int>(rng() % sigma);
  return w;
}

// Depth-first walk over all words up to max_len, carrying a state that is
// extended one letter at a time.
template <class State, class Step, class Visit>
void walk_words(int sigma, int max_len, const State& root, Step step, Visit visit) {
  Word w;
  auto rec = [&](auto&& self, const State& s) -> void {
    visit(w, s);
    if (static_cast<int>(w.size()) == max_len) return;
    for (int a = 0; a < sigma; ++a) {
      w.push_back(a);
      self(self, step(s, a));
      w.pop_back();
    }
  };
  rec(rec, root);
}

}  // namespace

TEST_CASE("the Z/2 presentation validates") {
  const VfPresentation p = load_presentation("z2.json");
  CHECK(p.sigma().names == std::vector<std::string>{"s", "s^-"});
  CHECK(p.size() == 8);
}

TEST_CASE("the D∞ presentation validates and has size 24") {
  const VfPresentation p = load_presentation("dinf.json");
  CHECK(p.sigma().names == std::vector<std::string>{"t", "t^-", "s", "s^-"});
  CHECK(p.size() == 24);
  CHECK(p.max_rule_length() == 1);
}

TEST_CASE("the free group on one generator has size 4") {
  CHECK(load_presentation("z.json").size() == 4);
  CHECK(load_presentation("free2.json").size() == 6);
}

TEST_CASE("the swapped D∞ rules are not confluent") {
  const auto raw = presentation_from_json(read_json_file(data_path("dinf-bad.json")));
  try {
    VfPresentation::validate(raw);
    FAIL("accepted a non-confluent table");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotConfluent);
    CHECK(std::string(e.what()).find("reduces to") != std::string::npos);
  }
}

TEST_CASE("validation errors") {
  SUBCASE("representative without an inverse") {
    RawPresentation raw{{}, {"1", "s"}, {{"s", "s", {}, "s"}}};
    CHECK(code_of([&] { VfPresentation::validate(raw); }) == ErrorCode::NotAGroup);
  }
  SUBCASE("rule word not freely reduced") {
    RawPresentation raw = dinf_raw();
    raw.rules[0].word = {"t", "t^-", "t^-"};
    CHECK(code_of([&] { VfPresentation::validate(raw); }) == ErrorCode::NonReducedRuleWord);
  }
  SUBCASE("missing rule") {
    RawPresentation raw = dinf_raw();
    raw.rules.pop_back();
    CHECK(code_of([&] { VfPresentation::validate(raw); }) == ErrorCode::InvalidInput);
  }
  SUBCASE("duplicate rule") {
    RawPresentation raw = dinf_raw();
    raw.rules.push_back(raw.rules[0]);
    CHECK(code_of([&] { VfPresentation::validate(raw); }) == ErrorCode::NotConfluent);
  }
  SUBCASE("no identity representative") {
    RawPresentation raw{{}, {"s"}, {}};
    CHECK(code_of([&] { VfPresentation::validate(raw); }) == ErrorCode::InvalidInput);
  }
  SUBCASE("name clash with an inverse") {
    RawPresentation raw{{"t", "t^-"}, {"1"}, {}};
    CHECK(code_of([&] { VfPresentation::validate(raw); }) == ErrorCode::InvalidInput);
  }
  SUBCASE("unknown representative") {
    RawPresentation raw = dinf_raw();
    raw.rules[0].rep = "q";
    CHECK(code_of([&] { VfPresentation::validate(raw); }) == ErrorCode::UnknownSymbol);
  }
}

TEST_CASE("normal forms on D∞") {
  const VfPresentation p = load_presentation("dinf.json");
  const Alphabet& s = p.sigma();
  CHECK(p.render(p.normal_form(Word{})) == "(ε, 1)");
  const NormalForm sts = p.normal_form(s.parse("s t s"));
  CHECK(sts.free_part == s.parse("t^-"));
  CHECK(sts.rep == 0);
  CHECK(p.render(sts) == "(t^-, 1)");
  CHECK(p.normal_form(s.parse("t s t s")) == NormalForm{});
  CHECK(p.render(p.normal_form(s.parse("t s"))) == "(t, s)");
  CHECK(p.parse_normal_form("t s") == p.normal_form(s.parse("t s")));
  CHECK(p.to_word(p.normal_form(s.parse("s t"))) == s.parse("t^- s"));
  CHECK_THROWS_AS(s.parse("u"), Error);
}

TEST_CASE("word problem on D∞") {
  const VfPresentation p = load_presentation("dinf.json");
  const Alphabet& s = p.sigma();
  CHECK(p.word_problem(s.parse("t t^-")));
  CHECK(p.word_problem(s.parse("t s t s")));
  CHECK_FALSE(p.word_problem(s.parse("t s")));
  CHECK(p.word_problem(s.parse("s s^-")));
  CHECK(p.word_problem(s.parse("s^- s^-")));
}

TEST_CASE("wp_pda examples") {
  const VfPresentation z2 = load_presentation("z2.json");
  const Pda m2 = z2.wp_pda();
  CHECK(m2.is_deterministic());
  CHECK(pda_accepts(m2, z2.sigma().parse("s s")));
  CHECK_FALSE(pda_accepts(m2, z2.sigma().parse("s")));
  CHECK(pda_accepts(m2, Word{}));

  const VfPresentation d = load_presentation("dinf.json");
  const Pda md = d.wp_pda();
  CHECK(md.is_deterministic());
  CHECK(pda_accepts(md, d.sigma().parse("t s t s")));
  CHECK_FALSE(pda_accepts(md, d.sigma().parse("t s")));
  CHECK(pda_accepts(md, Word{}));
}

TEST_CASE("word problem agrees with the affine model of D∞ on all words up to length 10") {
  const VfPresentation p = load_presentation("dinf.json");
  const auto mats = dinf_matrices(p);
  using State = std::pair<NormalForm, Mat>;
  std::size_t count = 0;
  walk_words(
      p.sigma().size(), 10, State{NormalForm{}, kIdentity},
      [&](const State& st, int a) {
        State next = st;
        p.push_letter(next.first, a);
        next.second = mat_mul(next.second, mats[a]);
        return next;
      },
      [&](const Word&, const State& st) {
        ++count;
        REQUIRE((st.first == NormalForm{}) == (st.second == kIdentity));
      });
  CHECK(count == 1398101);  // (4^11 - 1) / 3
}

TEST_CASE("word problem agrees with parity on Z/2 up to length 10") {
  const VfPresentation p = load_presentation("z2.json");
  for_each_word(2, 10, [&](const Word& w) { REQUIRE(p.word_problem(w) == (w.size() % 2 == 0)); });
}

TEST_CASE("wp_pda agrees with the word problem on all words up to length 10") {
  for (const char* name : {"z2.json", "dinf.json", "z.json"}) {
    const VfPresentation p = load_presentation(name);
    const Pda m = p.wp_pda();
    PdaRunner runner(m, 16);
    using State = std::pair<NormalForm, std::vector<PdaConfig>>;
    walk_words(
        p.sigma().size(), 10, State{NormalForm{}, runner.start()},
        [&](const State& st, int a) {
          State next{st.first, runner.step(st.second, a)};
          p.push_letter(next.first, a);
          return next;
        },
        [&](const Word&, const State& st) {
          REQUIRE(st.second.size() == 1);
          REQUIRE(runner.accepting(st.second) == (st.first == NormalForm{}));
        });
  }
}

TEST_CASE("all rewriting strategies reach the same normal form") {
  std::mt19937 rng(11);
  for (const char* name : {"z2.json", "dinf.json", "z2z3.json", "free2.json"}) {
    const VfPresentation p = load_presentation(name);
    for (int i = 0; i < 300; ++i) {
      const Word w = random_word(rng, p.sigma().size(), 20);
      const NormalForm nf = p.normal_form(w);
      CHECK(p.rewrite(w, VfPresentation::Strategy::Leftmost) == nf);
      CHECK(p.rewrite(w, VfPresentation::Strategy::Rightmost) == nf);
      CHECK(p.rewrite(w, VfPresentation::Strategy::Random, &rng) == nf);
    }
  }
}

TEST_CASE("w times its formal inverse is trivial") {
  std::mt19937 rng(5);
  for (const char* name : {"z2.json", "dinf.json", "z2z3.json", "z.json"}) {
    const VfPresentation p = load_presentation(name);
    const auto inv = p.involution();
    for (int a = 0; a < p.sigma().size(); ++a) CHECK(inv[inv[a]] == a);
    for (int i = 0; i < 300; ++i) {
      Word w = random_word(rng, p.sigma().size(), 20);
      const Word wi = invert_word(w, inv);
      w.insert(w.end(), wi.begin(), wi.end());
      CHECK(p.word_problem(w));
    }
  }
}

TEST_CASE("Z/2 * Z/3 word problem agrees with PSL(2, Z) on every reachable state") {
  // Both models are deterministic left-to-right machines, so agreement on
  // all words up to length L follows from agreement on all (normal form,
  // matrix) pairs reachable within L letters.
  const VfPresentation p = load_presentation("z2z3.json");
  const Mat a{0, -1, 1, 0}, b{0, -1, 1, 1};
  const Mat b2 = mat_mul(b, b);
  std::map<std::string, Mat> m{{"a", a}, {"b", b}, {"b2", b2}, {"ab", mat_mul(a, b)}, {"ab2", mat_mul(a, b2)}};
  m["x"] = mat_mul(mat_mul(a, b), mat_mul(a, b2));
  m["y"] = mat_mul(mat_mul(a, b2), mat_mul(a, b));
  auto inverse = [](const Mat& x) { return Mat{x[3], -x[1], -x[2], x[0]}; };
  std::vector<Mat> mats(p.sigma().size());
  for (int i = 0; i < p.sigma().size(); ++i) {
    const std::string& name = p.sigma().names[i];
    const auto pos = name.find(kInverseSuffix);
    mats[i] = pos == std::string::npos ? m.at(name) : inverse(m.at(name.substr(0, pos)));
  }
  std::map<NormalForm, Mat> seen{{NormalForm{}, kIdentity}};
  std::map<Mat, NormalForm> back{{kIdentity, NormalForm{}}};
  std::vector<std::pair<NormalForm, Mat>> frontier{{NormalForm{}, kIdentity}};
  for (int depth = 0; depth < 6; ++depth) {
    std::vector<std::pair<NormalForm, Mat>> next;
    for (const auto& [nf, mat] : frontier) {
      for (int letter = 0; letter < p.sigma().size(); ++letter) {
        NormalForm n = nf;
        p.push_letter(n, letter);
        const Mat x = projective(mat_mul(mat, mats[letter]));
        auto [it, fresh] = seen.emplace(n, x);
        REQUIRE(it->second == x);
        auto [jt, fresh2] = back.emplace(x, n);
        REQUIRE(jt->second == n);
        if (fresh) next.emplace_back(n, x);
      }
    }
    frontier = std::move(next);
  }
  CHECK(seen.size() > 1000);
}
