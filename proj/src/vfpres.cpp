#include "vfk/vfpres.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "vfk/error.hpp"

namespace vfk {

namespace {

bool freely_reduced(const Word& w, const VfPresentation& p) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i + 1] == p.free_inverse(w[i])) return false;
  return true;
}

}  // namespace

VfPresentation VfPresentation::validate(const RawPresentation& raw) {
  VfPresentation p;
  p.raw_ = raw;
  p.nx_ = static_cast<int>(raw.X.size());

  if (std::count(raw.S.begin(), raw.S.end(), "1") != 1) {
    throw Error(ErrorCode::InvalidInput, "S must contain \"1\" exactly once");
  }
  p.rep_names_.push_back("1");
  for (const auto& s : raw.S)
    if (s != "1") p.rep_names_.push_back(s);
  const int ns = p.num_reps();

  for (const auto& x : raw.X) p.sigma_.names.push_back(x);
  for (const auto& x : raw.X) p.sigma_.names.push_back(x + kInverseSuffix);
  for (int r = 1; r < ns; ++r) p.sigma_.names.push_back(p.rep_names_[r]);
  for (int r = 1; r < ns; ++r) p.sigma_.names.push_back(p.rep_names_[r] + kInverseSuffix);
  std::set<std::string> distinct(p.sigma_.names.begin(), p.sigma_.names.end());
  distinct.insert("1");
  if (distinct.size() != p.sigma_.names.size() + 1) {
    throw Error(ErrorCode::InvalidInput, "generator and representative names must be distinct (including inverses)");
  }
  for (const auto& name : p.sigma_.names) {
    if (name.empty() || name.find(' ') != std::string::npos) {
      throw Error(ErrorCode::InvalidInput, "letter names must be nonempty and contain no spaces");
    }
  }

  auto rep_index = [&](const std::string& name) {
    auto it = std::find(p.rep_names_.begin(), p.rep_names_.end(), name);
    if (it == p.rep_names_.end()) throw Error(ErrorCode::UnknownSymbol, "'" + name + "' is not in S");
    return static_cast<int>(it - p.rep_names_.begin());
  };

  const int nsigma = p.sigma_.size();
  p.table_.assign(ns, std::vector<Rule>(nsigma));
  std::vector<std::vector<bool>> given(ns, std::vector<bool>(nsigma, false));
  for (const auto& rule : raw.rules) {
    const int r = rep_index(rule.r);
    if (r == 0) throw Error(ErrorCode::InvalidInput, "rules for \"1\" are implicit and must not be given");
    const int a = p.sigma_.at(rule.a);
    if (p.is_rep_inverse_letter(a)) {
      throw Error(ErrorCode::InvalidInput, "rules for inverse representatives are derived, not given");
    }
    if (given[r][a]) {
      throw Error(ErrorCode::NotConfluent, "two rules for (" + rule.r + ", " + rule.a + ")");
    }
    given[r][a] = true;
    Rule out;
    for (const auto& letter : rule.word) {
      const int c = p.sigma_.at(letter);
      if (!p.is_free_letter(c)) {
        throw Error(ErrorCode::InvalidInput, "rule word letter '" + letter + "' is not in X or its inverses");
      }
      out.word.push_back(c);
    }
    if (!freely_reduced(out.word, p)) {
      throw Error(ErrorCode::NonReducedRuleWord, "rule (" + rule.r + ", " + rule.a + ")");
    }
    out.rep = rep_index(rule.rep);
    p.table_[r][a] = std::move(out);
  }
  for (int r = 1; r < ns; ++r) {
    for (int a = 0; a < 2 * p.nx_ + ns - 1; ++a) {
      if (!given[r][a]) {
        throw Error(ErrorCode::InvalidInput,
                    "rule table is not total: missing (" + p.rep_names_[r] + ", " + p.sigma_.names[a] + ")");
      }
    }
  }
  for (int f = 0; f < 2 * p.nx_; ++f) p.table_[0][f] = Rule{{f}, 0};
  for (int s = 1; s < ns; ++s) p.table_[0][p.rep_letter(s)] = Rule{{}, s};

  for (int r = 1; r < ns; ++r) {
    bool has_inverse = false;
    for (int r2 = 1; r2 < ns; ++r2)
      if (p.table_[r2][p.rep_letter(r)].rep == 0) has_inverse = true;
    if (!has_inverse) throw Error(ErrorCode::NotAGroup, p.rep_names_[r]);
  }

  // Critical pairs: overlaps r a b with a ∈ S∖{1}, and r x x̄.
  auto reduct = [&](const Word& prefix, int r, int a, const Word& suffix) {
    Word out = prefix;
    const Rule& rule = p.table_[r][a];
    out.insert(out.end(), rule.word.begin(), rule.word.end());
    if (rule.rep != 0) out.push_back(p.rep_letter(rule.rep));
    out.insert(out.end(), suffix.begin(), suffix.end());
    return out;
  };
  auto check_pair = [&](const Word& source, const Word& left, const Word& right) {
    const NormalForm n1 = p.normal_form(left);
    const NormalForm n2 = p.normal_form(right);
    if (n1 != n2) {
      throw Error(ErrorCode::NotConfluent, "'" + p.sigma_.render(source) + "' reduces to " + p.render(n1) +
                                               " and to " + p.render(n2));
    }
  };
  for (int r = 1; r < ns; ++r) {
    const int rl = p.rep_letter(r);
    for (int s = 1; s < ns; ++s) {
      const int sl = p.rep_letter(s);
      for (int b = 0; b < 2 * p.nx_ + ns - 1; ++b) {
        check_pair({rl, sl, b}, reduct({}, r, sl, {b}), reduct({rl}, s, b, {}));
      }
    }
    for (int f = 0; f < 2 * p.nx_; ++f) {
      check_pair({rl, f, p.free_inverse(f)}, reduct({}, r, f, {p.free_inverse(f)}), {rl});
    }
  }

  // Formal inverses of representatives: r s̄ = x_{t,s}^{-1} t where s_{t,s} = r.
  for (int s = 1; s < ns; ++s) {
    std::vector<int> preimage(ns, -1);
    for (int t = 0; t < ns; ++t) {
      const int image = p.table_[t][p.rep_letter(s)].rep;
      if (preimage[image] != -1) {
        throw Error(ErrorCode::NotAGroup, "right multiplication by " + p.rep_names_[s] + " is not a bijection of S");
      }
      preimage[image] = t;
    }
    for (int r = 0; r < ns; ++r) {
      const int t = preimage[r];
      const Word& x = p.table_[t][p.rep_letter(s)].word;
      Rule out;
      for (auto it = x.rbegin(); it != x.rend(); ++it) out.word.push_back(p.free_inverse(*it));
      out.rep = t;
      p.table_[r][p.rep_inverse_letter(s)] = std::move(out);
    }
  }
  return p;
}

std::vector<int> VfPresentation::involution() const {
  std::vector<int> inv(sigma_.size());
  for (int f = 0; f < 2 * nx_; ++f) inv[f] = free_inverse(f);
  for (int r = 1; r < num_reps(); ++r) {
    inv[rep_letter(r)] = rep_inverse_letter(r);
    inv[rep_inverse_letter(r)] = rep_letter(r);
  }
  return inv;
}

void VfPresentation::push_letter(NormalForm& nf, int letter) const {
  if (letter < 0 || letter >= sigma_.size()) throw Error(ErrorCode::UnknownSymbol, "letter index out of range");
  const Rule& rule = table_[nf.rep][letter];
  for (int c : rule.word) {
    if (!nf.free_part.empty() && nf.free_part.back() == free_inverse(c)) {
      nf.free_part.pop_back();
    } else {
      nf.free_part.push_back(c);
    }
  }
  nf.rep = rule.rep;
}

NormalForm VfPresentation::normal_form(std::span<const int> word) const {
  NormalForm nf;
  for (int a : word) push_letter(nf, a);
  return nf;
}

NormalForm VfPresentation::parse_normal_form(const std::string& word) const {
  return normal_form(sigma_.parse(word));
}

bool VfPresentation::word_problem(std::span<const int> word) const {
  const NormalForm nf = normal_form(word);
  return nf.rep == 0 && nf.free_part.empty();
}

Word VfPresentation::to_word(const NormalForm& nf) const {
  Word w = nf.free_part;
  if (nf.rep != 0) w.push_back(rep_letter(nf.rep));
  return w;
}

std::string VfPresentation::render(const NormalForm& nf) const {
  const std::string free = nf.free_part.empty() ? "ε" : sigma_.render(nf.free_part);
  return "(" + free + ", " + rep_names_[nf.rep] + ")";
}

std::uint64_t VfPresentation::size() const {
  const std::uint64_t s = static_cast<std::uint64_t>(num_reps());
  const std::uint64_t x = static_cast<std::uint64_t>(nx_);
  return s * (2 * x + 2 * s) * (max_rule_length() + 1);
}

std::size_t VfPresentation::max_rule_length() const {
  std::size_t m = 0;
  for (const auto& rule : raw_.rules) m = std::max(m, rule.word.size());
  return m;
}

Pda VfPresentation::wp_pda() const {
  // Stack: 0 is the bottom marker, 1 + f a free letter, 1 + 2|X| + f the
  // same letter sitting directly on the bottom marker. Idle states
  // 2r + e record the representative r and whether the stack is empty.
  const int nfree = 2 * nx_;
  auto plain = [&](int f) { return 1 + f; };
  auto flagged = [&](int f) { return 1 + nfree + f; };
  auto idle = [&](int r, int e) { return 2 * r + e; };

  Pda m;
  m.input = sigma_;
  m.stack_size = 1 + 2 * nfree;
  m.initial = idle(0, 1);
  m.finals = {idle(0, 1)};
  m.num_states = 2 * num_reps();

  // Processing states for position i >= 1 of rule (r, a), per emptiness flag.
  std::map<std::tuple<int, int, int, int>, int> process;
  auto proc = [&](int r, int a, int i, int e) {
    auto [it, inserted] = process.emplace(std::make_tuple(r, a, i, e), m.num_states);
    if (inserted) ++m.num_states;
    return it->second;
  };
  auto target = [&](int r, int a, int i, int e) {
    const Rule& rule = table_[r][a];
    return i == static_cast<int>(rule.word.size()) ? idle(rule.rep, e) : proc(r, a, i, e);
  };
  // Emits the moves that feed rule letter i from `from` with flag e.
  auto feed = [&](int from, int input, int r, int a, int i, int e) {
    const int c = table_[r][a].word[i];
    if (e == 1) {
      m.transitions.push_back({from, input, Pda::kBottom, target(r, a, i + 1, 0), {flagged(c), Pda::kBottom}});
      return;
    }
    for (int f = 0; f < nfree; ++f) {
      for (int z : {plain(f), flagged(f)}) {
        if (f == free_inverse(c)) {
          m.transitions.push_back({from, input, z, target(r, a, i + 1, z == flagged(f) ? 1 : 0), {}});
        } else {
          m.transitions.push_back({from, input, z, target(r, a, i + 1, 0), {plain(c), z}});
        }
      }
    }
  };

  for (int r = 0; r < num_reps(); ++r) {
    for (int a = 0; a < sigma_.size(); ++a) {
      const Rule& rule = table_[r][a];
      for (int e : {0, 1}) {
        if (rule.word.empty()) {
          if (e == 1) {
            m.transitions.push_back({idle(r, 1), a, Pda::kBottom, idle(rule.rep, 1), {Pda::kBottom}});
          } else {
            for (int z = 1; z < m.stack_size; ++z) m.transitions.push_back({idle(r, 0), a, z, idle(rule.rep, 0), {z}});
          }
          continue;
        }
        feed(idle(r, e), a, r, a, 0, e);
      }
      for (int i = 1; i < static_cast<int>(rule.word.size()); ++i)
        for (int e : {0, 1}) feed(proc(r, a, i, e), -1, r, a, i, e);
    }
  }
  return m;
}

NormalForm VfPresentation::rewrite(std::span<const int> input, Strategy strategy, std::mt19937* rng) const {
  Word w(input.begin(), input.end());
  for (int a : w)
    if (a < 0 || a >= sigma_.size()) throw Error(ErrorCode::UnknownSymbol, "letter index out of range");
  const std::size_t step_cap = 10'000'000;
  for (std::size_t step = 0;; ++step) {
    if (step > step_cap) throw Error(ErrorCode::ExplosionGuard, "rewriting did not terminate within the step cap");
    std::vector<std::size_t> redexes;
    for (std::size_t i = 0; i < w.size(); ++i) {
      const bool binary = is_rep_letter(w[i]) && i + 1 < w.size();
      const bool unary = is_rep_inverse_letter(w[i]);
      const bool cancel = is_free_letter(w[i]) && i + 1 < w.size() && w[i + 1] == free_inverse(w[i]);
      if (binary || unary || cancel) redexes.push_back(i);
    }
    if (redexes.empty()) break;
    std::size_t i = 0;
    switch (strategy) {
      case Strategy::Leftmost:
        i = redexes.front();
        break;
      case Strategy::Rightmost:
        i = redexes.back();
        break;
      case Strategy::Random: {
        if (!rng) throw Error(ErrorCode::InvalidInput, "random strategy needs a generator");
        std::uniform_int_distribution<std::size_t> pick(0, redexes.size() - 1);
        i = redexes[pick(*rng)];
        break;
      }
    }
    Word replacement;
    std::size_t consumed = 0;
    const Rule* rule = nullptr;
    if (is_free_letter(w[i])) {
      consumed = 2;
    } else if (is_rep_letter(w[i])) {
      rule = &table_[w[i] - 2 * nx_ + 1][w[i + 1]];
      consumed = 2;
    } else {
      rule = &table_[0][w[i]];
      consumed = 1;
    }
    if (rule) {
      replacement = rule->word;
      if (rule->rep != 0) replacement.push_back(rep_letter(rule->rep));
    }
    w.erase(w.begin() + static_cast<std::ptrdiff_t>(i), w.begin() + static_cast<std::ptrdiff_t>(i + consumed));
    w.insert(w.begin() + static_cast<std::ptrdiff_t>(i), replacement.begin(), replacement.end());
  }
  NormalForm nf;
  for (int a : w) {
    if (is_free_letter(a)) {
      nf.free_part.push_back(a);
    } else {
      nf.rep = a - 2 * nx_ + 1;
    }
  }
  return nf;
}

}  // namespace vfk
