#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <unordered_set>

#include "vfk/error.hpp"
#include "vfk/langcore.hpp"

namespace vfk {

void Pda::validate() const {
  auto check_state = [&](int s) {
    if (s < 0 || s >= num_states) throw Error(ErrorCode::InvalidInput, "PDA state out of range");
  };
  auto check_symbol = [&](int z) {
    if (z < 0 || z >= stack_size) throw Error(ErrorCode::InvalidInput, "PDA stack symbol out of range");
  };
  check_state(initial);
  for (int f : finals) check_state(f);
  for (const auto& t : transitions) {
    check_state(t.from);
    check_state(t.to);
    check_symbol(t.top);
    for (int z : t.push) check_symbol(z);
    if (t.input < -1 || t.input >= input.size()) throw Error(ErrorCode::InvalidInput, "PDA input letter out of range");
  }
}

std::size_t Pda::max_push() const {
  std::size_t m = 0;
  for (const auto& t : transitions) m = std::max(m, t.push.size());
  return m;
}

bool Pda::is_deterministic() const {
  std::map<std::tuple<int, int, int>, int> count;
  std::set<std::pair<int, int>> has_eps, has_input;
  for (const auto& t : transitions) {
    if (++count[{t.from, t.input, t.top}] > 1) return false;
    (t.input == -1 ? has_eps : has_input).insert({t.from, t.top});
  }
  for (const auto& key : has_eps)
    if (has_input.count(key)) return false;
  return true;
}

Pda normalize_pushes(const Pda& m) {
  Pda out = m;
  out.transitions.clear();
  for (const auto& t : m.transitions) {
    if (t.push.size() <= 2) {
      out.transitions.push_back(t);
      continue;
    }
    // Push the suffix first, then keep pushing one symbol on top of the
    // previous one through fresh states.
    const std::size_t n = t.push.size();
    int state = out.num_states++;
    out.transitions.push_back({t.from, t.input, t.top, state, {t.push[n - 2], t.push[n - 1]}});
    for (std::size_t i = n - 2; i-- > 0;) {
      const int next = i == 0 ? t.to : out.num_states++;
      out.transitions.push_back({state, -1, t.push[i + 1], next, {t.push[i], t.push[i + 1]}});
      state = next;
    }
  }
  return out;
}

Pda grammar_to_pda(const Grammar& g) {
  g.validate();
  const int nv = static_cast<int>(g.variables.size());
  auto symbol = [&](const GSymbol& s) { return s.terminal ? 1 + nv + s.id : 1 + s.id; };
  Pda m;
  m.num_states = 3;
  m.input = g.terminals;
  m.stack_size = 1 + nv + g.terminals.size();
  m.initial = 0;
  m.finals = {2};
  m.transitions.push_back({0, -1, Pda::kBottom, 1, {1 + g.start, Pda::kBottom}});
  for (const auto& p : g.productions) {
    PdaTransition t{1, -1, 1 + p.lhs, 1, {}};
    for (const auto& s : p.body) t.push.push_back(symbol(s));
    m.transitions.push_back(std::move(t));
  }
  for (int a = 0; a < g.terminals.size(); ++a) m.transitions.push_back({1, a, 1 + nv + a, 1, {}});
  m.transitions.push_back({1, -1, Pda::kBottom, 2, {Pda::kBottom}});
  return normalize_pushes(m);
}

Pda inverse_hom(const Pda& m, const Alphabet& delta, const std::vector<Word>& images) {
  if (static_cast<int>(images.size()) != delta.size()) {
    throw Error(ErrorCode::InvalidInput, "one image per letter is required");
  }
  const int q = m.num_states;
  std::vector<int> offset(delta.size() + 1, 0);
  for (int a = 0; a < delta.size(); ++a) offset[a + 1] = offset[a] + static_cast<int>(images[a].size());
  const int total = offset.back();
  // Buffer state: m is in state p and still has to read images[a][i..].
  auto buffer = [&](int p, int a, int i) { return q + p * total + offset[a] + i; };
  auto after = [&](int p, int a, int i) {
    return i == static_cast<int>(images[a].size()) ? p : buffer(p, a, i);
  };

  Pda out;
  out.num_states = q + q * total;
  out.input = delta;
  out.stack_size = m.stack_size;
  out.initial = m.initial;
  out.finals = m.finals;
  for (int p = 0; p < q; ++p)
    for (int z = 0; z < m.stack_size; ++z)
      for (int a = 0; a < delta.size(); ++a) out.transitions.push_back({p, a, z, after(p, a, 0), {z}});
  for (const auto& t : m.transitions) {
    if (t.input == -1) {
      out.transitions.push_back({t.from, -1, t.top, t.to, t.push});
      for (int a = 0; a < delta.size(); ++a)
        for (int i = 0; i < static_cast<int>(images[a].size()); ++i)
          out.transitions.push_back({buffer(t.from, a, i), -1, t.top, buffer(t.to, a, i), t.push});
      continue;
    }
    for (int a = 0; a < delta.size(); ++a)
      for (int i = 0; i < static_cast<int>(images[a].size()); ++i)
        if (images[a][i] == t.input)
          out.transitions.push_back({buffer(t.from, a, i), -1, t.top, after(t.to, a, i + 1), t.push});
  }
  return out;
}

Pda intersect_pda_nfa(const Pda& m, const Nfa& n) {
  if (m.input.size() != n.alphabet.size()) throw Error(ErrorCode::AlphabetMismatch, "alphabet sizes differ");
  std::vector<int> remap(n.alphabet.size());
  for (int a = 0; a < n.alphabet.size(); ++a) {
    auto b = m.input.find(n.alphabet.names[a]);
    if (!b) throw Error(ErrorCode::AlphabetMismatch, "letter '" + n.alphabet.names[a] + "' missing");
    remap[a] = *b;
  }
  std::vector<std::vector<std::size_t>> pda_out(m.num_states);
  for (std::size_t i = 0; i < m.transitions.size(); ++i) pda_out[m.transitions[i].from].push_back(i);
  // nfa_out[s][letter + 1]
  std::vector<std::vector<std::vector<int>>> nfa_out(n.num_states,
                                                     std::vector<std::vector<int>>(m.input.size() + 1));
  for (const auto& t : n.transitions) nfa_out[t.from][t.letter < 0 ? 0 : remap[t.letter] + 1].push_back(t.to);

  // State 0 is a fresh initial state; product states are numbered in BFS
  // order over the control graph (stack contents ignored).
  std::map<std::pair<int, int>, int> ids;
  std::vector<std::pair<int, int>> queue;
  auto id_of = [&](int p, int s) {
    auto [it, inserted] = ids.emplace(std::make_pair(p, s), static_cast<int>(queue.size()) + 1);
    if (inserted) queue.emplace_back(p, s);
    return it->second;
  };
  Pda out;
  out.input = m.input;
  out.stack_size = m.stack_size;
  out.initial = 0;
  for (int s : n.initials) out.transitions.push_back({0, -1, Pda::kBottom, id_of(m.initial, s), {Pda::kBottom}});
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const auto [p, s] = queue[i];
    const int self = static_cast<int>(i) + 1;
    for (std::size_t k : pda_out[p]) {
      const auto& t = m.transitions[k];
      if (t.input == -1) {
        out.transitions.push_back({self, -1, t.top, id_of(t.to, s), t.push});
        continue;
      }
      for (int s2 : nfa_out[s][t.input + 1]) out.transitions.push_back({self, t.input, t.top, id_of(t.to, s2), t.push});
    }
    for (int s2 : nfa_out[s][0])
      for (int z = 0; z < m.stack_size; ++z) out.transitions.push_back({self, -1, z, id_of(p, s2), {z}});
  }
  out.num_states = static_cast<int>(queue.size()) + 1;
  std::set<int> pf(m.finals.begin(), m.finals.end()), nf(n.finals.begin(), n.finals.end());
  for (std::size_t i = 0; i < queue.size(); ++i)
    if (pf.count(queue[i].first) && nf.count(queue[i].second)) out.finals.push_back(static_cast<int>(i) + 1);
  return out;
}

Grammar pda_to_grammar(const Pda& input) {
  const Pda m = input.max_push() > 2 ? normalize_pushes(input) : input;
  const int q = m.num_states + 1;  // last state is the drain
  const int drain = m.num_states;
  const int gamma = m.stack_size;
  Grammar g;
  g.terminals = m.input;
  g.variables.push_back("S");
  auto var = [&](int p, int z, int r) { return 1 + (p * gamma + z) * q + r; };
  for (int p = 0; p < q; ++p)
    for (int z = 0; z < gamma; ++z)
      for (int r = 0; r < q; ++r)
        g.variables.push_back("[" + std::to_string(p) + "," + std::to_string(z) + "," + std::to_string(r) + "]");
  g.start = 0;
  g.productions.push_back({0, {GSymbol{false, var(m.initial, Pda::kBottom, drain)}}});
  for (const auto& t : m.transitions) {
    std::vector<GSymbol> head;
    if (t.input >= 0) head.push_back(GSymbol{true, t.input});
    if (t.push.empty()) {
      g.productions.push_back({var(t.from, t.top, t.to), head});
    } else if (t.push.size() == 1) {
      for (int r = 0; r < q; ++r) {
        auto body = head;
        body.push_back(GSymbol{false, var(t.to, t.push[0], r)});
        g.productions.push_back({var(t.from, t.top, r), body});
      }
    } else {
      for (int s = 0; s < q; ++s) {
        for (int r = 0; r < q; ++r) {
          auto body = head;
          body.push_back(GSymbol{false, var(t.to, t.push[0], s)});
          body.push_back(GSymbol{false, var(s, t.push[1], r)});
          g.productions.push_back({var(t.from, t.top, r), body});
        }
      }
    }
  }
  for (int z = 0; z < gamma; ++z) {
    for (int f : m.finals) g.productions.push_back({var(f, z, drain), {}});
    g.productions.push_back({var(drain, z, drain), {}});
  }
  return g;
}

namespace {

// Worklist saturation of summaries (p, Z, r): from state p with Z on top,
// the automaton can reach state r having popped exactly Z. The drain state
// pops everything once a final state has been reached.
class Saturation {
 public:
  explicit Saturation(const Pda& m)
      : m_(m), q_(m.num_states + 1), gamma_(m.stack_size), drain_(m.num_states) {
    const std::size_t cells = static_cast<std::size_t>(q_) * gamma_;
    succ_.resize(cells);
    waiting_.resize(cells);
    push1_.resize(cells);
    push2_.resize(cells);
    const std::uint64_t total = static_cast<std::uint64_t>(cells) * q_;
    if (total <= (std::uint64_t{1} << 30)) dense_.assign(total, false);
  }

  bool nonempty() {
    for (const auto& t : m_.transitions) {
      if (t.push.size() == 1) {
        push1_[cell(t.to, t.push[0])].push_back({t.from, t.top, 0});
      } else if (t.push.size() == 2) {
        push2_[cell(t.to, t.push[0])].push_back({t.from, t.top, t.push[1]});
      }
    }
    for (const auto& t : m_.transitions)
      if (t.push.empty()) add(t.from, t.top, t.to);
    for (int z = 0; z < gamma_; ++z) {
      for (int f : m_.finals) add(f, z, drain_);
      add(drain_, z, drain_);
    }
    while (!work_.empty()) {
      if (found(m_.initial, Pda::kBottom, drain_)) return true;
      const auto [q, x, r] = work_.back();
      work_.pop_back();
      for (const auto& e : push1_[cell(q, x)]) add(e.p, e.z, r);
      for (const auto& e : push2_[cell(q, x)]) {
        waiting_[cell(r, e.y)].push_back({e.p, e.z, 0});
        const std::size_t c = cell(r, e.y);
        for (std::size_t i = 0; i < succ_[c].size(); ++i) add(e.p, e.z, succ_[c][i]);
      }
      const std::size_t c = cell(q, x);
      for (std::size_t i = 0; i < waiting_[c].size(); ++i) add(waiting_[c][i].p, waiting_[c][i].z, r);
    }
    return found(m_.initial, Pda::kBottom, drain_);
  }

 private:
  struct Entry {
    int p, z, y;
  };
  struct Summary {
    int q, x, r;
  };

  std::size_t cell(int p, int z) const { return static_cast<std::size_t>(p) * gamma_ + z; }
  std::uint64_t key(int p, int z, int r) const { return static_cast<std::uint64_t>(cell(p, z)) * q_ + r; }

  bool found(int p, int z, int r) const {
    const auto k = key(p, z, r);
    return dense_.empty() ? sparse_.count(k) > 0 : dense_[k];
  }

  void add(int p, int z, int r) {
    const auto k = key(p, z, r);
    if (dense_.empty()) {
      if (!sparse_.insert(k).second) return;
    } else {
      if (dense_[k]) return;
      dense_[k] = true;
    }
    succ_[cell(p, z)].push_back(r);
    work_.push_back({p, z, r});
  }

  const Pda& m_;
  int q_, gamma_, drain_;
  std::vector<bool> dense_;
  std::unordered_set<std::uint64_t> sparse_;
  std::vector<std::vector<int>> succ_;
  std::vector<std::vector<Entry>> waiting_, push1_, push2_;
  std::vector<Summary> work_;
};

}  // namespace

bool pda_empty(const Pda& m) {
  m.validate();
  if (m.max_push() > 2) return !Saturation(normalize_pushes(m)).nonempty();
  return !Saturation(m).nonempty();
}

bool pda_accepts(const Pda& m, std::span<const int> word) {
  return !pda_empty(intersect_pda_nfa(m, Nfa::single_word(m.input, word)));
}

PdaRunner::PdaRunner(const Pda& m, std::size_t stack_cap, std::size_t config_cap)
    : m_(&m), stack_cap_(stack_cap), config_cap_(config_cap), by_state_(m.num_states), final_(m.num_states, false) {
  for (std::size_t i = 0; i < m.transitions.size(); ++i) by_state_[m.transitions[i].from].push_back(i);
  for (int f : m.finals) final_[f] = true;
}

namespace {

std::optional<PdaConfig> apply(const PdaConfig& c, const PdaTransition& t, std::size_t stack_cap) {
  if (c.stack.empty() || c.stack.back() != t.top) return std::nullopt;
  PdaConfig next{t.to, c.stack};
  next.stack.pop_back();
  for (auto it = t.push.rbegin(); it != t.push.rend(); ++it) next.stack.push_back(*it);
  if (next.stack.size() > stack_cap) return std::nullopt;
  return next;
}

}  // namespace

std::vector<PdaConfig> PdaRunner::close(std::vector<PdaConfig> configs) const {
  std::set<PdaConfig> seen(configs.begin(), configs.end());
  std::vector<PdaConfig> queue(seen.begin(), seen.end());
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (std::size_t k : by_state_[queue[i].state]) {
      const auto& t = m_->transitions[k];
      if (t.input != -1) continue;
      auto next = apply(queue[i], t, stack_cap_);
      if (next && seen.insert(*next).second) {
        if (seen.size() > config_cap_) throw Error(ErrorCode::ExplosionGuard, "PDA configuration set too large");
        queue.push_back(std::move(*next));
      }
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<PdaConfig> PdaRunner::start() const { return close({PdaConfig{m_->initial, {Pda::kBottom}}}); }

std::vector<PdaConfig> PdaRunner::step(const std::vector<PdaConfig>& configs, int letter) const {
  std::vector<PdaConfig> next;
  for (const auto& c : configs) {
    for (std::size_t k : by_state_[c.state]) {
      const auto& t = m_->transitions[k];
      if (t.input != letter) continue;
      if (auto n = apply(c, t, stack_cap_)) next.push_back(std::move(*n));
    }
  }
  return close(std::move(next));
}

bool PdaRunner::accepting(const std::vector<PdaConfig>& configs) const {
  return std::any_of(configs.begin(), configs.end(), [&](const PdaConfig& c) { return final_[c.state]; });
}

bool pda_simulate(const Pda& m, std::span<const int> word, std::size_t stack_cap, std::size_t config_cap) {
  PdaRunner runner(m, stack_cap, config_cap);
  auto configs = runner.start();
  for (int a : word) {
    configs = runner.step(configs, a);
    if (configs.empty()) return false;
  }
  return runner.accepting(configs);
}

Word invert_word(std::span<const int> word, std::span<const int> involution) {
  Word out;
  out.reserve(word.size());
  for (auto it = word.rbegin(); it != word.rend(); ++it) out.push_back(involution[*it]);
  return out;
}

bool rational_member(const Pda& wp, std::span<const int> involution, std::span<const int> word, const Nfa& n) {
  const Word prefix = invert_word(word, involution);
  return !pda_empty(intersect_pda_nfa(wp, prepend_word(n, prefix)));
}

}  // namespace vfk
