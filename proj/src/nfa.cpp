#include <algorithm>
#include <map>
#include <set>

#include "vfk/error.hpp"
#include "vfk/langcore.hpp"

namespace vfk {

void Nfa::validate() const {
  auto check_state = [&](int s) {
    if (s < 0 || s >= num_states) throw Error(ErrorCode::InvalidInput, "NFA state out of range");
  };
  for (const auto& t : transitions) {
    check_state(t.from);
    check_state(t.to);
    if (t.letter < -1 || t.letter >= alphabet.size()) throw Error(ErrorCode::InvalidInput, "NFA letter out of range");
  }
  for (int s : initials) check_state(s);
  for (int s : finals) check_state(s);
}

std::vector<int> Nfa::closure(std::vector<int> states) const {
  std::vector<bool> seen(num_states, false);
  for (int s : states) seen[s] = true;
  for (std::size_t i = 0; i < states.size(); ++i) {
    for (const auto& t : transitions) {
      if (t.letter == -1 && t.from == states[i] && !seen[t.to]) {
        seen[t.to] = true;
        states.push_back(t.to);
      }
    }
  }
  std::sort(states.begin(), states.end());
  return states;
}

bool Nfa::accepts(std::span<const int> word) const {
  std::vector<int> current = closure(initials);
  for (int a : word) {
    std::vector<bool> seen(num_states, false);
    std::vector<int> next;
    for (const auto& t : transitions) {
      if (t.letter == a && std::binary_search(current.begin(), current.end(), t.from) && !seen[t.to]) {
        seen[t.to] = true;
        next.push_back(t.to);
      }
    }
    current = closure(std::move(next));
    if (current.empty()) return false;
  }
  return std::any_of(current.begin(), current.end(), [&](int s) {
    return std::find(finals.begin(), finals.end(), s) != finals.end();
  });
}

Nfa Nfa::universal(const Alphabet& alphabet) {
  Nfa n{1, alphabet, {}, {0}, {0}};
  for (int a = 0; a < alphabet.size(); ++a) n.transitions.push_back({0, a, 0});
  return n;
}

Nfa Nfa::empty_language(const Alphabet& alphabet) { return Nfa{1, alphabet, {}, {0}, {}}; }

Nfa Nfa::single_word(const Alphabet& alphabet, std::span<const int> word) {
  const int n = static_cast<int>(word.size());
  Nfa out{n + 1, alphabet, {}, {0}, {n}};
  for (int i = 0; i < n; ++i) out.transitions.push_back({i, word[i], i + 1});
  return out;
}

namespace {

std::vector<int> letter_remap(const Alphabet& from, const Alphabet& onto) {
  if (from.size() != onto.size()) throw Error(ErrorCode::AlphabetMismatch, "alphabet sizes differ");
  std::vector<int> remap(from.size());
  for (int a = 0; a < from.size(); ++a) {
    auto b = onto.find(from.names[a]);
    if (!b) throw Error(ErrorCode::AlphabetMismatch, "letter '" + from.names[a] + "' missing");
    remap[a] = *b;
  }
  return remap;
}

// Keeps states that are reachable and co-reachable, renumbered in order.
Nfa trim(const Nfa& n) {
  std::vector<std::vector<int>> fwd(n.num_states), bwd(n.num_states);
  for (const auto& t : n.transitions) {
    fwd[t.from].push_back(t.to);
    bwd[t.to].push_back(t.from);
  }
  auto sweep = [&](const std::vector<int>& seeds, const std::vector<std::vector<int>>& adj) {
    std::vector<bool> seen(n.num_states, false);
    std::vector<int> stack;
    for (int s : seeds) {
      if (!seen[s]) {
        seen[s] = true;
        stack.push_back(s);
      }
    }
    while (!stack.empty()) {
      const int s = stack.back();
      stack.pop_back();
      for (int t : adj[s]) {
        if (!seen[t]) {
          seen[t] = true;
          stack.push_back(t);
        }
      }
    }
    return seen;
  };
  const auto reach = sweep(n.initials, fwd);
  const auto coreach = sweep(n.finals, bwd);
  std::vector<int> remap(n.num_states, -1);
  int count = 0;
  for (int s = 0; s < n.num_states; ++s)
    if (reach[s] && coreach[s]) remap[s] = count++;
  if (count == 0) return Nfa::empty_language(n.alphabet);
  Nfa out{count, n.alphabet, {}, {}, {}};
  for (const auto& t : n.transitions)
    if (remap[t.from] >= 0 && remap[t.to] >= 0) out.transitions.push_back({remap[t.from], t.letter, remap[t.to]});
  for (int s : n.initials)
    if (remap[s] >= 0) out.initials.push_back(remap[s]);
  for (int s : n.finals)
    if (remap[s] >= 0) out.finals.push_back(remap[s]);
  return out;
}

}  // namespace

Nfa intersect_nfa(const Nfa& a, const Nfa& b) {
  const auto remap = letter_remap(b.alphabet, a.alphabet);
  std::vector<std::vector<NfaTransition>> out_a(a.num_states), out_b(b.num_states);
  for (const auto& t : a.transitions) out_a[t.from].push_back(t);
  for (auto t : b.transitions) {
    if (t.letter >= 0) t.letter = remap[t.letter];
    out_b[t.from].push_back(t);
  }
  std::map<std::pair<int, int>, int> ids;
  std::vector<std::pair<int, int>> queue;
  auto id_of = [&](int p, int q) {
    auto [it, inserted] = ids.emplace(std::make_pair(p, q), static_cast<int>(queue.size()));
    if (inserted) queue.emplace_back(p, q);
    return it->second;
  };
  Nfa out{0, a.alphabet, {}, {}, {}};
  for (int p : a.initials)
    for (int q : b.initials) out.initials.push_back(id_of(p, q));
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const auto [p, q] = queue[i];
    const int self = static_cast<int>(i);
    for (const auto& ta : out_a[p]) {
      if (ta.letter == -1) {
        out.transitions.push_back({self, -1, id_of(ta.to, q)});
        continue;
      }
      for (const auto& tb : out_b[q])
        if (tb.letter == ta.letter) out.transitions.push_back({self, ta.letter, id_of(ta.to, tb.to)});
    }
    for (const auto& tb : out_b[q])
      if (tb.letter == -1) out.transitions.push_back({self, -1, id_of(p, tb.to)});
  }
  out.num_states = static_cast<int>(queue.size());
  std::set<int> fa(a.finals.begin(), a.finals.end()), fb(b.finals.begin(), b.finals.end());
  for (std::size_t i = 0; i < queue.size(); ++i)
    if (fa.count(queue[i].first) && fb.count(queue[i].second)) out.finals.push_back(static_cast<int>(i));
  return trim(out);
}

Nfa prepend_word(const Nfa& n, std::span<const int> prefix) {
  const int k = static_cast<int>(prefix.size());
  Nfa out = n;
  const int base = n.num_states;
  out.num_states = base + k + 1;
  for (int i = 0; i < k; ++i) out.transitions.push_back({base + i, prefix[i], base + i + 1});
  for (int s : n.initials) out.transitions.push_back({base + k, -1, s});
  out.initials = {base};
  return out;
}

}  // namespace vfk
