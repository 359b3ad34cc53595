#include "vfk/verify.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "vfk/error.hpp"

namespace vfk {

PresentationOracle::PresentationOracle(VfPresentation p)
    : p_(std::move(p)), inv_(p_.involution()), pda_(p_.wp_pda()) {}

GrammarOracle::GrammarOracle(const Grammar& g, std::vector<int> involution)
    : cnf_(to_cnf(g)), inv_(std::move(involution)) {
  if (static_cast<int>(inv_.size()) != cnf_.terminals.size()) {
    throw Error(ErrorCode::InvalidInput, "the involution must cover every terminal");
  }
  for (int a = 0; a < cnf_.terminals.size(); ++a) {
    if (inv_[a] < 0 || inv_[a] >= cnf_.terminals.size() || inv_[inv_[a]] != a) {
      throw Error(ErrorCode::InvalidInput, "letter map is not an involution at '" + cnf_.terminals.names[a] + "'");
    }
  }
  pda_ = grammar_to_pda(cnf_);
}

GogHom resolve_hom(const GraphOfGroups& g, const GroupOracle& group, const RawGogHom& raw) {
  GogHom h;
  h.base = raw.base.empty() ? 0 : g.vertex_index(raw.base);
  std::vector<bool> seen(g.delta().size(), false);
  h.images.resize(g.delta().size());
  for (const auto& [sym, word] : raw.images) {
    const int a = g.delta().at(sym);
    if (seen[a]) throw Error(ErrorCode::InvalidInput, "two images for '" + sym + "'");
    seen[a] = true;
    for (const auto& letter : word) h.images[a].push_back(group.sigma().at(letter));
  }
  for (int a = 0; a < g.delta().size(); ++a) {
    if (!seen[a]) throw Error(ErrorCode::InvalidInput, "no image given for '" + g.delta().names[a] + "'");
  }
  return h;
}

RawGogHom to_raw(const GraphOfGroups& g, const GroupOracle& group, const GogHom& h) {
  RawGogHom raw;
  raw.base = g.vertices()[h.base].id;
  for (int a = 0; a < g.delta().size(); ++a) {
    std::vector<std::string> word;
    for (int c : h.images[a]) word.push_back(group.sigma().names[c]);
    raw.images.emplace_back(g.delta().names[a], std::move(word));
  }
  return raw;
}

Word apply_hom(const GogHom& h, std::span<const int> u) {
  Word out;
  for (int a : u) out.insert(out.end(), h.images[a].begin(), h.images[a].end());
  return out;
}

namespace {

std::string render_delta(const GraphOfGroups& g, std::span<const int> w) {
  return w.empty() ? "ε" : g.delta().render(w);
}

// φ of a Δ word where -1 stands for the identity of a vertex group.
Word image_of(const GogHom& h, std::initializer_list<std::optional<int>> letters) {
  Word out;
  for (const auto& a : letters)
    if (a) out.insert(out.end(), h.images[*a].begin(), h.images[*a].end());
  return out;
}

Word append_inverse(Word w, std::span<const int> tail, const GroupOracle& group) {
  const Word inv = invert_word(tail, group.involution());
  w.insert(w.end(), inv.begin(), inv.end());
  return w;
}

}  // namespace

CheckResult check_homomorphism(const GraphOfGroups& g, const GroupOracle& group, const GogHom& h) {
  auto fail = [&](const std::string& relation) { return CheckResult{false, "homomorphism", relation, std::nullopt}; };
  auto name = [&](std::optional<int> a) { return a ? g.delta().names[*a] : std::string("1"); };
  for (std::size_t v = 0; v < g.vertices().size(); ++v) {
    const auto& table = g.vertices()[v].group;
    const int vi = static_cast<int>(v);
    for (Element x = 1; x < table.order(); ++x) {
      for (Element y = 1; y < table.order(); ++y) {
        const auto a = g.vertex_letter(vi, x), b = g.vertex_letter(vi, y), c = g.vertex_letter(vi, table.mul(x, y));
        const Word lhs = image_of(h, {a, b});
        if (!group.is_trivial(append_inverse(lhs, image_of(h, {c}), group))) {
          return fail(name(a) + " " + name(b) + " = " + name(c));
        }
      }
    }
  }
  for (std::size_t e = 0; e < g.edges().size(); ++e) {
    const int y = static_cast<int>(e);
    const int ybar = g.edges()[e].inverse;
    const auto& edge_group = g.edge_group(y);
    for (Element a = 1; a < edge_group.order(); ++a) {
      const auto ay = g.vertex_letter(g.edges()[e].src, g.source_injection(y).map[a]);
      const auto aybar = g.vertex_letter(g.edges()[e].tgt, g.target_injection(y).map[a]);
      const Word lhs = image_of(h, {g.edge_letter(ybar), ay, g.edge_letter(y)});
      if (!group.is_trivial(append_inverse(lhs, image_of(h, {aybar}), group))) {
        return fail(g.edges()[ybar].id + " " + name(ay) + " " + g.edges()[e].id + " = " + name(aybar));
      }
    }
    if (!group.is_trivial(image_of(h, {g.edge_letter(ybar), g.edge_letter(y)}))) {
      return fail(g.edges()[ybar].id + " " + g.edges()[e].id + " = 1");
    }
  }
  for (std::size_t e = 0; e < g.edges().size(); ++e) {
    if (g.tree()[e] && !group.is_trivial(h.images[g.edge_letter(static_cast<int>(e))])) {
      return fail(g.edges()[e].id + " = 1 (spanning tree edge)");
    }
  }
  return {};
}

Nfa flower_nfa(const Alphabet& sigma, const std::vector<Word>& words) {
  Nfa n{1, sigma, {}, {0}, {0}};
  for (const auto& w : words) {
    if (w.empty()) continue;
    int from = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      const int to = i + 1 == w.size() ? 0 : n.num_states++;
      n.transitions.push_back({from, w[i], to});
      from = to;
    }
  }
  return n;
}

CheckResult check_surjectivity(const GraphOfGroups& g, const GroupOracle& group, const GogHom& h) {
  (void)g;
  const Nfa flower = flower_nfa(group.sigma(), h.images);
  for (int a = 0; a < group.sigma().size(); ++a) {
    const Word letter{a};
    if (group.is_trivial(letter)) continue;
    if (!rational_member(group.wp_pda(), group.involution(), letter, flower)) {
      return CheckResult{false, "surjectivity", "letter '" + group.sigma().names[a] + "' is not in the image",
                         letter};
    }
  }
  return {};
}

Nfa based_path_nfa(const GraphOfGroups& g, int base) {
  Nfa n{static_cast<int>(g.vertices().size()), g.delta(), {}, {base}, {base}};
  for (int a = 0; a < g.delta().size(); ++a) {
    const DeltaLetter& l = g.letter(a);
    if (l.is_edge) {
      n.transitions.push_back({g.edges()[l.edge].src, a, g.edges()[l.edge].tgt});
    } else {
      n.transitions.push_back({l.vertex, a, l.vertex});
    }
  }
  return n;
}

Nfa reduced_word_dfa(const GraphOfGroups& g) {
  // States: 0 start; 1 + v after a letter of G_v; 1 + |V| + e after edge e;
  // 1 + |V| + |E| + e after e·g with g in the image of ē's source injection,
  // so that reading ē next would complete a forbidden factor.
  const int nv = static_cast<int>(g.vertices().size());
  const int ne = static_cast<int>(g.edges().size());
  auto after_vertex = [&](int v) { return 1 + v; };
  auto after_edge = [&](int e) { return 1 + nv + e; };
  auto pending = [&](int e) { return 1 + nv + ne + e; };
  const int count = 1 + nv + 2 * ne;
  Nfa n{count, g.delta(), {}, {0}, {}};
  for (int s = 0; s < count; ++s) n.finals.push_back(s);

  // Vertex whose letters may not follow state s (-1 if none), and the
  // edge whose inverse may not follow it.
  auto blocked_vertex = [&](int s) {
    if (s == 0) return -1;
    if (s <= nv) return s - 1;
    if (s <= nv + ne) return -1;
    return g.edges()[s - 1 - nv - ne].tgt;
  };
  auto blocked_edge = [&](int s) {
    if (s <= nv) return -1;
    if (s <= nv + ne) return g.edges()[s - 1 - nv].inverse;
    return g.edges()[s - 1 - nv - ne].inverse;
  };
  for (int s = 0; s < count; ++s) {
    for (int a = 0; a < g.delta().size(); ++a) {
      const DeltaLetter& l = g.letter(a);
      if (l.is_edge) {
        if (l.edge == blocked_edge(s)) continue;
        n.transitions.push_back({s, a, after_edge(l.edge)});
        continue;
      }
      if (l.vertex == blocked_vertex(s)) continue;
      int next = after_vertex(l.vertex);
      if (s > nv && s <= nv + ne) {
        const int e = s - 1 - nv;
        const int y = g.edges()[e].inverse;
        const auto& into = g.source_injection(y).map;
        if (g.edges()[y].src == l.vertex && std::find(into.begin(), into.end(), l.element) != into.end()) {
          next = pending(e);
        }
      }
      n.transitions.push_back({s, a, next});
    }
  }
  return n;
}

namespace {

Nfa nonempty_tracker(const Alphabet& alphabet) {
  Nfa n{2, alphabet, {}, {0}, {1}};
  for (int a = 0; a < alphabet.size(); ++a) {
    n.transitions.push_back({0, a, 1});
    n.transitions.push_back({1, a, 1});
  }
  return n;
}

// Shortest accepted word of the (deterministic) filter whose image is
// trivial, searched breadth-first within the given limits.
std::optional<Word> kernel_witness(const GraphOfGroups& g, const GroupOracle& group, const GogHom& h,
                                   const Nfa& filter, std::size_t max_len, std::size_t max_words) {
  std::vector<std::vector<std::pair<int, int>>> out(filter.num_states);
  for (const auto& t : filter.transitions) out[t.from].push_back({t.letter, t.to});
  std::vector<bool> final(filter.num_states, false);
  for (int f : filter.finals) final[f] = true;
  std::deque<std::pair<Word, int>> queue;
  for (int s : filter.initials) queue.push_back({{}, s});
  std::size_t visited = 0;
  while (!queue.empty() && visited < max_words) {
    auto [w, s] = std::move(queue.front());
    queue.pop_front();
    ++visited;
    if (final[s] && !w.empty() && group.is_trivial(apply_hom(h, w))) return w;
    if (w.size() >= max_len) continue;
    for (const auto& [a, t] : out[s]) {
      Word next = w;
      next.push_back(a);
      queue.push_back({std::move(next), t});
    }
  }
  (void)g;
  return std::nullopt;
}

}  // namespace

CheckResult check_injectivity(const GraphOfGroups& g, const GroupOracle& group, const GogHom& h) {
  const Nfa filter = intersect_nfa(intersect_nfa(based_path_nfa(g, h.base), reduced_word_dfa(g)),
                                   nonempty_tracker(g.delta()));
  const Pda pulled_back = inverse_hom(group.wp_pda(), g.delta(), h.images);
  if (pda_empty(intersect_pda_nfa(pulled_back, filter))) return {};
  CheckResult result{false, "injectivity", "a nonempty reduced word maps to 1", std::nullopt};
  const std::size_t max_len = static_cast<std::size_t>(filter.num_states) * 4;
  if (auto w = kernel_witness(g, group, h, filter, max_len, 200'000)) {
    result.witness = "'" + render_delta(g, *w) + "' is reduced and nonempty but maps to 1";
    result.witness_word = std::move(w);
  } else {
    result.witness += " (no witness within the search bound)";
  }
  return result;
}

CheckResult verify(const GraphOfGroups& g, const GroupOracle& group, const GogHom& h) {
  if (static_cast<int>(h.images.size()) != g.delta().size()) {
    throw Error(ErrorCode::InvalidInput, "homomorphism is not total on Δ");
  }
  for (const auto& w : h.images)
    for (int c : w)
      if (c < 0 || c >= group.sigma().size()) throw Error(ErrorCode::UnknownSymbol, "image letter out of range");
  if (auto r = check_homomorphism(g, group, h); !r.ok) return r;
  if (auto r = check_surjectivity(g, group, h); !r.ok) return r;
  return check_injectivity(g, group, h);
}

namespace {

Word cancel_pairs(const Word& w, const std::vector<int>& inv) {
  Word out;
  for (int a : w) {
    if (!out.empty() && out.back() == inv[a]) {
      out.pop_back();
    } else {
      out.push_back(a);
    }
  }
  return out;
}

}  // namespace

GogHom normalize_to_tree(const GraphOfGroups& g, const GroupOracle& group, const GogHom& h) {
  const auto& inv = group.involution();
  std::vector<Word> conj(g.vertices().size());
  for (std::size_t v = 0; v < g.vertices().size(); ++v) {
    for (int e : g.tree_path(h.base, static_cast<int>(v))) {
      const Word& img = h.images[g.edge_letter(e)];
      conj[v].insert(conj[v].end(), img.begin(), img.end());
    }
    conj[v] = cancel_pairs(conj[v], inv);
  }
  auto conjugate = [&](int from, const Word& w, int to) {
    Word out = conj[from];
    out.insert(out.end(), w.begin(), w.end());
    const Word back = invert_word(conj[to], inv);
    out.insert(out.end(), back.begin(), back.end());
    return cancel_pairs(out, inv);
  };
  GogHom out{h.base, std::vector<Word>(h.images.size())};
  for (int a = 0; a < g.delta().size(); ++a) {
    const DeltaLetter& l = g.letter(a);
    if (!l.is_edge) {
      out.images[a] = conjugate(l.vertex, h.images[a], l.vertex);
    } else if (!g.tree()[l.edge]) {
      out.images[a] = conjugate(g.edges()[l.edge].src, h.images[a], g.edges()[l.edge].tgt);
    }
  }
  return out;
}

}  // namespace vfk
