#include "vfk/slide.hpp"

#include <algorithm>
#include <deque>

#include "vfk/error.hpp"

namespace vfk {

std::string render_move(const GraphOfGroups& g, const SlideMove& m) {
  return "slide " + g.edges()[m.x].id + " along " + g.edges()[m.y].id + " with g=" + std::to_string(m.g);
}

namespace {

bool conjugate_fits(const GraphOfGroups& g, int x, int y, Element c) {
  const auto& group = g.vertices()[g.edges()[x].src].group;
  const auto& into_y = g.source_injection(y).map;
  for (Element b : g.source_injection(x).map) {
    if (std::find(into_y.begin(), into_y.end(), group.conjugate(b, c)) == into_y.end()) return false;
  }
  return true;
}

bool slidable_pair(const GraphOfGroups& g, int x, int y) {
  const auto& ex = g.edges()[x];
  return x != y && ex.inverse != y && ex.src == g.edges()[y].src;
}

}  // namespace

std::vector<SlideMove> enumerate_slides(const GraphOfGroups& g) {
  std::vector<SlideMove> out;
  const int ne = static_cast<int>(g.edges().size());
  for (int x = 0; x < ne; ++x) {
    for (int y = 0; y < ne; ++y) {
      if (!slidable_pair(g, x, y)) continue;
      const int order = g.vertices()[g.edges()[x].src].group.order();
      for (Element c = 0; c < order; ++c)
        if (conjugate_fits(g, x, y, c)) out.push_back({x, y, c});
    }
  }
  return out;
}

GraphOfGroups apply_slide(const GraphOfGroups& g, const SlideMove& m) {
  const int ne = static_cast<int>(g.edges().size());
  if (m.x < 0 || m.x >= ne || m.y < 0 || m.y >= ne || !slidable_pair(g, m.x, m.y)) {
    throw Error(ErrorCode::InvalidMove, "edges do not share a source or coincide up to inversion");
  }
  const auto& group = g.vertices()[g.edges()[m.x].src].group;
  if (m.g < 0 || m.g >= group.order() || !conjugate_fits(g, m.x, m.y, m.g)) {
    throw Error(ErrorCode::InvalidMove, "conjugator does not carry G_x into G_y");
  }
  const auto& into_x = g.source_injection(m.x).map;
  const auto& into_y = g.source_injection(m.y).map;
  const auto& into_ybar = g.target_injection(m.y).map;
  std::vector<Element> moved(into_x.size());
  for (std::size_t a = 0; a < into_x.size(); ++a) {
    const Element b = group.conjugate(into_x[a], m.g);
    const auto pre = std::find(into_y.begin(), into_y.end(), b) - into_y.begin();
    moved[a] = into_ybar[pre];
  }
  RawGog raw = g.to_raw();
  const std::string& x_id = g.edges()[m.x].id;
  const std::string& xbar_id = g.edges()[g.edges()[m.x].inverse].id;
  const std::string& new_src = g.vertices()[g.edges()[m.y].tgt].id;
  for (auto& e : raw.edges) {
    if (e.id == x_id) e.src = new_src;
    if (e.id == xbar_id) e.tgt = new_src;
  }
  for (auto& eg : raw.edge_groups) {
    if (eg.y == x_id) eg.into_src = moved;
    if (eg.y == xbar_id) eg.into_tgt = moved;
  }
  GraphOfGroups out = GraphOfGroups::build(raw);
  if (auto bad = non_reduced_edge(out)) {
    throw Error(ErrorCode::ResultNotReduced, "edge '" + out.edges()[*bad].id + "' becomes surjective");
  }
  return out;
}

GogHom transport_hom(const GraphOfGroups& before, const GraphOfGroups& after, const SlideMove& m,
                     const GogHom& h, const GroupOracle& group) {
  if (before.delta() != after.delta()) throw Error(ErrorCode::InvalidInput, "slide changed the alphabet");
  const int p = before.edges()[m.x].src;
  const auto& gp = before.vertices()[p].group;
  auto image = [&](int vertex, Element e) -> Word {
    if (auto a = before.vertex_letter(vertex, e)) return h.images[*a];
    return {};
  };
  auto concat = [](std::initializer_list<Word> parts) {
    Word out;
    for (const Word& w : parts) out.insert(out.end(), w.begin(), w.end());
    return out;
  };
  const int x = m.x, xbar = before.edges()[m.x].inverse;
  const int y = m.y, ybar = before.edges()[m.y].inverse;
  GogHom raw = h;
  raw.images[before.edge_letter(x)] =
      concat({h.images[before.edge_letter(ybar)], image(p, gp.inv(m.g)), h.images[before.edge_letter(x)]});
  raw.images[before.edge_letter(xbar)] =
      concat({h.images[before.edge_letter(xbar)], image(p, m.g), h.images[before.edge_letter(y)]});
  return normalize_to_tree(after, group, raw);
}

SlideInvariants slide_invariants(const GraphOfGroups& g) {
  SlideInvariants inv;
  for (const auto& v : g.vertices()) inv.vertex_orders.push_back(v.group.order());
  for (const auto& eg : g.edge_groups()) inv.edge_orders.push_back(eg.group.order());
  std::sort(inv.vertex_orders.begin(), inv.vertex_orders.end());
  std::sort(inv.edge_orders.begin(), inv.edge_orders.end());
  inv.edge_count = g.edge_groups().size();
  return inv;
}

namespace {

class EquivalenceSearch {
 public:
  EquivalenceSearch(const GraphOfGroups& g1, const GraphOfGroups& g2) : g1_(g1), g2_(g2) {
    const std::size_t n = g1.vertices().size();
    sigma_.assign(n, -1);
    used_.assign(n, false);
    alpha_.resize(n);
    for (const auto& e : g1.edges())
      if (e.forward) pairs1_.push_back(static_cast<int>(&e - g1.edges().data()));
  }

  bool run() { return assign_vertex(0); }

 private:
  bool assign_vertex(std::size_t v) {
    if (v == sigma_.size()) return assign_isos(0);
    for (std::size_t w = 0; w < used_.size(); ++w) {
      if (used_[w] || g1_.vertices()[v].group.order() != g2_.vertices()[w].group.order()) continue;
      if (degree(g1_, v) != degree(g2_, w)) continue;
      sigma_[v] = static_cast<int>(w);
      used_[w] = true;
      if (assign_vertex(v + 1)) return true;
      used_[w] = false;
    }
    return false;
  }

  static std::size_t degree(const GraphOfGroups& g, std::size_t v) {
    return static_cast<std::size_t>(std::count_if(g.edges().begin(), g.edges().end(),
                                                  [&](const GogEdge& e) { return e.src == static_cast<int>(v); }));
  }

  bool assign_isos(std::size_t v) {
    if (v == sigma_.size()) {
      pair_used_.assign(g2_.edge_groups().size(), false);
      return assign_edge(0);
    }
    for (auto& iso : all_isomorphisms(g1_.vertices()[v].group, g2_.vertices()[sigma_[v]].group)) {
      alpha_[v] = std::move(iso.map);
      if (assign_isos(v + 1)) return true;
    }
    return false;
  }

  bool assign_edge(std::size_t i) {
    if (i == pairs1_.size()) return true;
    const int y1 = pairs1_[i];
    for (std::size_t e2 = 0; e2 < g2_.edges().size(); ++e2) {
      const auto& edge2 = g2_.edges()[e2];
      if (pair_used_[edge2.pair]) continue;
      if (!compatible(y1, static_cast<int>(e2))) continue;
      pair_used_[edge2.pair] = true;
      if (assign_edge(i + 1)) return true;
      pair_used_[edge2.pair] = false;
    }
    return false;
  }

  bool compatible(int y1, int e2) const {
    const auto& a = g1_.edges()[y1];
    const auto& b = g2_.edges()[e2];
    if (sigma_[a.src] != b.src || sigma_[a.tgt] != b.tgt) return false;
    if (g1_.edge_group(y1).order() != g2_.edge_group(e2).order()) return false;
    const auto& s1 = g1_.source_injection(y1).map;
    const auto& t1 = g1_.target_injection(y1).map;
    const auto& s2 = g2_.source_injection(e2).map;
    const auto& t2 = g2_.target_injection(e2).map;
    const auto& src_group = g2_.vertices()[b.src].group;
    const auto& tgt_group = g2_.vertices()[b.tgt].group;
    const std::size_t n = s1.size();
    std::vector<Element> beta(n);
    for (Element h = 0; h < src_group.order(); ++h) {
      bool ok = true;
      for (std::size_t k = 0; k < n && ok; ++k) {
        const Element image = src_group.conjugate(alpha_[a.src][s1[k]], h);
        auto it = std::find(s2.begin(), s2.end(), image);
        if (it == s2.end()) {
          ok = false;
        } else {
          beta[k] = static_cast<Element>(it - s2.begin());
        }
      }
      if (!ok) continue;
      for (Element hbar = 0; hbar < tgt_group.order(); ++hbar) {
        bool match = true;
        for (std::size_t k = 0; k < n && match; ++k)
          match = alpha_[a.tgt][t1[k]] == tgt_group.conjugate(t2[beta[k]], hbar);
        if (match) return true;
      }
    }
    return false;
  }

  const GraphOfGroups& g1_;
  const GraphOfGroups& g2_;
  std::vector<int> sigma_;
  std::vector<bool> used_;
  std::vector<std::vector<Element>> alpha_;
  std::vector<int> pairs1_;
  std::vector<bool> pair_used_;
};

}  // namespace

bool gog_equivalent(const GraphOfGroups& g1, const GraphOfGroups& g2) {
  if (g1.vertices().size() != g2.vertices().size()) return false;
  if (!(slide_invariants(g1) == slide_invariants(g2))) return false;
  return EquivalenceSearch(g1, g2).run();
}

IsoVerdict iso_decide(const GraphOfGroups& g1, const GraphOfGroups& g2, std::optional<std::size_t> max_depth) {
  if (auto e = non_reduced_edge(g1)) {
    throw Error(ErrorCode::NotReduced, "first input (edge '" + g1.edges()[*e].id + "')");
  }
  if (auto e = non_reduced_edge(g2)) {
    throw Error(ErrorCode::NotReduced, "second input (edge '" + g2.edges()[*e].id + "')");
  }
  IsoVerdict verdict;
  const SlideInvariants i1 = slide_invariants(g1), i2 = slide_invariants(g2);
  if (i1.edge_count != i2.edge_count) {
    verdict.reason = "edge counts differ";
    return verdict;
  }
  if (i1.vertex_orders != i2.vertex_orders) {
    verdict.reason = "vertex group order multisets differ";
    return verdict;
  }
  if (i1.edge_orders != i2.edge_orders) {
    verdict.reason = "edge group order multisets differ";
    return verdict;
  }

  struct Node {
    std::size_t state;
    std::vector<SlideMove> path;
  };
  verdict.visited.push_back(g1);
  if (gog_equivalent(g1, g2)) {
    verdict.kind = IsoVerdict::Kind::Iso;
    verdict.states = 1;
    verdict.reason = "inputs are equivalent";
    return verdict;
  }
  std::deque<Node> queue{{0, {}}};
  bool truncated = false;
  while (!queue.empty()) {
    Node node = std::move(queue.front());
    queue.pop_front();
    const GraphOfGroups current = verdict.visited[node.state];
    const bool at_limit = max_depth && node.path.size() >= *max_depth;
    for (const SlideMove& move : enumerate_slides(current)) {
      std::optional<GraphOfGroups> next;
      try {
        next = apply_slide(current, move);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::ResultNotReduced) throw;
        ++verdict.rejected_moves;
        continue;
      }
      const bool seen = std::any_of(verdict.visited.begin(), verdict.visited.end(),
                                    [&](const GraphOfGroups& v) { return gog_equivalent(v, *next); });
      if (seen) continue;
      if (at_limit) {
        truncated = true;
        break;
      }
      std::vector<SlideMove> path = node.path;
      path.push_back(move);
      if (gog_equivalent(*next, g2)) {
        verdict.kind = IsoVerdict::Kind::Iso;
        verdict.moves = std::move(path);
        verdict.visited.push_back(std::move(*next));
        verdict.states = verdict.visited.size();
        verdict.reason = "reached by slides";
        return verdict;
      }
      verdict.visited.push_back(std::move(*next));
      queue.push_back({verdict.visited.size() - 1, std::move(path)});
    }
  }
  verdict.states = verdict.visited.size();
  if (truncated) {
    verdict.kind = IsoVerdict::Kind::Inconclusive;
    verdict.reason = "depth bound reached before the search was exhausted";
  } else {
    verdict.kind = IsoVerdict::Kind::NotIso;
    verdict.reason = "all " + std::to_string(verdict.states) + " reachable states explored";
  }
  return verdict;
}

}  // namespace vfk
