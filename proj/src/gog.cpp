#include "vfk/gog.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "vfk/error.hpp"

namespace vfk {

GraphOfGroups GraphOfGroups::build(const RawGog& raw) {
  GraphOfGroups g;
  if (raw.vertices.empty()) throw Error(ErrorCode::InvalidInput, "a graph of groups needs at least one vertex");

  std::vector<RawGogVertex> vertices = raw.vertices;
  std::sort(vertices.begin(), vertices.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (i > 0 && vertices[i].id == vertices[i - 1].id) {
      throw Error(ErrorCode::InvalidInput, "duplicate vertex '" + vertices[i].id + "'");
    }
    g.vertices_.push_back(GogVertex{vertices[i].id, FiniteGroupTable::validate(vertices[i].table)});
  }

  std::map<std::string, RawGogEdge> edges;
  for (const auto& e : raw.edges) {
    if (!edges.emplace(e.id, e).second) throw Error(ErrorCode::InvalidInput, "duplicate edge '" + e.id + "'");
  }
  for (const auto& e : raw.edges) {
    if (e.inv == e.id) throw Error(ErrorCode::InvalidInput, "edge '" + e.id + "' is its own inverse");
    if (!edges.count(e.inv)) edges.emplace(e.inv, RawGogEdge{e.inv, e.id, e.tgt, e.src});
  }
  std::map<std::string, int> edge_ids;
  for (const auto& [id, e] : edges) {
    const RawGogEdge& inv = edges.at(e.inv);
    if (inv.inv != id || inv.src != e.tgt || inv.tgt != e.src) {
      throw Error(ErrorCode::InvalidInput, "edges '" + id + "' and '" + e.inv + "' are not inverse to each other");
    }
    const int index = static_cast<int>(g.edges_.size());
    edge_ids[id] = index;
    GogEdge out;
    out.id = id;
    out.src = g.vertex_index(e.src);
    out.tgt = g.vertex_index(e.tgt);
    g.edges_.push_back(out);
  }
  for (auto& e : g.edges_) e.inverse = edge_ids.at(edges.at(e.id).inv);

  // One edge-group entry per pair, numbered in order of the first edge.
  std::map<int, const RawEdgeGroup*> by_edge;
  for (const auto& eg : raw.edge_groups) {
    auto y = edge_ids.find(eg.y);
    auto y_inv = edge_ids.find(eg.y_inv);
    if (y == edge_ids.end() || y_inv == edge_ids.end()) {
      throw Error(ErrorCode::UnknownSymbol, "edge group for unknown edge pair (" + eg.y + ", " + eg.y_inv + ")");
    }
    if (g.edges_[y->second].inverse != y_inv->second) {
      throw Error(ErrorCode::InvalidInput, "edge group pair (" + eg.y + ", " + eg.y_inv + ") is not an inverse pair");
    }
    if (by_edge.count(y->second) || by_edge.count(y_inv->second)) {
      throw Error(ErrorCode::InvalidInput, "two edge groups for pair (" + eg.y + ", " + eg.y_inv + ")");
    }
    by_edge[y->second] = &eg;
  }
  std::vector<int> pair_of(g.edges_.size(), -1);
  for (std::size_t e = 0; e < g.edges_.size(); ++e) {
    if (pair_of[e] != -1) continue;
    const int inv = g.edges_[e].inverse;
    const RawEdgeGroup* eg = nullptr;
    int forward = static_cast<int>(e);
    if (by_edge.count(static_cast<int>(e))) {
      eg = by_edge.at(static_cast<int>(e));
    } else if (by_edge.count(inv)) {
      eg = by_edge.at(inv);
      forward = inv;
    } else {
      throw Error(ErrorCode::InvalidInput, "missing edge group for edge '" + g.edges_[e].id + "'");
    }
    const int pair = static_cast<int>(g.edge_groups_.size());
    pair_of[e] = pair_of[inv] = pair;
    FiniteGroupTable group = FiniteGroupTable::validate(eg->table);
    const GogEdge& y = g.edges_[forward];
    GroupInjection into_src = validate_injection(group, g.vertices_[y.src].group, eg->into_src);
    GroupInjection into_tgt = validate_injection(group, g.vertices_[y.tgt].group, eg->into_tgt);
    g.edge_groups_.push_back(GogEdgeGroup{std::move(group), std::move(into_src), std::move(into_tgt)});
    g.edges_[forward].pair = g.edges_[g.edges_[forward].inverse].pair = pair;
    g.edges_[forward].forward = true;
    g.edges_[g.edges_[forward].inverse].forward = false;
  }
  g.derive();
  return g;
}

void GraphOfGroups::derive() {
  delta_.names.clear();
  letters_.clear();
  vertex_letter_base_.clear();
  for (std::size_t v = 0; v < vertices_.size(); ++v) {
    vertex_letter_base_.push_back(delta_.size());
    for (Element k = 1; k < vertices_[v].group.order(); ++k) {
      delta_.names.push_back(vertices_[v].id + ".g" + std::to_string(k));
      letters_.push_back(DeltaLetter{false, static_cast<int>(v), k, -1});
    }
  }
  edge_letter_base_ = delta_.size();
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    delta_.names.push_back(edges_[e].id);
    letters_.push_back(DeltaLetter{true, -1, 0, static_cast<int>(e)});
  }
  std::set<std::string> names(delta_.names.begin(), delta_.names.end());
  if (names.size() != delta_.names.size()) throw Error(ErrorCode::InvalidInput, "Δ symbol names collide");

  // Breadth-first spanning tree from the least vertex, edges in name order.
  const std::size_t nv = vertices_.size();
  tree_.assign(edges_.size(), false);
  parent_edge_.assign(nv, -1);
  depth_.assign(nv, -1);
  depth_[0] = 0;
  std::vector<int> queue{0};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const int v = queue[i];
    for (std::size_t e = 0; e < edges_.size(); ++e) {
      if (edges_[e].src != v || depth_[edges_[e].tgt] != -1) continue;
      const int w = edges_[e].tgt;
      depth_[w] = depth_[v] + 1;
      parent_edge_[w] = static_cast<int>(e);
      tree_[e] = tree_[edges_[e].inverse] = true;
      queue.push_back(w);
    }
  }
  if (queue.size() != nv) throw Error(ErrorCode::InvalidInput, "the underlying graph is not connected");
}

int GraphOfGroups::vertex_index(const std::string& id) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), id,
                             [](const GogVertex& v, const std::string& key) { return v.id < key; });
  if (it == vertices_.end() || it->id != id) throw Error(ErrorCode::UnknownSymbol, "vertex '" + id + "'");
  return static_cast<int>(it - vertices_.begin());
}

int GraphOfGroups::edge_index(const std::string& id) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), id,
                             [](const GogEdge& e, const std::string& key) { return e.id < key; });
  if (it == edges_.end() || it->id != id) throw Error(ErrorCode::UnknownSymbol, "edge '" + id + "'");
  return static_cast<int>(it - edges_.begin());
}

std::optional<int> GraphOfGroups::vertex_letter(int v, Element g) const {
  if (g == 0) return std::nullopt;
  return vertex_letter_base_[v] + g - 1;
}

const GroupInjection& GraphOfGroups::source_injection(int e) const {
  const auto& eg = edge_groups_[edges_[e].pair];
  return edges_[e].forward ? eg.into_src : eg.into_tgt;
}

const GroupInjection& GraphOfGroups::target_injection(int e) const {
  const auto& eg = edge_groups_[edges_[e].pair];
  return edges_[e].forward ? eg.into_tgt : eg.into_src;
}

std::vector<int> GraphOfGroups::tree_path(int from, int to) const {
  std::vector<int> up, down;
  while (depth_[from] > depth_[to]) {
    up.push_back(edges_[parent_edge_[from]].inverse);
    from = edges_[parent_edge_[from]].src;
  }
  while (depth_[to] > depth_[from]) {
    down.push_back(parent_edge_[to]);
    to = edges_[parent_edge_[to]].src;
  }
  while (from != to) {
    up.push_back(edges_[parent_edge_[from]].inverse);
    from = edges_[parent_edge_[from]].src;
    down.push_back(parent_edge_[to]);
    to = edges_[parent_edge_[to]].src;
  }
  up.insert(up.end(), down.rbegin(), down.rend());
  return up;
}

RawGog GraphOfGroups::to_raw() const {
  RawGog raw;
  for (const auto& v : vertices_) raw.vertices.push_back({v.id, v.group.rows()});
  for (const auto& e : edges_) {
    raw.edges.push_back({e.id, edges_[e.inverse].id, vertices_[e.src].id, vertices_[e.tgt].id});
  }
  for (const auto& e : edges_) {
    if (!e.forward) continue;
    const auto& eg = edge_groups_[e.pair];
    raw.edge_groups.push_back({e.id, edges_[e.inverse].id, eg.group.rows(), eg.into_src.map, eg.into_tgt.map});
  }
  return raw;
}

std::optional<int> non_reduced_edge(const GraphOfGroups& g) {
  for (std::size_t e = 0; e < g.edges().size(); ++e) {
    const auto& edge = g.edges()[e];
    if (edge.src == edge.tgt) continue;
    if (g.edge_group(static_cast<int>(e)).order() == g.vertices()[edge.src].group.order()) {
      return static_cast<int>(e);
    }
  }
  return std::nullopt;
}

Word reduce_word(const GraphOfGroups& g, std::span<const int> input) {
  Word w(input.begin(), input.end());
  for (int a : w)
    if (a < 0 || a >= g.delta().size()) throw Error(ErrorCode::UnknownSymbol, "Δ letter index out of range");
  auto vertex_of = [&](int a) { return g.letter(a).is_edge ? -1 : g.letter(a).vertex; };
  auto edge_of = [&](int a) { return g.letter(a).is_edge ? g.letter(a).edge : -1; };
  auto splice = [&](std::size_t i, std::size_t len, std::optional<int> letter) {
    w.erase(w.begin() + static_cast<std::ptrdiff_t>(i), w.begin() + static_cast<std::ptrdiff_t>(i + len));
    if (letter) w.insert(w.begin() + static_cast<std::ptrdiff_t>(i), *letter);
  };
  auto try_at = [&](std::size_t i) {
    if (i + 1 >= w.size()) return false;
    const int v = vertex_of(w[i]);
    if (v >= 0 && v == vertex_of(w[i + 1])) {
      const auto& group = g.vertices()[v].group;
      splice(i, 2, g.vertex_letter(v, group.mul(g.letter(w[i]).element, g.letter(w[i + 1]).element)));
      return true;
    }
    const int e1 = edge_of(w[i]);
    if (e1 < 0) return false;
    const int e2 = edge_of(w[i + 1]);
    if (e2 >= 0 && e2 == g.edges()[e1].inverse) {
      splice(i, 2, std::nullopt);
      return true;
    }
    if (i + 2 >= w.size()) return false;
    const int y = edge_of(w[i + 2]);
    const int mid = vertex_of(w[i + 1]);
    if (y < 0 || y != g.edges()[e1].inverse || mid != g.edges()[y].src) return false;
    const auto& into = g.source_injection(y).map;
    auto it = std::find(into.begin(), into.end(), g.letter(w[i + 1]).element);
    if (it == into.end()) return false;
    const Element a = static_cast<Element>(it - into.begin());
    splice(i, 3, g.vertex_letter(g.edges()[y].tgt, g.target_injection(y).map[a]));
    return true;
  };
  std::size_t i = 0;
  while (i < w.size()) {
    if (try_at(i)) {
      i = i >= 2 ? i - 2 : 0;
    } else {
      ++i;
    }
  }
  return w;
}

std::optional<std::size_t> based_shape_violation(const GraphOfGroups& g, int base, std::span<const int> w) {
  int current = base;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const DeltaLetter& l = g.letter(w[i]);
    if (l.is_edge) {
      if (g.edges()[l.edge].src != current) return i;
      current = g.edges()[l.edge].tgt;
    } else if (l.vertex != current) {
      return i;
    }
  }
  if (current != base) return w.size();
  return std::nullopt;
}

bool gog_wp(const GraphOfGroups& g, int base, std::span<const int> w) {
  for (int a : w)
    if (a < 0 || a >= g.delta().size()) throw Error(ErrorCode::UnknownSymbol, "Δ letter index out of range");
  if (auto pos = based_shape_violation(g, base, w)) {
    throw Error(ErrorCode::NotBasedAtP, "word is not a closed path at '" + g.vertices()[base].id +
                                            "' (position " + std::to_string(*pos) + ")");
  }
  return reduce_word(g, w).empty();
}

Word to_based_form(const GraphOfGroups& g, int base, std::span<const int> w) {
  Word out;
  int current = base;
  auto walk_to = [&](int v) {
    for (int e : g.tree_path(current, v)) out.push_back(g.edge_letter(e));
    current = v;
  };
  for (int a : w) {
    if (a < 0 || a >= g.delta().size()) throw Error(ErrorCode::UnknownSymbol, "Δ letter index out of range");
    const DeltaLetter& l = g.letter(a);
    if (l.is_edge) {
      walk_to(g.edges()[l.edge].src);
      out.push_back(a);
      current = g.edges()[l.edge].tgt;
    } else {
      walk_to(l.vertex);
      out.push_back(a);
    }
  }
  walk_to(base);
  return out;
}

Word invert_gog_word(const GraphOfGroups& g, std::span<const int> w) {
  Word out;
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    const DeltaLetter& l = g.letter(*it);
    if (l.is_edge) {
      out.push_back(g.edge_letter(g.edges()[l.edge].inverse));
    } else {
      out.push_back(*g.vertex_letter(l.vertex, g.vertices()[l.vertex].group.inv(l.element)));
    }
  }
  return out;
}

}  // namespace vfk
