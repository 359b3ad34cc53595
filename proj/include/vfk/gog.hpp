#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vfk/fingroup.hpp"
#include "vfk/langcore.hpp"

namespace vfk {

struct RawGogVertex {
  std::string id;
  std::vector<std::vector<Element>> table;
};

struct RawGogEdge {
  std::string id;
  std::string inv;
  std::string src;
  std::string tgt;
};

/// Edge group of the pair {y, ȳ} with y = pair[0]; into_src embeds into
/// G_{s(y)}, into_tgt into G_{t(y)}.
struct RawEdgeGroup {
  std::string y;
  std::string y_inv;
  std::vector<std::vector<Element>> table;
  std::vector<Element> into_src;
  std::vector<Element> into_tgt;
};

struct RawGog {
  std::vector<RawGogVertex> vertices;
  std::vector<RawGogEdge> edges;  ///< a missing inverse edge is created
  std::vector<RawEdgeGroup> edge_groups;
};

struct GogVertex {
  std::string id;
  FiniteGroupTable group;
};

struct GogEdge {
  std::string id;
  int src = 0;
  int tgt = 0;
  int inverse = 0;
  int pair = 0;         ///< index into edge groups
  bool forward = true;  ///< this edge is the pair's y
};

struct GogEdgeGroup {
  FiniteGroupTable group;
  GroupInjection into_src;
  GroupInjection into_tgt;
};

/// What a letter of Δ stands for.
struct DeltaLetter {
  bool is_edge = false;
  int vertex = -1;   ///< for vertex letters
  Element element = 0;
  int edge = -1;     ///< for edge letters
};

/// A finite connected graph of finite groups with the derived alphabet Δ
/// (vertex letters "P.g<k>" for k ≥ 1, then edge names) and a spanning tree.
///
/// Vertices and edges are kept sorted by id.
class GraphOfGroups {
 public:
  /// Throws InvalidInput, NotAHomomorphism and the table errors.
  static GraphOfGroups build(const RawGog& raw);

  const std::vector<GogVertex>& vertices() const noexcept { return vertices_; }
  const std::vector<GogEdge>& edges() const noexcept { return edges_; }
  const std::vector<GogEdgeGroup>& edge_groups() const noexcept { return edge_groups_; }
  const Alphabet& delta() const noexcept { return delta_; }
  const DeltaLetter& letter(int a) const { return letters_.at(a); }

  int vertex_index(const std::string& id) const;  ///< throws UnknownSymbol
  int edge_index(const std::string& id) const;    ///< throws UnknownSymbol
  std::optional<int> vertex_letter(int v, Element g) const;  ///< none for g = 0
  int edge_letter(int e) const { return edge_letter_base_ + e; }

  const FiniteGroupTable& edge_group(int e) const { return edge_groups_[edges_[e].pair].group; }
  /// a ↦ a^e into G_{s(e)}.
  const GroupInjection& source_injection(int e) const;
  /// a ↦ a^ē into G_{t(e)}.
  const GroupInjection& target_injection(int e) const;

  /// Spanning tree as a flag per directed edge (closed under inversion).
  const std::vector<bool>& tree() const noexcept { return tree_; }
  /// Directed tree path between two vertices as edge indices.
  std::vector<int> tree_path(int from, int to) const;

  /// Back to file-level data (sorted, one edge-group entry per pair).
  RawGog to_raw() const;

 private:
  GraphOfGroups() = default;
  void derive();

  std::vector<GogVertex> vertices_;
  std::vector<GogEdge> edges_;
  std::vector<GogEdgeGroup> edge_groups_;
  Alphabet delta_;
  std::vector<DeltaLetter> letters_;
  std::vector<int> vertex_letter_base_;
  int edge_letter_base_ = 0;
  std::vector<bool> tree_;
  std::vector<int> parent_edge_;  ///< tree edge into each vertex from the root side, -1 at the root
  std::vector<int> depth_;
};

/// First edge y with s(y) ≠ t(y) and G_y^y = G_{s(y)}, if any.
std::optional<int> non_reduced_edge(const GraphOfGroups& g);
inline bool is_reduced_gog(const GraphOfGroups& g) { return !non_reduced_edge(g).has_value(); }

/// Leftmost rewriting to a reduced word of F(𝒢).
Word reduce_word(const GraphOfGroups& g, std::span<const int> w);

/// Position of the first letter that breaks the closed-path shape at
/// `base`; w.size() if the path does not return to base; none if fine.
std::optional<std::size_t> based_shape_violation(const GraphOfGroups& g, int base, std::span<const int> w);

/// Throws NotBasedAtP unless w is a closed path word at base.
bool gog_wp(const GraphOfGroups& g, int base, std::span<const int> w);

/// Connects consecutive letters (and the ends to base) by tree paths.
Word to_based_form(const GraphOfGroups& g, int base, std::span<const int> w);

/// Inverse in F(𝒢): reversed, vertex letters inverted, edges replaced by
/// their inverse edges.
Word invert_gog_word(const GraphOfGroups& g, std::span<const int> w);

}  // namespace vfk
