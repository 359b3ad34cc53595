#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vfk/gog.hpp"
#include "vfk/verify.hpp"

namespace vfk {

/// Slide of edge x along edge y (s(x) = s(y)) with conjugator g ∈ G_{s(x)}.
/// Edge indices are stable under slides since edge names are kept.
struct SlideMove {
  int x = 0;
  int y = 0;
  Element g = 0;
  auto operator<=>(const SlideMove&) const = default;
};

std::string render_move(const GraphOfGroups& g, const SlideMove& m);

/// All (x, y, g) with x ∉ {y, ȳ} and g⁻¹ G_x^x g ⊆ G_y^y, in index order.
std::vector<SlideMove> enumerate_slides(const GraphOfGroups& g);

/// Moves the source of x to t(y) with inclusion ι_ȳ ∘ ι_y⁻¹ ∘ c_g ∘ ι_x.
/// Throws InvalidMove or ResultNotReduced.
GraphOfGroups apply_slide(const GraphOfGroups& g, const SlideMove& m);

/// Carries φ across a slide. The moved edge is sent to ȳ·g⁻¹·x and its
/// inverse to x̄·g·y in the old graph of groups, which respects the new
/// edge relations; the result is then normalised to the new spanning tree.
GogHom transport_hom(const GraphOfGroups& before, const GraphOfGroups& after, const SlideMove& m,
                     const GogHom& h, const GroupOracle& group);

/// Isomorphism of graphs of groups up to inner automorphisms of the
/// vertex groups (exhaustive search).
bool gog_equivalent(const GraphOfGroups& g1, const GraphOfGroups& g2);

/// Quantities unchanged by slides.
struct SlideInvariants {
  std::vector<int> vertex_orders;  ///< sorted
  std::vector<int> edge_orders;    ///< sorted, one per undirected edge
  std::size_t edge_count = 0;
  bool operator==(const SlideInvariants&) const = default;
};
SlideInvariants slide_invariants(const GraphOfGroups& g);

struct IsoVerdict {
  enum class Kind { Iso, NotIso, Inconclusive };
  Kind kind = Kind::NotIso;
  std::vector<SlideMove> moves;  ///< witness sequence from the first input
  std::string reason;
  std::size_t states = 0;             ///< inequivalent states visited
  std::size_t rejected_moves = 0;     ///< moves rejected as non-reduced
  std::vector<GraphOfGroups> visited;
};

/// Breadth-first search over slide sequences from g1, with states merged
/// up to gog_equivalent. Throws NotReduced if an input is not reduced.
IsoVerdict iso_decide(const GraphOfGroups& g1, const GraphOfGroups& g2,
                      std::optional<std::size_t> max_depth = std::nullopt);

}  // namespace vfk
