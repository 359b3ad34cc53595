#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "vfk/fingroup.hpp"
#include "vfk/gog.hpp"
#include "vfk/verify.hpp"

namespace vfk {

struct SynthBudget {
  int max_vertices = 1;
  int max_group_order = 1;
  int max_edges = 0;
  int max_image_length = 0;
  /// Empty means default_catalog(max_group_order).
  std::vector<FiniteGroupTable> catalog;
};

/// Cyclic groups of order 1..n and dihedral groups of order 4..n (even).
std::vector<FiniteGroupTable> default_catalog(int max_order);

struct Candidate {
  GraphOfGroups gog;
  GogHom hom;
};

/// Calls `visit` on every candidate within budget in the order
/// (vertices, edges, total group order, total image length), stopping as
/// soon as `visit` returns true. Tree edges map to ε; the image of ȳ is
/// the formal inverse of the image of y. Returns the number visited.
std::size_t enumerate_candidates(const SynthBudget& budget, const Alphabet& sigma,
                                 const std::vector<int>& involution,
                                 const std::function<bool(const Candidate&)>& visit);

struct SynthStats {
  std::size_t candidates = 0;
  bool exhausted = false;
};

/// First candidate passing verify, or none when the budget is exhausted.
std::optional<Candidate> synthesize(const GroupOracle& group, const SynthBudget& budget,
                                    SynthStats* stats = nullptr);

}  // namespace vfk
