#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "vfk/vfpres.hpp"

namespace vfk {

/// Ball of radius r around 1 in the Cayley graph with respect to Sigma.
struct Ball {
  const VfPresentation* presentation = nullptr;
  int radius = 0;
  std::vector<NormalForm> vertices;  ///< breadth-first order, vertices[0] = 1
  std::vector<int> dist;
  /// step[v][a]: index of vertices[v]·a, or -1 when outside the ball.
  std::vector<std::vector<int>> step;

  std::optional<int> find(const NormalForm& g) const;
  /// Throws VertexOutsideBall.
  int at(const NormalForm& g) const;
  /// Breadth-first distances from v using only ball vertices (-1 if unreachable).
  std::vector<int> distances_from(int v) const;
  /// Number of undirected edges with both ends in the ball.
  std::size_t undirected_edges() const;
  std::string to_dot() const;

 private:
  std::map<NormalForm, int> index_;
  friend Ball build_ball(const VfPresentation& p, int r, std::size_t cap);
};

/// Throws ExplosionGuard beyond `cap` vertices.
Ball build_ball(const VfPresentation& p, int r, std::size_t cap = 2'000'000);

/// C_x = {y s : x is a prefix of y}.
bool in_prefix_cut(std::span<const int> x, const NormalForm& g);

struct CutBoundary {
  std::vector<std::pair<NormalForm, int>> edges;  ///< δ⃗C as (source, letter)
  std::size_t weight = 0;
  std::vector<NormalForm> inner;   ///< ∂C
  std::vector<NormalForm> vertex;  ///< βC
  int beta_diameter = 0;           ///< upper bound measured inside B(r+1)
  int radius = 0;
};

/// Directed boundary of the prefix cut C_x, certified by agreement of the
/// boundaries seen within B(r-1) and B(r) with r ≥ |x| + max rule length + 1.
/// Throws NotStabilized, InvalidInput (x not reduced / empty / not over X).
CutBoundary cut_boundary(const VfPresentation& p, std::span<const int> x, int r, std::size_t cap = 2'000'000);

enum class Nesting { Equal, FirstInSecond, SecondInFirst, Disjoint };
std::string to_string(Nesting n);

/// Prefix-logic nesting of C_x and C_y.
Nesting cuts_nested(std::span<const int> x, std::span<const int> y);

/// Checks a nesting relation on every vertex of the ball.
bool nesting_holds_in_ball(const Ball& ball, std::span<const int> x, std::span<const int> y, Nesting n);

struct BallComponent {
  std::vector<int> vertices;  ///< indices into the probe ball
  std::vector<int> boundary;  ///< ∂C: vertices at distance r + 1
  bool unbounded_candidate = false;
  int boundary_diameter = 0;  ///< measured inside the probe ball
};

/// Components of B(r + probe) ∖ B(r).
std::vector<BallComponent> component_cuts(const VfPresentation& p, int r, int probe, std::size_t cap = 2'000'000,
                                          Ball* probe_ball = nullptr);

using Chord = std::pair<int, int>;

/// Triangulates the closed sequence seq[0..n] (seq[n] = seq[0]) by
/// repeatedly removing a vertex farthest from seq[0]. Throws NotATree,
/// StepTooLong, VertexOutsideBall, InvalidInput.
std::vector<Chord> triangulate_tree_sequence(const Ball& ball, const std::vector<NormalForm>& seq, int k);

/// n − 3 distinct non-crossing diagonals, all sides and diagonals at
/// distance ≤ k inside the ball. Throws VertexOutsideBall.
bool check_triangulation(const Ball& ball, const std::vector<NormalForm>& seq, const std::vector<Chord>& chords,
                         int k);

/// Exhaustive search for polygons with at most 8 vertices.
std::optional<std::vector<Chord>> find_triangulation(const Ball& ball, const std::vector<NormalForm>& seq, int k);

}  // namespace vfk
