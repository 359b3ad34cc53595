#pragma once

#include <optional>
#include <span>
#include <vector>

namespace vfk {

/// Index of an element inside a FiniteGroupTable. The identity is always 0.
using Element = int;

/// A finite group given by its full multiplication table.
///
/// Instances are only obtainable through validate() (or the named
/// constructors, which go through it), so every live table satisfies the
/// identity, Latin-square and associativity laws.
class FiniteGroupTable {
 public:
  /// Checks the candidate table exhaustively and returns the group.
  /// Throws Error with NoIdentity, NotCancellative, NotAssociative or
  /// InvalidInput (shape / range problems).
  static FiniteGroupTable validate(std::vector<std::vector<Element>> rows);

  static FiniteGroupTable trivial();
  static FiniteGroupTable cyclic(int n);
  /// Dihedral group of order 2n (rotations 0..n-1, reflections n..2n-1).
  static FiniteGroupTable dihedral(int n);

  int order() const noexcept { return static_cast<int>(rows_.size()); }
  Element mul(Element a, Element b) const { return rows_[a][b]; }
  Element inv(Element a) const { return inverse_[a]; }
  int element_order(Element a) const { return element_order_[a]; }
  const std::vector<std::vector<Element>>& rows() const noexcept { return rows_; }

  /// g^-1 * a * g
  Element conjugate(Element a, Element g) const { return mul(mul(inv(g), a), g); }

  bool operator==(const FiniteGroupTable& other) const { return rows_ == other.rows_; }

 private:
  explicit FiniteGroupTable(std::vector<std::vector<Element>> rows);

  std::vector<std::vector<Element>> rows_;
  std::vector<Element> inverse_;
  std::vector<int> element_order_;
};

/// An injective homomorphism between two tables, stored as the image of
/// every source element.
struct GroupInjection {
  std::vector<Element> map;
};

/// Throws NotAHomomorphism / InvalidInput unless `map` is an injective
/// homomorphism source -> target.
GroupInjection validate_injection(const FiniteGroupTable& source, const FiniteGroupTable& target,
                                  std::vector<Element> map);

/// Sorted element list; used for subgroup arguments.
using ElementSet = std::vector<Element>;

bool is_subgroup(const FiniteGroupTable& g, std::span<const Element> subset);

/// Returns some c with c^-1 * A * c contained in B, searching all of g.
/// Throws NotASubgroup if either set is not a subgroup.
std::optional<Element> is_subgroup_conjugate_into(const FiniteGroupTable& g,
                                                  std::span<const Element> a_set,
                                                  std::span<const Element> b_set);

/// Greedy generating set: repeatedly adds the least element outside the
/// subgroup generated so far.
std::vector<Element> generating_set(const FiniteGroupTable& g);

/// Closure of `gens` under multiplication (always contains 0).
ElementSet generated_subgroup(const FiniteGroupTable& g, std::span<const Element> gens);

/// All homomorphisms source -> target; `injective_only` prunes to
/// injections. Exhaustive over generator images, pruned by element orders.
std::vector<GroupInjection> all_homomorphisms(const FiniteGroupTable& source,
                                              const FiniteGroupTable& target,
                                              bool injective_only);

std::vector<GroupInjection> all_isomorphisms(const FiniteGroupTable& g1, const FiniteGroupTable& g2);

std::optional<GroupInjection> find_isomorphism(const FiniteGroupTable& g1,
                                               const FiniteGroupTable& g2);

/// Image of a map as a sorted set.
ElementSet image_of(std::span<const Element> map);

}  // namespace vfk
