#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>
#include <vector>

#include "vfk/langcore.hpp"
#include "vfk/vfpres.hpp"

namespace vfk {

using BigInt = boost::multiprecision::cpp_int;

/// Constants bounding a decomposition of the group given by an input.
struct BoundSet {
  enum class Source { Grammar, Presentation };
  Source source = Source::Presentation;
  BigInt N;       ///< input size
  BigInt d;       ///< Cayley graph degree (|Σ|)
  BigInt k;       ///< triangulation constant
  BigInt K;       ///< maximal weight of a minimal cut
  BigInt R;       ///< ⌈3kK/2⌉, diameter bound for minimal-cut boundaries
  BigInt Xi;      ///< finite subgroup order bound
  BigInt Theta;   ///< edge count bound of a reduced decomposition
  BigInt Lambda;  ///< 2(R+1)(Θ+1)ΘΞ + Θ
  BigInt phi_len; ///< 4(R+1)(Θ+1)²Ξ
  /// Sharper finite subgroup bound |S| for presentations.
  std::optional<BigInt> Xi_sharp;

  /// Label/value rows in a fixed order.
  std::vector<std::pair<std::string, BigInt>> rows() const;
};

/// 4(R+1)(Θ+1)²Ξ.
BigInt phi_length_bound(const BoundSet& b);

/// From raw parameters: grammar size N, production count, |Σ|.
/// Throws ExplosionGuard when a value would exceed 2^26 bits.
BoundSet bounds_for_grammar_params(const BigInt& size, std::size_t productions, std::size_t sigma);

/// Throws NotCnf.
BoundSet bounds_for_grammar(const Grammar& cnf);

BoundSet bounds_for_presentation(const VfPresentation& p);

}  // namespace vfk
