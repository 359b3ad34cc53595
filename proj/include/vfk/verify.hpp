#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "vfk/gog.hpp"
#include "vfk/langcore.hpp"
#include "vfk/vfpres.hpp"

namespace vfk {

/// Word-problem backend for a group G generated by Sigma.
class GroupOracle {
 public:
  virtual ~GroupOracle() = default;
  virtual const Alphabet& sigma() const = 0;
  /// Letter a ↦ letter representing a⁻¹.
  virtual const std::vector<int>& involution() const = 0;
  virtual bool is_trivial(std::span<const int> w) const = 0;
  virtual const Pda& wp_pda() const = 0;
};

class PresentationOracle final : public GroupOracle {
 public:
  explicit PresentationOracle(VfPresentation p);
  const Alphabet& sigma() const override { return p_.sigma(); }
  const std::vector<int>& involution() const override { return inv_; }
  bool is_trivial(std::span<const int> w) const override { return p_.word_problem(w); }
  const Pda& wp_pda() const override { return pda_; }
  const VfPresentation& presentation() const noexcept { return p_; }

 private:
  VfPresentation p_;
  std::vector<int> inv_;
  Pda pda_;
};

/// Group given by a grammar for its word problem plus the letter involution.
class GrammarOracle final : public GroupOracle {
 public:
  /// Throws InvalidInput unless `involution` is an involution on the terminals.
  GrammarOracle(const Grammar& g, std::vector<int> involution);
  const Alphabet& sigma() const override { return cnf_.terminals; }
  const std::vector<int>& involution() const override { return inv_; }
  bool is_trivial(std::span<const int> w) const override { return cyk_member(cnf_, w); }
  const Pda& wp_pda() const override { return pda_; }
  const Grammar& grammar() const noexcept { return cnf_; }

 private:
  Grammar cnf_;
  std::vector<int> inv_;
  Pda pda_;
};

/// φ: Δ → Σ*, one image word per Δ letter.
struct GogHom {
  int base = 0;
  std::vector<Word> images;
};

struct RawGogHom {
  std::string base;
  std::vector<std::pair<std::string, std::vector<std::string>>> images;
};

/// Resolves names; throws InvalidInput unless the map is total on Δ.
GogHom resolve_hom(const GraphOfGroups& g, const GroupOracle& group, const RawGogHom& raw);
RawGogHom to_raw(const GraphOfGroups& g, const GroupOracle& group, const GogHom& h);

/// Concatenated image φ(u).
Word apply_hom(const GogHom& h, std::span<const int> u);

struct CheckResult {
  bool ok = true;
  std::string stage;    ///< "homomorphism", "surjectivity", "injectivity" or empty
  std::string witness;  ///< human-readable failing relation / letter / word
  std::optional<Word> witness_word;
};

CheckResult check_homomorphism(const GraphOfGroups& g, const GroupOracle& group, const GogHom& h);
CheckResult check_surjectivity(const GraphOfGroups& g, const GroupOracle& group, const GogHom& h);
CheckResult check_injectivity(const GraphOfGroups& g, const GroupOracle& group, const GogHom& h);
/// The three checks in order, stopping at the first failure.
CheckResult verify(const GraphOfGroups& g, const GroupOracle& group, const GogHom& h);

/// NFA over Δ for closed path words at `base`.
Nfa based_path_nfa(const GraphOfGroups& g, int base);
/// DFA over Δ rejecting words with a factor gh (same vertex) or ȳ a^y y.
Nfa reduced_word_dfa(const GraphOfGroups& g);
/// Flower automaton for {φ(a) : a ∈ Δ}*.
Nfa flower_nfa(const Alphabet& sigma, const std::vector<Word>& words);

/// Given φ satisfying the relations of F(𝒢) (tree edges need not map to
/// 1), conjugates each vertex by the image of its tree path from the base
/// so that tree edges map to ε words; π₁(𝒢,P) images are unchanged.
GogHom normalize_to_tree(const GraphOfGroups& g, const GroupOracle& group, const GogHom& h);

}  // namespace vfk
