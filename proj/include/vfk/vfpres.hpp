#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "vfk/langcore.hpp"

namespace vfk {

/// One entry r·a -> x s of the input rule table, by name.
struct RawRule {
  std::string r;
  std::string a;
  std::vector<std::string> word;
  std::string rep;
};

struct RawPresentation {
  std::vector<std::string> X;
  std::vector<std::string> S;  ///< must contain "1"
  std::vector<RawRule> rules;
};

/// Element in normal form x·s: a freely reduced word over X ∪ X̄ (letters
/// are Sigma indices below 2|X|) and a representative index (0 is "1").
struct NormalForm {
  Word free_part;
  int rep = 0;
  auto operator<=>(const NormalForm&) const = default;
};

/// Suffix used for formal inverse letter names.
inline constexpr const char* kInverseSuffix = "^-";

/// A validated virtually free presentation.
///
/// Sigma layout: X, then X̄, then S∖{1}, then S̄∖{1}. Representatives are
/// indexed with "1" at 0 and the rest in input order.
class VfPresentation {
 public:
  /// Checks names, totality, reducedness of rule words, the group property
  /// and confluence, then derives the S̄ rules. Throws InvalidInput,
  /// NonReducedRuleWord, NotAGroup, NotConfluent or UnknownSymbol.
  static VfPresentation validate(const RawPresentation& raw);

  const Alphabet& sigma() const noexcept { return sigma_; }
  int num_gens() const noexcept { return nx_; }
  int num_reps() const noexcept { return static_cast<int>(rep_names_.size()); }
  const std::vector<std::string>& rep_names() const noexcept { return rep_names_; }
  /// The input data this presentation was validated from.
  const RawPresentation& raw() const noexcept { return raw_; }

  bool is_free_letter(int a) const noexcept { return a < 2 * nx_; }
  bool is_rep_letter(int a) const noexcept { return a >= 2 * nx_ && a < 2 * nx_ + num_reps() - 1; }
  bool is_rep_inverse_letter(int a) const noexcept { return a >= 2 * nx_ + num_reps() - 1; }
  int free_inverse(int f) const noexcept { return f < nx_ ? f + nx_ : f - nx_; }
  /// Sigma letter of representative r > 0, and of its formal inverse.
  int rep_letter(int r) const noexcept { return 2 * nx_ + r - 1; }
  int rep_inverse_letter(int r) const noexcept { return 2 * nx_ + num_reps() - 1 + r - 1; }

  /// Letter a ↦ letter representing a⁻¹ (an involution on Sigma).
  std::vector<int> involution() const;

  struct Rule {
    Word word;
    int rep = 0;
  };
  /// Full table including r = 1 and the derived S̄ columns.
  const Rule& rule(int r, int letter) const { return table_[r][letter]; }

  /// One step of the left-to-right normal form computation.
  void push_letter(NormalForm& nf, int letter) const;
  NormalForm normal_form(std::span<const int> word) const;
  NormalForm parse_normal_form(const std::string& word) const;
  bool word_problem(std::span<const int> word) const;
  /// The normal form written as a Sigma word (free part then the S letter).
  Word to_word(const NormalForm& nf) const;
  std::string render(const NormalForm& nf) const;

  /// ‖𝒱‖ = |S|(2|X| + 2|S|) · max(|x_{r,a}| + 1) over the input rules; an
  /// empty table counts as max 1.
  std::uint64_t size() const;
  /// Longest input rule word.
  std::size_t max_rule_length() const;

  /// Deterministic PDA accepting exactly the words equal to 1.
  Pda wp_pda() const;

  enum class Strategy { Leftmost, Rightmost, Random };
  /// Applies single rewriting steps (rules r a -> x s, unary s̄ -> x s and
  /// free reductions) under the given redex choice until irreducible.
  NormalForm rewrite(std::span<const int> word, Strategy strategy, std::mt19937* rng = nullptr) const;

 private:
  VfPresentation() = default;

  RawPresentation raw_;
  Alphabet sigma_;
  int nx_ = 0;
  std::vector<std::string> rep_names_;
  std::vector<std::vector<Rule>> table_;
};

}  // namespace vfk
