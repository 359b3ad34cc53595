#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace vfk {

/// A word is a sequence of letter indices into some named alphabet.
using Word = std::vector<int>;

/// Alphabet as an ordered list of distinct letter names.
struct Alphabet {
  std::vector<std::string> names;

  int size() const noexcept { return static_cast<int>(names.size()); }
  std::optional<int> find(const std::string& name) const;
  /// Throws UnknownSymbol.
  int at(const std::string& name) const;
  /// Parses space-separated letter names.
  Word parse(const std::string& text) const;
  std::string render(std::span<const int> word) const;
  bool operator==(const Alphabet&) const = default;
};

// ---------------------------------------------------------------------------
// Context-free grammars

struct GSymbol {
  bool terminal = false;
  int id = 0;
  auto operator<=>(const GSymbol&) const = default;
};

struct Production {
  int lhs = 0;
  std::vector<GSymbol> body;
  auto operator<=>(const Production&) const = default;
};

/// Context-free grammar (V, Sigma, P, S). Variables and terminals are
/// separate index spaces.
struct Grammar {
  std::vector<std::string> variables;
  Alphabet terminals;
  std::vector<Production> productions;
  int start = 0;

  /// Throws InvalidInput on undeclared symbols or a bad start symbol.
  void validate() const;
  /// |V| + |Sigma| + sum of body lengths.
  std::size_t size() const;
  /// CNF: S -> 1 (start only, and then S on no right-hand side),
  /// A -> a, A -> BC.
  bool is_cnf() const;
};

/// START, TERM, BIN, DEL, UNIT, then removal of useless symbols.
Grammar to_cnf(const Grammar& g);

/// CYK membership. Throws NotCnf.
bool cyk_member(const Grammar& g, std::span<const int> word);

// ---------------------------------------------------------------------------
// Finite automata

struct NfaTransition {
  int from = 0;
  int letter = -1;  ///< -1 is an epsilon move
  int to = 0;
};

struct Nfa {
  int num_states = 0;
  Alphabet alphabet;
  std::vector<NfaTransition> transitions;
  std::vector<int> initials;
  std::vector<int> finals;

  void validate() const;
  bool accepts(std::span<const int> word) const;
  /// Epsilon closure of a state set (returned sorted).
  std::vector<int> closure(std::vector<int> states) const;

  static Nfa universal(const Alphabet& alphabet);
  static Nfa empty_language(const Alphabet& alphabet);
  /// Accepts exactly the given word.
  static Nfa single_word(const Alphabet& alphabet, std::span<const int> word);
};

/// Intersection of two NFAs over the same alphabet; only states reachable
/// from the initials and co-reachable to the finals are kept. Throws
/// AlphabetMismatch.
Nfa intersect_nfa(const Nfa& a, const Nfa& b);

/// Prepends a chain of states reading `prefix` in front of `n`.
Nfa prepend_word(const Nfa& n, std::span<const int> prefix);

// ---------------------------------------------------------------------------
// Pushdown automata

/// `push` replaces the popped top; push[0] becomes the new top, an empty
/// push is a plain pop.
struct PdaTransition {
  int from = 0;
  int input = -1;  ///< -1 is an epsilon move
  int top = 0;
  int to = 0;
  std::vector<int> push;
};

/// PDA accepting by final state. Stack symbol 0 is the bottom marker and
/// the run starts with exactly that symbol on the stack.
struct Pda {
  int num_states = 0;
  Alphabet input;
  int stack_size = 1;
  int initial = 0;
  std::vector<int> finals;
  std::vector<PdaTransition> transitions;

  static constexpr int kBottom = 0;

  void validate() const;
  /// Longest push word over all transitions.
  std::size_t max_push() const;
  /// True iff no (state, input-or-epsilon, top) has two applicable moves
  /// and no state mixes epsilon and input moves on the same top.
  bool is_deterministic() const;
};

/// Splits every push longer than two symbols through fresh states.
Pda normalize_pushes(const Pda& m);

/// Standard single-loop construction: expand variables by epsilon moves,
/// match terminals against the input.
Pda grammar_to_pda(const Grammar& g);

/// `images[a]` is h(a) as a word over m.input. The result reads letters of
/// `delta` and feeds h(a) to m through buffer states.
Pda inverse_hom(const Pda& m, const Alphabet& delta, const std::vector<Word>& images);

/// Product automaton; the NFA is remapped onto the PDA alphabet by letter
/// name. Throws AlphabetMismatch unless both alphabets have the same names.
Pda intersect_pda_nfa(const Pda& m, const Nfa& n);

/// Triple construction [p, Z, q] with an extra drain state that empties
/// the stack from any final state. Used by tests as an explicit oracle;
/// pda_empty runs the same generating-symbol fixpoint without
/// materialising the productions.
Grammar pda_to_grammar(const Pda& m);

/// Language emptiness via the generating-symbol fixpoint over the triple
/// variables of pda_to_grammar, computed by worklist saturation.
bool pda_empty(const Pda& m);

/// Exact membership: intersect with a single-word NFA and test emptiness.
bool pda_accepts(const Pda& m, std::span<const int> word);

/// Configuration-set simulation with a bound on stack height; only exact
/// for automata whose accepting runs never exceed `stack_cap`.
bool pda_simulate(const Pda& m, std::span<const int> word, std::size_t stack_cap,
                  std::size_t config_cap = 1'000'000);

/// Nondeterministic step engine over configuration sets, exposed so that
/// callers can drive a PDA letter by letter.
struct PdaConfig {
  int state = 0;
  std::vector<int> stack;  ///< bottom first
  auto operator<=>(const PdaConfig&) const = default;
};

class PdaRunner {
 public:
  PdaRunner(const Pda& m, std::size_t stack_cap, std::size_t config_cap = 1'000'000);

  /// Configurations reachable by epsilon moves from the initial one.
  std::vector<PdaConfig> start() const;
  /// Reads one letter then closes under epsilon moves.
  std::vector<PdaConfig> step(const std::vector<PdaConfig>& configs, int letter) const;
  bool accepting(const std::vector<PdaConfig>& configs) const;

 private:
  std::vector<PdaConfig> close(std::vector<PdaConfig> configs) const;

  const Pda* m_;
  std::size_t stack_cap_;
  std::size_t config_cap_;
  std::vector<std::vector<std::size_t>> by_state_;
  std::vector<bool> final_;
};

/// Decides whether p(w) lies in p(L(n)) for the group whose word problem
/// is recognised by `wp`. `involution[a]` is the letter representing a^-1.
bool rational_member(const Pda& wp, std::span<const int> involution, std::span<const int> word,
                     const Nfa& n);

/// Reverses a word and replaces each letter by its formal inverse.
Word invert_word(std::span<const int> word, std::span<const int> involution);

}  // namespace vfk
