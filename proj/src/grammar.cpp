#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "vfk/error.hpp"
#include "vfk/langcore.hpp"

namespace vfk {

std::optional<int> Alphabet::find(const std::string& name) const {
  auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) return std::nullopt;
  return static_cast<int>(it - names.begin());
}

int Alphabet::at(const std::string& name) const {
  if (auto i = find(name)) return *i;
  throw Error(ErrorCode::UnknownSymbol, "'" + name + "'");
}

Word Alphabet::parse(const std::string& text) const {
  std::istringstream in(text);
  Word out;
  std::string tok;
  while (in >> tok) out.push_back(at(tok));
  return out;
}

std::string Alphabet::render(std::span<const int> word) const {
  std::string out;
  for (int a : word) {
    if (!out.empty()) out += ' ';
    out += names.at(a);
  }
  return out;
}

// ---------------------------------------------------------------------------

void Grammar::validate() const {
  const int nv = static_cast<int>(variables.size());
  if (start < 0 || start >= nv) throw Error(ErrorCode::InvalidInput, "start symbol is not a variable");
  std::set<std::string> seen(variables.begin(), variables.end());
  if (static_cast<int>(seen.size()) != nv) throw Error(ErrorCode::InvalidInput, "duplicate variable name");
  for (const auto& t : terminals.names) {
    if (seen.count(t)) throw Error(ErrorCode::InvalidInput, "'" + t + "' is both variable and terminal");
  }
  for (const auto& p : productions) {
    if (p.lhs < 0 || p.lhs >= nv) throw Error(ErrorCode::InvalidInput, "production with undeclared lhs");
    for (const auto& s : p.body) {
      const int limit = s.terminal ? terminals.size() : nv;
      if (s.id < 0 || s.id >= limit) throw Error(ErrorCode::InvalidInput, "production uses undeclared symbol");
    }
  }
}

std::size_t Grammar::size() const {
  std::size_t total = variables.size() + terminals.names.size();
  for (const auto& p : productions) total += p.body.size();
  return total;
}

bool Grammar::is_cnf() const {
  bool start_on_rhs = false;
  bool start_epsilon = false;
  for (const auto& p : productions) {
    for (const auto& s : p.body)
      if (!s.terminal && s.id == start) start_on_rhs = true;
    switch (p.body.size()) {
      case 0:
        if (p.lhs != start) return false;
        start_epsilon = true;
        break;
      case 1:
        if (!p.body[0].terminal) return false;
        break;
      case 2:
        if (p.body[0].terminal || p.body[1].terminal) return false;
        break;
      default:
        return false;
    }
  }
  return !(start_epsilon && start_on_rhs);
}

namespace {

class CnfBuilder {
 public:
  explicit CnfBuilder(const Grammar& g) : g_(g) {
    for (const auto& v : g_.variables) used_.insert(v);
    for (const auto& t : g_.terminals.names) used_.insert(t);
  }

  Grammar run() {
    add_start();
    replace_terminals();
    binarize();
    remove_epsilon();
    remove_units();
    cleanup();
    return std::move(g_);
  }

 private:
  int fresh(const std::string& base) {
    std::string name = base;
    for (int k = 1; used_.count(name); ++k) name = base + std::to_string(k);
    used_.insert(name);
    g_.variables.push_back(name);
    return static_cast<int>(g_.variables.size()) - 1;
  }

  void add_start() {
    const bool on_rhs = std::any_of(g_.productions.begin(), g_.productions.end(), [&](const Production& p) {
      return std::any_of(p.body.begin(), p.body.end(),
                         [&](const GSymbol& s) { return !s.terminal && s.id == g_.start; });
    });
    if (!on_rhs) return;
    const int s0 = fresh(g_.variables[g_.start] + "0");
    g_.productions.push_back(Production{s0, {GSymbol{false, g_.start}}});
    g_.start = s0;
  }

  void replace_terminals() {
    std::map<int, int> proxy;
    std::vector<Production> extra;
    for (auto& p : g_.productions) {
      if (p.body.size() < 2) continue;
      for (auto& s : p.body) {
        if (!s.terminal) continue;
        auto it = proxy.find(s.id);
        if (it == proxy.end()) {
          const int v = fresh("T_" + g_.terminals.names[s.id]);
          extra.push_back(Production{v, {s}});
          it = proxy.emplace(s.id, v).first;
        }
        s = GSymbol{false, it->second};
      }
    }
    g_.productions.insert(g_.productions.end(), extra.begin(), extra.end());
  }

  void binarize() {
    std::vector<Production> out;
    for (const auto& p : g_.productions) {
      if (p.body.size() <= 2) {
        out.push_back(p);
        continue;
      }
      int lhs = p.lhs;
      for (std::size_t i = 0; i + 2 < p.body.size(); ++i) {
        const int next = fresh("B_" + g_.variables[p.lhs]);
        out.push_back(Production{lhs, {p.body[i], GSymbol{false, next}}});
        lhs = next;
      }
      out.push_back(Production{lhs, {p.body[p.body.size() - 2], p.body.back()}});
    }
    g_.productions = std::move(out);
  }

  void remove_epsilon() {
    const std::size_t nv = g_.variables.size();
    std::vector<bool> nullable(nv, false);
    for (bool changed = true; changed;) {
      changed = false;
      for (const auto& p : g_.productions) {
        if (nullable[p.lhs]) continue;
        const bool all = std::all_of(p.body.begin(), p.body.end(),
                                     [&](const GSymbol& s) { return !s.terminal && nullable[s.id]; });
        if (all) {
          nullable[p.lhs] = true;
          changed = true;
        }
      }
    }
    std::set<Production> out;
    for (const auto& p : g_.productions) {
      const std::size_t n = p.body.size();
      for (unsigned mask = 0; mask < (1u << n); ++mask) {
        Production q{p.lhs, {}};
        bool ok = true;
        for (std::size_t i = 0; i < n; ++i) {
          if (mask & (1u << i)) {
            if (p.body[i].terminal || !nullable[p.body[i].id]) ok = false;
          } else {
            q.body.push_back(p.body[i]);
          }
        }
        if (ok && !q.body.empty()) out.insert(q);
      }
    }
    if (nullable[g_.start]) out.insert(Production{g_.start, {}});
    g_.productions.assign(out.begin(), out.end());
  }

  void remove_units() {
    const int nv = static_cast<int>(g_.variables.size());
    // unit[a][b]: a derives b by unit productions only.
    std::vector<std::vector<bool>> unit(nv, std::vector<bool>(nv, false));
    for (int a = 0; a < nv; ++a) unit[a][a] = true;
    for (bool changed = true; changed;) {
      changed = false;
      for (const auto& p : g_.productions) {
        if (p.body.size() != 1 || p.body[0].terminal) continue;
        for (int a = 0; a < nv; ++a) {
          if (unit[a][p.lhs] && !unit[a][p.body[0].id]) {
            unit[a][p.body[0].id] = true;
            changed = true;
          }
        }
      }
    }
    std::set<Production> out;
    for (int a = 0; a < nv; ++a) {
      for (const auto& p : g_.productions) {
        if (!unit[a][p.lhs]) continue;
        if (p.body.size() == 1 && !p.body[0].terminal) continue;
        if (p.body.empty() && a != g_.start) continue;
        out.insert(Production{a, p.body});
      }
    }
    g_.productions.assign(out.begin(), out.end());
  }

  void cleanup() {
    const int nv = static_cast<int>(g_.variables.size());
    std::vector<bool> generating(nv, false);
    for (bool changed = true; changed;) {
      changed = false;
      for (const auto& p : g_.productions) {
        if (generating[p.lhs]) continue;
        const bool all = std::all_of(p.body.begin(), p.body.end(),
                                     [&](const GSymbol& s) { return s.terminal || generating[s.id]; });
        if (all) {
          generating[p.lhs] = true;
          changed = true;
        }
      }
    }
    std::vector<Production> kept;
    for (const auto& p : g_.productions) {
      const bool ok = generating[p.lhs] &&
                      std::all_of(p.body.begin(), p.body.end(),
                                  [&](const GSymbol& s) { return s.terminal || generating[s.id]; });
      if (ok) kept.push_back(p);
    }
    std::vector<bool> reachable(nv, false);
    reachable[g_.start] = true;
    for (bool changed = true; changed;) {
      changed = false;
      for (const auto& p : kept) {
        if (!reachable[p.lhs]) continue;
        for (const auto& s : p.body) {
          if (!s.terminal && !reachable[s.id]) {
            reachable[s.id] = true;
            changed = true;
          }
        }
      }
    }
    std::vector<int> remap(nv, -1);
    std::vector<std::string> names;
    for (int v = 0; v < nv; ++v) {
      if (reachable[v]) {
        remap[v] = static_cast<int>(names.size());
        names.push_back(g_.variables[v]);
      }
    }
    std::set<Production> out;
    for (auto p : kept) {
      if (!reachable[p.lhs]) continue;
      p.lhs = remap[p.lhs];
      for (auto& s : p.body)
        if (!s.terminal) s.id = remap[s.id];
      out.insert(p);
    }
    g_.variables = std::move(names);
    g_.start = remap[g_.start];
    g_.productions.assign(out.begin(), out.end());
  }

  Grammar g_;
  std::set<std::string> used_;
};

}  // namespace

Grammar to_cnf(const Grammar& g) {
  g.validate();
  if (g.is_cnf()) return g;
  return CnfBuilder(g).run();
}

bool cyk_member(const Grammar& g, std::span<const int> word) {
  if (!g.is_cnf()) throw Error(ErrorCode::NotCnf, "CYK requires a grammar in Chomsky normal form");
  const std::size_t n = word.size();
  if (n == 0) {
    return std::any_of(g.productions.begin(), g.productions.end(),
                       [&](const Production& p) { return p.lhs == g.start && p.body.empty(); });
  }
  const std::size_t nv = g.variables.size();
  // table[i][len - 1][v]: variable v derives word[i, i + len).
  std::vector<std::vector<std::vector<char>>> table(
      n, std::vector<std::vector<char>>(n, std::vector<char>(nv, 0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& p : g.productions) {
      if (p.body.size() == 1 && p.body[0].id == word[i]) table[i][0][p.lhs] = 1;
    }
  }
  for (std::size_t len = 2; len <= n; ++len) {
    for (std::size_t i = 0; i + len <= n; ++i) {
      auto& cell = table[i][len - 1];
      for (std::size_t split = 1; split < len; ++split) {
        const auto& left = table[i][split - 1];
        const auto& right = table[i + split][len - split - 1];
        for (const auto& p : g.productions) {
          if (p.body.size() == 2 && left[p.body[0].id] && right[p.body[1].id]) cell[p.lhs] = 1;
        }
      }
    }
  }
  return table[0][n - 1][g.start] != 0;
}

}  // namespace vfk
