#include "vfk/synth.hpp"

#include <algorithm>
#include <numeric>

#include "vfk/error.hpp"

namespace vfk {

std::vector<FiniteGroupTable> default_catalog(int max_order) {
  std::vector<FiniteGroupTable> out;
  for (int n = 1; n <= max_order; ++n) out.push_back(FiniteGroupTable::cyclic(n));
  for (int m = 2; 2 * m <= max_order; ++m) out.push_back(FiniteGroupTable::dihedral(m));
  return out;
}

namespace {

std::string vertex_name(int v, int count) {
  static const char* kNames = "PQRSTU";
  if (count <= 6) return std::string(1, kNames[v]);
  return "V" + std::to_string(v);
}

struct Structure {
  RawGog raw;
  int order_sum = 0;
};

struct EdgeChoice {
  int group = 0;
  std::vector<Element> into_src;
  std::vector<Element> into_tgt;
};

bool connected(int nv, const std::vector<std::pair<int, int>>& edges) {
  std::vector<int> parent(nv);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  int components = nv;
  for (auto [u, v] : edges) {
    const int a = find(u), b = find(v);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components == 1;
}

// All structures with nv vertices and ne undirected edges, ordered by the
// total group order (stable within equal totals).
std::vector<Structure> structures(int nv, int ne, const std::vector<FiniteGroupTable>& catalog) {
  std::vector<std::pair<int, int>> slots;
  for (int u = 0; u < nv; ++u)
    for (int v = u; v < nv; ++v) slots.emplace_back(u, v);
  std::vector<Structure> out;
  if (slots.empty()) return out;

  std::vector<int> pick(ne, 0);  // nondecreasing indices into slots
  auto each_multiset = [&](auto&& self, int i, int from, const std::function<void()>& f) -> void {
    if (i == ne) {
      f();
      return;
    }
    for (int s = from; s < static_cast<int>(slots.size()); ++s) {
      pick[i] = s;
      self(self, i + 1, s, f);
    }
  };

  each_multiset(each_multiset, 0, 0, [&] {
    std::vector<std::pair<int, int>> edges;
    for (int s : pick) edges.push_back(slots[s]);
    if (!connected(nv, edges)) return;
    std::vector<int> vgroup(nv, 0);
    auto each_vertex = [&](auto&& self, int v) -> void {
      if (v == nv) {
        std::vector<std::vector<EdgeChoice>> options(ne);
        for (int e = 0; e < ne; ++e) {
          const auto& gu = catalog[vgroup[edges[e].first]];
          const auto& gv = catalog[vgroup[edges[e].second]];
          for (std::size_t c = 0; c < catalog.size(); ++c) {
            const auto& eg = catalog[c];
            if (eg.order() > std::min(gu.order(), gv.order())) continue;
            const auto into_u = all_homomorphisms(eg, gu, true);
            const auto into_v = all_homomorphisms(eg, gv, true);
            for (const auto& a : into_u)
              for (const auto& b : into_v) options[e].push_back({static_cast<int>(c), a.map, b.map});
          }
        }
        std::vector<int> choice(ne, 0);
        auto each_edge = [&](auto&& self2, int e) -> void {
          if (e == ne) {
            Structure st;
            for (int k = 0; k < nv; ++k) {
              st.raw.vertices.push_back({vertex_name(k, nv), catalog[vgroup[k]].rows()});
              st.order_sum += catalog[vgroup[k]].order();
            }
            for (int k = 0; k < ne; ++k) {
              const std::string y = "y" + std::to_string(k + 1);
              const std::string ybar = y + "^-";
              const auto& opt = options[k][choice[k]];
              st.raw.edges.push_back(
                  {y, ybar, vertex_name(edges[k].first, nv), vertex_name(edges[k].second, nv)});
              st.raw.edge_groups.push_back({y, ybar, catalog[opt.group].rows(), opt.into_src, opt.into_tgt});
              st.order_sum += catalog[opt.group].order();
            }
            out.push_back(std::move(st));
            return;
          }
          for (std::size_t k = 0; k < options[e].size(); ++k) {
            choice[e] = static_cast<int>(k);
            self2(self2, e + 1);
          }
        };
        each_edge(each_edge, 0);
        return;
      }
      for (std::size_t c = 0; c < catalog.size(); ++c) {
        vgroup[v] = static_cast<int>(c);
        self(self, v + 1);
      }
    };
    each_vertex(each_vertex, 0);
  });
  std::stable_sort(out.begin(), out.end(),
                   [](const Structure& a, const Structure& b) { return a.order_sum < b.order_sum; });
  return out;
}

// Enumerates image words for the free slots with total length exactly
// `total`; slot 0 varies slowest, shorter words before longer ones, then
// lexicographically.
class ImageOdometer {
 public:
  ImageOdometer(int slots, int max_len, int sigma, int total)
      : slots_(slots), max_len_(max_len), sigma_(sigma), total_(total), words_(slots) {}

  bool run(const std::function<bool(const std::vector<Word>&)>& f) { return fill(0, total_, f); }

 private:
  bool fill(int slot, int remaining, const std::function<bool(const std::vector<Word>&)>& f) {
    if (slot == slots_) return remaining == 0 ? f(words_) : false;
    const int rest_cap = (slots_ - slot - 1) * max_len_;
    for (int len = std::max(0, remaining - rest_cap); len <= std::min(max_len_, remaining); ++len) {
      if (len > 0 && sigma_ == 0) break;
      Word w(len, 0);
      while (true) {
        words_[slot] = w;
        if (fill(slot + 1, remaining - len, f)) return true;
        int i = len - 1;
        while (i >= 0 && w[i] == sigma_ - 1) w[i--] = 0;
        if (i < 0) break;
        ++w[i];
      }
    }
    return false;
  }

  int slots_, max_len_, sigma_, total_;
  std::vector<Word> words_;
};

}  // namespace

std::size_t enumerate_candidates(const SynthBudget& budget, const Alphabet& sigma, const std::vector<int>& involution,
                                 const std::function<bool(const Candidate&)>& visit) {
  if (budget.max_vertices < 1 || budget.max_group_order < 1 || budget.max_edges < 0 || budget.max_image_length < 0) {
    throw Error(ErrorCode::InvalidInput, "budget fields must be positive (edges and image length nonnegative)");
  }
  std::vector<FiniteGroupTable> catalog;
  for (const auto& g : budget.catalog.empty() ? default_catalog(budget.max_group_order) : budget.catalog)
    if (g.order() <= budget.max_group_order) catalog.push_back(g);

  std::size_t count = 0;
  for (int nv = 1; nv <= budget.max_vertices; ++nv) {
    for (int ne = nv - 1; ne <= budget.max_edges; ++ne) {
      std::vector<Structure> all = structures(nv, ne, catalog);
      std::vector<GraphOfGroups> built;
      std::vector<int> sums;
      for (const auto& st : all) {
        GraphOfGroups g = GraphOfGroups::build(st.raw);
        if (!is_reduced_gog(g)) continue;
        built.push_back(std::move(g));
        sums.push_back(st.order_sum);
      }
      std::size_t begin = 0;
      while (begin < built.size()) {
        std::size_t end = begin;
        while (end < built.size() && sums[end] == sums[begin]) ++end;
        std::vector<std::vector<int>> slot_letters(end - begin);
        int max_slots = 0;
        for (std::size_t i = begin; i < end; ++i) {
          const GraphOfGroups& g = built[i];
          for (int a = 0; a < g.delta().size(); ++a) {
            const DeltaLetter& l = g.letter(a);
            if (!l.is_edge || (g.edges()[l.edge].forward && !g.tree()[l.edge])) slot_letters[i - begin].push_back(a);
          }
          max_slots = std::max(max_slots, static_cast<int>(slot_letters[i - begin].size()));
        }
        for (int total = 0; total <= max_slots * budget.max_image_length; ++total) {
          for (std::size_t i = begin; i < end; ++i) {
            const GraphOfGroups& g = built[i];
            const auto& letters = slot_letters[i - begin];
            ImageOdometer odo(static_cast<int>(letters.size()), budget.max_image_length, sigma.size(), total);
            const bool stop = odo.run([&](const std::vector<Word>& words) {
              Candidate c{g, GogHom{0, std::vector<Word>(g.delta().size())}};
              for (std::size_t k = 0; k < letters.size(); ++k) {
                c.hom.images[letters[k]] = words[k];
                const DeltaLetter& l = g.letter(letters[k]);
                if (l.is_edge) {
                  c.hom.images[g.edge_letter(g.edges()[l.edge].inverse)] = invert_word(words[k], involution);
                }
              }
              ++count;
              return visit(c);
            });
            if (stop) return count;
          }
        }
        begin = end;
      }
    }
  }
  return count;
}

std::optional<Candidate> synthesize(const GroupOracle& group, const SynthBudget& budget, SynthStats* stats) {
  std::optional<Candidate> found;
  const std::size_t count =
      enumerate_candidates(budget, group.sigma(), group.involution(), [&](const Candidate& c) {
        if (!verify(c.gog, group, c.hom).ok) return false;
        found = c;
        return true;
      });
  if (stats) {
    stats->candidates = count;
    stats->exhausted = !found;
  }
  return found;
}

}  // namespace vfk
