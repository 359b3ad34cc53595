#include "vfk/fingroup.hpp"

#include <algorithm>
#include <sstream>

#include "vfk/error.hpp"

namespace vfk {

namespace {

std::string triple(int a, int b, int c) {
  std::ostringstream out;
  out << "(" << a << "," << b << "," << c << ")";
  return out.str();
}

bool is_permutation_of_range(const std::vector<Element>& values) {
  std::vector<bool> seen(values.size(), false);
  for (Element v : values) {
    if (seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

}  // namespace

FiniteGroupTable::FiniteGroupTable(std::vector<std::vector<Element>> rows) : rows_(std::move(rows)) {
  const int n = order();
  inverse_.assign(n, 0);
  element_order_.assign(n, 1);
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      if (rows_[a][b] == 0) {
        inverse_[a] = b;
        break;
      }
    }
    Element power = a;
    int k = 1;
    while (power != 0) {
      power = rows_[power][a];
      ++k;
    }
    element_order_[a] = k;
  }
}

FiniteGroupTable FiniteGroupTable::validate(std::vector<std::vector<Element>> rows) {
  const int n = static_cast<int>(rows.size());
  if (n == 0) throw Error(ErrorCode::InvalidInput, "empty multiplication table");
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n) {
      throw Error(ErrorCode::InvalidInput, "table row " + std::to_string(i) + " has wrong length");
    }
    for (Element v : rows[i]) {
      if (v < 0 || v >= n) {
        throw Error(ErrorCode::InvalidInput, "table entry out of range in row " + std::to_string(i));
      }
    }
  }
  for (Element g = 0; g < n; ++g) {
    if (rows[0][g] != g || rows[g][0] != g) {
      throw Error(ErrorCode::NoIdentity, "element 0 is not an identity at " + std::to_string(g));
    }
  }
  for (int i = 0; i < n; ++i) {
    if (!is_permutation_of_range(rows[i])) {
      throw Error(ErrorCode::NotCancellative, "row " + std::to_string(i) + " is not a permutation");
    }
    std::vector<Element> column(n);
    for (int j = 0; j < n; ++j) column[j] = rows[j][i];
    if (!is_permutation_of_range(column)) {
      throw Error(ErrorCode::NotCancellative, "column " + std::to_string(i) + " is not a permutation");
    }
  }
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      const Element ab = rows[a][b];
      for (Element c = 0; c < n; ++c) {
        if (rows[ab][c] != rows[a][rows[b][c]]) {
          throw Error(ErrorCode::NotAssociative, "first violating triple " + triple(a, b, c));
        }
      }
    }
  }
  return FiniteGroupTable(std::move(rows));
}

FiniteGroupTable FiniteGroupTable::trivial() { return cyclic(1); }

FiniteGroupTable FiniteGroupTable::cyclic(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidInput, "cyclic group order must be positive");
  std::vector<std::vector<Element>> rows(n, std::vector<Element>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) rows[a][b] = (a + b) % n;
  return validate(std::move(rows));
}

FiniteGroupTable FiniteGroupTable::dihedral(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidInput, "dihedral parameter must be positive");
  const int m = 2 * n;
  std::vector<std::vector<Element>> rows(m, std::vector<Element>(m));
  for (int x = 0; x < m; ++x) {
    for (int y = 0; y < m; ++y) {
      if (x < n && y < n) {
        rows[x][y] = (x + y) % n;
      } else if (x < n) {
        rows[x][y] = (y - n + x) % n + n;
      } else if (y < n) {
        rows[x][y] = (x - n - y + n) % n + n;
      } else {
        rows[x][y] = (x - y + n) % n;
      }
    }
  }
  return validate(std::move(rows));
}

GroupInjection validate_injection(const FiniteGroupTable& source, const FiniteGroupTable& target,
                                  std::vector<Element> map) {
  if (static_cast<int>(map.size()) != source.order()) {
    throw Error(ErrorCode::InvalidInput, "injection length differs from source order");
  }
  for (Element v : map) {
    if (v < 0 || v >= target.order()) throw Error(ErrorCode::InvalidInput, "injection image out of range");
  }
  if (map[0] != 0) throw Error(ErrorCode::NotAHomomorphism, "identity not mapped to identity");
  std::vector<Element> sorted = map;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(ErrorCode::NotAHomomorphism, "map is not injective");
  }
  for (Element a = 0; a < source.order(); ++a) {
    for (Element b = 0; b < source.order(); ++b) {
      if (map[source.mul(a, b)] != target.mul(map[a], map[b])) {
        std::ostringstream msg;
        msg << "map(" << a << "*" << b << ") != map(" << a << ")*map(" << b << ")";
        throw Error(ErrorCode::NotAHomomorphism, msg.str());
      }
    }
  }
  return GroupInjection{std::move(map)};
}

bool is_subgroup(const FiniteGroupTable& g, std::span<const Element> subset) {
  std::vector<bool> member(g.order(), false);
  for (Element e : subset) {
    if (e < 0 || e >= g.order()) return false;
    member[e] = true;
  }
  if (!member[0]) return false;
  for (Element a : subset)
    for (Element b : subset)
      if (!member[g.mul(a, b)]) return false;
  return true;
}

std::optional<Element> is_subgroup_conjugate_into(const FiniteGroupTable& g,
                                                  std::span<const Element> a_set,
                                                  std::span<const Element> b_set) {
  if (!is_subgroup(g, a_set)) throw Error(ErrorCode::NotASubgroup, "first set");
  if (!is_subgroup(g, b_set)) throw Error(ErrorCode::NotASubgroup, "second set");
  std::vector<bool> in_b(g.order(), false);
  for (Element e : b_set) in_b[e] = true;
  for (Element c = 0; c < g.order(); ++c) {
    const bool fits = std::all_of(a_set.begin(), a_set.end(),
                                  [&](Element a) { return in_b[g.conjugate(a, c)]; });
    if (fits) return c;
  }
  return std::nullopt;
}

ElementSet generated_subgroup(const FiniteGroupTable& g, std::span<const Element> gens) {
  std::vector<bool> member(g.order(), false);
  std::vector<Element> queue{0};
  member[0] = true;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (Element s : gens) {
      const Element next = g.mul(queue[i], s);
      if (!member[next]) {
        member[next] = true;
        queue.push_back(next);
      }
    }
  }
  std::sort(queue.begin(), queue.end());
  return queue;
}

std::vector<Element> generating_set(const FiniteGroupTable& g) {
  std::vector<Element> gens;
  std::vector<bool> covered(g.order(), false);
  covered[0] = true;
  for (Element e = 1; e < g.order(); ++e) {
    if (covered[e]) continue;
    gens.push_back(e);
    for (Element m : generated_subgroup(g, gens)) covered[m] = true;
  }
  return gens;
}

namespace {

// Extends generator images to a full map by BFS over the Cayley graph of
// `source`; every edge is checked, which is sufficient for the result to be
// a homomorphism.
std::optional<std::vector<Element>> extend(const FiniteGroupTable& source, const FiniteGroupTable& target,
                                           std::span<const Element> gens, std::span<const Element> images) {
  std::vector<Element> map(source.order(), -1);
  map[0] = 0;
  std::vector<Element> queue{0};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const Element e = queue[i];
    for (std::size_t k = 0; k < gens.size(); ++k) {
      const Element next = source.mul(e, gens[k]);
      const Element want = target.mul(map[e], images[k]);
      if (map[next] == -1) {
        map[next] = want;
        queue.push_back(next);
      } else if (map[next] != want) {
        return std::nullopt;
      }
    }
  }
  return map;
}

}  // namespace

std::vector<GroupInjection> all_homomorphisms(const FiniteGroupTable& source,
                                              const FiniteGroupTable& target,
                                              bool injective_only) {
  std::vector<GroupInjection> result;
  if (injective_only && source.order() > target.order()) return result;
  const std::vector<Element> gens = generating_set(source);
  std::vector<std::vector<Element>> candidates(gens.size());
  for (std::size_t k = 0; k < gens.size(); ++k) {
    const int want = source.element_order(gens[k]);
    for (Element t = 0; t < target.order(); ++t) {
      const int have = target.element_order(t);
      if (injective_only ? have == want : want % have == 0) candidates[k].push_back(t);
    }
  }
  std::vector<Element> images(gens.size());
  std::vector<std::size_t> cursor(gens.size(), 0);
  // Odometer over the candidate lists.
  auto recurse = [&](auto&& self, std::size_t depth) -> void {
    if (depth == gens.size()) {
      auto map = extend(source, target, gens, images);
      if (!map) return;
      if (injective_only) {
        std::vector<Element> sorted = *map;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return;
      }
      result.push_back(GroupInjection{std::move(*map)});
      return;
    }
    for (Element t : candidates[depth]) {
      images[depth] = t;
      self(self, depth + 1);
    }
  };
  recurse(recurse, 0);
  return result;
}

std::vector<GroupInjection> all_isomorphisms(const FiniteGroupTable& g1, const FiniteGroupTable& g2) {
  if (g1.order() != g2.order()) return {};
  return all_homomorphisms(g1, g2, true);
}

std::optional<GroupInjection> find_isomorphism(const FiniteGroupTable& g1, const FiniteGroupTable& g2) {
  if (g1.order() != g2.order()) return std::nullopt;
  std::vector<int> o1, o2;
  for (Element e = 0; e < g1.order(); ++e) o1.push_back(g1.element_order(e));
  for (Element e = 0; e < g2.order(); ++e) o2.push_back(g2.element_order(e));
  std::sort(o1.begin(), o1.end());
  std::sort(o2.begin(), o2.end());
  if (o1 != o2) return std::nullopt;
  auto isos = all_homomorphisms(g1, g2, true);
  if (isos.empty()) return std::nullopt;
  return isos.front();
}

ElementSet image_of(std::span<const Element> map) {
  ElementSet out(map.begin(), map.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace vfk
