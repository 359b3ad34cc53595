#include "vfk/cayley.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "vfk/error.hpp"

namespace vfk {

std::optional<int> Ball::find(const NormalForm& g) const {
  auto it = index_.find(g);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int Ball::at(const NormalForm& g) const {
  if (auto i = find(g)) return *i;
  throw Error(ErrorCode::VertexOutsideBall,
              presentation->render(g) + " is not within radius " + std::to_string(radius));
}

std::vector<int> Ball::distances_from(int v) const {
  std::vector<int> d(vertices.size(), -1);
  std::vector<int> queue{v};
  d[v] = 0;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (int w : step[queue[i]]) {
      if (w >= 0 && d[w] == -1) {
        d[w] = d[queue[i]] + 1;
        queue.push_back(w);
      }
    }
  }
  return d;
}

std::size_t Ball::undirected_edges() const {
  std::size_t directed = 0;
  for (const auto& row : step)
    for (int w : row)
      if (w >= 0) ++directed;
  return directed / 2;
}

std::string Ball::to_dot() const {
  std::ostringstream out;
  out << "digraph ball {\n";
  for (std::size_t v = 0; v < vertices.size(); ++v) {
    out << "  n" << v << " [label=\"" << presentation->render(vertices[v]) << "\"];\n";
  }
  for (std::size_t v = 0; v < vertices.size(); ++v) {
    for (std::size_t a = 0; a < step[v].size(); ++a) {
      if (step[v][a] >= 0) {
        out << "  n" << v << " -> n" << step[v][a] << " [label=\"" << presentation->sigma().names[a] << "\"];\n";
      }
    }
  }
  out << "}\n";
  return out.str();
}

Ball build_ball(const VfPresentation& p, int r, std::size_t cap) {
  if (r < 0) throw Error(ErrorCode::InvalidInput, "radius must be nonnegative");
  Ball ball;
  ball.presentation = &p;
  ball.radius = r;
  ball.vertices.push_back(NormalForm{});
  ball.dist.push_back(0);
  ball.index_[NormalForm{}] = 0;
  const int sigma = p.sigma().size();
  for (std::size_t i = 0; i < ball.vertices.size(); ++i) {
    if (ball.dist[i] == r) continue;
    for (int a = 0; a < sigma; ++a) {
      NormalForm next = ball.vertices[i];
      p.push_letter(next, a);
      if (ball.index_.count(next)) continue;
      if (ball.vertices.size() >= cap) {
        throw Error(ErrorCode::ExplosionGuard, "ball exceeds " + std::to_string(cap) + " vertices");
      }
      ball.index_[next] = static_cast<int>(ball.vertices.size());
      ball.dist.push_back(ball.dist[i] + 1);
      ball.vertices.push_back(std::move(next));
    }
  }
  ball.step.assign(ball.vertices.size(), std::vector<int>(sigma, -1));
  for (std::size_t i = 0; i < ball.vertices.size(); ++i) {
    for (int a = 0; a < sigma; ++a) {
      NormalForm next = ball.vertices[i];
      p.push_letter(next, a);
      if (auto j = ball.find(next)) ball.step[i][a] = *j;
    }
  }
  return ball;
}

bool in_prefix_cut(std::span<const int> x, const NormalForm& g) {
  return g.free_part.size() >= x.size() && std::equal(x.begin(), x.end(), g.free_part.begin());
}

namespace {

void check_prefix(const VfPresentation& p, std::span<const int> x) {
  if (x.empty()) throw Error(ErrorCode::InvalidInput, "prefix cuts need a nonempty prefix");
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!p.is_free_letter(x[i])) throw Error(ErrorCode::InvalidInput, "prefix letters must come from X or its inverses");
    if (i > 0 && x[i] == p.free_inverse(x[i - 1])) throw Error(ErrorCode::InvalidInput, "prefix is not freely reduced");
  }
}

int max_pairwise(const Ball& ball, const std::vector<int>& members) {
  int best = 0;
  for (int u : members) {
    const auto d = ball.distances_from(u);
    for (int v : members) {
      if (d[v] < 0) throw Error(ErrorCode::VertexOutsideBall, "boundary vertices are not connected inside the ball");
      best = std::max(best, d[v]);
    }
  }
  return best;
}

}  // namespace

CutBoundary cut_boundary(const VfPresentation& p, std::span<const int> x, int r, std::size_t cap) {
  check_prefix(p, x);
  const int horizon = static_cast<int>(x.size() + p.max_rule_length()) + 1;
  if (r < horizon) {
    throw Error(ErrorCode::NotStabilized, "radius " + std::to_string(r) + " is below the horizon " +
                                              std::to_string(horizon));
  }
  const Ball ball = build_ball(p, r + 1, cap);
  std::set<std::pair<NormalForm, int>> inner_edges, all_edges;
  for (std::size_t v = 0; v < ball.vertices.size(); ++v) {
    if (ball.dist[v] > r || !in_prefix_cut(x, ball.vertices[v])) continue;
    for (int a = 0; a < p.sigma().size(); ++a) {
      NormalForm next = ball.vertices[v];
      p.push_letter(next, a);
      if (in_prefix_cut(x, next)) continue;
      all_edges.insert({ball.vertices[v], a});
      if (ball.dist[v] <= r - 1) inner_edges.insert({ball.vertices[v], a});
    }
  }
  if (inner_edges != all_edges) {
    throw Error(ErrorCode::NotStabilized, "boundary still grows at radius " + std::to_string(r));
  }
  CutBoundary out;
  out.radius = r;
  out.edges.assign(all_edges.begin(), all_edges.end());
  out.weight = out.edges.size();
  std::set<NormalForm> inner, vertex;
  for (const auto& [g, a] : out.edges) {
    inner.insert(g);
    vertex.insert(g);
    NormalForm next = g;
    p.push_letter(next, a);
    vertex.insert(next);
  }
  out.inner.assign(inner.begin(), inner.end());
  out.vertex.assign(vertex.begin(), vertex.end());
  std::vector<int> members;
  for (const auto& g : out.vertex) members.push_back(ball.at(g));
  out.beta_diameter = max_pairwise(ball, members);
  return out;
}

std::string to_string(Nesting n) {
  switch (n) {
    case Nesting::Equal:
      return "equal";
    case Nesting::FirstInSecond:
      return "first-in-second";
    case Nesting::SecondInFirst:
      return "second-in-first";
    case Nesting::Disjoint:
      return "first-in-complement-of-second";
  }
  return "?";
}

Nesting cuts_nested(std::span<const int> x, std::span<const int> y) {
  auto is_prefix = [](std::span<const int> a, std::span<const int> b) {
    return a.size() <= b.size() && std::equal(a.begin(), a.end(), b.begin());
  };
  if (x.size() == y.size() && is_prefix(x, y)) return Nesting::Equal;
  if (is_prefix(x, y)) return Nesting::SecondInFirst;
  if (is_prefix(y, x)) return Nesting::FirstInSecond;
  return Nesting::Disjoint;
}

bool nesting_holds_in_ball(const Ball& ball, std::span<const int> x, std::span<const int> y, Nesting n) {
  for (const auto& g : ball.vertices) {
    const bool in_x = in_prefix_cut(x, g), in_y = in_prefix_cut(y, g);
    switch (n) {
      case Nesting::Equal:
        if (in_x != in_y) return false;
        break;
      case Nesting::FirstInSecond:
        if (in_x && !in_y) return false;
        break;
      case Nesting::SecondInFirst:
        if (in_y && !in_x) return false;
        break;
      case Nesting::Disjoint:
        if (in_x && in_y) return false;
        break;
    }
  }
  return true;
}

std::vector<BallComponent> component_cuts(const VfPresentation& p, int r, int probe, std::size_t cap,
                                          Ball* probe_ball) {
  if (r < 0 || probe < 1) throw Error(ErrorCode::InvalidInput, "need r >= 0 and probe >= 1");
  Ball ball = build_ball(p, r + probe, cap);
  std::vector<int> component(ball.vertices.size(), -1);
  std::vector<BallComponent> out;
  for (std::size_t v = 0; v < ball.vertices.size(); ++v) {
    if (ball.dist[v] <= r || component[v] != -1) continue;
    BallComponent c;
    const int id = static_cast<int>(out.size());
    std::vector<int> queue{static_cast<int>(v)};
    component[v] = id;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      for (int w : ball.step[queue[i]]) {
        if (w >= 0 && ball.dist[w] > r && component[w] == -1) {
          component[w] = id;
          queue.push_back(w);
        }
      }
    }
    std::sort(queue.begin(), queue.end());
    c.vertices = queue;
    for (int u : c.vertices) {
      if (ball.dist[u] == r + 1) c.boundary.push_back(u);
      if (ball.dist[u] == r + probe) c.unbounded_candidate = true;
    }
    c.boundary_diameter = max_pairwise(ball, c.boundary);
    out.push_back(std::move(c));
  }
  if (probe_ball) *probe_ball = std::move(ball);
  return out;
}

namespace {

std::vector<int> polygon(const Ball& ball, const std::vector<NormalForm>& seq) {
  if (seq.empty()) return {};
  if (seq.front() != seq.back()) throw Error(ErrorCode::InvalidInput, "sequence must be closed (v0 = vn)");
  std::vector<int> out;
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) out.push_back(ball.at(seq[i]));
  return out;
}

}  // namespace

std::vector<Chord> triangulate_tree_sequence(const Ball& ball, const std::vector<NormalForm>& seq, int k) {
  if (ball.undirected_edges() + 1 != ball.vertices.size()) {
    throw Error(ErrorCode::NotATree, "the ball has " + std::to_string(ball.undirected_edges()) +
                                         " undirected edges on " + std::to_string(ball.vertices.size()) +
                                         " vertices");
  }
  const std::vector<int> poly = polygon(ball, seq);
  const int n = static_cast<int>(poly.size());
  for (int i = 1; i <= n; ++i) {
    const int d = ball.distances_from(poly[i - 1])[poly[i % n]];
    if (d > k) throw Error(ErrorCode::StepTooLong, "step " + std::to_string(i) + " has length " + std::to_string(d));
  }
  std::vector<Chord> chords;
  if (n < 4) return chords;
  const auto from_start = ball.distances_from(poly[0]);
  std::vector<int> alive(n);
  for (int i = 0; i < n; ++i) alive[i] = i;
  while (alive.size() > 3) {
    std::size_t far = 1;
    for (std::size_t j = 2; j < alive.size(); ++j)
      if (from_start[poly[alive[j]]] > from_start[poly[alive[far]]]) far = j;
    const int prev = alive[far - 1];
    const int next = alive[(far + 1) % alive.size()];
    chords.emplace_back(std::min(prev, next), std::max(prev, next));
    alive.erase(alive.begin() + static_cast<std::ptrdiff_t>(far));
  }
  return chords;
}

bool check_triangulation(const Ball& ball, const std::vector<NormalForm>& seq, const std::vector<Chord>& chords,
                         int k) {
  const std::vector<int> poly = polygon(ball, seq);
  const int n = static_cast<int>(poly.size());
  if (n < 4) return chords.empty();
  if (static_cast<int>(chords.size()) != n - 3) return false;
  std::set<Chord> seen;
  for (auto [a, b] : chords) {
    if (a > b) std::swap(a, b);
    if (a < 0 || b >= n || b - a < 2 || (a == 0 && b == n - 1)) return false;
    if (!seen.insert({a, b}).second) return false;
  }
  for (auto [a, b] : seen) {
    for (auto [c, d] : seen) {
      if ((a < c && c < b && b < d) || (c < a && a < d && d < b)) return false;
    }
  }
  auto within = [&](int i, int j) {
    const int d = ball.distances_from(poly[i])[poly[j]];
    return d >= 0 && d <= k;
  };
  for (int i = 0; i < n; ++i)
    if (!within(i, (i + 1) % n)) return false;
  for (auto [a, b] : seen)
    if (!within(a, b)) return false;
  return true;
}

std::optional<std::vector<Chord>> find_triangulation(const Ball& ball, const std::vector<NormalForm>& seq, int k) {
  const std::vector<int> poly = polygon(ball, seq);
  const int n = static_cast<int>(poly.size());
  if (n > 8) throw Error(ErrorCode::InvalidInput, "exhaustive triangulation search is limited to 8 vertices");
  if (n < 4) return std::vector<Chord>{};
  std::vector<std::vector<int>> dist(n);
  for (int i = 0; i < n; ++i) {
    const auto d = ball.distances_from(poly[i]);
    for (int j = 0; j < n; ++j) dist[i].push_back(d[poly[j]]);
  }
  for (int i = 0; i < n; ++i) {
    const int d = dist[i][(i + 1) % n];
    if (d < 0 || d > k) return std::nullopt;
  }
  auto ok = [&](int i, int j) { return j - i == 1 || (dist[i][j] >= 0 && dist[i][j] <= k); };
  // Triangulations of the sub-polygon i..j rooted at side (i, j).
  auto solve = [&](auto&& self, int i, int j, std::vector<Chord>& out) -> bool {
    if (j - i < 2) return true;
    for (int m = i + 1; m < j; ++m) {
      if (!ok(i, m) || !ok(m, j)) continue;
      std::vector<Chord> attempt;
      if (m - i >= 2) attempt.emplace_back(i, m);
      if (j - m >= 2) attempt.emplace_back(m, j);
      if (self(self, i, m, attempt) && self(self, m, j, attempt)) {
        out.insert(out.end(), attempt.begin(), attempt.end());
        return true;
      }
    }
    return false;
  };
  std::vector<Chord> chords;
  if (!solve(solve, 0, n - 1, chords)) return std::nullopt;
  return chords;
}

}  // namespace vfk
