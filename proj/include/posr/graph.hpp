#pragma once

#include <algorithm>
#include <cstddef>
#include <deque>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "posr/element_set.hpp"
#include "posr/errors.hpp"
#include "posr/table.hpp"

namespace posr {

enum class SourceKind { posemiring, ring, semigroup };

/// Zero-divisor graph: vertices are the nonzero zero divisors of the source,
/// x -- y iff x != y and xy = 0.
class ZdGraph {
 public:
  ZdGraph() = default;
  ZdGraph(std::vector<Element> vertices, std::vector<char> adjacency, SourceKind kind)
      : vertices_(std::move(vertices)), adj_(std::move(adjacency)), kind_(kind) {}

  std::size_t size() const noexcept { return vertices_.size(); }
  /// Source element behind vertex i.
  Element element(std::size_t i) const { return vertices_.at(i); }
  const std::vector<Element>& vertices() const noexcept { return vertices_; }
  SourceKind source_kind() const noexcept { return kind_; }

  bool adjacent(std::size_t i, std::size_t j) const { return adj_[i * size() + j] != 0; }

  /// Vertex position of a source element, if it is a vertex.
  std::optional<std::size_t> index_of(Element x) const {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), x);
    if (it == vertices_.end() || *it != x) return std::nullopt;
    return static_cast<std::size_t>(it - vertices_.begin());
  }

  std::vector<std::size_t> neighbors(std::size_t i) const {
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < size(); ++j)
      if (adjacent(i, j)) out.push_back(j);
    return out;
  }

  std::size_t degree(std::size_t i) const { return neighbors(i).size(); }

  std::size_t edge_count() const {
    std::size_t m = 0;
    for (std::size_t i = 0; i < size(); ++i)
      for (std::size_t j = i + 1; j < size(); ++j) m += adjacent(i, j) ? 1 : 0;
    return m;
  }

 private:
  std::vector<Element> vertices_;
  std::vector<char> adj_;
  SourceKind kind_ = SourceKind::semigroup;
};

/// Builds the zero-divisor graph of an n x n multiplication table (row-major)
/// whose zero is index 0. Elements in `exclude` are never vertices.
inline ZdGraph build_zdgraph(std::span<const Element> mul, std::size_t n, std::span<const Element> exclude = {},
                             SourceKind kind = SourceKind::semigroup) {
  if (mul.size() != n * n) throw StructuralError("multiplication table is not n x n");
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y)
      if (mul[x * n + y] != mul[y * n + x])
        throw StructuralError("multiplication table is not commutative at (" + std::to_string(x) + "," +
                              std::to_string(y) + ")");
  std::vector<bool> skip(n, false);
  skip[0] = true;
  for (Element e : exclude)
    if (e < n) skip[e] = true;

  std::vector<Element> vertices;
  for (std::size_t x = 1; x < n; ++x) {
    if (skip[x]) continue;
    for (std::size_t y = 1; y < n; ++y)
      if (mul[x * n + y] == 0) {
        vertices.push_back(static_cast<Element>(x));
        break;
      }
  }
  const std::size_t v = vertices.size();
  std::vector<char> adj(v * v, 0);
  for (std::size_t i = 0; i < v; ++i)
    for (std::size_t j = 0; j < v; ++j)
      if (i != j && mul[vertices[i] * n + vertices[j]] == 0) adj[i * v + j] = 1;
  return ZdGraph(std::move(vertices), std::move(adj), kind);
}

inline ZdGraph zero_divisor_graph(const PoSemiringTable& a) {
  return build_zdgraph(a.mul_table(), a.order(), {}, SourceKind::posemiring);
}

// ---------------------------------------------------------------------------
// Metrics

struct GraphMetrics {
  /// Absent when the graph is disconnected.
  std::optional<unsigned> diameter;
  std::vector<unsigned> component_diameters;
  /// Absent for acyclic graphs.
  std::optional<unsigned> girth;
  std::size_t clique_number = 0;
  std::size_t component_count = 0;
  /// Per vertex; absent when some vertex is unreachable.
  std::vector<std::optional<unsigned>> eccentricity;
};

inline constexpr unsigned kUnreachable = std::numeric_limits<unsigned>::max();

inline std::vector<unsigned> bfs_distances(const ZdGraph& g, std::size_t src) {
  std::vector<unsigned> dist(g.size(), kUnreachable);
  std::deque<std::size_t> q{src};
  dist[src] = 0;
  while (!q.empty()) {
    std::size_t u = q.front();
    q.pop_front();
    for (std::size_t w = 0; w < g.size(); ++w)
      if (g.adjacent(u, w) && dist[w] == kUnreachable) {
        dist[w] = dist[u] + 1;
        q.push_back(w);
      }
  }
  return dist;
}

/// Length of the shortest cycle, by BFS from every vertex.
inline std::optional<unsigned> girth(const ZdGraph& g) {
  unsigned best = kUnreachable;
  const std::size_t v = g.size();
  for (std::size_t s = 0; s < v; ++s) {
    std::vector<unsigned> dist(v, kUnreachable);
    std::vector<std::size_t> parent(v, v);
    std::deque<std::size_t> q{s};
    dist[s] = 0;
    while (!q.empty()) {
      std::size_t u = q.front();
      q.pop_front();
      for (std::size_t w = 0; w < v; ++w) {
        if (!g.adjacent(u, w)) continue;
        if (dist[w] == kUnreachable) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          q.push_back(w);
        } else if (parent[u] != w) {
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      }
    }
  }
  if (best == kUnreachable) return std::nullopt;
  return best;
}

/// A 4-cycle on distinct vertices exists iff two vertices share two neighbours.
inline bool has_quadrilateral(const ZdGraph& g) {
  for (std::size_t a = 0; a < g.size(); ++a)
    for (std::size_t b = a + 1; b < g.size(); ++b) {
      int common = 0;
      for (std::size_t w = 0; w < g.size(); ++w)
        if (g.adjacent(a, w) && g.adjacent(b, w) && ++common >= 2) return true;
    }
  return false;
}

inline bool has_triangle(const ZdGraph& g) {
  for (std::size_t a = 0; a < g.size(); ++a)
    for (std::size_t b = a + 1; b < g.size(); ++b) {
      if (!g.adjacent(a, b)) continue;
      for (std::size_t c = b + 1; c < g.size(); ++c)
        if (g.adjacent(a, c) && g.adjacent(b, c)) return true;
    }
  return false;
}

inline bool is_acyclic(const ZdGraph& g) {
  // A forest has |E| = |V| - components.
  std::size_t comps = 0;
  std::vector<bool> seen(g.size(), false);
  for (std::size_t s = 0; s < g.size(); ++s) {
    if (seen[s]) continue;
    ++comps;
    auto d = bfs_distances(g, s);
    for (std::size_t i = 0; i < g.size(); ++i)
      if (d[i] != kUnreachable) seen[i] = true;
  }
  return g.edge_count() + comps == g.size();
}

/// Every maximal clique, each as sorted vertex positions (Bron-Kerbosch
/// with pivoting).
inline std::vector<std::vector<std::size_t>> maximal_cliques(const ZdGraph& g) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> r;
  auto rec = [&](auto&& self, std::vector<std::size_t> p, std::vector<std::size_t> x) -> void {
    if (p.empty() && x.empty()) {
      if (!r.empty()) {
        auto c = r;
        std::sort(c.begin(), c.end());
        out.push_back(std::move(c));
      }
      return;
    }
    std::size_t pivot = p.empty() ? x.front() : p.front();
    std::size_t best = 0;
    for (const auto* set : {&p, &x})
      for (std::size_t u : *set) {
        std::size_t cnt = 0;
        for (std::size_t w : p) cnt += g.adjacent(u, w) ? 1 : 0;
        if (cnt >= best) {
          best = cnt;
          pivot = u;
        }
      }
    std::vector<std::size_t> todo;
    for (std::size_t w : p)
      if (!g.adjacent(pivot, w)) todo.push_back(w);
    for (std::size_t w : todo) {
      std::vector<std::size_t> np, nx;
      for (std::size_t y : p)
        if (g.adjacent(w, y)) np.push_back(y);
      for (std::size_t y : x)
        if (g.adjacent(w, y)) nx.push_back(y);
      r.push_back(w);
      self(self, std::move(np), std::move(nx));
      r.pop_back();
      p.erase(std::find(p.begin(), p.end(), w));
      x.push_back(w);
    }
  };
  std::vector<std::size_t> all(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) all[i] = i;
  rec(rec, all, {});
  std::sort(out.begin(), out.end());
  return out;
}

/// Size of a largest clique, by branch and bound.
inline std::size_t clique_number(const ZdGraph& g) {
  std::size_t best = 0;
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::vector<std::size_t> cand) -> void {
    if (cur.size() + cand.size() <= best) return;
    if (cand.empty()) {
      best = cur.size();
      return;
    }
    while (!cand.empty()) {
      if (cur.size() + cand.size() <= best) return;
      std::size_t w = cand.back();
      cand.pop_back();
      std::vector<std::size_t> next;
      for (std::size_t y : cand)
        if (g.adjacent(w, y)) next.push_back(y);
      cur.push_back(w);
      self(self, std::move(next));
      cur.pop_back();
    }
  };
  std::vector<std::size_t> all(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) all[i] = i;
  rec(rec, all);
  return best;
}

inline GraphMetrics graph_metrics(const ZdGraph& g) {
  GraphMetrics m;
  const std::size_t v = g.size();
  std::vector<std::vector<unsigned>> dist(v);
  for (std::size_t s = 0; s < v; ++s) dist[s] = bfs_distances(g, s);

  std::vector<int> comp(v, -1);
  for (std::size_t s = 0; s < v; ++s) {
    if (comp[s] >= 0) continue;
    const int id = static_cast<int>(m.component_count++);
    unsigned diam = 0;
    for (std::size_t t = 0; t < v; ++t)
      if (dist[s][t] != kUnreachable) {
        comp[t] = id;
        for (std::size_t u = 0; u < v; ++u)
          if (dist[t][u] != kUnreachable) diam = std::max(diam, dist[t][u]);
      }
    m.component_diameters.push_back(diam);
  }
  const bool connected = m.component_count <= 1;
  m.eccentricity.assign(v, std::nullopt);
  unsigned diameter = 0;
  for (std::size_t s = 0; s < v; ++s) {
    if (!connected) continue;
    unsigned ecc = 0;
    for (std::size_t t = 0; t < v; ++t) ecc = std::max(ecc, dist[s][t]);
    m.eccentricity[s] = ecc;
    diameter = std::max(diameter, ecc);
  }
  if (connected) m.diameter = diameter;
  m.girth = girth(g);
  m.clique_number = clique_number(g);
  return m;
}

// ---------------------------------------------------------------------------
// Shape classification

namespace shape {
struct Empty {
  friend bool operator==(const Empty&, const Empty&) = default;
};
struct SingleVertex {
  friend bool operator==(const SingleVertex&, const SingleVertex&) = default;
};
struct Complete {
  std::size_t n;
  friend bool operator==(const Complete&, const Complete&) = default;
};
/// K_{1,r}, r >= 2.
struct Star {
  std::size_t r;
  Element center;
  friend bool operator==(const Star&, const Star&) = default;
};
/// D_r + K1 + K1 + D_s with r <= s; subcenters carry r and s leaves.
struct TwoStar {
  std::size_t r;
  std::size_t s;
  Element center_r;
  Element center_s;
  friend bool operator==(const TwoStar&, const TwoStar&) = default;
};
/// K_{m,n}, 2 <= m <= n.
struct CompleteBipartite {
  std::size_t m;
  std::size_t n;
  friend bool operator==(const CompleteBipartite&, const CompleteBipartite&) = default;
};
struct OtherForest {
  friend bool operator==(const OtherForest&, const OtherForest&) = default;
};
struct HasCycle {
  unsigned girth;
  bool triangle_free;
  bool quadrilateral_free;
  friend bool operator==(const HasCycle&, const HasCycle&) = default;
};
}  // namespace shape

using ShapeKind = std::variant<shape::Empty, shape::SingleVertex, shape::Complete, shape::Star, shape::TwoStar,
                               shape::CompleteBipartite, shape::OtherForest, shape::HasCycle>;

struct GraphShape {
  ShapeKind kind;
  std::optional<unsigned> diameter;
  std::size_t component_count = 0;
  std::size_t clique_number = 0;

  template <class T>
  bool is() const {
    return std::holds_alternative<T>(kind);
  }
  template <class T>
  const T& as() const {
    return std::get<T>(kind);
  }
};

namespace detail {

inline std::optional<shape::Star> match_star(const ZdGraph& g) {
  const std::size_t v = g.size();
  if (v < 3 || g.edge_count() != v - 1) return std::nullopt;
  for (std::size_t c = 0; c < v; ++c)
    if (g.degree(c) == v - 1) return shape::Star{v - 1, g.element(c)};
  return std::nullopt;
}

inline std::optional<shape::TwoStar> match_two_star(const ZdGraph& g) {
  const std::size_t v = g.size();
  if (v < 4 || g.edge_count() != v - 1) return std::nullopt;
  for (std::size_t a = 0; a < v; ++a)
    for (std::size_t b = a + 1; b < v; ++b) {
      if (!g.adjacent(a, b)) continue;
      std::size_t ra = 0, rb = 0;
      bool ok = true;
      for (std::size_t w = 0; w < v && ok; ++w) {
        if (w == a || w == b) continue;
        const bool to_a = g.adjacent(w, a);
        const bool to_b = g.adjacent(w, b);
        if (to_a == to_b || g.degree(w) != 1) ok = false;
        ra += to_a ? 1 : 0;
        rb += to_b ? 1 : 0;
      }
      if (!ok || ra == 0 || rb == 0) continue;
      if (ra <= rb) return shape::TwoStar{ra, rb, g.element(a), g.element(b)};
      return shape::TwoStar{rb, ra, g.element(b), g.element(a)};
    }
  return std::nullopt;
}

inline std::optional<shape::CompleteBipartite> match_complete_bipartite(const ZdGraph& g) {
  const std::size_t v = g.size();
  if (v < 4) return std::nullopt;
  // Side of vertex 0 = its non-neighbours; the other side = its neighbours.
  std::vector<int> side(v);
  for (std::size_t w = 0; w < v; ++w) side[w] = (w == 0 || !g.adjacent(0, w)) ? 0 : 1;
  std::size_t m = 0;
  for (std::size_t w = 0; w < v; ++w) m += side[w] == 0 ? 1 : 0;
  for (std::size_t a = 0; a < v; ++a)
    for (std::size_t b = a + 1; b < v; ++b)
      if (g.adjacent(a, b) != (side[a] != side[b])) return std::nullopt;
  const std::size_t k = v - m;
  if (m < 2 || k < 2) return std::nullopt;
  return shape::CompleteBipartite{std::min(m, k), std::max(m, k)};
}

}  // namespace detail

/// Tags a graph under the precedence Empty, SingleVertex, Complete, Star,
/// TwoStar, CompleteBipartite, OtherForest, HasCycle.
inline GraphShape classify_shape(const ZdGraph& g) {
  GraphMetrics m = graph_metrics(g);
  GraphShape out;
  out.diameter = m.diameter;
  out.component_count = m.component_count;
  out.clique_number = m.clique_number;
  const std::size_t v = g.size();
  if (v == 0) {
    out.kind = shape::Empty{};
  } else if (v == 1) {
    out.kind = shape::SingleVertex{};
  } else if (g.edge_count() == v * (v - 1) / 2) {
    out.kind = shape::Complete{v};
  } else if (auto s = detail::match_star(g)) {
    out.kind = *s;
  } else if (auto t = detail::match_two_star(g)) {
    out.kind = *t;
  } else if (auto b = detail::match_complete_bipartite(g)) {
    out.kind = *b;
  } else if (is_acyclic(g)) {
    out.kind = shape::OtherForest{};
  } else {
    out.kind = shape::HasCycle{*m.girth, !has_triangle(g), !has_quadrilateral(g)};
  }
  return out;
}

/// Star K_{1,r} with r leaves; K2 (classified as Complete(2)) is K_{1,1}.
inline bool is_star_with(const GraphShape& s, std::size_t leaves) {
  if (leaves == 1) return s.is<shape::Complete>() && s.as<shape::Complete>().n == 2;
  return s.is<shape::Star>() && s.as<shape::Star>().r == leaves;
}

inline bool is_star_like(const GraphShape& s) {
  return s.is<shape::Star>() || (s.is<shape::Complete>() && s.as<shape::Complete>().n == 2);
}

/// K1+K1+K1+D_r.
inline bool is_two_star_one(const GraphShape& s, std::optional<std::size_t> r = std::nullopt) {
  if (!s.is<shape::TwoStar>()) return false;
  const auto& t = s.as<shape::TwoStar>();
  return t.r == 1 && (!r || t.s == *r);
}

/// One-line rendering, e.g. "two-star r=1 s=2 (K1+K1+K1+D_2)".
inline std::string shape_line(const GraphShape& s) {
  struct Visitor {
    std::string operator()(const shape::Empty&) const { return "empty"; }
    std::string operator()(const shape::SingleVertex&) const { return "single-vertex"; }
    std::string operator()(const shape::Complete& c) const { return "complete n=" + std::to_string(c.n); }
    std::string operator()(const shape::Star& st) const {
      return "star r=" + std::to_string(st.r) + " (K_{1," + std::to_string(st.r) + "})";
    }
    std::string operator()(const shape::TwoStar& t) const {
      auto part = [](std::size_t k) { return k == 1 ? std::string("K1") : "D_" + std::to_string(k); };
      return "two-star r=" + std::to_string(t.r) + " s=" + std::to_string(t.s) + " (" + part(t.r) + "+K1+K1+" +
             part(t.s) + ")";
    }
    std::string operator()(const shape::CompleteBipartite& b) const {
      return "complete-bipartite m=" + std::to_string(b.m) + " n=" + std::to_string(b.n);
    }
    std::string operator()(const shape::OtherForest&) const { return "other-forest"; }
    std::string operator()(const shape::HasCycle& c) const {
      return "cycle girth=" + std::to_string(c.girth) + " triangle-free=" + (c.triangle_free ? "yes" : "no") +
             " quadrilateral-free=" + (c.quadrilateral_free ? "yes" : "no");
    }
  };
  return std::visit(Visitor{}, s.kind);
}

/// Short tag name of the shape variant.
inline std::string shape_tag(const GraphShape& s) {
  static constexpr const char* kTags[] = {"empty",        "single-vertex",      "complete",     "star",
                                          "two-star",     "complete-bipartite", "other-forest", "cycle"};
  return kTags[s.kind.index()];
}

// ---------------------------------------------------------------------------
// DOT export

inline std::string dot_quote(const std::string& label) {
  std::string out = "\"";
  for (char ch : label) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out + "\"";
}

/// Undirected DOT text: isolated vertices first, then edges a -- b with a
/// before b in index order.
inline std::string export_dot(const ZdGraph& g, const std::vector<std::string>& labels) {
  std::string out = "graph zd {\n";
  for (std::size_t i = 0; i < g.size(); ++i)
    if (g.degree(i) == 0) out += dot_quote(labels.at(g.element(i))) + ";\n";
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j)
      if (g.adjacent(i, j))
        out += dot_quote(labels.at(g.element(i))) + " -- " + dot_quote(labels.at(g.element(j))) + ";\n";
  return out + "}\n";
}

}  // namespace posr
