#include "neumann/distant_graph.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include <json.hpp>

#include "neumann/errors.hpp"
#include "neumann/neumann.hpp"

namespace neumann {

DistantGraph::DistantGraph(std::int64_t H) : H_(H) {
  if (H < 1) throw Error("distant graph needs a height bound of at least 1");
  vertices_ = vertices_up_to_height(H);
  std::sort(vertices_.begin(), vertices_.end());
  for (std::size_t i = 0; i < vertices_.size(); ++i) index_.emplace(vertices_[i], i);
  adjacency_.resize(vertices_.size());
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices_.size(); ++j) {
      if (neumann::adjacent(vertices_[i], vertices_[j])) {
        adjacency_[i].push_back(j);
        adjacency_[j].push_back(i);
        ++edge_count_;
      }
    }
  }
  for (auto& row : adjacency_) std::sort(row.begin(), row.end());
}

bool DistantGraph::contains(const PVertex& v) const {
  return index_.find(v) != index_.end();
}

std::size_t DistantGraph::index_of(const PVertex& v) const {
  auto it = index_.find(v);
  if (it == index_.end()) throw Error("vertex " + v.label() + " is out of range");
  return it->second;
}

bool DistantGraph::adjacent(const PVertex& u, const PVertex& v) const {
  if (!contains(u) || !contains(v)) return false;
  const auto& row = adjacency_[index_of(u)];
  return std::binary_search(row.begin(), row.end(), index_of(v));
}

std::vector<PVertex> DistantGraph::neighbours(const PVertex& v) const {
  std::vector<PVertex> out;
  for (std::size_t j : adjacency_[index_of(v)]) out.push_back(vertices_[j]);
  return out;
}

std::vector<std::pair<PVertex, PVertex>> DistantGraph::edges() const {
  std::vector<std::pair<PVertex, PVertex>> out;
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    for (std::size_t j : adjacency_[i]) {
      if (i < j) out.emplace_back(vertices_[i], vertices_[j]);
    }
  }
  return out;
}

DistantGraph build(std::int64_t H) { return DistantGraph(H); }

namespace {

PVertex vsum(const PVertex& u, const PVertex& v, int sign) {
  return PVertex(Integer(u.p() + sign * v.p()), Integer(u.q() + sign * v.q()));
}

Triangle sorted(Triangle t) {
  std::sort(t.begin(), t.end());
  return t;
}

bool is_triangle(const Triangle& t) {
  return t[0] != t[1] && t[1] != t[2] && t[0] != t[2] && adjacent(t[0], t[1]) &&
         adjacent(t[1], t[2]) && adjacent(t[0], t[2]);
}

}  // namespace

std::vector<CliqueCompletion> maximal_cliques_of_edge(const DistantGraph& g,
                                                      const PVertex& u,
                                                      const PVertex& v) {
  if (!g.adjacent(u, v)) {
    throw NotAnEdge(u.label() + " and " + v.label() + " are not adjacent in the graph");
  }
  std::vector<CliqueCompletion> out;
  for (int sign : {1, -1}) {
    PVertex third = vsum(u, v, sign);
    const bool in_range = g.contains(third);
    out.push_back({std::move(third), in_range});
  }
  return out;
}

bool is_harmonic(const DistantGraph& g, const std::array<PVertex, 4>& quad) {
  // The three ways of splitting four vertices into diagonal pairs {i,j}, {k,l}.
  static constexpr std::array<std::array<int, 4>, 3> pairings = {
      {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}}};
  for (const auto& [i, j, k, l] : pairings) {
    const PVertex &vi = quad[i], &vj = quad[j], &vk = quad[k], &vl = quad[l];
    const bool cycle = g.adjacent(vi, vk) && g.adjacent(vk, vj) &&
                       g.adjacent(vj, vl) && g.adjacent(vl, vi);
    if (cycle && (g.adjacent(vi, vj) || g.adjacent(vk, vl))) return true;
  }
  return false;
}

std::vector<HarmonicQuad> harmonic_chain(const DistantGraph& g,
                                         const Triangle& clique,
                                         const PVertex& v) {
  for (const PVertex& x : clique) {
    if (!g.contains(x)) throw Error("clique vertex " + x.label() + " is out of range");
  }
  if (!is_triangle(clique)) throw Error("argument is not a maximal clique");
  if (!g.contains(v)) {
    throw NoChainWithinBound(v.label() + " exceeds the height bound; retry with a larger H");
  }
  const Triangle start = sorted(clique);
  if (std::find(start.begin(), start.end(), v) != start.end()) return {};

  // Breadth-first search over maximal cliques; two cliques sharing an edge
  // form a harmonic quadruple.
  std::map<Triangle, Triangle> parent;
  std::deque<Triangle> queue{start};
  parent.emplace(start, start);
  std::optional<Triangle> goal;
  while (!queue.empty() && !goal) {
    const Triangle t = queue.front();
    queue.pop_front();
    for (int drop = 0; drop < 3 && !goal; ++drop) {
      const PVertex& a = t[(drop + 1) % 3];
      const PVertex& b = t[(drop + 2) % 3];
      for (const CliqueCompletion& c : maximal_cliques_of_edge(g, a, b)) {
        if (!c.in_range || c.third == t[drop]) continue;
        const Triangle next = sorted({a, b, c.third});
        if (!parent.emplace(next, t).second) continue;
        if (c.third == v) {
          goal = next;
          break;
        }
        queue.push_back(next);
      }
    }
  }
  if (!goal) {
    throw NoChainWithinBound("no chain of harmonic quadruples reaches " + v.label() +
                             " inside height " + std::to_string(g.height_bound()));
  }

  std::vector<Triangle> path{*goal};
  while (path.back() != start) path.push_back(parent.at(path.back()));
  std::reverse(path.begin(), path.end());

  std::vector<HarmonicQuad> chain;
  for (std::size_t i = 1; i < path.size(); ++i) {
    const Triangle& prev = path[i - 1];
    const Triangle& cur = path[i];
    std::vector<PVertex> shared;
    PVertex apex_prev = prev[0], apex_cur = cur[0];
    for (const PVertex& x : prev) {
      if (std::find(cur.begin(), cur.end(), x) != cur.end()) {
        shared.push_back(x);
      } else {
        apex_prev = x;
      }
    }
    for (const PVertex& x : cur) {
      if (std::find(prev.begin(), prev.end(), x) == prev.end()) apex_cur = x;
    }
    chain.push_back({{shared[0], apex_prev, shared[1], apex_cur}});
  }
  return chain;
}

bool check_automorphism(const ProjMat2& x, std::int64_t H) {
  const DistantGraph g(H);
  const auto& vs = g.vertices();
  std::vector<std::optional<PVertex>> image;
  image.reserve(vs.size());
  for (const PVertex& v : vs) {
    PVertex y = act(x, v);
    image.push_back(g.contains(y) ? std::optional<PVertex>(std::move(y)) : std::nullopt);
  }
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (!image[i]) continue;
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      if (!image[j]) continue;
      if (g.adjacent(vs[i], vs[j]) != g.adjacent(*image[i], *image[j])) return false;
    }
  }
  return true;
}

ProjMat2 clique_transitivity_map(const Triangle& c1, const Triangle& c2) {
  if (!is_triangle(c1) || !is_triangle(c2)) {
    throw NoSuchMap("both arguments must be ordered maximal cliques");
  }
  // Write the third vertex in the basis of the first two: u3 = a u1 + b u2.
  auto coefficients = [](const Triangle& c) -> std::pair<int, int> {
    const IntMat2 basis = mat(c[0].p(), c[1].p(), c[0].q(), c[1].q());
    const IntMat2 inv = basis.inverse();
    const Integer a = inv.a() * c[2].p() + inv.b() * c[2].q();
    const Integer b = inv.c() * c[2].p() + inv.d() * c[2].q();
    if (abs(a) != 1 || abs(b) != 1) throw NoSuchMap("third vertex is not u1 +- u2");
    return {sgn(a), sgn(b)};
  };
  const auto [a, b] = coefficients(c1);
  const auto [c, d] = coefficients(c2);
  const int s1 = a * c;
  const int s2 = b * d;
  const IntMat2 source = mat(c1[0].p(), c1[1].p(), c1[0].q(), c1[1].q());
  const IntMat2 target = mat(Integer(s1 * c2[0].p()), Integer(s2 * c2[1].p()),
                             Integer(s1 * c2[0].q()), Integer(s2 * c2[1].q()));
  const ProjMat2 x(target * source.inverse());
  for (std::size_t i = 0; i < 3; ++i) {
    if (act(x, c1[i]) != c2[i]) throw NoSuchMap("solved map misses a clique vertex");
  }
  return x;
}

IsoReport cayley_vs_distant_report(const InvolutionWindow& w, std::int64_t H) {
  IsoReport r;
  const DistantGraph g(H);
  const auto& vs = g.vertices();
  r.vertices = vs.size();

  std::vector<ProjMat2> elems;
  elems.reserve(vs.size());
  try {
    for (const PVertex& v : vs) elems.push_back(element_for_vertex(w, v));
  } catch (const InconsistentWindow& e) {
    r.mismatch = e.what();
    return r;
  }

  std::set<ProjMat2> distinct;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (elems[i].column() != vs[i]) {
      r.mismatch = "element for " + vs[i].label() + " has the wrong column";
      return r;
    }
    distinct.insert(elems[i]);
  }
  if (distinct.size() != vs.size()) {
    r.mismatch = "element map is not injective";
    return r;
  }

  for (std::size_t i = 0; i < vs.size(); ++i) {
    const ProjMat2 inv = invert(elems[i]);
    for (std::size_t j = 0; j < vs.size(); ++j) {
      if (i == j) continue;
      const ProjMat2 x = compose(inv, elems[j]);
      const PVertex col = x.column();
      bool cayley_edge = false;
      if (col.q() == 1) {
        if (!col.p().fits_slong_p() || !w.contains(col.p().get_si())) {
          throw OutOfWindow(col.p().fits_slong_p() ? col.p().get_si() : w.hi() + 1);
        }
        cayley_edge = x == sigma(w, col.p().get_si());
      }
      const bool graph_edge = g.adjacent(vs[i], vs[j]);
      if (cayley_edge != graph_edge) {
        r.mismatch = "adjacency differs between " + vs[i].label() + " and " +
                     vs[j].label();
        return r;
      }
      if (graph_edge && i < j) ++r.edges_matched;
    }
  }
  r.ok = r.edges_matched == g.edge_count();
  if (!r.ok) r.mismatch = "edge count differs";
  return r;
}

bool cayley_vs_distant(const InvolutionWindow& w, std::int64_t H) {
  return cayley_vs_distant_report(w, H).ok;
}

void write_dot(std::ostream& os, const DistantGraph& g) {
  const auto& vs = g.vertices();
  std::map<PVertex, std::size_t> id;
  os << "graph distant_graph {\n";
  for (std::size_t i = 0; i < vs.size(); ++i) {
    id.emplace(vs[i], i);
    os << "  v" << i << " [label=\"" << vs[i].label(true) << "\"];\n";
  }
  for (const auto& [u, v] : g.edges()) {
    os << "  v" << id.at(u) << " -- v" << id.at(v) << ";\n";
  }
  os << "}\n";
}

void write_adjacency(std::ostream& os, const DistantGraph& g) {
  nlohmann::ordered_json doc = nlohmann::ordered_json::object();
  for (const PVertex& v : g.vertices()) {
    auto row = nlohmann::ordered_json::array();
    for (const PVertex& u : g.neighbours(v)) row.push_back(u.label());
    doc[v.label()] = std::move(row);
  }
  os << doc.dump(2) << '\n';
}

}  // namespace neumann
