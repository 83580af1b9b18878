#pragma once

// Height-bounded distant graph of the projective line over Z: vertices are
// canonical coprime columns of height <= H, edges join unimodular pairs.

#include <array>
#include <cstdint>
#include <map>
#include <ostream>
#include <vector>

#include "neumann/gl2.hpp"
#include "neumann/involution.hpp"

namespace neumann {

using Triangle = std::array<PVertex, 3>;

class DistantGraph {
 public:
  /// Throws Error for H < 1.
  explicit DistantGraph(std::int64_t H);

  std::int64_t height_bound() const noexcept { return H_; }
  const std::vector<PVertex>& vertices() const noexcept { return vertices_; }
  std::size_t edge_count() const noexcept { return edge_count_; }

  bool contains(const PVertex& v) const;
  bool adjacent(const PVertex& u, const PVertex& v) const;

  /// Neighbours of v in canonical order.
  std::vector<PVertex> neighbours(const PVertex& v) const;

  /// Each edge once, u < v, in canonical order.
  std::vector<std::pair<PVertex, PVertex>> edges() const;

 private:
  std::size_t index_of(const PVertex& v) const;

  std::int64_t H_;
  std::vector<PVertex> vertices_;
  std::map<PVertex, std::size_t> index_;
  std::vector<std::vector<std::size_t>> adjacency_;
  std::size_t edge_count_ = 0;
};

DistantGraph build(std::int64_t H);

struct CliqueCompletion {
  PVertex third;
  bool in_range;
};

/// The two maximal cliques {u, v, u+v} and {u, v, u-v} containing an edge;
/// completions outside the height bound are flagged, not dropped.
/// Throws NotAnEdge.
std::vector<CliqueCompletion> maximal_cliques_of_edge(const DistantGraph& g,
                                                      const PVertex& u,
                                                      const PVertex& v);

/// Some labeling (i, k, j, l) makes i-k-j-l-i a cycle with i~j or k~l.
bool is_harmonic(const DistantGraph& g, const std::array<PVertex, 4>& quad);

/// Vertices in cycle order; the first and third are joined by a diagonal.
struct HarmonicQuad {
  std::array<PVertex, 4> cycle;
};

/// Quadruples Q_1..Q_n with C in Q_1, consecutive intersections maximal
/// cliques and v in Q_n. Empty when v is already in C. Throws
/// NoChainWithinBound.
std::vector<HarmonicQuad> harmonic_chain(const DistantGraph& g,
                                         const Triangle& clique,
                                         const PVertex& v);

/// Edges and non-edges with both images in range are preserved.
bool check_automorphism(const ProjMat2& x, std::int64_t H);

/// The unique x with act(x, c1[i]) = c2[i]. Throws NoSuchMap if either
/// argument is not a maximal clique.
ProjMat2 clique_transitivity_map(const Triangle& c1, const Triangle& c2);

struct IsoReport {
  bool ok = false;
  std::size_t vertices = 0;
  std::size_t edges_matched = 0;
  std::string mismatch;
};

/// alpha -> alpha(infinity) restricted to descent elements of height <= H is
/// a bijection onto the graph and matches Cayley and distant adjacency.
/// Propagates OutOfWindow.
IsoReport cayley_vs_distant_report(const InvolutionWindow& w, std::int64_t H);
bool cayley_vs_distant(const InvolutionWindow& w, std::int64_t H);

/// DOT export with "p/q" labels and ∞ for (1, 0).
void write_dot(std::ostream& os, const DistantGraph& g);

/// JSON adjacency list keyed by "p/q".
void write_adjacency(std::ostream& os, const DistantGraph& g);

}  // namespace neumann
