#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "plethys/group.hpp"

namespace plethys {

/// A graph in the half-edge formalism: a finite set of half-edges, a partition
/// of it into vertices and an involution whose fixed points are the legs.
/// Legs carry labels; edge half-edges carry kNoLeg.
struct HalfEdgeGraph {
  static constexpr int kNoLeg = -1;

  std::vector<int> vertex_of;   // per half-edge
  std::vector<int> involution;  // per half-edge
  std::vector<int> leg_label;   // per half-edge
  std::vector<int> genus;       // per vertex

  int num_half_edges() const { return static_cast<int>(vertex_of.size()); }
  int num_vertices() const { return static_cast<int>(genus.size()); }
  int num_edges() const;
  int num_legs() const;
  bool is_leg(int h) const { return involution[static_cast<std::size_t>(h)] == h; }
  int valence(int v) const;
  std::vector<std::vector<int>> half_edges_by_vertex() const;

  /// Structural checks: sizes agree, the involution is an involution, every
  /// vertex is nonempty, exactly the fixed points are labeled, labels distinct.
  void validate() const;
  /// Genus-0 vertices have valence >= 3, genus-1 vertices valence >= 1.
  bool is_stable() const;

  bool operator==(const HalfEdgeGraph&) const = default;
};

int connected_components(const HalfEdgeGraph& g);
bool is_connected(const HalfEdgeGraph& g);
/// |edges| - |vertices| + |components|.
int betti1(const HalfEdgeGraph& g);
/// b₁ = 1 and no single edge disconnects the graph. Throws InvalidInput on a
/// disconnected graph.
bool is_necklace(const HalfEdgeGraph& g);

/// A graph together with a basis vector of ⊗_v V((g_v, n_v)).
///
/// Vertex v carries the summand `module[v]` of the module spec at
/// (genus, valence), a Young module of shape λ; its basis vector is an ordered
/// set partition of v's half-edges with block sizes λ, recorded as the block
/// index of each half-edge. `mark` holds cycle orientation tags (0 = none,
/// 1 = forward, 2 = backward) that isomorphisms must preserve.
struct DecoratedGraph {
  HalfEdgeGraph graph;
  std::vector<int> module;  // per vertex
  std::vector<int> block;   // per half-edge
  std::vector<int> mark;    // per half-edge

  bool operator==(const DecoratedGraph&) const = default;
};

/// Canonical representative of an isomorphism class of decorated graphs
/// (isomorphisms preserve leg labels, genus, decorations and marks) and its
/// flat integer code. Equal codes ⇔ isomorphic inputs.
struct CanonicalForm {
  std::vector<int> code;
  DecoratedGraph graph;
};

/// Colour refinement followed by backtracking over the remaining ties. The
/// graph must be connected.
CanonicalForm canonical_form(const DecoratedGraph& g);

/// Renames half-edges by `half_edge_perm` and vertices by `vertex_perm`; the
/// result is isomorphic to the input.
DecoratedGraph relabel_half_edges(const DecoratedGraph& g, const Perm& half_edge_perm,
                                  const Perm& vertex_perm);

/// Applies π to leg labels 1..n (label l becomes π(l-1)+1); label 0 is fixed.
DecoratedGraph relabel_legs(const DecoratedGraph& g, const Perm& pi);

/// One JSON object on a single line, for census export.
std::string to_json_line(const DecoratedGraph& g);

}  // namespace plethys
