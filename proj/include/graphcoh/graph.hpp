#pragma once

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace graphcoh {

/// An oriented edge between two 1-based vertex labels.
struct Edge {
  int tail = 0;
  int head = 0;

  auto operator<=>(const Edge&) const = default;
};

class GraphError : public std::runtime_error {
 public:
  enum class Kind { loop_edge, vertex_out_of_range, isolated_vertex, not_regular, parse };

  GraphError(Kind kind, int index, const std::string& what)
      : std::runtime_error(what), kind_(kind), index_(index) {}

  Kind kind() const noexcept { return kind_; }
  /// Offending edge index (1-based) or vertex label, depending on kind.
  int index() const noexcept { return index_; }

 private:
  Kind kind_;
  int index_;
};

/// Raised when an enumeration would exceed the configured class cap.
class BasisTooLarge : public std::runtime_error {
 public:
  explicit BasisTooLarge(std::size_t cap)
      : std::runtime_error("basis exceeds cap of " + std::to_string(cap) + " classes"),
        cap_(cap) {}
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t cap_;
};

/**
 * Undecorated graph: vertices 1..V and an ordered list of oriented edges.
 * The position of an edge in the list is its number (1-based).
 *
 * Loops are rejected, and so are isolated vertices unless the graph is
 * empty (V = E = 0, the algebra unit).
 */
class GraphSkeleton {
 public:
  GraphSkeleton() = default;
  GraphSkeleton(int vertex_count, std::vector<Edge> edges);

  int vertex_count() const noexcept { return vertex_count_; }
  int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(int index) const { return edges_.at(static_cast<std::size_t>(index - 1)); }

  int valence(int vertex) const;
  std::vector<int> valences() const;

  auto operator<=>(const GraphSkeleton&) const = default;

 private:
  int vertex_count_ = 0;
  std::vector<Edge> edges_;
};

GraphSkeleton new_graph(int vertex_count, std::vector<Edge> edges);

struct Grading {
  int ord = 0;
  int deg = 0;

  auto operator<=>(const Grading&) const = default;
};

/// ord = E - V, deg = 2E - 3V.
Grading grading(const GraphSkeleton& g);

/// Number of vertices and edges of the graphs living in bidegree (ord, deg).
inline int vertices_at(Grading gr) { return 2 * gr.ord - gr.deg; }
inline int edges_at(Grading gr) { return 3 * gr.ord - gr.deg; }

/// Edges whose endpoints are joined by exactly that one edge, ascending.
std::vector<int> regular_edges(const GraphSkeleton& g);
bool is_regular(const GraphSkeleton& g, int edge);

bool is_connected(const GraphSkeleton& g);

struct HalfEdge {
  int edge = 0;
  bool at_head = false;

  auto operator<=>(const HalfEdge&) const = default;
};

/// Per vertex (index vertex-1), its half-edges ascending by edge number.
std::vector<std::vector<HalfEdge>> half_edge_order(const GraphSkeleton& g);

/// 1-based position of `edge` among the half-edges at `vertex`.
int half_edge_slot(const GraphSkeleton& g, int vertex, int edge);

// ---------------------------------------------------------------------------
// Equivalence and canonical forms

enum class SymmetryMode { literal, edge_renumbering };

std::string to_string(SymmetryMode mode);
SymmetryMode parse_symmetry_mode(const std::string& text);

enum class SignState { plus, minus, zero };

inline int sign_value(SignState s) { return s == SignState::plus ? 1 : s == SignState::minus ? -1 : 0; }

struct GraphClass {
  GraphSkeleton canonical;
  SignState sign = SignState::plus;
  Grading grading;

  bool is_zero() const noexcept { return sign == SignState::zero; }
};

/**
 * A symmetry acting on a skeleton. `vertex_map[v-1]` is the new label of
 * vertex v; `reversed[e-1]` flips edge e; `edge_map[e-1]` is the new number
 * of edge e (identity in literal mode). The sign is (-1)^(p+l) with p the
 * parity of vertex_map and l the number of reversals.
 */
struct Symmetry {
  std::vector<int> vertex_map;
  std::vector<bool> reversed;
  std::vector<int> edge_map;

  static Symmetry identity(const GraphSkeleton& g);
};

/// Parity sign of a permutation given as 1-based images.
int permutation_sign(const std::vector<int>& images);

/// Returns (g', s) with g = s * g'.
std::pair<GraphSkeleton, int> apply_symmetry(const GraphSkeleton& g, const Symmetry& sym);

struct Canonicalization {
  GraphClass cls;
  /// One symmetry taking the input to `cls.canonical` (its sign equals cls.sign unless zero).
  Symmetry to_canonical;
};

/**
 * Canonical representative: the lexicographically least edge list (each edge
 * oriented tail < head, list sorted in edge-renumbering mode) over all vertex
 * relabelings that list vertices by non-increasing valence. The sign satisfies
 * g = sign * canonical.
 */
Canonicalization canonicalize_detailed(const GraphSkeleton& g, SymmetryMode mode);
GraphClass canonicalize(const GraphSkeleton& g, SymmetryMode mode);

/// All symmetries mapping `g` onto itself, each with its net sign.
std::vector<std::pair<Symmetry, int>> automorphisms(const GraphSkeleton& g, SymmetryMode mode);

// ---------------------------------------------------------------------------
// Enumeration

struct EnumerationOptions {
  bool connected = true;
  SymmetryMode mode = SymmetryMode::literal;
  int min_valence = 3;
  std::size_t cap = 200000;
};

/// Nonzero classes with exactly V vertices and E edges, sorted by canonical form.
std::vector<GraphClass> enumerate_classes(int vertex_count, int edge_count, const EnumerationOptions& options);

/// Nonzero classes in bidegree (ord, deg); empty when the bidegree admits no graphs.
std::vector<GraphClass> enumerate_graded(Grading gr, const EnumerationOptions& options);

std::vector<GraphClass> enumerate_trivalent(int order, bool connected, SymmetryMode mode);

// ---------------------------------------------------------------------------
// Text format: "V <int> E <int>" then E lines "<tail> <head>"; '#' starts a comment.

void write_graph(std::ostream& os, const GraphSkeleton& g);
std::string to_text(const GraphSkeleton& g);
std::vector<GraphSkeleton> read_graphs(std::istream& is);
GraphSkeleton parse_graph(const std::string& text);

}  // namespace graphcoh
