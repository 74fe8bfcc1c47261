#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "graphcoh/graph.hpp"
#include "graphcoh/linalg.hpp"

namespace graphcoh {

class GradingMismatch : public std::runtime_error {
 public:
  GradingMismatch(Grading expected, Grading got);
};

/// Sign attached to contracting the regular edge from vertex i to vertex j.
int contraction_sign(int i, int j);

/**
 * Contracts regular edge `edge` (oriented i -> j). The merged vertex is
 * labeled min(i, j), labels above max(i, j) shift down by one, the edge is
 * deleted and higher edge numbers shift down by one.
 * Returns the contracted skeleton and contraction_sign(i, j).
 */
std::pair<GraphSkeleton, int> contract_edge(const GraphSkeleton& g, int edge);

/**
 * Finite rational combination of nonzero graph classes in one bidegree.
 * Keys are canonical skeletons for the cochain's symmetry mode.
 */
class Cochain {
 public:
  explicit Cochain(SymmetryMode mode = SymmetryMode::literal) : mode_(mode) {}

  /// Adds coefficient * g, canonicalizing g and folding its sign in.
  void add(const GraphSkeleton& g, const Rational& coefficient);

  SymmetryMode mode() const noexcept { return mode_; }
  const std::map<GraphSkeleton, Rational>& terms() const noexcept { return terms_; }
  std::optional<Grading> grading() const noexcept { return grading_; }
  bool empty() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  Rational coefficient(const GraphSkeleton& canonical) const;

  Cochain& operator+=(const Cochain& other);
  Cochain& operator*=(const Rational& factor);

  bool operator==(const Cochain& other) const { return mode_ == other.mode_ && terms_ == other.terms_; }

 private:
  SymmetryMode mode_;
  std::optional<Grading> grading_;
  std::map<GraphSkeleton, Rational> terms_;
};

Cochain operator*(const Rational& factor, Cochain c);

/// Coboundary of a single skeleton taken as written (not canonicalized first).
Cochain delta_of_skeleton(const GraphSkeleton& g, SymmetryMode mode);

Cochain delta(const Cochain& c);

/// 200000 unless GRAPHCOH_CAP is set to a positive integer.
std::size_t default_basis_cap();

struct ComplexOptions {
  bool connected = true;
  SymmetryMode mode = SymmetryMode::literal;
  int min_valence = 3;
  std::size_t cap = default_basis_cap();

  EnumerationOptions enumeration() const { return {connected, mode, min_valence, cap}; }
};

struct DeltaMatrix {
  Grading source;
  std::vector<GraphSkeleton> domain;
  std::vector<GraphSkeleton> codomain;
  /// codomain.size() x domain.size(); column j is delta(domain[j]).
  SparseMatrix entries;
};

DeltaMatrix delta_matrix(Grading source, const ComplexOptions& options);

std::vector<Cochain> cocycle_basis(Grading source, const ComplexOptions& options);

/// Lines "p/q<TAB>k" with k the 1-based index of the graph in `basis`.
void write_cochain(std::ostream& os, const Cochain& c, const std::vector<GraphSkeleton>& basis);

}  // namespace graphcoh
