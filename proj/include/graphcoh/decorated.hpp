#pragma once

#include <array>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "graphcoh/complex.hpp"
#include "graphcoh/graph.hpp"
#include "graphcoh/lie.hpp"
#include "graphcoh/tensor.hpp"

namespace graphcoh {

class DecorationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/**
 * Skeleton with one tensor per vertex. Slot k of the tensor at vertex i
 * belongs to the k-th half-edge at i, half-edges ordered by edge number.
 */
class DecoratedGraph {
 public:
  DecoratedGraph(GraphSkeleton skeleton, std::vector<EquivariantTensor> decorations);

  const GraphSkeleton& skeleton() const noexcept { return skeleton_; }
  const std::vector<EquivariantTensor>& decorations() const noexcept { return decorations_; }
  const EquivariantTensor& decoration(int vertex) const { return decorations_.at(static_cast<std::size_t>(vertex - 1)); }
  int dim() const { return decorations_.empty() ? 0 : decorations_.front().dim(); }

 private:
  GraphSkeleton skeleton_;
  std::vector<EquivariantTensor> decorations_;
};

/// Same tensor at every vertex.
DecoratedGraph decorate_uniformly(const GraphSkeleton& g, const EquivariantTensor& t);

/// Disjoint union; the second graph's vertices and edges come after the first's.
DecoratedGraph disjoint_union(const DecoratedGraph& a, const DecoratedGraph& b);

/// Contracts every edge's two slots; exact when the tensors share an exact kind.
Value evaluate(const DecoratedGraph& g);

/// Slot k of rho_i contracted with slot l of rho_j (1-based); remaining slots
/// are rho_i's then rho_j's. A valence-0 result is rejected.
EquivariantTensor contract_decoration(const EquivariantTensor& rho_i, const EquivariantTensor& rho_j, int k, int l);

struct DecoratedTerm {
  Rational coefficient;
  DecoratedGraph graph;
};

using DecoratedChain = std::vector<DecoratedTerm>;

/**
 * One term per regular edge i -> j: coefficient sigma(i, j), the contracted
 * skeleton, and the merged tensor with its slots reordered to the contracted
 * skeleton's half-edge order.
 */
DecoratedChain delta_decorated(const DecoratedGraph& g);
DecoratedChain delta_decorated(const DecoratedChain& c);

/**
 * Terms collected by literal-mode canonical skeleton. Each group holds the
 * coefficient-weighted sum of the vertex tensors' outer products (slots:
 * vertex 1's, then vertex 2's, ...), projected onto the skeleton's
 * automorphism coinvariants. Skeletons with odd automorphisms are kept;
 * uniform decorations on them symmetrize to zero.
 */
std::map<GraphSkeleton, EquivariantTensor> group_by_skeleton(const DecoratedChain& c);

struct ChainVerdict {
  bool vanishes = true;
  /// Canonical skeleton of a group that fails to sum to zero.
  std::optional<GraphSkeleton> witness;
};

/// Whether every skeleton group of `c` sums to zero (floats within tolerance).
ChainVerdict chain_vanishes(const DecoratedChain& c, double tolerance = 1e-12);

/// delta of the chain vanishes after grouping. Throws MixedScalarKinds on incompatible radicals.
bool is_cocycle_decorated(const DecoratedChain& c, double tolerance = 1e-12);

/// t_I = f_abe f_ecd, t_H = f_ace f_ebd, t_X = f_ade f_ebc, all in slot order (a,b,c,d).
std::array<EquivariantTensor, 3> ihx_terms(const EquivariantTensor& f);

struct IhxResult {
  bool holds = true;
  std::optional<std::array<int, 4>> witness;  // 1-based (a,b,c,d)
};

/// t_I - t_H + t_X == 0. Throws LieDataError(not_antisymmetric) first if f is not antisymmetric.
IhxResult ihx_check(const EquivariantTensor& f, double tolerance = 1e-12);

/// Lines "vertex <i> tensor <name-or-file>"; relative paths resolve against base_dir.
std::vector<EquivariantTensor> read_decorations(std::istream& is, int vertex_count, const std::string& base_dir);

}  // namespace graphcoh
