#include "graphcoh/complex.hpp"

#include <algorithm>
#include <cstdlib>
#include <ostream>
#include <string>

namespace graphcoh {

namespace {

std::string describe(Grading g) {
  return "(" + std::to_string(g.ord) + "," + std::to_string(g.deg) + ")";
}

}  // namespace

GradingMismatch::GradingMismatch(Grading expected, Grading got)
    : std::runtime_error("cochain grading " + describe(expected) + " cannot absorb a term of grading " + describe(got)) {}

int contraction_sign(int i, int j) {
  if (j > i) {
    return j % 2 == 0 ? 1 : -1;
  }
  return (i + 1) % 2 == 0 ? 1 : -1;
}

std::pair<GraphSkeleton, int> contract_edge(const GraphSkeleton& g, int edge) {
  if (edge < 1 || edge > g.edge_count() || !is_regular(g, edge)) {
    throw GraphError(GraphError::Kind::not_regular, edge, "edge " + std::to_string(edge) + " is not regular");
  }
  const Edge contracted = g.edge(edge);
  const int lo = std::min(contracted.tail, contracted.head);
  const int hi = std::max(contracted.tail, contracted.head);
  auto relabel = [&](int v) { return v == hi ? lo : v > hi ? v - 1 : v; };

  std::vector<Edge> edges;
  edges.reserve(g.edges().size() - 1);
  for (int k = 1; k <= g.edge_count(); ++k) {
    if (k == edge) {
      continue;
    }
    const Edge& e = g.edge(k);
    edges.push_back({relabel(e.tail), relabel(e.head)});
  }
  return {GraphSkeleton(g.vertex_count() - 1, std::move(edges)), contraction_sign(contracted.tail, contracted.head)};
}

void Cochain::add(const GraphSkeleton& g, const Rational& coefficient) {
  if (coefficient == 0) {
    return;
  }
  const Grading gr = graphcoh::grading(g);
  if (grading_ && *grading_ != gr) {
    throw GradingMismatch(*grading_, gr);
  }
  GraphClass cls = canonicalize(g, mode_);
  if (cls.is_zero()) {
    return;
  }
  grading_ = gr;
  auto [it, inserted] = terms_.try_emplace(std::move(cls.canonical), 0);
  it->second += coefficient * sign_value(cls.sign);
  if (it->second == 0) {
    terms_.erase(it);
  }
}

Rational Cochain::coefficient(const GraphSkeleton& canonical) const {
  auto it = terms_.find(canonical);
  return it == terms_.end() ? Rational(0) : it->second;
}

Cochain& Cochain::operator+=(const Cochain& other) {
  if (other.mode_ != mode_) {
    throw std::invalid_argument("cannot add cochains of different symmetry modes");
  }
  if (other.grading_ && grading_ && *other.grading_ != *grading_) {
    throw GradingMismatch(*grading_, *other.grading_);
  }
  if (!grading_) {
    grading_ = other.grading_;
  }
  for (const auto& [g, c] : other.terms_) {
    auto [it, inserted] = terms_.try_emplace(g, 0);
    it->second += c;
    if (it->second == 0) {
      terms_.erase(it);
    }
  }
  return *this;
}

Cochain& Cochain::operator*=(const Rational& factor) {
  if (factor == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [_, c] : terms_) {
    c *= factor;
  }
  return *this;
}

Cochain operator*(const Rational& factor, Cochain c) {
  c *= factor;
  return c;
}

Cochain delta_of_skeleton(const GraphSkeleton& g, SymmetryMode mode) {
  Cochain out(mode);
  for (int e : regular_edges(g)) {
    auto [contracted, sign] = contract_edge(g, e);
    out.add(contracted, sign);
  }
  return out;
}

Cochain delta(const Cochain& c) {
  Cochain out(c.mode());
  for (const auto& [g, coefficient] : c.terms()) {
    Cochain image = delta_of_skeleton(g, c.mode());
    image *= coefficient;
    out += image;
  }
  return out;
}

std::size_t default_basis_cap() {
  if (const char* env = std::getenv("GRAPHCOH_CAP")) {
    try {
      const long long cap = std::stoll(env);
      if (cap > 0) {
        return static_cast<std::size_t>(cap);
      }
    } catch (const std::exception&) {
    }
  }
  return 200000;
}

namespace {

std::vector<GraphSkeleton> basis_at(Grading gr, const ComplexOptions& options) {
  std::vector<GraphSkeleton> out;
  for (auto& cls : enumerate_graded(gr, options.enumeration())) {
    out.push_back(std::move(cls.canonical));
  }
  return out;
}

}  // namespace

DeltaMatrix delta_matrix(Grading source, const ComplexOptions& options) {
  DeltaMatrix m;
  m.source = source;
  m.domain = basis_at(source, options);
  m.codomain = basis_at({source.ord, source.deg + 1}, options);
  m.entries = SparseMatrix(m.codomain.size(), m.domain.size());
  std::map<GraphSkeleton, std::size_t> row_of;
  for (std::size_t r = 0; r < m.codomain.size(); ++r) {
    row_of.emplace(m.codomain[r], r);
  }
  for (std::size_t c = 0; c < m.domain.size(); ++c) {
    const Cochain image = delta_of_skeleton(m.domain[c], options.mode);
    for (const auto& [g, coefficient] : image.terms()) {
      auto it = row_of.find(g);
      if (it == row_of.end()) {
        // Only possible when the codomain filter (connectivity, valence) is
        // violated, which contraction of a regular edge never does.
        throw std::logic_error("coboundary left the enumerated codomain:\n" + to_text(g));
      }
      m.entries.add(it->second, c, coefficient);
    }
  }
  return m;
}

std::vector<Cochain> cocycle_basis(Grading source, const ComplexOptions& options) {
  const DeltaMatrix m = delta_matrix(source, options);
  std::vector<Cochain> out;
  for (const SparseVector& v : kernel_basis(m.entries)) {
    Cochain c(options.mode);
    for (const auto& [index, coefficient] : v) {
      c.add(m.domain[index], coefficient);
    }
    out.push_back(std::move(c));
  }
  return out;
}

void write_cochain(std::ostream& os, const Cochain& c, const std::vector<GraphSkeleton>& basis) {
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const Rational coefficient = c.coefficient(basis[k]);
    if (coefficient != 0) {
      os << to_fraction_string(coefficient) << '\t' << k + 1 << '\n';
    }
  }
}

}  // namespace graphcoh
