#include "graphcoh/decorated.hpp"

#include <stdexcept>
#include <algorithm>
#include <filesystem>
#include <istream>
#include <numeric>
#include <sstream>

namespace graphcoh {

DecoratedGraph::DecoratedGraph(GraphSkeleton skeleton, std::vector<EquivariantTensor> decorations)
    : skeleton_(std::move(skeleton)), decorations_(std::move(decorations)) {
  if (static_cast<int>(decorations_.size()) != skeleton_.vertex_count()) {
    throw DecorationError("graph has " + std::to_string(skeleton_.vertex_count()) + " vertices but " +
                          std::to_string(decorations_.size()) + " decorations");
  }
  const auto val = skeleton_.valences();
  for (std::size_t v = 0; v < decorations_.size(); ++v) {
    if (decorations_[v].valence() != val[v]) {
      throw ShapeMismatch("vertex " + std::to_string(v + 1) + " has valence " + std::to_string(val[v]) +
                          " but its tensor has valence " + std::to_string(decorations_[v].valence()));
    }
    if (decorations_[v].dim() != decorations_.front().dim()) {
      throw ShapeMismatch("decorations act on spaces of different dimension");
    }
  }
}

DecoratedGraph decorate_uniformly(const GraphSkeleton& g, const EquivariantTensor& t) {
  return {g, std::vector<EquivariantTensor>(static_cast<std::size_t>(g.vertex_count()), t)};
}

DecoratedGraph disjoint_union(const DecoratedGraph& a, const DecoratedGraph& b) {
  const int shift = a.skeleton().vertex_count();
  std::vector<Edge> edges = a.skeleton().edges();
  for (const Edge& e : b.skeleton().edges()) {
    edges.push_back({e.tail + shift, e.head + shift});
  }
  std::vector<EquivariantTensor> decorations = a.decorations();
  decorations.insert(decorations.end(), b.decorations().begin(), b.decorations().end());
  return {GraphSkeleton(shift + b.skeleton().vertex_count(), std::move(edges)), std::move(decorations)};
}

namespace {

std::vector<const EquivariantTensor*> pointers(const std::vector<EquivariantTensor>& ts) {
  std::vector<const EquivariantTensor*> out;
  for (const auto& t : ts) {
    out.push_back(&t);
  }
  return out;
}

template <class T>
struct Node {
  DenseTensor<T> tensor;
  std::vector<int> slot_edges;
};

template <class T>
T contract_network(const GraphSkeleton& g, const std::vector<EquivariantTensor>& tensors) {
  std::vector<Node<T>> nodes;
  const auto order = half_edge_order(g);
  for (std::size_t v = 0; v < tensors.size(); ++v) {
    Node<T> n{tensors[v].as<T>(), {}};
    for (const HalfEdge& h : order[v]) {
      n.slot_edges.push_back(h.edge);
    }
    nodes.push_back(std::move(n));
  }
  // Merge the two endpoints of the lowest remaining edge, contracting every
  // edge they share so no node ever holds both ends of an edge.
  while (true) {
    int edge = 0;
    for (const auto& n : nodes) {
      for (int e : n.slot_edges) {
        if (edge == 0 || e < edge) {
          edge = e;
        }
      }
    }
    if (edge == 0) {
      break;
    }
    std::size_t first = nodes.size(), second = nodes.size();
    for (std::size_t k = 0; k < nodes.size(); ++k) {
      if (std::find(nodes[k].slot_edges.begin(), nodes[k].slot_edges.end(), edge) != nodes[k].slot_edges.end()) {
        (first == nodes.size() ? first : second) = k;
      }
    }
    Node<T>& a = nodes[first];
    Node<T>& b = nodes[second];
    std::vector<std::pair<int, int>> pairs;
    std::vector<int> remaining;
    for (std::size_t sa = 0; sa < a.slot_edges.size(); ++sa) {
      auto it = std::find(b.slot_edges.begin(), b.slot_edges.end(), a.slot_edges[sa]);
      if (it != b.slot_edges.end()) {
        pairs.emplace_back(static_cast<int>(sa), static_cast<int>(it - b.slot_edges.begin()));
      } else {
        remaining.push_back(a.slot_edges[sa]);
      }
    }
    for (int e : b.slot_edges) {
      if (std::find(a.slot_edges.begin(), a.slot_edges.end(), e) == a.slot_edges.end()) {
        remaining.push_back(e);
      }
    }
    Node<T> merged{contract_pairs(a.tensor, b.tensor, pairs), std::move(remaining)};
    nodes.erase(nodes.begin() + static_cast<std::ptrdiff_t>(second));
    nodes[first] = std::move(merged);
  }
  T result = T(1);
  for (const auto& n : nodes) {
    result *= n.tensor[0];
  }
  return result;
}

}  // namespace

Value evaluate(const DecoratedGraph& g) {
  const auto ptrs = pointers(g.decorations());
  const auto [kind, radical] = common_kind(ptrs, true);
  std::vector<EquivariantTensor> tensors;
  for (const auto& t : g.decorations()) {
    tensors.push_back(t.converted(kind, radical));
  }
  switch (kind) {
    case ScalarKind::rational:
      return contract_network<Rational>(g.skeleton(), tensors);
    case ScalarKind::radical:
      return contract_network<Quadratic>(g.skeleton(), tensors);
    case ScalarKind::floating:
      return contract_network<double>(g.skeleton(), tensors);
  }
  return Rational(0);
}

namespace {

template <class T>
EquivariantTensor wrap(const std::string& label, DenseTensor<T> d, long radical) {
  if constexpr (std::is_same_v<T, Quadratic>) {
    return {label, std::move(d), radical};
  } else {
    (void)radical;
    return {label, std::move(d)};
  }
}

/// Binary operation on two tensors after bringing them to a common kind.
template <class F>
EquivariantTensor combine(const EquivariantTensor& a, const EquivariantTensor& b, const std::string& label, F&& f) {
  const EquivariantTensor* both[] = {&a, &b};
  const auto [kind, radical] = common_kind(both, true);
  const EquivariantTensor x = a.converted(kind, radical);
  const EquivariantTensor y = b.converted(kind, radical);
  return std::visit(
      [&](const auto& dx) {
        using D = std::decay_t<decltype(dx)>;
        return wrap(label, f(dx, std::get<D>(y.data())), radical);
      },
      x.data());
}

}  // namespace

EquivariantTensor contract_decoration(const EquivariantTensor& rho_i, const EquivariantTensor& rho_j, int k, int l) {
  if (rho_i.dim() != rho_j.dim()) {
    throw ShapeMismatch("decorations of dimension " + std::to_string(rho_i.dim()) + " and " +
                        std::to_string(rho_j.dim()));
  }
  if (k < 1 || k > rho_i.valence() || l < 1 || l > rho_j.valence()) {
    throw SlotOutOfRange("slot pair (" + std::to_string(k) + "," + std::to_string(l) + ") out of range");
  }
  if (rho_i.valence() + rho_j.valence() == 2) {
    throw DecorationError("contraction would leave a valence-0 vertex");
  }
  return combine(rho_i, rho_j, rho_i.label() + "." + rho_j.label(),
                 [&](const auto& x, const auto& y) { return contract_pairs(x, y, {{k - 1, l - 1}}); });
}

DecoratedChain delta_decorated(const DecoratedGraph& g) {
  const GraphSkeleton& s = g.skeleton();
  DecoratedChain out;
  for (int e : regular_edges(s)) {
    const Edge edge = s.edge(e);
    const int i = edge.tail;
    const int j = edge.head;
    const auto& rho_i = g.decoration(i);
    const auto& rho_j = g.decoration(j);
    EquivariantTensor merged = contract_decoration(rho_i, rho_j, half_edge_slot(s, i, e), half_edge_slot(s, j, e));

    // Surviving edges at i then at j, renumbered; reorder slots by new number.
    auto renumber = [e](int k) { return k > e ? k - 1 : k; };
    std::vector<int> slot_edges;
    const auto order = half_edge_order(s);
    for (int v : {i, j}) {
      for (const HalfEdge& h : order[static_cast<std::size_t>(v - 1)]) {
        if (h.edge != e) {
          slot_edges.push_back(renumber(h.edge));
        }
      }
    }
    std::vector<int> realign(slot_edges.size());
    std::iota(realign.begin(), realign.end(), 0);
    std::sort(realign.begin(), realign.end(), [&](int x, int y) {
      return slot_edges[static_cast<std::size_t>(x)] < slot_edges[static_cast<std::size_t>(y)];
    });
    merged = permute_slots(merged, realign);

    auto [contracted, sign] = contract_edge(s, e);
    const int lo = std::min(i, j);
    const int hi = std::max(i, j);
    std::vector<EquivariantTensor> decorations;
    for (int v = 1; v <= s.vertex_count(); ++v) {
      if (v == lo) {
        decorations.push_back(merged);
      } else if (v != hi) {
        decorations.push_back(g.decoration(v));
      }
    }
    out.push_back({Rational(sign), DecoratedGraph(std::move(contracted), std::move(decorations))});
  }
  return out;
}

DecoratedChain delta_decorated(const DecoratedChain& c) {
  DecoratedChain out;
  for (const DecoratedTerm& term : c) {
    for (DecoratedTerm& image : delta_decorated(term.graph)) {
      image.coefficient *= term.coefficient;
      out.push_back(std::move(image));
    }
  }
  return out;
}

namespace {

EquivariantTensor outer_product(const std::vector<EquivariantTensor>& tensors) {
  EquivariantTensor acc = tensors.front();
  for (std::size_t v = 1; v < tensors.size(); ++v) {
    acc = combine(acc, tensors[v], "product",
                  [](const auto& x, const auto& y) { return contract_pairs(x, y, {}); });
  }
  return acc;
}

/// Slot offsets of each vertex block in the outer product.
std::vector<int> block_offsets(const GraphSkeleton& g) {
  const auto val = g.valences();
  std::vector<int> offsets(val.size() + 1, 0);
  for (std::size_t v = 0; v < val.size(); ++v) {
    offsets[v + 1] = offsets[v] + val[v];
  }
  return offsets;
}

/// Projection onto automorphism coinvariants: sum over automorphisms of sign * (moved tensor).
EquivariantTensor symmetrize(const GraphSkeleton& g, const EquivariantTensor& t) {
  const auto autos = automorphisms(g, SymmetryMode::literal);
  if (autos.size() == 1) {
    return t;
  }
  const auto offsets = block_offsets(g);
  EquivariantTensor acc = zero_tensor(t.valence(), t.dim(), t.kind(), t.radical());
  for (const auto& [sym, sign] : autos) {
    std::vector<int> order(static_cast<std::size_t>(t.valence()));
    for (int v = 1; v <= g.vertex_count(); ++v) {
      const int w = sym.vertex_map[static_cast<std::size_t>(v - 1)];
      for (int e = 1; e <= g.edge_count(); ++e) {
        const Edge& edge = g.edge(e);
        if (edge.tail != v && edge.head != v) {
          continue;
        }
        const int from = offsets[static_cast<std::size_t>(v - 1)] + half_edge_slot(g, v, e) - 1;
        const int to = offsets[static_cast<std::size_t>(w - 1)] +
                       half_edge_slot(g, w, sym.edge_map[static_cast<std::size_t>(e - 1)]) - 1;
        order[static_cast<std::size_t>(to)] = from;
      }
    }
    acc = add_scaled(acc, permute_slots(t, order), Rational(sign));
  }
  return acc;
}

}  // namespace

std::map<GraphSkeleton, EquivariantTensor> group_by_skeleton(const DecoratedChain& c) {
  std::map<GraphSkeleton, EquivariantTensor> sums;
  for (const DecoratedTerm& term : c) {
    const Canonicalization canon = canonicalize_detailed(term.graph.skeleton(), SymmetryMode::literal);
    if (term.coefficient == 0) {
      continue;
    }
    // Skeletons with odd automorphisms stay: the symmetrization below decides
    // what survives once decorations are attached.
    const auto [image, map_sign] = apply_symmetry(term.graph.skeleton(), canon.to_canonical);
    if (image != canon.cls.canonical) {
      throw std::logic_error("canonicalization map does not reach the canonical skeleton");
    }
    // Literal symmetries keep edge numbers, so each tensor keeps its slot order
    // and only moves to its vertex's new label.
    const auto& map = canon.to_canonical.vertex_map;
    std::vector<const EquivariantTensor*> placed(map.size());
    for (std::size_t v = 0; v < map.size(); ++v) {
      placed[static_cast<std::size_t>(map[v] - 1)] = &term.graph.decorations()[v];
    }
    std::vector<EquivariantTensor> ordered;
    for (const auto* t : placed) {
      ordered.push_back(*t);
    }
    EquivariantTensor product = outer_product(ordered);
    const Rational weight = term.coefficient * map_sign;
    auto it = sums.find(canon.cls.canonical);
    if (it == sums.end()) {
      sums.emplace(canon.cls.canonical,
                   add_scaled(zero_tensor(product.valence(), product.dim(), product.kind(), product.radical()), product,
                              weight));
    } else {
      it->second = add_scaled(it->second, product, weight);
    }
  }
  for (auto& [g, t] : sums) {
    t = symmetrize(g, t);
  }
  return sums;
}

ChainVerdict chain_vanishes(const DecoratedChain& c, double tolerance) {
  std::vector<const EquivariantTensor*> all;
  for (const auto& term : c) {
    for (const auto& t : term.graph.decorations()) {
      all.push_back(&t);
    }
  }
  if (!all.empty()) {
    common_kind(all, false);
  }
  for (const auto& [g, t] : group_by_skeleton(c)) {
    if (!is_zero_tensor(t, tolerance)) {
      return {false, g};
    }
  }
  return {};
}

bool is_cocycle_decorated(const DecoratedChain& c, double tolerance) {
  if (!c.empty()) {
    const Grading gr = grading(c.front().graph.skeleton());
    for (const auto& term : c) {
      if (grading(term.graph.skeleton()) != gr) {
        throw GradingMismatch(gr, grading(term.graph.skeleton()));
      }
    }
  }
  return chain_vanishes(delta_decorated(c), tolerance).vanishes;
}

std::array<EquivariantTensor, 3> ihx_terms(const EquivariantTensor& f) {
  if (f.valence() != 3) {
    throw ShapeMismatch("IHX needs a valence-3 tensor");
  }
  // contract_decoration(f, f, 3, 1) has slots (first two of f, last two of f).
  const EquivariantTensor base = combine(f, f, "ff", [](const auto& x, const auto& y) {
    return contract_pairs(x, y, {{2, 0}});
  });
  // base(p,q,r,s) = sum_e f_pqe f_ers.
  EquivariantTensor t_i = base.relabeled("I");
  EquivariantTensor t_h = permute_slots(base, {0, 2, 1, 3}).relabeled("H");  // f_ace f_ebd
  EquivariantTensor t_x = permute_slots(base, {0, 2, 3, 1}).relabeled("X");  // f_ade f_ebc
  return {std::move(t_i), std::move(t_h), std::move(t_x)};
}

IhxResult ihx_check(const EquivariantTensor& f, double tolerance) {
  const double tol = f.kind() == ScalarKind::floating ? tolerance : 0.0;
  if (auto bad = antisymmetry_violation(f, tol)) {
    throw LieDataError(LieDataError::Kind::not_antisymmetric, bad->second, bad->first,
                       "IHX check needs a fully antisymmetric tensor");
  }
  const auto [t_i, t_h, t_x] = ihx_terms(f);
  const EquivariantTensor combo = add_scaled(add_scaled(t_i, t_h, -1), t_x, 1);
  IhxResult out;
  std::visit(
      [&](const auto& d) {
        std::vector<int> index(4, 0);
        std::size_t flat = 0;
        do {
          if (out.holds && !is_zero_entry(d[flat], tol)) {
            out.holds = false;
            out.witness = std::array<int, 4>{index[0] + 1, index[1] + 1, index[2] + 1, index[3] + 1};
          }
          ++flat;
        } while (next_index(index, d.dim()));
      },
      combo.data());
  return out;
}

std::vector<EquivariantTensor> read_decorations(std::istream& is, int vertex_count, const std::string& base_dir) {
  std::vector<std::optional<EquivariantTensor>> slots(static_cast<std::size_t>(vertex_count));
  std::string line;
  int number = 0;
  while (std::getline(is, line)) {
    ++number;
    if (auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    std::istringstream in(line);
    std::string vertex_tag, tensor_tag, name;
    int vertex = 0;
    if (!(in >> vertex_tag)) {
      continue;
    }
    if (vertex_tag != "vertex" || !(in >> vertex >> tensor_tag >> name) || tensor_tag != "tensor") {
      throw DecorationError("decoration line " + std::to_string(number) + ": expected 'vertex <i> tensor <name>'");
    }
    if (vertex < 1 || vertex > vertex_count) {
      throw DecorationError("decoration line " + std::to_string(number) + ": vertex out of range");
    }
    std::string source = name;
    if (!is_catalogue_name(name) && std::filesystem::path(name).is_relative() && !base_dir.empty()) {
      source = (std::filesystem::path(base_dir) / name).string();
    }
    slots[static_cast<std::size_t>(vertex - 1)] = load_tensor(source);
  }
  std::vector<EquivariantTensor> out;
  for (std::size_t v = 0; v < slots.size(); ++v) {
    if (!slots[v]) {
      throw DecorationError("vertex " + std::to_string(v + 1) + " has no decoration");
    }
    out.push_back(std::move(*slots[v]));
  }
  return out;
}

}  // namespace graphcoh
