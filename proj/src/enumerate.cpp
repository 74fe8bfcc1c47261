#include <algorithm>
#include <map>
#include <set>

#include "graphcoh/graph.hpp"

namespace graphcoh {

namespace {

/// Visits every loop-free multigraph on V labeled vertices with E unlabeled
/// edges (as a sorted edge list) whose valences are all >= min_valence.
class MultiplicityWalker {
 public:
  MultiplicityWalker(int vertex_count, int edge_count, int min_valence)
      : v_(vertex_count), e_(edge_count), min_valence_(std::max(min_valence, 1)) {
    for (int i = 1; i <= v_; ++i) {
      for (int j = i + 1; j <= v_; ++j) {
        pairs_.push_back({i, j});
      }
    }
    valence_.assign(static_cast<std::size_t>(v_) + 1, 0);
  }

  template <class Visit>
  void run(Visit&& visit) {
    walk(0, e_, visit);
  }

 private:
  template <class Visit>
  void walk(std::size_t p, int remaining, Visit& visit) {
    if (p == pairs_.size()) {
      if (remaining == 0) {
        visit(current_);
      }
      return;
    }
    const Edge pair = pairs_[p];
    // Vertex pair.tail sees its last pair when pair.head == V.
    const bool closes_tail = pair.head == v_;
    const bool closes_last = p + 1 == pairs_.size();
    for (int mult = remaining; mult >= 0; --mult) {
      valence_[static_cast<std::size_t>(pair.tail)] += mult;
      valence_[static_cast<std::size_t>(pair.head)] += mult;
      bool ok = !closes_tail || valence_[static_cast<std::size_t>(pair.tail)] >= min_valence_;
      if (ok && closes_last) {
        ok = valence_[static_cast<std::size_t>(pair.head)] >= min_valence_;
      }
      if (ok) {
        current_.insert(current_.end(), static_cast<std::size_t>(mult), pair);
        walk(p + 1, remaining - mult, visit);
        current_.resize(current_.size() - static_cast<std::size_t>(mult));
      }
      valence_[static_cast<std::size_t>(pair.tail)] -= mult;
      valence_[static_cast<std::size_t>(pair.head)] -= mult;
    }
  }

  int v_;
  int e_;
  int min_valence_;
  std::vector<Edge> pairs_;
  std::vector<int> valence_;
  std::vector<Edge> current_;
};

}  // namespace

std::vector<GraphClass> enumerate_classes(int vertex_count, int edge_count, const EnumerationOptions& options) {
  if (vertex_count < 2 || edge_count < 1) {
    return {};
  }
  // Isomorphism types first; zero-in-renumbering-mode types are kept here since
  // their edge-labeled versions may still be nonzero in literal mode.
  std::set<GraphSkeleton> shapes;
  MultiplicityWalker walker(vertex_count, edge_count, options.min_valence);
  walker.run([&](const std::vector<Edge>& edges) {
    GraphSkeleton g(vertex_count, edges);
    if (options.connected && !is_connected(g)) {
      return;
    }
    shapes.insert(canonicalize(g, SymmetryMode::edge_renumbering).canonical);
  });

  std::map<GraphSkeleton, GraphClass> classes;
  auto record = [&](GraphClass cls) {
    if (cls.is_zero()) {
      return;
    }
    cls.sign = SignState::plus;
    const GraphSkeleton key = cls.canonical;
    classes.try_emplace(key, std::move(cls));
    if (classes.size() > options.cap) {
      throw BasisTooLarge(options.cap);
    }
  };

  for (const GraphSkeleton& shape : shapes) {
    if (options.mode == SymmetryMode::edge_renumbering) {
      record(canonicalize(shape, SymmetryMode::edge_renumbering));
      continue;
    }
    std::vector<Edge> labeling = shape.edges();
    do {
      record(canonicalize(GraphSkeleton(vertex_count, labeling), SymmetryMode::literal));
    } while (std::next_permutation(labeling.begin(), labeling.end()));
  }

  std::vector<GraphClass> out;
  out.reserve(classes.size());
  for (auto& [_, cls] : classes) {
    out.push_back(std::move(cls));
  }
  return out;
}

std::vector<GraphClass> enumerate_graded(Grading gr, const EnumerationOptions& options) {
  return enumerate_classes(vertices_at(gr), edges_at(gr), options);
}

std::vector<GraphClass> enumerate_trivalent(int order, bool connected, SymmetryMode mode) {
  if (order < 1) {
    throw std::invalid_argument("trivalent order must be >= 1");
  }
  EnumerationOptions options;
  options.connected = connected;
  options.mode = mode;
  auto candidates = enumerate_classes(2 * order, 3 * order, options);
  std::erase_if(candidates, [](const GraphClass& cls) {
    const auto val = cls.canonical.valences();
    return std::any_of(val.begin(), val.end(), [](int v) { return v != 3; });
  });
  return candidates;
}

}  // namespace graphcoh
