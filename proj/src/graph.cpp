#include "graphcoh/graph.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>

namespace graphcoh {

GraphSkeleton::GraphSkeleton(int vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
  if (vertex_count_ < 0) {
    throw GraphError(GraphError::Kind::vertex_out_of_range, vertex_count_, "negative vertex count");
  }
  std::vector<int> seen(static_cast<std::size_t>(vertex_count_) + 1, 0);
  for (std::size_t k = 0; k < edges_.size(); ++k) {
    const Edge& e = edges_[k];
    const int index = static_cast<int>(k) + 1;
    for (int v : {e.tail, e.head}) {
      if (v < 1 || v > vertex_count_) {
        throw GraphError(GraphError::Kind::vertex_out_of_range, index,
                         "edge " + std::to_string(index) + " has vertex " + std::to_string(v) +
                             " outside 1.." + std::to_string(vertex_count_));
      }
    }
    if (e.tail == e.head) {
      throw GraphError(GraphError::Kind::loop_edge, index, "edge " + std::to_string(index) + " is a loop");
    }
    seen[static_cast<std::size_t>(e.tail)] = 1;
    seen[static_cast<std::size_t>(e.head)] = 1;
  }
  for (int v = 1; v <= vertex_count_; ++v) {
    if (!seen[static_cast<std::size_t>(v)]) {
      throw GraphError(GraphError::Kind::isolated_vertex, v, "vertex " + std::to_string(v) + " is isolated");
    }
  }
}

int GraphSkeleton::valence(int vertex) const {
  int count = 0;
  for (const Edge& e : edges_) {
    count += (e.tail == vertex) + (e.head == vertex);
  }
  return count;
}

std::vector<int> GraphSkeleton::valences() const {
  std::vector<int> out(static_cast<std::size_t>(vertex_count_), 0);
  for (const Edge& e : edges_) {
    ++out[static_cast<std::size_t>(e.tail - 1)];
    ++out[static_cast<std::size_t>(e.head - 1)];
  }
  return out;
}

GraphSkeleton new_graph(int vertex_count, std::vector<Edge> edges) {
  return GraphSkeleton(vertex_count, std::move(edges));
}

Grading grading(const GraphSkeleton& g) {
  const int v = g.vertex_count();
  const int e = g.edge_count();
  return {e - v, 2 * e - 3 * v};
}

namespace {

std::pair<int, int> endpoints(const Edge& e) { return std::minmax(e.tail, e.head); }

}  // namespace

bool is_regular(const GraphSkeleton& g, int edge) {
  const auto key = endpoints(g.edge(edge));
  int count = 0;
  for (const Edge& e : g.edges()) {
    count += endpoints(e) == key;
  }
  return count == 1;
}

std::vector<int> regular_edges(const GraphSkeleton& g) {
  std::map<std::pair<int, int>, int> multiplicity;
  for (const Edge& e : g.edges()) {
    ++multiplicity[endpoints(e)];
  }
  std::vector<int> out;
  for (int k = 1; k <= g.edge_count(); ++k) {
    if (multiplicity[endpoints(g.edge(k))] == 1) {
      out.push_back(k);
    }
  }
  return out;
}

bool is_connected(const GraphSkeleton& g) {
  const int n = g.vertex_count();
  if (n <= 1) {
    return true;
  }
  std::vector<int> parent(static_cast<std::size_t>(n) + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    }
    return x;
  };
  int components = n;
  for (const Edge& e : g.edges()) {
    const int a = find(e.tail);
    const int b = find(e.head);
    if (a != b) {
      parent[static_cast<std::size_t>(a)] = b;
      --components;
    }
  }
  return components == 1;
}

std::vector<std::vector<HalfEdge>> half_edge_order(const GraphSkeleton& g) {
  std::vector<std::vector<HalfEdge>> out(static_cast<std::size_t>(g.vertex_count()));
  // Edges are visited in increasing number; without loops each edge contributes
  // at most one half-edge per vertex, so the lists come out sorted.
  for (int k = 1; k <= g.edge_count(); ++k) {
    const Edge& e = g.edge(k);
    out[static_cast<std::size_t>(e.tail - 1)].push_back({k, false});
    out[static_cast<std::size_t>(e.head - 1)].push_back({k, true});
  }
  return out;
}

int half_edge_slot(const GraphSkeleton& g, int vertex, int edge) {
  int slot = 0;
  for (int k = 1; k <= g.edge_count(); ++k) {
    const Edge& e = g.edge(k);
    if (e.tail == vertex || e.head == vertex) {
      ++slot;
      if (k == edge) {
        return slot;
      }
    }
  }
  throw GraphError(GraphError::Kind::vertex_out_of_range, edge,
                   "edge " + std::to_string(edge) + " is not incident to vertex " + std::to_string(vertex));
}

std::string to_string(SymmetryMode mode) {
  return mode == SymmetryMode::literal ? "literal" : "edge-renumbering";
}

SymmetryMode parse_symmetry_mode(const std::string& text) {
  if (text == "literal") {
    return SymmetryMode::literal;
  }
  if (text == "edge-renumbering") {
    return SymmetryMode::edge_renumbering;
  }
  throw std::invalid_argument("unknown symmetry mode '" + text + "'");
}

Symmetry Symmetry::identity(const GraphSkeleton& g) {
  Symmetry s;
  s.vertex_map.resize(static_cast<std::size_t>(g.vertex_count()));
  std::iota(s.vertex_map.begin(), s.vertex_map.end(), 1);
  s.reversed.assign(static_cast<std::size_t>(g.edge_count()), false);
  s.edge_map.resize(static_cast<std::size_t>(g.edge_count()));
  std::iota(s.edge_map.begin(), s.edge_map.end(), 1);
  return s;
}

int permutation_sign(const std::vector<int>& images) {
  const std::size_t n = images.size();
  std::vector<char> visited(n, 0);
  int sign = 1;
  for (std::size_t start = 0; start < n; ++start) {
    if (visited[start]) {
      continue;
    }
    std::size_t length = 0;
    for (std::size_t x = start; !visited[x]; x = static_cast<std::size_t>(images[x] - 1)) {
      visited[x] = 1;
      ++length;
    }
    if (length % 2 == 0) {
      sign = -sign;
    }
  }
  return sign;
}

std::pair<GraphSkeleton, int> apply_symmetry(const GraphSkeleton& g, const Symmetry& sym) {
  std::vector<Edge> edges(g.edges().size());
  int reversals = 0;
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const Edge& e = g.edges()[k];
    Edge image{sym.vertex_map[static_cast<std::size_t>(e.tail - 1)],
               sym.vertex_map[static_cast<std::size_t>(e.head - 1)]};
    if (sym.reversed[k]) {
      std::swap(image.tail, image.head);
      ++reversals;
    }
    edges[static_cast<std::size_t>(sym.edge_map[k] - 1)] = image;
  }
  const int sign = permutation_sign(sym.vertex_map) * (reversals % 2 ? -1 : 1);
  return {GraphSkeleton(g.vertex_count(), std::move(edges)), sign};
}

namespace {

/// Vertices grouped by valence, highest valence first. Labelings that keep
/// this block order are the only ones searched.
std::vector<std::vector<int>> valence_cells(const GraphSkeleton& g) {
  std::map<int, std::vector<int>, std::greater<>> by_valence;
  const auto val = g.valences();
  for (int v = 1; v <= g.vertex_count(); ++v) {
    by_valence[val[static_cast<std::size_t>(v - 1)]].push_back(v);
  }
  std::vector<std::vector<int>> cells;
  for (auto& [_, vs] : by_valence) {
    cells.push_back(std::move(vs));
  }
  return cells;
}

/// Calls visit(vertex_map) for every labeling that assigns each valence cell
/// a contiguous block of labels.
template <class Visit>
void for_each_cell_labeling(const GraphSkeleton& g, Visit&& visit) {
  auto cells = valence_cells(g);
  std::vector<int> vertex_map(static_cast<std::size_t>(g.vertex_count()));
  auto assign = [&] {
    int label = 1;
    for (const auto& cell : cells) {
      for (int v : cell) {
        vertex_map[static_cast<std::size_t>(v - 1)] = label++;
      }
    }
  };
  while (true) {
    assign();
    visit(vertex_map);
    std::size_t c = 0;
    for (; c < cells.size(); ++c) {
      if (std::next_permutation(cells[c].begin(), cells[c].end())) {
        break;
      }
    }
    if (c == cells.size()) {
      return;
    }
  }
}

struct Image {
  std::vector<Edge> edges;
  std::vector<bool> reversed;
  std::vector<int> edge_map;
  int sign = 1;
};

Image image_under(const GraphSkeleton& g, const std::vector<int>& vertex_map, SymmetryMode mode) {
  Image im;
  const std::size_t n = g.edges().size();
  im.edges.resize(n);
  im.reversed.resize(n);
  int reversals = 0;
  for (std::size_t k = 0; k < n; ++k) {
    const Edge& e = g.edges()[k];
    int a = vertex_map[static_cast<std::size_t>(e.tail - 1)];
    int b = vertex_map[static_cast<std::size_t>(e.head - 1)];
    im.reversed[k] = a > b;
    if (a > b) {
      std::swap(a, b);
      ++reversals;
    }
    im.edges[k] = {a, b};
  }
  im.edge_map.resize(n);
  if (mode == SymmetryMode::literal) {
    std::iota(im.edge_map.begin(), im.edge_map.end(), 1);
  } else {
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int x, int y) { return im.edges[static_cast<std::size_t>(x)] < im.edges[static_cast<std::size_t>(y)]; });
    std::vector<Edge> sorted(n);
    for (std::size_t pos = 0; pos < n; ++pos) {
      sorted[pos] = im.edges[static_cast<std::size_t>(order[pos])];
      im.edge_map[static_cast<std::size_t>(order[pos])] = static_cast<int>(pos) + 1;
    }
    im.edges = std::move(sorted);
  }
  im.sign = permutation_sign(vertex_map) * (reversals % 2 ? -1 : 1);
  return im;
}

}  // namespace

namespace {

/// Literal mode fixes edge numbers, so a lex-least labeling must give every
/// newly met endpoint the smallest free label of its valence cell. Only the
/// order of two fresh endpoints from the same cell branches.
class LiteralSearch {
 public:
  explicit LiteralSearch(const GraphSkeleton& g) : g_(g) {
    const auto cells = valence_cells(g);
    cell_of_.resize(static_cast<std::size_t>(g.vertex_count()));
    int label = 1;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      next_free_.push_back(label);
      for (int v : cells[c]) {
        cell_of_[static_cast<std::size_t>(v - 1)] = static_cast<int>(c);
      }
      label += static_cast<int>(cells[c].size());
    }
    labels_.assign(static_cast<std::size_t>(g.vertex_count()), 0);
  }

  Canonicalization run() {
    current_.reserve(g_.edges().size());
    descend(0);
    Canonicalization out;
    out.cls.canonical = GraphSkeleton(g_.vertex_count(), best_);
    out.cls.sign = zero_ ? SignState::zero : best_image_.sign > 0 ? SignState::plus : SignState::minus;
    out.cls.grading = grading(g_);
    out.to_canonical = {best_map_, best_image_.reversed, best_image_.edge_map};
    return out;
  }

 private:
  void descend(std::size_t k) {
    if (k == g_.edges().size()) {
      leaf();
      return;
    }
    const Edge& e = g_.edges()[k];
    int& a = labels_[static_cast<std::size_t>(e.tail - 1)];
    int& b = labels_[static_cast<std::size_t>(e.head - 1)];
    const int ca = cell_of_[static_cast<std::size_t>(e.tail - 1)];
    const int cb = cell_of_[static_cast<std::size_t>(e.head - 1)];
    if (a && b) {
      step(k, a, b);
    } else if (a || b) {
      int& fresh = a ? b : a;
      const int cell = a ? cb : ca;
      fresh = next_free_[static_cast<std::size_t>(cell)]++;
      step(k, a, b);
      --next_free_[static_cast<std::size_t>(cell)];
      fresh = 0;
    } else if (ca != cb) {
      a = next_free_[static_cast<std::size_t>(ca)]++;
      b = next_free_[static_cast<std::size_t>(cb)]++;
      step(k, a, b);
      --next_free_[static_cast<std::size_t>(ca)];
      --next_free_[static_cast<std::size_t>(cb)];
      a = b = 0;
    } else {
      int& free = next_free_[static_cast<std::size_t>(ca)];
      for (int flip = 0; flip < 2; ++flip) {
        a = free + flip;
        b = free + 1 - flip;
        free += 2;
        step(k, a, b);
        free -= 2;
      }
      a = b = 0;
    }
  }

  void step(std::size_t k, int a, int b) {
    current_.push_back({std::min(a, b), std::max(a, b)});
    if (!have_best_ || !std::lexicographical_compare(best_.begin(), best_.begin() + static_cast<std::ptrdiff_t>(k) + 1,
                                                     current_.begin(), current_.end())) {
      descend(k + 1);
    }
    current_.pop_back();
  }

  void leaf() {
    Image im = image_under(g_, labels_, SymmetryMode::literal);
    if (!have_best_ || current_ < best_) {
      have_best_ = true;
      best_ = current_;
      best_map_ = labels_;
      best_image_ = std::move(im);
      zero_ = false;
    } else if (current_ == best_ && im.sign != best_image_.sign) {
      zero_ = true;
    }
  }

  const GraphSkeleton& g_;
  std::vector<int> cell_of_;
  std::vector<int> next_free_;
  std::vector<int> labels_;
  std::vector<Edge> current_;
  std::vector<Edge> best_;
  std::vector<int> best_map_;
  Image best_image_;
  bool have_best_ = false;
  bool zero_ = false;
};

}  // namespace

Canonicalization canonicalize_detailed(const GraphSkeleton& g, SymmetryMode mode) {
  if (mode == SymmetryMode::literal) {
    return LiteralSearch(g).run();
  }
  Canonicalization out;
  std::vector<Edge> best;
  bool have_best = false;
  bool zero = false;
  for_each_cell_labeling(g, [&](const std::vector<int>& vertex_map) {
    Image im = image_under(g, vertex_map, mode);
    if (!have_best || im.edges < best) {
      have_best = true;
      best = im.edges;
      zero = false;
      out.to_canonical = {vertex_map, std::move(im.reversed), std::move(im.edge_map)};
      out.cls.sign = im.sign > 0 ? SignState::plus : SignState::minus;
    } else if (im.edges == best && im.sign != sign_value(out.cls.sign)) {
      zero = true;
    }
  });
  out.cls.canonical = GraphSkeleton(g.vertex_count(), std::move(best));
  if (zero) {
    out.cls.sign = SignState::zero;
  }
  out.cls.grading = grading(g);
  return out;
}

GraphClass canonicalize(const GraphSkeleton& g, SymmetryMode mode) {
  return canonicalize_detailed(g, mode).cls;
}

std::vector<std::pair<Symmetry, int>> automorphisms(const GraphSkeleton& g, SymmetryMode mode) {
  const Image self = image_under(g, Symmetry::identity(g).vertex_map, mode);
  std::vector<std::pair<Symmetry, int>> out;
  for_each_cell_labeling(g, [&](const std::vector<int>& vertex_map) {
    Image im = image_under(g, vertex_map, mode);
    if (im.edges != self.edges) {
      return;
    }
    // Compose with the inverse normalization of g itself so the symmetry maps
    // g's oriented edges onto g's oriented edges.
    Symmetry s;
    s.vertex_map = vertex_map;
    const std::size_t n = g.edges().size();
    s.reversed.resize(n);
    s.edge_map.resize(n);
    std::vector<int> inverse_self(n);
    for (std::size_t k = 0; k < n; ++k) {
      inverse_self[static_cast<std::size_t>(self.edge_map[k] - 1)] = static_cast<int>(k) + 1;
    }
    int reversals = 0;
    for (std::size_t k = 0; k < n; ++k) {
      const bool flip = im.reversed[k] != self.reversed[static_cast<std::size_t>(inverse_self[static_cast<std::size_t>(im.edge_map[k] - 1)] - 1)];
      s.reversed[k] = flip;
      reversals += flip;
      s.edge_map[k] = inverse_self[static_cast<std::size_t>(im.edge_map[k] - 1)];
    }
    const int sign = permutation_sign(vertex_map) * (reversals % 2 ? -1 : 1);
    out.emplace_back(std::move(s), sign);
  });
  return out;
}

// ---------------------------------------------------------------------------

void write_graph(std::ostream& os, const GraphSkeleton& g) {
  os << "V " << g.vertex_count() << " E " << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) {
    os << e.tail << ' ' << e.head << '\n';
  }
}

std::string to_text(const GraphSkeleton& g) {
  std::ostringstream os;
  write_graph(os, g);
  return os.str();
}

namespace {

bool next_content_line(std::istream& is, std::string& line, int& line_number) {
  while (std::getline(is, line)) {
    ++line_number;
    if (auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    if (line.find_first_not_of(" \t\r") != std::string::npos) {
      return true;
    }
  }
  return false;
}

[[noreturn]] void parse_failure(int line_number, const std::string& message) {
  throw GraphError(GraphError::Kind::parse, line_number,
                   "line " + std::to_string(line_number) + ": " + message);
}

}  // namespace

std::vector<GraphSkeleton> read_graphs(std::istream& is) {
  std::vector<GraphSkeleton> out;
  std::string line;
  int line_number = 0;
  while (next_content_line(is, line, line_number)) {
    std::istringstream header(line);
    std::string v_tag, e_tag;
    int v = -1, e = -1;
    if (!(header >> v_tag >> v >> e_tag >> e) || v_tag != "V" || e_tag != "E" || v < 0 || e < 0) {
      parse_failure(line_number, "expected 'V <int> E <int>'");
    }
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(e));
    for (int k = 0; k < e; ++k) {
      if (!next_content_line(is, line, line_number)) {
        parse_failure(line_number, "unexpected end of input inside graph block");
      }
      std::istringstream body(line);
      Edge edge;
      std::string rest;
      if (!(body >> edge.tail >> edge.head) || (body >> rest)) {
        parse_failure(line_number, "expected '<tail> <head>'");
      }
      edges.push_back(edge);
    }
    out.push_back(new_graph(v, std::move(edges)));
  }
  return out;
}

GraphSkeleton parse_graph(const std::string& text) {
  std::istringstream is(text);
  auto graphs = read_graphs(is);
  if (graphs.size() != 1) {
    throw GraphError(GraphError::Kind::parse, 0, "expected exactly one graph block");
  }
  return graphs.front();
}

}  // namespace graphcoh
