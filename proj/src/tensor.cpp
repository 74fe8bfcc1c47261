#include "graphcoh/tensor.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace graphcoh {

EquivariantTensor::EquivariantTensor(std::string label, DenseTensor<Rational> data)
    : label_(std::move(label)), data_(std::move(data)) {}

EquivariantTensor::EquivariantTensor(std::string label, DenseTensor<Quadratic> data, long radical)
    : label_(std::move(label)), data_(std::move(data)), radical_(radical) {
  for (const Quadratic& q : as<Quadratic>().data()) {
    if (q.b != 0 && q.radical != radical_) {
      throw MixedScalarKinds("entry with sqrt(" + std::to_string(q.radical) + ") in a tensor declared over sqrt(" +
                             std::to_string(radical_) + ")");
    }
  }
}

EquivariantTensor::EquivariantTensor(std::string label, DenseTensor<double> data)
    : label_(std::move(label)), data_(std::move(data)) {}

int EquivariantTensor::valence() const {
  return std::visit([](const auto& t) { return t.valence(); }, data_);
}

int EquivariantTensor::dim() const {
  return std::visit([](const auto& t) { return t.dim(); }, data_);
}

Value EquivariantTensor::entry(std::span<const int> index) const {
  return std::visit([&](const auto& t) -> Value { return t(index); }, data_);
}

EquivariantTensor EquivariantTensor::converted(ScalarKind target, long radical) const {
  const ScalarKind from = kind();
  if (from == target && (target != ScalarKind::radical || radical == radical_)) {
    return *this;
  }
  switch (target) {
    case ScalarKind::rational:
      throw MixedScalarKinds("cannot convert a " + to_string(from) + " tensor to rational");
    case ScalarKind::radical:
      if (from == ScalarKind::rational) {
        return {label_, as<Rational>().map<Quadratic>([](const Rational& q) { return Quadratic(q); }), radical};
      }
      throw MixedScalarKinds("cannot convert tensor '" + label_ + "' to sqrt(" + std::to_string(radical) + ")");
    case ScalarKind::floating:
      return std::visit(
          [&](const auto& t) {
            return EquivariantTensor(label_, t.template map<double>([](const auto& x) {
              if constexpr (std::is_same_v<std::decay_t<decltype(x)>, double>) {
                return x;
              } else {
                return to_double(x);
              }
            }));
          },
          data_);
  }
  return *this;
}

EquivariantTensor EquivariantTensor::relabeled(std::string label) const {
  EquivariantTensor out = *this;
  out.label_ = std::move(label);
  return out;
}

std::pair<ScalarKind, long> common_kind(std::span<const EquivariantTensor* const> tensors, bool float_fallback) {
  bool any_float = false;
  long radical = 0;
  bool radical_conflict = false;
  bool any_radical = false;
  for (const EquivariantTensor* t : tensors) {
    switch (t->kind()) {
      case ScalarKind::rational:
        break;
      case ScalarKind::floating:
        any_float = true;
        break;
      case ScalarKind::radical:
        if (any_radical && t->radical() != radical) {
          radical_conflict = true;
        }
        any_radical = true;
        radical = t->radical();
        break;
    }
  }
  if (radical_conflict && !float_fallback) {
    throw MixedScalarKinds("tensors declare different radicals");
  }
  if (any_float || radical_conflict) {
    if (!float_fallback) {
      throw MixedScalarKinds("exact and floating tensors mixed");
    }
    return {ScalarKind::floating, 0};
  }
  if (any_radical) {
    return {ScalarKind::radical, radical};
  }
  return {ScalarKind::rational, 0};
}

namespace {

void require_same_shape(const EquivariantTensor& a, const EquivariantTensor& b) {
  if (a.valence() != b.valence() || a.dim() != b.dim()) {
    throw ShapeMismatch("shape (" + std::to_string(a.valence()) + "," + std::to_string(a.dim()) + ") vs (" +
                        std::to_string(b.valence()) + "," + std::to_string(b.dim()) + ")");
  }
}

/// Both tensors brought to one kind; floats only when a tensor already is one.
std::pair<EquivariantTensor, EquivariantTensor> unify(const EquivariantTensor& a, const EquivariantTensor& b) {
  const EquivariantTensor* both[] = {&a, &b};
  const auto [kind, radical] = common_kind(both, true);
  return {a.converted(kind, radical), b.converted(kind, radical)};
}

}  // namespace

EquivariantTensor permute_slots(const EquivariantTensor& t, const std::vector<int>& order) {
  return std::visit(
      [&](const auto& d) {
        using D = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<D, DenseTensor<Quadratic>>) {
          return EquivariantTensor(t.label(), permute_slots(d, order), t.radical());
        } else {
          return EquivariantTensor(t.label(), permute_slots(d, order));
        }
      },
      t.data());
}

Value pairing(const EquivariantTensor& a, const EquivariantTensor& b) {
  require_same_shape(a, b);
  const auto [x, y] = unify(a, b);
  return std::visit(
      [&](const auto& dx) -> Value {
        using D = std::decay_t<decltype(dx)>;
        const D& dy = std::get<D>(y.data());
        typename D::value_type acc = dx[0] * dy[0];
        for (std::size_t k = 1; k < dx.size(); ++k) {
          acc += dx[k] * dy[k];
        }
        return acc;
      },
      x.data());
}

EquivariantTensor add_scaled(const EquivariantTensor& a, const EquivariantTensor& b, const Rational& factor) {
  require_same_shape(a, b);
  const auto [x, y] = unify(a, b);
  return std::visit(
      [&](const auto& dx) {
        using D = std::decay_t<decltype(dx)>;
        const D& dy = std::get<D>(y.data());
        D out = dx;
        for (std::size_t k = 0; k < out.size(); ++k) {
          if constexpr (std::is_same_v<D, DenseTensor<double>>) {
            out[k] += factor.get_d() * dy[k];
          } else if constexpr (std::is_same_v<D, DenseTensor<Rational>>) {
            out[k] += factor * dy[k];
          } else {
            out[k] += Quadratic(factor) * dy[k];
          }
        }
        if constexpr (std::is_same_v<D, DenseTensor<Quadratic>>) {
          return EquivariantTensor(a.label(), std::move(out), x.radical());
        } else {
          return EquivariantTensor(a.label(), std::move(out));
        }
      },
      x.data());
}

bool is_zero_tensor(const EquivariantTensor& t, double tolerance) {
  return std::visit(
      [&](const auto& d) {
        return std::all_of(d.data().begin(), d.data().end(), [&](const auto& x) { return is_zero_entry(x, tolerance); });
      },
      t.data());
}

namespace {

/// Sum over slots of G acting in that slot.
template <class T>
DenseTensor<T> act(const DenseTensor<T>& t, const DenseTensor<T>& g) {
  DenseTensor<T> out(t.valence(), t.dim());
  std::vector<int> index(static_cast<std::size_t>(t.valence()), 0);
  std::vector<int> source(index.size());
  std::size_t flat = 0;
  do {
    T acc{};
    for (std::size_t s = 0; s < index.size(); ++s) {
      source = index;
      for (int k = 0; k < t.dim(); ++k) {
        source[s] = k;
        const T& gk = g.at({index[s], k});
        if (!is_zero_entry(gk, 0.0)) {
          acc += gk * t(source);
        }
      }
    }
    out[flat++] = std::move(acc);
  } while (next_index(index, t.dim()));
  return out;
}

}  // namespace

bool check_equivariance(const EquivariantTensor& t, std::span<const EquivariantTensor> generators, double tolerance) {
  for (const EquivariantTensor& g : generators) {
    if (g.valence() != 2 || g.dim() != t.dim()) {
      throw ShapeMismatch("generator must be a " + std::to_string(t.dim()) + "x" + std::to_string(t.dim()) + " matrix");
    }
    const auto [x, y] = unify(t, g);
    const bool annihilated = std::visit(
        [&](const auto& dx) {
          using D = std::decay_t<decltype(dx)>;
          const D residual = act(dx, std::get<D>(y.data()));
          return std::all_of(residual.data().begin(), residual.data().end(),
                             [&](const auto& r) { return is_zero_entry(r, tolerance); });
        },
        x.data());
    if (!annihilated) {
      return false;
    }
  }
  return true;
}

std::vector<SlotSymmetry> symmetry_profile(const EquivariantTensor& t, double tolerance) {
  std::vector<SlotSymmetry> out;
  const int v = t.valence();
  for (int p = 0; p < v; ++p) {
    for (int q = p + 1; q < v; ++q) {
      std::vector<int> order(static_cast<std::size_t>(v));
      for (int s = 0; s < v; ++s) {
        order[static_cast<std::size_t>(s)] = s;
      }
      std::swap(order[static_cast<std::size_t>(p)], order[static_cast<std::size_t>(q)]);
      const EquivariantTensor swapped = permute_slots(t, order);
      SlotSymmetry entry{p + 1, q + 1, 0};
      if (is_zero_tensor(add_scaled(t, swapped, -1), tolerance)) {
        entry.sign = 1;
      } else if (is_zero_tensor(add_scaled(t, swapped, 1), tolerance)) {
        entry.sign = -1;
      }
      // A zero tensor is both; report it as symmetric.
      out.push_back(entry);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

EquivariantTensor eps_tensor() {
  DenseTensor<Rational> d(3, 3);
  d.at({0, 1, 2}) = 1;
  d.at({1, 2, 0}) = 1;
  d.at({2, 0, 1}) = 1;
  d.at({0, 2, 1}) = -1;
  d.at({2, 1, 0}) = -1;
  d.at({1, 0, 2}) = -1;
  return {"eps", std::move(d)};
}

EquivariantTensor half_half_one_tensor() {
  const Quadratic i(0, 1, -1);
  DenseTensor<Quadratic> d(3, 5);
  // sigma_1 eps = diag(-1, 1)
  d.at({0, 0, 2}) = Quadratic(-1);
  d.at({1, 1, 2}) = Quadratic(1);
  // sigma_2 eps = diag(i, i)
  d.at({0, 0, 3}) = i;
  d.at({1, 1, 3}) = i;
  // sigma_3 eps = offdiag(1, 1)
  d.at({0, 1, 4}) = Quadratic(1);
  d.at({1, 0, 4}) = Quadratic(1);
  return {"half-half-one", std::move(d), -1};
}

EquivariantTensor identity_tensor(int dim) {
  DenseTensor<Rational> d(2, dim);
  for (int a = 0; a < dim; ++a) {
    d.at({a, a}) = 1;
  }
  return {"delta", std::move(d)};
}

EquivariantTensor zero_tensor(int valence, int dim, ScalarKind kind, long radical) {
  EquivariantTensor t("zero", DenseTensor<Rational>(valence, dim));
  return kind == ScalarKind::rational ? t : t.converted(kind, radical);
}

EquivariantTensor direct_sum(const EquivariantTensor& a, const EquivariantTensor& b) {
  if (a.valence() != b.valence()) {
    throw ShapeMismatch("direct sum needs equal valence");
  }
  const auto [x, y] = unify(a, b);
  const int m = a.dim() + b.dim();
  return std::visit(
      [&](const auto& dx) {
        using D = std::decay_t<decltype(dx)>;
        const D& dy = std::get<D>(y.data());
        D out(a.valence(), m);
        std::vector<int> index(static_cast<std::size_t>(a.valence()), 0);
        std::vector<int> shifted(index.size());
        do {
          out(index) = dx(index);
        } while (next_index(index, a.dim()));
        std::vector<int> jb(static_cast<std::size_t>(b.valence()), 0);
        do {
          for (std::size_t s = 0; s < jb.size(); ++s) {
            shifted[s] = jb[s] + a.dim();
          }
          out(shifted) = dy(jb);
        } while (next_index(jb, b.dim()));
        const std::string label = a.label() + "+" + b.label();
        if constexpr (std::is_same_v<D, DenseTensor<Quadratic>>) {
          return EquivariantTensor(label, std::move(out), x.radical());
        } else {
          return EquivariantTensor(label, std::move(out));
        }
      },
      x.data());
}

std::vector<EquivariantTensor> so3_generators() {
  const EquivariantTensor eps_t = eps_tensor();
  const auto& eps = eps_t.as<Rational>();
  std::vector<EquivariantTensor> out;
  for (int c = 0; c < 3; ++c) {
    DenseTensor<Rational> g(2, 3);
    for (int a = 0; a < 3; ++a) {
      for (int b = 0; b < 3; ++b) {
        g.at({a, b}) = -eps.at({c, a, b});
      }
    }
    out.emplace_back("L" + std::to_string(c + 1), std::move(g));
  }
  return out;
}

std::vector<EquivariantTensor> su2_block_generators() {
  const Quadratic half_i(0, Rational(1, 2), -1);
  // -(i/2) sigma_c on the spin-1/2 block.
  DenseTensor<Quadratic> x1(2, 5), x2(2, 5), x3(2, 5);
  x1.at({0, 1}) = -half_i;
  x1.at({1, 0}) = -half_i;
  x2.at({0, 1}) = Quadratic(Rational(-1, 2));
  x2.at({1, 0}) = Quadratic(Rational(1, 2));
  x3.at({0, 0}) = -half_i;
  x3.at({1, 1}) = half_i;
  DenseTensor<Quadratic>* blocks[] = {&x1, &x2, &x3};
  const auto so3 = so3_generators();
  std::vector<EquivariantTensor> out;
  for (int c = 0; c < 3; ++c) {
    const auto& l = so3[static_cast<std::size_t>(c)].as<Rational>();
    for (int a = 0; a < 3; ++a) {
      for (int b = 0; b < 3; ++b) {
        blocks[c]->at({2 + a, 2 + b}) = Quadratic(l.at({a, b}));
      }
    }
    out.emplace_back("J" + std::to_string(c + 1), std::move(*blocks[c]), -1);
  }
  return out;
}

bool is_catalogue_name(const std::string& name) { return name == "eps" || name == "half-half-one"; }

EquivariantTensor catalogue_tensor(const std::string& name) {
  if (name == "eps") {
    return eps_tensor();
  }
  if (name == "half-half-one") {
    return half_half_one_tensor();
  }
  throw std::invalid_argument("unknown catalogue tensor '" + name + "'");
}

// ---------------------------------------------------------------------------

namespace {

[[noreturn]] void tensor_parse_failure(int line, const std::string& message) {
  throw std::invalid_argument("tensor file line " + std::to_string(line) + ": " + message);
}

bool next_line(std::istream& is, std::string& line, int& number) {
  while (std::getline(is, line)) {
    ++number;
    if (auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    if (line.find_first_not_of(" \t\r") != std::string::npos) {
      return true;
    }
  }
  return false;
}

}  // namespace

EquivariantTensor read_tensor(std::istream& is, const std::string& label) {
  std::string line;
  int number = 0;
  if (!next_line(is, line, number)) {
    tensor_parse_failure(number, "missing header");
  }
  std::istringstream header(line);
  std::string tag_valence, tag_dim, tag_kind, kind;
  int valence = 0, dim = 0;
  if (!(header >> tag_valence >> valence >> tag_dim >> dim >> tag_kind >> kind) || tag_valence != "valence" ||
      tag_dim != "dim" || tag_kind != "kind" || valence < 1 || dim < 1) {
    tensor_parse_failure(number, "expected 'valence <v> dim <m> kind <kind>'");
  }
  long radical = 0;
  if (kind == "radical" && !(header >> radical)) {
    tensor_parse_failure(number, "radical kind needs its d");
  }
  if (kind != "rational" && kind != "radical" && kind != "float") {
    tensor_parse_failure(number, "unknown kind '" + kind + "'");
  }

  DenseTensor<Rational> rational(kind == "rational" ? valence : 0, dim);
  DenseTensor<Quadratic> quadratic(kind == "radical" ? valence : 0, dim);
  DenseTensor<double> floating(kind == "float" ? valence : 0, dim);
  std::vector<int> index(static_cast<std::size_t>(valence));
  while (next_line(is, line, number)) {
    std::istringstream body(line);
    for (int& i : index) {
      if (!(body >> i) || i < 1 || i > dim) {
        tensor_parse_failure(number, "index missing or outside 1.." + std::to_string(dim));
      }
      --i;
    }
    std::string value, r_tag;
    if (!(body >> value)) {
      tensor_parse_failure(number, "missing value");
    }
    try {
      if (kind == "float") {
        std::size_t used = 0;
        const double x = std::stod(value, &used);
        if (used != value.size()) {
          tensor_parse_failure(number, "malformed decimal '" + value + "'");
        }
        floating(index) += x;
      } else if (body >> r_tag) {
        long d = 0;
        if (r_tag != "r" || !(body >> d) || kind != "radical" || d != radical) {
          tensor_parse_failure(number, "radical part must read 'p/q r " + std::to_string(radical) + "'");
        }
        quadratic(index) += Quadratic(0, parse_rational(value), radical);
      } else if (kind == "radical") {
        quadratic(index) += Quadratic(parse_rational(value));
      } else {
        rational(index) += parse_rational(value);
      }
    } catch (const std::invalid_argument& e) {
      if (std::string(e.what()).rfind("tensor file", 0) == 0) {
        throw;
      }
      tensor_parse_failure(number, e.what());
    }
    std::string extra;
    if (body >> extra) {
      tensor_parse_failure(number, "trailing input '" + extra + "'");
    }
  }
  if (kind == "rational") {
    return {label, std::move(rational)};
  }
  if (kind == "radical") {
    return {label, std::move(quadratic), radical};
  }
  return {label, std::move(floating)};
}

void write_tensor(std::ostream& os, const EquivariantTensor& t) {
  os << "valence " << t.valence() << " dim " << t.dim() << " kind " << to_string(t.kind());
  if (t.kind() == ScalarKind::radical) {
    os << ' ' << t.radical();
  }
  os << '\n';
  std::visit(
      [&](const auto& d) {
        std::vector<int> index(static_cast<std::size_t>(d.valence()), 0);
        auto prefix = [&] {
          for (int i : index) {
            os << i + 1 << ' ';
          }
        };
        std::size_t flat = 0;
        do {
          const auto& x = d[flat++];
          using T = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<T, double>) {
            if (x != 0.0) {
              prefix();
              os << format_double(x) << '\n';
            }
          } else if constexpr (std::is_same_v<T, Rational>) {
            if (x != 0) {
              prefix();
              os << x.get_str() << '\n';
            }
          } else {
            if (x.a != 0) {
              prefix();
              os << x.a.get_str() << '\n';
            }
            if (x.b != 0) {
              prefix();
              os << x.b.get_str() << " r " << t.radical() << '\n';
            }
          }
        } while (next_index(index, d.dim()));
      },
      t.data());
}

EquivariantTensor load_tensor(const std::string& name_or_path) {
  if (is_catalogue_name(name_or_path)) {
    return catalogue_tensor(name_or_path);
  }
  std::ifstream in(name_or_path);
  if (!in) {
    throw std::invalid_argument("no catalogue tensor or readable file named '" + name_or_path + "'");
  }
  return read_tensor(in, name_or_path);
}

}  // namespace graphcoh
