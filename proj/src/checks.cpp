#include "graphcoh/checks.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

#include "graphcoh/complex.hpp"
#include "graphcoh/decorated.hpp"
#include "graphcoh/graph.hpp"
#include "graphcoh/lie.hpp"
#include "graphcoh/spin.hpp"
#include "graphcoh/tensor.hpp"

namespace graphcoh {

namespace {

std::string graph_witness(const GraphSkeleton& g, SymmetryMode mode, const std::string& what) {
  std::ostringstream os;
  os << "mode " << to_string(mode) << "\n" << to_text(g) << what;
  return os.str();
}

void fail(SuiteResult& r, std::string witness) {
  if (r.passed) {
    r.passed = false;
    r.witness = std::move(witness);
  }
}

std::string describe(const Symmetry& s) {
  std::ostringstream os;
  os << "vertex_map";
  for (int v : s.vertex_map) os << ' ' << v;
  os << " reversed";
  for (bool b : s.reversed) os << ' ' << (b ? 1 : 0);
  os << " edge_map";
  for (int e : s.edge_map) os << ' ' << e;
  return os.str();
}

constexpr SymmetryMode kModes[] = {SymmetryMode::literal, SymmetryMode::edge_renumbering};

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"delta2", "canon", "ihx", "multiplicities", "decorated-delta2"};
  return names;
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& options) {
  if (name == "delta2") return check_delta_squared(options);
  if (name == "canon") return check_canonicalization(options);
  if (name == "ihx") return check_ihx(options);
  if (name == "multiplicities") return check_multiplicities(options);
  if (name == "decorated-delta2") return check_decorated_delta_squared(options);
  throw std::invalid_argument("unknown suite '" + name + "'");
}

SuiteResult check_delta_squared(const SuiteOptions& options) {
  SuiteResult r{"delta2", true, 0, {}};
  for (SymmetryMode mode : kModes) {
    const int vmax = mode == SymmetryMode::literal ? options.max_vertices_literal : options.max_vertices_renumbering;
    for (int v = 2; v <= vmax; ++v) {
      for (int e = (3 * v + 1) / 2; e - v <= options.max_order; ++e) {
        const EnumerationOptions eo{false, mode, 3, options.cap};
        for (const GraphClass& cls : enumerate_classes(v, e, eo)) {
          ++r.checked;
          const Cochain d = delta_of_skeleton(cls.canonical, mode);
          for (const auto& [image, coef] : d.terms()) {
            const Grading gi = grading(image);
            if (gi.ord != cls.grading.ord || gi.deg != cls.grading.deg + 1) {
              fail(r, graph_witness(cls.canonical, mode, "delta term has wrong grading:\n" + to_text(image)));
            }
          }
          const Cochain dd = delta(d);
          if (!dd.empty()) {
            fail(r, graph_witness(cls.canonical, mode,
                                  "delta^2 has " + std::to_string(dd.size()) + " nonzero terms, first:\n" +
                                      to_text(dd.terms().begin()->first)));
          }
        }
      }
    }
  }
  return r;
}

SuiteResult check_canonicalization(const SuiteOptions& options) {
  SuiteResult r{"canon", true, 0, {}};
  std::mt19937_64 rng(options.seed);

  const GraphSkeleton double_edge(2, {{1, 2}, {1, 2}});
  for (SymmetryMode mode : kModes) {
    ++r.checked;
    if (!canonicalize(double_edge, mode).is_zero()) {
      fail(r, graph_witness(double_edge, mode, "double edge not detected as zero"));
    }
  }

  for (SymmetryMode mode : kModes) {
    std::vector<GraphSkeleton> sample{double_edge};
    for (int m = 1; 2 * m <= options.max_vertices_literal; ++m) {
      for (const GraphClass& cls : enumerate_trivalent(m, false, mode)) {
        sample.push_back(cls.canonical);
      }
    }
    for (const GraphSkeleton& g : sample) {
      const Canonicalization base = canonicalize_detailed(g, mode);
      const GraphClass again = canonicalize(base.cls.canonical, mode);
      ++r.checked;
      if (!base.cls.is_zero() && (again.canonical != base.cls.canonical || again.sign != SignState::plus)) {
        fail(r, graph_witness(g, mode, "canonical form is not idempotent"));
      }
      for (int k = 0; k < options.random_symmetries; ++k) {
        Symmetry sym = Symmetry::identity(g);
        std::shuffle(sym.vertex_map.begin(), sym.vertex_map.end(), rng);
        for (std::size_t e = 0; e < sym.reversed.size(); ++e) {
          sym.reversed[e] = (rng() & 1U) != 0;
        }
        if (mode == SymmetryMode::edge_renumbering) {
          std::shuffle(sym.edge_map.begin(), sym.edge_map.end(), rng);
        }
        // g = s * moved, moved = s' * canonical', so g = s * s' * canonical'.
        const auto [moved, s] = apply_symmetry(g, sym);
        const GraphClass c = canonicalize(moved, mode);
        ++r.checked;
        bool ok = c.is_zero() == base.cls.is_zero();
        if (ok && !c.is_zero()) {
          ok = c.canonical == base.cls.canonical && s * sign_value(c.sign) == sign_value(base.cls.sign);
        }
        if (!ok) {
          fail(r, graph_witness(g, mode, "sign not multiplicative under " + describe(sym)));
        }
      }
    }
  }
  return r;
}

EquivariantTensor perturbed_structure_constants() {
  // eps on the first three basis vectors plus an antisymmetric f_145 = 1.
  DenseTensor<Rational> d(3, 5);
  auto put = [&](int a, int b, int c, int s) {
    const int idx[][3] = {{a, b, c}, {b, c, a}, {c, a, b}, {b, a, c}, {a, c, b}, {c, b, a}};
    for (int p = 0; p < 6; ++p) {
      d.at({idx[p][0], idx[p][1], idx[p][2]}) = p < 3 ? s : -s;
    }
  };
  put(0, 1, 2, 1);
  put(0, 3, 4, 1);
  return {"perturbed", std::move(d)};
}

SuiteResult check_ihx(const SuiteOptions& options) {
  SuiteResult r{"ihx", true, 0, {}};
  const EquivariantTensor eps = eps_tensor();
  for (const auto& t : {eps, direct_sum(eps, eps)}) {
    ++r.checked;
    const IhxResult res = ihx_check(t, options.tolerance);
    if (!res.holds) {
      const auto& w = *res.witness;
      fail(r, "tensor " + t.label() + " violates IHX at " + std::to_string(w[0]) + " " + std::to_string(w[1]) + " " +
                  std::to_string(w[2]) + " " + std::to_string(w[3]));
    }
    try {
      lie_data(t);
    } catch (const LieDataError& e) {
      fail(r, "tensor " + t.label() + " rejected as structure constants: " + e.what());
    }
  }
  ++r.checked;
  const EquivariantTensor bad = perturbed_structure_constants();
  if (ihx_check(bad, options.tolerance).holds) {
    fail(r, "perturbed tensor passes IHX");
  }
  ++r.checked;
  try {
    lie_data(bad);
    fail(r, "perturbed tensor accepted as structure constants");
  } catch (const LieDataError& e) {
    if (e.kind() != LieDataError::Kind::jacobi_failed) {
      fail(r, std::string("perturbed tensor rejected for the wrong reason: ") + e.what());
    }
  }
  return r;
}

SuiteResult check_multiplicities(const SuiteOptions&) {
  SuiteResult r{"multiplicities", true, 0, {}};
  for (int twice = 0; twice <= 12; ++twice) {
    ++r.checked;
    const std::uint64_t expected = twice % 2 == 0 ? 1 : 0;
    const std::uint64_t got = trivial_multiplicity(SpinRep({Spin::from_twice(twice)}), 3);
    if (got != expected) {
      fail(r, "E_" + Spin::from_twice(twice).to_string() + "^3 has " + std::to_string(got) + " trivial summands");
    }
  }
  ++r.checked;
  // One invariant inside E_1^3 plus one in each of the three slot placements
  // of E_1/2 (x) E_1/2 (x) E_1.
  const SpinRep mixed({Spin::from_twice(1), Spin::from_twice(2)});
  if (const auto got = trivial_multiplicity(mixed, 3); got != 4) {
    fail(r, "(E_1/2 + E_1)^3 has " + std::to_string(got) + " trivial summands");
  }
  ++r.checked;
  const std::vector<Spin> ones(3, Spin::from_twice(2));
  const Multiplicities m = tensor_decompose(ones);
  if (format_multiplicities(m) != "0:1 1:3 2:2 3:1" || dimension(m) != 27) {
    fail(r, "E_1^3 decomposes as " + format_multiplicities(m));
  }
  // Dimension is preserved on every list of up to three spins <= 4.
  for (int a = 0; a <= 8; ++a) {
    for (int b = 0; b <= 8; ++b) {
      for (int c = 0; c <= 8; ++c) {
        ++r.checked;
        const std::vector<Spin> spins{Spin::from_twice(a), Spin::from_twice(b), Spin::from_twice(c)};
        if (dimension(tensor_decompose(spins)) != static_cast<std::uint64_t>((a + 1) * (b + 1) * (c + 1))) {
          fail(r, "dimension not preserved for " + spins[0].to_string() + "," + spins[1].to_string() + "," +
                      spins[2].to_string());
        }
      }
    }
  }
  return r;
}

SuiteResult check_decorated_delta_squared(const SuiteOptions& options) {
  SuiteResult r{"decorated-delta2", true, 0, {}};
  const EquivariantTensor eps = eps_tensor();
  for (int m = 1; 2 * m <= options.max_vertices_literal && m <= options.max_order; ++m) {
    for (const GraphClass& cls : enumerate_trivalent(m, false, SymmetryMode::literal)) {
      ++r.checked;
      const DecoratedChain chain{{Rational(1), decorate_uniformly(cls.canonical, eps)}};
      const ChainVerdict v = chain_vanishes(delta_decorated(delta_decorated(chain)), options.tolerance);
      if (!v.vanishes) {
        fail(r, graph_witness(cls.canonical, SymmetryMode::literal,
                              "decorated delta^2 nonzero on skeleton\n" + to_text(*v.witness)));
      }
    }
  }
  return r;
}

}  // namespace graphcoh
