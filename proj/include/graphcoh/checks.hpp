#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "graphcoh/complex.hpp"
#include "graphcoh/tensor.hpp"

namespace graphcoh {

struct SuiteOptions {
  /// Upper bound on ord = E - V (and on the trivalent order m).
  int max_order = 3;
  int max_vertices_literal = 4;
  int max_vertices_renumbering = 6;
  int random_symmetries = 1000;
  std::uint64_t seed = 20240611;
  double tolerance = 1e-12;
  /// Largest basis enumerated per bidegree.
  std::size_t cap = default_basis_cap();
};

struct SuiteResult {
  std::string name;
  bool passed = true;
  std::size_t checked = 0;
  /// First counterexample: graph block, mode, and the offending edge or symmetry.
  std::string witness;
};

/// "delta2", "canon", "ihx", "multiplicities", "decorated-delta2".
const std::vector<std::string>& suite_names();

/// Throws std::invalid_argument on an unknown suite name.
SuiteResult run_suite(const std::string& name, const SuiteOptions& options);

/// Antisymmetric dimension-5 tensor (eps plus f_145 = 1) that violates Jacobi.
EquivariantTensor perturbed_structure_constants();

SuiteResult check_delta_squared(const SuiteOptions& options);
SuiteResult check_canonicalization(const SuiteOptions& options);
SuiteResult check_ihx(const SuiteOptions& options);
SuiteResult check_multiplicities(const SuiteOptions& options);
SuiteResult check_decorated_delta_squared(const SuiteOptions& options);

}  // namespace graphcoh
