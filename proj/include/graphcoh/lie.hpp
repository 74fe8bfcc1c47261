#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>

#include "graphcoh/tensor.hpp"

namespace graphcoh {

class LieDataError : public std::invalid_argument {
 public:
  enum class Kind { not_antisymmetric, jacobi_failed, shape };

  LieDataError(Kind kind, std::array<int, 4> witness, std::pair<int, int> slots, const std::string& what)
      : std::invalid_argument(what), kind_(kind), witness_(witness), slots_(slots) {}

  Kind kind() const noexcept { return kind_; }
  /// 1-based indices of a violating entry (unused trailing entries are 0).
  const std::array<int, 4>& witness() const noexcept { return witness_; }
  /// 1-based slot pair for antisymmetry failures.
  std::pair<int, int> slots() const noexcept { return slots_; }

 private:
  Kind kind_;
  std::array<int, 4> witness_;
  std::pair<int, int> slots_;
};

/// Structure constants f_abc in an orthonormal basis of the Lie algebra.
struct LieData {
  int dimension = 0;
  EquivariantTensor structure_constants;

  /// sum_abc f_abc f_abc, reported without any Casimir sign convention.
  Value structure_norm() const { return pairing(structure_constants, structure_constants); }
};

/// Builtin tables by name; "su2" is eps on dimension 3.
LieData lie_data(const std::string& builtin);

/// Validates a user table: valence 3, full antisymmetry, Jacobi identity.
LieData lie_data(const EquivariantTensor& table);

/// First (slot pair, index) where f fails to be antisymmetric, if any.
std::optional<std::pair<std::pair<int, int>, std::array<int, 4>>> antisymmetry_violation(const EquivariantTensor& f,
                                                                                     double tolerance = 0.0);

/// First (a,b,c,d) where sum_e f_abe f_ecd + f_cbe f_aed + f_dbe f_ace != 0, if any.
std::optional<std::array<int, 4>> jacobi_violation(const EquivariantTensor& f, double tolerance = 0.0);

}  // namespace graphcoh
