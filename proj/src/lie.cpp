#include "graphcoh/lie.hpp"

namespace graphcoh {

namespace {

std::string witness_text(const std::array<int, 4>& w, int n) {
  std::string s = "(";
  for (int k = 0; k < n; ++k) {
    s += (k ? "," : "") + std::to_string(w[static_cast<std::size_t>(k)]);
  }
  return s + ")";
}

template <class T>
std::optional<std::array<int, 4>> jacobi_scan(const DenseTensor<T>& f, double tolerance) {
  const int m = f.dim();
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      for (int c = 0; c < m; ++c) {
        for (int d = 0; d < m; ++d) {
          T sum{};
          for (int e = 0; e < m; ++e) {
            sum += f.at({a, b, e}) * f.at({e, c, d});
            sum += f.at({c, b, e}) * f.at({a, e, d});
            sum += f.at({d, b, e}) * f.at({a, c, e});
          }
          if (!is_zero_entry(sum, tolerance)) {
            return std::array<int, 4>{a + 1, b + 1, c + 1, d + 1};
          }
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::pair<std::pair<int, int>, std::array<int, 4>>> antisymmetry_violation(const EquivariantTensor& f,
                                                                                     double tolerance) {
  if (f.valence() != 3) {
    throw LieDataError(LieDataError::Kind::shape, {}, {}, "structure constants need valence 3");
  }
  for (const auto& [p, q] : {std::pair{0, 1}, std::pair{0, 2}, std::pair{1, 2}}) {
    std::vector<int> order{0, 1, 2};
    std::swap(order[static_cast<std::size_t>(p)], order[static_cast<std::size_t>(q)]);
    const EquivariantTensor sum = add_scaled(f, permute_slots(f, order), 1);
    std::optional<std::array<int, 4>> witness;
    std::visit(
        [&](const auto& d) {
          std::vector<int> index(3, 0);
          std::size_t flat = 0;
          do {
            if (!witness && !is_zero_entry(d[flat], tolerance)) {
              witness = std::array<int, 4>{index[0] + 1, index[1] + 1, index[2] + 1, 0};
            }
            ++flat;
          } while (next_index(index, d.dim()));
        },
        sum.data());
    if (witness) {
      return std::make_pair(std::make_pair(p + 1, q + 1), *witness);
    }
  }
  return std::nullopt;
}

std::optional<std::array<int, 4>> jacobi_violation(const EquivariantTensor& f, double tolerance) {
  if (f.valence() != 3) {
    throw LieDataError(LieDataError::Kind::shape, {}, {}, "structure constants need valence 3");
  }
  return std::visit([&](const auto& d) { return jacobi_scan(d, tolerance); }, f.data());
}

LieData lie_data(const std::string& builtin) {
  if (builtin == "su2") {
    return {3, eps_tensor()};
  }
  throw std::invalid_argument("unknown builtin Lie algebra '" + builtin + "'");
}

LieData lie_data(const EquivariantTensor& table) {
  if (table.valence() != 3) {
    throw LieDataError(LieDataError::Kind::shape, {}, {}, "structure constants need valence 3");
  }
  const double tol = table.kind() == ScalarKind::floating ? 1e-12 : 0.0;
  if (auto bad = antisymmetry_violation(table, tol)) {
    const auto& [slots, w] = *bad;
    throw LieDataError(LieDataError::Kind::not_antisymmetric, w, slots,
                       "not antisymmetric in slots " + std::to_string(slots.first) + "," +
                           std::to_string(slots.second) + " at " + witness_text(w, 3));
  }
  if (auto bad = jacobi_violation(table, tol)) {
    throw LieDataError(LieDataError::Kind::jacobi_failed, *bad, {}, "Jacobi identity fails at " + witness_text(*bad, 4));
  }
  return {table.dim(), table};
}

}  // namespace graphcoh
