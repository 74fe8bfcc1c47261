#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "graphcoh/scalar.hpp"

namespace graphcoh {

class ShapeMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class SlotOutOfRange : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Advances a 0-based multi-index odometer-style (last slot fastest).
/// Returns false after the last index.
inline bool next_index(std::vector<int>& index, int dim) {
  for (std::size_t s = index.size(); s-- > 0;) {
    if (++index[s] < dim) {
      return true;
    }
    index[s] = 0;
  }
  return false;
}

/// Dense row-major array with `valence` slots of extent `dim`. Valence 0 holds one scalar.
template <class T>
class DenseTensor {
 public:
  using value_type = T;

  DenseTensor() = default;
  DenseTensor(int valence, int dim) : valence_(valence), dim_(dim) {
    if (valence < 0 || dim < 1) {
      throw ShapeMismatch("tensor needs valence >= 0 and dimension >= 1");
    }
    std::size_t n = 1;
    for (int s = 0; s < valence; ++s) {
      n *= static_cast<std::size_t>(dim);
    }
    data_.assign(n, T{});
  }

  int valence() const noexcept { return valence_; }
  int dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return data_.size(); }

  std::size_t offset(std::span<const int> index) const {
    std::size_t off = 0;
    for (int i : index) {
      off = off * static_cast<std::size_t>(dim_) + static_cast<std::size_t>(i);
    }
    return off;
  }

  T& operator()(std::span<const int> index) { return data_[offset(index)]; }
  const T& operator()(std::span<const int> index) const { return data_[offset(index)]; }
  T& at(std::initializer_list<int> index) { return (*this)(std::span<const int>(index.begin(), index.size())); }
  const T& at(std::initializer_list<int> index) const {
    return (*this)(std::span<const int>(index.begin(), index.size()));
  }

  T& operator[](std::size_t flat) { return data_[flat]; }
  const T& operator[](std::size_t flat) const { return data_[flat]; }

  std::vector<T>& data() noexcept { return data_; }
  const std::vector<T>& data() const noexcept { return data_; }

  template <class U, class F>
  DenseTensor<U> map(F&& f) const {
    DenseTensor<U> out(valence_, dim_);
    for (std::size_t k = 0; k < data_.size(); ++k) {
      out[k] = f(data_[k]);
    }
    return out;
  }

 private:
  int valence_ = 0;
  int dim_ = 1;
  std::vector<T> data_{T{}};
};

/// Result slot s is input slot `order[s]` (0-based).
template <class T>
DenseTensor<T> permute_slots(const DenseTensor<T>& t, const std::vector<int>& order) {
  if (static_cast<int>(order.size()) != t.valence()) {
    throw ShapeMismatch("slot permutation has wrong length");
  }
  DenseTensor<T> out(t.valence(), t.dim());
  std::vector<int> index(order.size(), 0);
  std::vector<int> source(order.size(), 0);
  std::size_t flat = 0;
  do {
    for (std::size_t s = 0; s < order.size(); ++s) {
      source[static_cast<std::size_t>(order[s])] = index[s];
    }
    out[flat++] = t(source);
  } while (next_index(index, t.dim()));
  return out;
}

/**
 * Tensor product of a and b with the listed (slot of a, slot of b) pairs
 * contracted by the orthonormal pairing (0-based slots). Remaining slots: a's
 * in order, then b's in order.
 */
template <class T>
DenseTensor<T> contract_pairs(const DenseTensor<T>& a, const DenseTensor<T>& b,
                              const std::vector<std::pair<int, int>>& pairs) {
  if (a.dim() != b.dim()) {
    throw ShapeMismatch("cannot contract tensors of dimension " + std::to_string(a.dim()) + " and " +
                        std::to_string(b.dim()));
  }
  std::vector<int> a_role(static_cast<std::size_t>(a.valence()), -1);
  std::vector<int> b_role(static_cast<std::size_t>(b.valence()), -1);
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    const auto [sa, sb] = pairs[p];
    if (sa < 0 || sa >= a.valence() || sb < 0 || sb >= b.valence()) {
      throw SlotOutOfRange("contraction slot out of range");
    }
    if (a_role[static_cast<std::size_t>(sa)] != -1 || b_role[static_cast<std::size_t>(sb)] != -1) {
      throw SlotOutOfRange("slot contracted twice");
    }
    a_role[static_cast<std::size_t>(sa)] = static_cast<int>(p);
    b_role[static_cast<std::size_t>(sb)] = static_cast<int>(p);
  }
  const int free_count = a.valence() + b.valence() - 2 * static_cast<int>(pairs.size());
  DenseTensor<T> out(free_count, a.dim());

  // Free slot f of the result maps to a or b slot; summed slots share index.
  std::vector<int> a_free, b_free;
  for (int s = 0; s < a.valence(); ++s) {
    if (a_role[static_cast<std::size_t>(s)] < 0) {
      a_free.push_back(s);
    }
  }
  for (int s = 0; s < b.valence(); ++s) {
    if (b_role[static_cast<std::size_t>(s)] < 0) {
      b_free.push_back(s);
    }
  }
  std::vector<int> free_index(static_cast<std::size_t>(free_count), 0);
  std::vector<int> summed(pairs.size(), 0);
  std::vector<int> ia(static_cast<std::size_t>(a.valence()));
  std::vector<int> ib(static_cast<std::size_t>(b.valence()));
  std::size_t flat = 0;
  do {
    for (std::size_t f = 0; f < a_free.size(); ++f) {
      ia[static_cast<std::size_t>(a_free[f])] = free_index[f];
    }
    for (std::size_t f = 0; f < b_free.size(); ++f) {
      ib[static_cast<std::size_t>(b_free[f])] = free_index[a_free.size() + f];
    }
    T acc{};
    std::fill(summed.begin(), summed.end(), 0);
    // Valence-0 operands and zero pairs still run the body once.
    do {
      for (std::size_t p = 0; p < pairs.size(); ++p) {
        ia[static_cast<std::size_t>(pairs[p].first)] = summed[p];
        ib[static_cast<std::size_t>(pairs[p].second)] = summed[p];
      }
      acc += a(ia) * b(ib);
    } while (next_index(summed, a.dim()));
    out[flat++] = std::move(acc);
  } while (next_index(free_index, out.dim()));
  return out;
}

// ---------------------------------------------------------------------------

using TensorData = std::variant<DenseTensor<Rational>, DenseTensor<Quadratic>, DenseTensor<double>>;

/**
 * Valence-v array over an m-dimensional orthonormal space, one scalar kind
 * per tensor. Radical tensors declare the radical d of Q(sqrt d).
 */
class EquivariantTensor {
 public:
  EquivariantTensor(std::string label, DenseTensor<Rational> data);
  EquivariantTensor(std::string label, DenseTensor<Quadratic> data, long radical);
  EquivariantTensor(std::string label, DenseTensor<double> data);

  const std::string& label() const noexcept { return label_; }
  int valence() const;
  int dim() const;
  ScalarKind kind() const noexcept { return static_cast<ScalarKind>(data_.index()); }
  long radical() const noexcept { return radical_; }
  const TensorData& data() const noexcept { return data_; }

  template <class T>
  const DenseTensor<T>& as() const {
    return std::get<DenseTensor<T>>(data_);
  }

  Value entry(std::span<const int> index) const;

  /// Converts to `kind` (radical kinds adopt `radical`). Throws MixedScalarKinds when lossy in an exact kind.
  EquivariantTensor converted(ScalarKind kind, long radical = 0) const;

  EquivariantTensor relabeled(std::string label) const;

 private:
  std::string label_;
  TensorData data_;
  long radical_ = 0;
};

/// The kind all of `tensors` can be expressed in exactly; radicals that
/// disagree throw unless `float_fallback`, in which case binary64 is chosen.
std::pair<ScalarKind, long> common_kind(std::span<const EquivariantTensor* const> tensors, bool float_fallback);

/// Same entries with slot s taken from input slot order[s] (0-based).
EquivariantTensor permute_slots(const EquivariantTensor& t, const std::vector<int>& order);

/// Full slotwise contraction sum over all multi-indices of a*b.
Value pairing(const EquivariantTensor& a, const EquivariantTensor& b);

/// Entrywise a + factor*b in a common exact kind (or float).
EquivariantTensor add_scaled(const EquivariantTensor& a, const EquivariantTensor& b, const Rational& factor);

bool is_zero_tensor(const EquivariantTensor& t, double tolerance = 0.0);

/**
 * True iff sum over slots of (generator acting in that slot) annihilates t
 * for every generator; generators are valence-2 tensors G with
 * (G v)_i = sum_k G_ik v_k. Float entries use `tolerance`.
 */
bool check_equivariance(const EquivariantTensor& t, std::span<const EquivariantTensor> generators,
                        double tolerance = 1e-12);

struct SlotSymmetry {
  int first = 0;   // 1-based slots
  int second = 0;
  int sign = 0;    // +1 symmetric, -1 antisymmetric, 0 neither
};

std::vector<SlotSymmetry> symmetry_profile(const EquivariantTensor& t, double tolerance = 1e-12);

// ---------------------------------------------------------------------------
// Catalogue

/// Levi-Civita symbol on R^3.
EquivariantTensor eps_tensor();

/// Invariant of E_{1/2} (x) E_{1/2} (x) E_1 inside (E_{1/2} (+) E_1)^(x)3,
/// t_{ab(2+c)} = (sigma_c eps)_{ab} in Q(sqrt -1). Slots 1 and 2 carry spin 1/2.
EquivariantTensor half_half_one_tensor();

/// Kronecker delta of dimension m.
EquivariantTensor identity_tensor(int dim);

EquivariantTensor zero_tensor(int valence, int dim, ScalarKind kind = ScalarKind::rational, long radical = 0);

/// Block tensor on the direct sum of the two spaces (same valence required).
EquivariantTensor direct_sum(const EquivariantTensor& a, const EquivariantTensor& b);

/// so(3) generators (L_c)_{ab} = -eps_{cab} on R^3.
std::vector<EquivariantTensor> so3_generators();

/// su(2) generators acting blockwise on E_{1/2} (+) E_1: -(i/2) sigma_c and L_c.
std::vector<EquivariantTensor> su2_block_generators();

/// "eps" or "half-half-one".
EquivariantTensor catalogue_tensor(const std::string& name);
bool is_catalogue_name(const std::string& name);

// ---------------------------------------------------------------------------
// Tensor file: "valence v dim m kind {rational|radical d|float}", then lines
// "i1 ... iv value" with 1-based indices; value "p/q", "p/q r d", or decimal.
// Repeated indices accumulate.

EquivariantTensor read_tensor(std::istream& is, const std::string& label);
void write_tensor(std::ostream& os, const EquivariantTensor& t);

/// Catalogue name or path to a tensor file.
EquivariantTensor load_tensor(const std::string& name_or_path);

}  // namespace graphcoh
