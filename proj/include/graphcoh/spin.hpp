#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace graphcoh {

/// SU(2) spin j in (1/2)Z>=0, stored as the integer 2j.
class Spin {
 public:
  constexpr Spin() = default;
  static constexpr Spin from_twice(int twice) { return Spin(twice); }
  static Spin parse(const std::string& text);

  constexpr int twice() const noexcept { return twice_; }
  constexpr int dimension() const noexcept { return twice_ + 1; }
  constexpr bool is_integer() const noexcept { return twice_ % 2 == 0; }

  std::string to_string() const;

  auto operator<=>(const Spin&) const = default;

 private:
  constexpr explicit Spin(int twice) : twice_(twice) {}
  int twice_ = 0;
};

using Multiplicities = std::map<Spin, std::uint64_t>;

/// E_j (x) E_k = sum over l = |j-k| .. j+k of E_l, extended linearly.
Multiplicities tensor_product(const Multiplicities& a, const Multiplicities& b);

/// Iterated decomposition of E_{j1} (x) ... (x) E_{jn}.
Multiplicities tensor_decompose(std::span<const Spin> spins);

std::uint64_t dimension(const Multiplicities& m);

/// "0:1 1:3 2:2 3:1"
std::string format_multiplicities(const Multiplicities& m);

/// Direct sum of irreducibles.
class SpinRep {
 public:
  explicit SpinRep(std::vector<Spin> summands);

  const std::vector<Spin>& summands() const noexcept { return summands_; }
  std::uint64_t dimension() const;
  Multiplicities as_multiplicities() const;

 private:
  std::vector<Spin> summands_;
};

/// Decomposition of rep^(x)power.
Multiplicities power_decompose(const SpinRep& rep, int power);

/// Multiplicity of the trivial representation in rep^(x)power.
std::uint64_t trivial_multiplicity(const SpinRep& rep, int power);

/// Parses "1/2,1,3/2" (also accepts decimals such as 0.5).
std::vector<Spin> parse_spin_list(const std::string& text);

}  // namespace graphcoh
