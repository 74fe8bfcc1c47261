#include "graphcoh/spin.hpp"

#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <stdexcept>

#include "graphcoh/rational.hpp"

namespace graphcoh {

Spin Spin::parse(const std::string& text) {
  Rational q;
  try {
    q = parse_rational(text);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("malformed spin '" + text + "'");
  }
  const Rational twice = 2 * q;
  if (twice.get_den() != 1 || twice < 0 || !twice.get_num().fits_sint_p()) {
    throw std::invalid_argument("spin must be a non-negative half-integer, got '" + text + "'");
  }
  return Spin(static_cast<int>(twice.get_num().get_si()));
}

std::string Spin::to_string() const {
  return is_integer() ? std::to_string(twice_ / 2) : std::to_string(twice_) + "/2";
}

namespace {

// Pairwise products of irreducibles, shared across threads.
class PairCache {
 public:
  Multiplicities get(Spin a, Spin b) {
    if (b < a) {
      std::swap(a, b);
    }
    const auto key = std::make_pair(a, b);
    {
      std::shared_lock lock(mutex_);
      if (auto it = cache_.find(key); it != cache_.end()) {
        return it->second;
      }
    }
    Multiplicities out;
    for (int l = b.twice() - a.twice(); l <= a.twice() + b.twice(); l += 2) {
      out[Spin::from_twice(l)] = 1;
    }
    std::unique_lock lock(mutex_);
    return cache_.try_emplace(key, std::move(out)).first->second;
  }

 private:
  std::shared_mutex mutex_;
  std::map<std::pair<Spin, Spin>, Multiplicities> cache_;
};

PairCache& pair_cache() {
  static PairCache cache;
  return cache;
}

}  // namespace

Multiplicities tensor_product(const Multiplicities& a, const Multiplicities& b) {
  Multiplicities out;
  for (const auto& [ja, ma] : a) {
    for (const auto& [jb, mb] : b) {
      for (const auto& [l, ml] : pair_cache().get(ja, jb)) {
        out[l] += ma * mb * ml;
      }
    }
  }
  return out;
}

Multiplicities tensor_decompose(std::span<const Spin> spins) {
  if (spins.empty()) {
    throw std::invalid_argument("tensor_decompose needs at least one spin");
  }
  Multiplicities acc{{spins.front(), 1}};
  for (const Spin& s : spins.subspan(1)) {
    acc = tensor_product(acc, Multiplicities{{s, 1}});
  }
  return acc;
}

std::uint64_t dimension(const Multiplicities& m) {
  std::uint64_t d = 0;
  for (const auto& [j, mult] : m) {
    d += mult * static_cast<std::uint64_t>(j.dimension());
  }
  return d;
}

std::string format_multiplicities(const Multiplicities& m) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [j, mult] : m) {
    if (mult == 0) {
      continue;
    }
    os << (first ? "" : " ") << j.to_string() << ':' << mult;
    first = false;
  }
  return os.str();
}

SpinRep::SpinRep(std::vector<Spin> summands) : summands_(std::move(summands)) {
  if (summands_.empty()) {
    throw std::invalid_argument("a representation needs at least one summand");
  }
}

std::uint64_t SpinRep::dimension() const { return graphcoh::dimension(as_multiplicities()); }

Multiplicities SpinRep::as_multiplicities() const {
  Multiplicities out;
  for (const Spin& s : summands_) {
    ++out[s];
  }
  return out;
}

Multiplicities power_decompose(const SpinRep& rep, int power) {
  if (power < 1) {
    throw std::invalid_argument("tensor power must be >= 1");
  }
  const Multiplicities base = rep.as_multiplicities();
  Multiplicities acc = base;
  for (int k = 1; k < power; ++k) {
    acc = tensor_product(acc, base);
  }
  return acc;
}

std::uint64_t trivial_multiplicity(const SpinRep& rep, int power) {
  const Multiplicities m = power_decompose(rep, power);
  auto it = m.find(Spin());
  return it == m.end() ? 0 : it->second;
}

std::vector<Spin> parse_spin_list(const std::string& text) {
  std::vector<Spin> out;
  std::istringstream is(text);
  std::string item;
  while (std::getline(is, item, ',')) {
    if (!item.empty()) {
      out.push_back(Spin::parse(item));
    }
  }
  if (out.empty()) {
    throw std::invalid_argument("empty spin list");
  }
  return out;
}

}  // namespace graphcoh
