#pragma once

#include <stdexcept>
#include <string>
#include <variant>

#include "graphcoh/rational.hpp"

namespace graphcoh {

class MixedScalarKinds : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/**
 * Element a + b*sqrt(d) of Q(sqrt d). A value with b == 0 carries no
 * commitment to a radical; combining two values with different nonzero
 * radicals throws MixedScalarKinds. d may be negative (d = -1 gives the
 * Gaussian rationals).
 */
struct Quadratic {
  Rational a;
  Rational b;
  long radical = 0;

  Quadratic() = default;
  Quadratic(Rational rational_part) : a(std::move(rational_part)) {}  // NOLINT(google-explicit-constructor)
  Quadratic(Rational rational_part, Rational radical_part, long d)
      : a(std::move(rational_part)), b(std::move(radical_part)), radical(d) {
    if (b == 0) {
      radical = 0;
    }
  }

  bool is_zero() const { return a == 0 && b == 0; }

  Quadratic& operator+=(const Quadratic& o);
  Quadratic& operator-=(const Quadratic& o);
  Quadratic& operator*=(const Quadratic& o);

  friend Quadratic operator+(Quadratic x, const Quadratic& y) { return x += y; }
  friend Quadratic operator-(Quadratic x, const Quadratic& y) { return x -= y; }
  friend Quadratic operator*(Quadratic x, const Quadratic& y) { return x *= y; }
  friend Quadratic operator-(Quadratic x) {
    x.a = -x.a;
    x.b = -x.b;
    return x;
  }
  friend bool operator==(const Quadratic& x, const Quadratic& y) { return x.a == y.a && x.b == y.b && (x.b == 0 || x.radical == y.radical); }
};

std::string to_string(const Quadratic& q);

/// Shortest round-trip decimal.
std::string format_double(double x);

enum class ScalarKind { rational, radical, floating };

std::string to_string(ScalarKind kind);

using Value = std::variant<Rational, Quadratic, double>;

std::string to_string(const Value& v);

/// Exact zero test, or |v| <= tolerance for floating values.
bool is_zero(const Value& v, double tolerance = 0.0);

inline bool is_zero_entry(const Rational& x, double) { return x == 0; }
inline bool is_zero_entry(const Quadratic& x, double) { return x.is_zero(); }
inline bool is_zero_entry(double x, double tolerance) { return x <= tolerance && x >= -tolerance; }

double to_double(const Rational& q);
double to_double(const Quadratic& q);

}  // namespace graphcoh
