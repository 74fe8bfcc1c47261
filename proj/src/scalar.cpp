#include "graphcoh/scalar.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <stdexcept>

namespace graphcoh {

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_fraction_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(const std::string& text) {
  if (text.empty()) {
    throw std::invalid_argument("empty rational");
  }
  std::string body = text.front() == '+' ? text.substr(1) : text;
  if (auto dot = body.find('.'); dot != std::string::npos) {
    // Finite decimal: drop the point and divide by a power of ten.
    const std::string digits = body.substr(0, dot) + body.substr(dot + 1);
    const auto scale = static_cast<unsigned long>(body.size() - dot - 1);
    mpz_class num;
    if (digits.empty() || digits == "-" || num.set_str(digits, 10) != 0) {
      throw std::invalid_argument("malformed decimal '" + text + "'");
    }
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, scale);
    Rational q(num, den);
    q.canonicalize();
    return q;
  }
  Rational q;
  if (q.set_str(body, 10) != 0 || q.get_den() == 0) {
    throw std::invalid_argument("malformed rational '" + text + "'");
  }
  q.canonicalize();
  return q;
}

namespace {

long join_radicals(const Quadratic& x, const Quadratic& y) {
  if (x.b == 0) {
    return y.radical;
  }
  if (y.b == 0 || x.radical == y.radical) {
    return x.radical;
  }
  throw MixedScalarKinds("cannot combine sqrt(" + std::to_string(x.radical) + ") with sqrt(" +
                         std::to_string(y.radical) + ")");
}

}  // namespace

Quadratic& Quadratic::operator+=(const Quadratic& o) {
  radical = join_radicals(*this, o);
  a += o.a;
  b += o.b;
  if (b == 0) {
    radical = 0;
  }
  return *this;
}

Quadratic& Quadratic::operator-=(const Quadratic& o) { return *this += -o; }

Quadratic& Quadratic::operator*=(const Quadratic& o) {
  const long d = join_radicals(*this, o);
  Rational na = a * o.a + b * o.b * d;
  Rational nb = a * o.b + b * o.a;
  a = std::move(na);
  b = std::move(nb);
  radical = b == 0 ? 0 : d;
  return *this;
}

std::string to_string(const Quadratic& q) {
  if (q.b == 0) {
    return q.a.get_str();
  }
  const std::string radical_part = q.b.get_str() + "*sqrt(" + std::to_string(q.radical) + ")";
  if (q.a == 0) {
    return radical_part;
  }
  return q.a.get_str() + (q.b > 0 ? "+" : "") + radical_part;
}

std::string format_double(double x) {
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  if (ec != std::errc()) {
    throw std::runtime_error("cannot format double");
  }
  return std::string(buf.data(), ptr);
}

std::string to_string(ScalarKind kind) {
  switch (kind) {
    case ScalarKind::rational:
      return "rational";
    case ScalarKind::radical:
      return "radical";
    case ScalarKind::floating:
      return "float";
  }
  return "?";
}

std::string to_string(const Value& v) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, double>) {
          return format_double(x);
        } else {
          return to_string(x);
        }
      },
      v);
}

bool is_zero(const Value& v, double tolerance) {
  return std::visit([&](const auto& x) { return is_zero_entry(x, tolerance); }, v);
}

double to_double(const Rational& q) { return q.get_d(); }

double to_double(const Quadratic& q) {
  if (q.b == 0) {
    return q.a.get_d();
  }
  if (q.radical < 0) {
    throw MixedScalarKinds("imaginary radical has no binary64 representation");
  }
  return q.a.get_d() + q.b.get_d() * std::sqrt(static_cast<double>(q.radical));
}

}  // namespace graphcoh
