#pragma once

#include <gmpxx.h>

#include <string>

namespace graphcoh {

using Rational = mpq_class;

/// "p" or "p/q", canonical form.
std::string to_string(const Rational& q);

/// Always "p/q" (denominator 1 written explicitly).
std::string to_fraction_string(const Rational& q);

/// Accepts "p", "p/q" or a finite decimal such as "-0.25".
Rational parse_rational(const std::string& text);

}  // namespace graphcoh
