#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace plrg {

// Exact rational arithmetic for the tail exponent tau and everything
// derived from it. Objectives and exponents are rational functions of tau,
// so ties and identities can be decided exactly instead of at 1e-9.
using Rat = boost::rational<long long>;

inline double to_double(const Rat& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

// Parses a plain decimal literal ("2.5", "2.1") into an exact rational.
inline Rat parse_decimal(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("parse_decimal: empty string");
  std::size_t pos = 0;
  bool neg = false;
  if (s[pos] == '+' || s[pos] == '-') {
    neg = s[pos] == '-';
    ++pos;
  }
  long long num = 0;
  long long den = 1;
  bool seen_digit = false, seen_dot = false;
  for (; pos < s.size(); ++pos) {
    char ch = s[pos];
    if (ch == '.') {
      if (seen_dot) throw std::invalid_argument("parse_decimal: bad literal " + s);
      seen_dot = true;
    } else if (ch >= '0' && ch <= '9') {
      num = num * 10 + (ch - '0');
      if (seen_dot) den *= 10;
      seen_digit = true;
    } else {
      throw std::invalid_argument("parse_decimal: bad literal " + s);
    }
  }
  if (!seen_digit) throw std::invalid_argument("parse_decimal: bad literal " + s);
  return Rat(neg ? -num : num, den);
}

struct Tau {
  Rat value;

  Tau() : value(5, 2) {}
  explicit Tau(Rat v) : value(v) {
    if (!(value > Rat(2) && value < Rat(3)))
      throw std::invalid_argument("tau must lie in (2,3)");
  }
  explicit Tau(const std::string& s) : Tau(parse_decimal(s)) {}

  double as_double() const { return to_double(value); }
};

}  // namespace plrg
