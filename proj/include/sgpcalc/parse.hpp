#pragma once

#include <string>
#include <vector>

#include "errors.hpp"
#include "ideal.hpp"
#include "semigroup.hpp"

namespace sgp {

namespace detail {

// Shared list scanner for the two bracketed literal forms.  Spaces are
// allowed around tokens; offsets in errors are byte positions in `text`.
inline std::vector<Int> parse_int_list(const std::string& text, char open,
                                       char close) {
  std::size_t i = 0;
  const std::size_t n = text.size();
  auto skip_spaces = [&] {
    while (i < n && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  skip_spaces();
  if (i >= n || text[i] != open)
    throw ParseError(std::string("expected '") + open + "'", i);
  ++i;
  std::vector<Int> out;
  for (;;) {
    skip_spaces();
    const std::size_t start = i;
    bool neg = false;
    if (i < n && (text[i] == '-' || text[i] == '+')) {
      neg = (text[i] == '-');
      ++i;
    }
    if (i >= n || text[i] < '0' || text[i] > '9')
      throw ParseError("expected an integer", i);
    Int value = 0;
    while (i < n && text[i] >= '0' && text[i] <= '9') {
      if (value > (Int{1} << 56))
        throw ParseError("integer too large", start);
      value = value * 10 + (text[i] - '0');
      ++i;
    }
    out.push_back(neg ? -value : value);
    skip_spaces();
    if (i < n && text[i] == ',') {
      ++i;
      continue;
    }
    if (i < n && text[i] == close) {
      ++i;
      break;
    }
    throw ParseError(std::string("expected ',' or '") + close + "'", i);
  }
  skip_spaces();
  if (i != n) throw ParseError("trailing characters", i);
  return out;
}

}  // namespace detail

// "<a1,a2,...>" -> the numerical semigroup those generators span.
inline NumericalSemigroup parse_semigroup(const std::string& text,
                                          Int window_min = 0) {
  return NumericalSemigroup(detail::parse_int_list(text, '<', '>'), window_min);
}

// "(g1,g2,...)" -> the fractional ideal those generators span over s.
inline FractionalIdeal parse_ideal(const NumericalSemigroup& s,
                                   const std::string& text) {
  return FractionalIdeal::from_generators(s,
                                          detail::parse_int_list(text, '(', ')'));
}

inline std::string print_int_list(const std::vector<Int>& xs, char open,
                                  char close) {
  std::string out(1, open);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(xs[i]);
  }
  out += close;
  return out;
}

// Canonical literal via minimal generators; parsing it back yields an equal
// object.
inline std::string print_semigroup(const NumericalSemigroup& s) {
  return print_int_list(s.minimal_generators(), '<', '>');
}

inline std::string print_ideal(const FractionalIdeal& e) {
  return print_int_list(e.minimal_generators(), '(', ')');
}

}  // namespace sgp
