#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include "octolab/octonion.hpp"

namespace octolab {

/// Malformed octonion literal; carries the offending position.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t pos)
      : std::runtime_error(what + " at position " + std::to_string(pos)), pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

/// Parses the canonical literal grammar `term(±term)*`,
/// term = rational [e1..e7] with either part optional but not both,
/// e.g. "1", "e4", "3/5+4/5e4", "-e1+2e3".
inline Octonion parse_octonion(const std::string& s) {
  Octonion out;
  std::size_t i = 0;
  const std::size_t n = s.size();
  if (n == 0) throw ParseError("empty literal", 0);
  bool first = true;
  while (i < n) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      if (s[i] == '-') sign = -1;
      ++i;
      if (i >= n) throw ParseError("dangling sign", i);
    } else if (!first) {
      throw ParseError("expected '+' or '-'", i);
    }
    first = false;

    auto read_uint = [&](const char* what) -> Int {
      std::size_t start = i;
      while (i < n && s[i] >= '0' && s[i] <= '9') ++i;
      if (i == start) throw ParseError(std::string("expected ") + what, start);
      return Int(s.substr(start, i - start));
    };

    bool have_coeff = i < n && s[i] >= '0' && s[i] <= '9';
    Rat coeff = 1;
    if (have_coeff) {
      Int num = read_uint("digit");
      Int den = 1;
      if (i < n && s[i] == '/') {
        ++i;
        den = read_uint("denominator");
        if (den == 0) throw ParseError("zero denominator", i);
      }
      coeff = Rat(num, den);
    }

    std::size_t idx = 0;
    if (i < n && s[i] == 'e') {
      std::size_t epos = i;
      ++i;
      if (i >= n || s[i] < '1' || s[i] > '7') throw ParseError("basis index must be 1..7", epos + 1);
      idx = static_cast<std::size_t>(s[i] - '0');
      ++i;
      // reject "e12"
      if (i < n && s[i] >= '0' && s[i] <= '9') throw ParseError("basis index must be 1..7", i);
    } else if (!have_coeff) {
      throw ParseError("expected term", i);
    }

    out[idx] += sign > 0 ? coeff : Rat(-coeff);
  }
  return out;
}

/// Canonical whitespace-free form; exact round-trip with parse_octonion.
inline std::string format_octonion(const Octonion& o) {
  std::string out;
  for (std::size_t i = 0; i < 8; ++i) {
    const Rat& c = o[i];
    if (c == 0) continue;
    const Rat a = rat_abs(c);
    if (c < 0)
      out += '-';
    else if (!out.empty())
      out += '+';
    if (i == 0) {
      out += rat_str(a);
    } else {
      if (a != 1) out += rat_str(a);
      out += 'e';
      out += static_cast<char>('0' + static_cast<int>(i));
    }
  }
  if (out.empty()) out = "0";
  return out;
}

}  // namespace octolab
