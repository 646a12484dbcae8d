#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace octolab {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Rat rat(long long num, long long den = 1) { return Rat(num, den); }

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline Rat rat_abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

/// Exact square root of a rational, when it exists.
inline std::optional<Rat> rat_sqrt(const Rat& r) {
  if (r < 0) return std::nullopt;
  Int ns = boost::multiprecision::sqrt(rat_num(r));
  Int ds = boost::multiprecision::sqrt(rat_den(r));
  if (ns * ns != rat_num(r) || ds * ds != rat_den(r)) return std::nullopt;
  return Rat(ns, ds);
}

/// "p/q", or just "p" when the denominator is 1.
inline std::string rat_str(const Rat& r) {
  std::string s = rat_num(r).str();
  if (rat_den(r) != 1) s += "/" + rat_den(r).str();
  return s;
}

}  // namespace octolab
