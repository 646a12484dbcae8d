#pragma once

#include <stdexcept>
#include <vector>

#include "octolab/octonion.hpp"

namespace octolab {

/// Strictly triangular 3x3 matrix over the octonions. Upper orientation
/// stores entries (1,2) creator, (2,3) annihilator, (1,3) central; the
/// dagger of an upper element lives on the lower side, tracked by the flag.
struct HeisenbergElement {
  Octonion creator;      // entry (1,2), or (2,1) when lower
  Octonion annihilator;  // entry (2,3), or (3,2) when lower
  Octonion central;      // entry (1,3), or (3,1) when lower
  bool lower = false;

  bool operator==(const HeisenbergElement&) const = default;
  bool is_zero() const {
    return creator.is_zero() && annihilator.is_zero() && central.is_zero();
  }
  bool is_central_only() const { return creator.is_zero() && annihilator.is_zero(); }

  HeisenbergElement operator+(const HeisenbergElement& o) const {
    if (lower != o.lower) throw std::domain_error("orientation mismatch");
    return {creator + o.creator, annihilator + o.annihilator, central + o.central, lower};
  }
  HeisenbergElement operator-(const HeisenbergElement& o) const {
    if (lower != o.lower) throw std::domain_error("orientation mismatch");
    return {creator - o.creator, annihilator - o.annihilator, central - o.central, lower};
  }
};

/// Matrix product: the only surviving entry is the central one,
/// creator(m1) * annihilator(m2) in the upper orientation.
inline HeisenbergElement h_multiply(const HeisenbergElement& m1, const HeisenbergElement& m2) {
  if (m1.lower != m2.lower) throw std::domain_error("orientation mismatch");
  if (!m1.lower) return {Octonion(), Octonion(), multiply(m1.creator, m2.annihilator), false};
  // lower side: (3,1) entry of the product is (3,2)*(2,1)
  return {Octonion(), Octonion(), multiply(m1.annihilator, m2.creator), true};
}

inline HeisenbergElement h_bracket(const HeisenbergElement& m1, const HeisenbergElement& m2) {
  return h_multiply(m1, m2) - h_multiply(m2, m1);
}

/// Conjugate transpose with octonion conjugation; involutive, flips the side.
inline HeisenbergElement h_dagger(const HeisenbergElement& m) {
  return {conjugate(m.creator), conjugate(m.annihilator), conjugate(m.central), !m.lower};
}

struct NilpotencyReport {
  bool index3_nilpotent = true;      // every length-3 product vanishes, both orders
  bool squares_central_only = true;  // every length-2 product is central-only
  std::size_t triples_checked = 0;
};

/// Exhaustive index-3 nilpotency over basis-valued single-slot elements.
/// Multilinearity extends the result to arbitrary entries.
inline NilpotencyReport nilpotency_check() {
  std::vector<HeisenbergElement> atoms;
  for (int slot = 0; slot < 3; ++slot)
    for (std::size_t b = 0; b < 8; ++b) {
      HeisenbergElement m;
      (slot == 0 ? m.creator : slot == 1 ? m.annihilator : m.central) = Octonion::basis(b);
      atoms.push_back(m);
    }
  NilpotencyReport rep;
  for (const auto& x : atoms)
    for (const auto& y : atoms) {
      if (!h_multiply(x, y).is_central_only()) rep.squares_central_only = false;
      for (const auto& z : atoms) {
        const bool left = h_multiply(h_multiply(x, y), z).is_zero();
        const bool right = h_multiply(x, h_multiply(y, z)).is_zero();
        if (!left || !right) rep.index3_nilpotent = false;
        ++rep.triples_checked;
      }
    }
  return rep;
}

}  // namespace octolab
