#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "octolab/octonion.hpp"

namespace octolab {

enum class Helicity { Weyl, Dirac };

struct FermionLabel {
  int basis_index;
  std::string name;
  Helicity helicity_class;
};

/// Basis-element-to-fermion assignment of the first generation.
inline FermionLabel fermion_label(int index) {
  switch (index) {
    case 0: return {0, "e-neutrino", Helicity::Weyl};
    case 1: return {1, "red up quark", Helicity::Dirac};
    case 2: return {2, "green up quark", Helicity::Dirac};
    case 3: return {3, "red down quark", Helicity::Dirac};
    case 4: return {4, "electron", Helicity::Dirac};
    case 5: return {5, "green down quark", Helicity::Dirac};
    case 6: return {6, "blue up quark", Helicity::Dirac};
    case 7: return {7, "blue down quark", Helicity::Dirac};
    default: throw std::domain_error("fermion index must be 0..7");
  }
}

/// Split of a unit octonion into neutrino-line amplitude and charged-sphere part.
/// r is kept as r^2 (always rational); the unit direction is present only
/// when r itself is rational, which covers the whole shipped unit catalog.
struct AmplitudeSplit {
  Rat nu_amplitude;               // |c0|
  Rat r_squared;                  // 1 - c0^2
  std::optional<Octonion> direction;  // imaginary part / r, when defined
};

inline AmplitudeSplit split_amplitude(const Octonion& o) {
  if (norm(o) != 1) throw std::invalid_argument("split_amplitude requires a unit octonion");
  AmplitudeSplit s;
  s.nu_amplitude = rat_abs(o[0]);
  s.r_squared = 1 - o[0] * o[0];
  if (s.r_squared != 0) {
    if (auto r = rat_sqrt(s.r_squared)) s.direction = o.imag_part() * (1 / *r);
  }
  return s;
}

}  // namespace octolab
