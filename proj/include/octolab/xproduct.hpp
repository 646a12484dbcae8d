#pragma once

#include <array>
#include <stdexcept>
#include <vector>

#include "octolab/octonion.hpp"
#include "octolab/ratmat.hpp"

namespace octolab {

/// Exactly-rational point of the unit 7-sphere.
class UnitPoint {
 public:
  explicit UnitPoint(Octonion v) : value_(std::move(v)) {
    if (norm(value_) != 1) throw std::invalid_argument("UnitPoint requires norm exactly 1");
  }
  const Octonion& value() const { return value_; }

 private:
  Octonion value_;
};

/// Deformed product a o_X b = (aX)(conj(X) b); the ordinary product at X = 1.
inline Octonion x_product(const Octonion& a, const Octonion& b, const UnitPoint& X) {
  return multiply(multiply(a, X.value()), multiply(conjugate(X.value()), b));
}

/// Two-point product a o_{X,Y} b = (aX)(conj(Y) b); collapses to the
/// X-product at Y = X. The exact two-point convention is a declared
/// stand-in (see the verifier's XY-product checks).
inline Octonion xy_product(const Octonion& a, const Octonion& b, const UnitPoint& X,
                           const UnitPoint& Y) {
  return multiply(multiply(a, X.value()), multiply(conjugate(Y.value()), b));
}

inline Octonion x_commutator(const Octonion& a, const Octonion& b, const UnitPoint& X) {
  return x_product(a, b, X) - x_product(b, a, X);
}

/// Point-dependent torsion structure constants T_ijk(X), i,j,k in 1..7,
/// defined by [e_i, e_j]_X = 2 T_ijk(X) e_k in the X-product algebra.
/// The imaginary units of every X-product copy span the same Im(O), so the
/// bracket decomposes exactly in the e-basis.
struct TorsionTensor {
  Octonion base;
  // t[i][j][k] with 1-based indices; slot 0 unused.
  std::array<std::array<std::array<Rat, 8>, 8>, 8> t{};

  const Rat& operator()(int i, int j, int k) const { return t[i][j][k]; }
  bool operator==(const TorsionTensor& o) const { return base == o.base && t == o.t; }

  bool is_totally_antisymmetric() const {
    for (int i = 1; i <= 7; ++i)
      for (int j = 1; j <= 7; ++j)
        for (int k = 1; k <= 7; ++k) {
          if (t[i][j][k] != -t[j][i][k]) return false;
          if (t[i][j][k] != -t[i][k][j]) return false;
        }
    return true;
  }
};

inline TorsionTensor torsion_tensor(const UnitPoint& X) {
  TorsionTensor out;
  out.base = X.value();
  for (int i = 1; i <= 7; ++i) {
    for (int j = i + 1; j <= 7; ++j) {
      const Octonion br = x_commutator(Octonion::basis(i), Octonion::basis(j), X);
      if (br[0] != 0)
        throw std::logic_error("torsion bracket left the imaginary subspace");
      for (int k = 1; k <= 7; ++k) {
        out.t[i][j][k] = br[k] / 2;
        out.t[j][i][k] = -out.t[i][j][k];
      }
    }
  }
  return out;
}

/// Cyclic Jacobi sum [[e_i,e_j]_X, e_k]_X + [[e_j,e_k]_X, e_i]_X + [[e_k,e_i]_X, e_j]_X.
inline Octonion jacobi_defect(int i, int j, int k, const UnitPoint& X) {
  if (i < 1 || i > 7 || j < 1 || j > 7 || k < 1 || k > 7)
    throw std::domain_error("jacobi_defect indices must be 1..7");
  const int idx[3][3] = {{i, j, k}, {j, k, i}, {k, i, j}};
  Octonion s;
  for (const auto& p : idx) {
    s = s + x_commutator(x_commutator(Octonion::basis(p[0]), Octonion::basis(p[1]), X),
                         Octonion::basis(p[2]), X);
  }
  return s;
}

/// Two lightcone segments appended to a common start point.
struct PathPair {
  Octonion start;
  Octonion seg_a;
  Octonion seg_b;
};

/// Norm of the associator (start, seg_a, seg_b): the exact gap between the
/// two association orders of the composed path. Zero iff the endpoint is
/// well defined.
inline Rat path_discrepancy(const PathPair& p) {
  return norm(associator(p.start, p.seg_a, p.seg_b));
}

/// Catalog of exactly-rational points of S^7 used by the torsion checks.
inline std::vector<UnitPoint> unit_point_catalog() {
  auto mk = [](std::initializer_list<std::pair<int, Rat>> terms) {
    Octonion o;
    for (const auto& [i, c] : terms) o[static_cast<std::size_t>(i)] = c;
    return UnitPoint(o);
  };
  return {
      mk({{0, 1}}),
      mk({{1, 1}}),
      mk({{4, 1}}),
      mk({{0, rat(3, 5)}, {2, rat(4, 5)}}),
      mk({{1, rat(3, 5)}, {7, rat(4, 5)}}),
      mk({{0, rat(1, 3)}, {1, rat(2, 3)}, {2, rat(2, 3)}}),
      mk({{1, rat(2, 7)}, {3, rat(3, 7)}, {5, rat(6, 7)}}),
      mk({{0, rat(1, 9)}, {4, rat(4, 9)}, {7, rat(8, 9)}}),
      mk({{2, rat(12, 25)}, {5, rat(15, 25)}, {6, rat(16, 25)}}),
      mk({{0, rat(1, 2)}, {1, rat(1, 2)}, {2, rat(1, 2)}, {3, rat(1, 2)}}),
      mk({{3, rat(1, 2)}, {5, rat(1, 2)}, {6, rat(1, 2)}, {7, rat(1, 2)}}),
      mk({{0, rat(3, 13)}, {3, rat(4, 13)}, {6, rat(12, 13)}}),
  };
}

}  // namespace octolab
