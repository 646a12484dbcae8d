#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>

#include "octolab/rational.hpp"

namespace octolab {

/// Octonion over exact rationals in the basis {1, e1, ..., e7}.
///
/// The multiplication table is the cyclic quadratic-residue convention:
/// e_i e_j = e_k for (i,j,k) an even cyclic ordering of one of
/// (1,2,4),(2,3,5),(3,4,6),(4,5,7),(5,6,1),(6,7,2),(7,1,3).
class Octonion {
 public:
  Octonion() { coeffs_.fill(Rat(0)); }
  explicit Octonion(std::array<Rat, 8> c) : coeffs_(std::move(c)) {}

  static Octonion zero() { return Octonion(); }
  static Octonion one() { return basis(0); }

  /// basis(0) = 1, basis(i) = e_i for 1 <= i <= 7.
  static Octonion basis(std::size_t i) {
    if (i > 7) throw std::domain_error("octonion basis index out of range");
    Octonion o;
    o.coeffs_[i] = 1;
    return o;
  }

  const Rat& operator[](std::size_t i) const { return coeffs_[i]; }
  Rat& operator[](std::size_t i) { return coeffs_[i]; }
  const std::array<Rat, 8>& coeffs() const { return coeffs_; }

  bool operator==(const Octonion& o) const = default;

  bool is_zero() const {
    for (const auto& c : coeffs_)
      if (c != 0) return false;
    return true;
  }
  bool is_real() const {
    for (std::size_t i = 1; i < 8; ++i)
      if (coeffs_[i] != 0) return false;
    return true;
  }
  bool is_imaginary() const { return coeffs_[0] == 0; }

  Octonion operator+(const Octonion& o) const {
    Octonion r;
    for (std::size_t i = 0; i < 8; ++i) r.coeffs_[i] = coeffs_[i] + o.coeffs_[i];
    return r;
  }
  Octonion operator-(const Octonion& o) const {
    Octonion r;
    for (std::size_t i = 0; i < 8; ++i) r.coeffs_[i] = coeffs_[i] - o.coeffs_[i];
    return r;
  }
  Octonion operator-() const {
    Octonion r;
    for (std::size_t i = 0; i < 8; ++i) r.coeffs_[i] = -coeffs_[i];
    return r;
  }
  Octonion operator*(const Rat& s) const {
    Octonion r;
    for (std::size_t i = 0; i < 8; ++i) r.coeffs_[i] = coeffs_[i] * s;
    return r;
  }

  Octonion real_part() const {
    Octonion r;
    r.coeffs_[0] = coeffs_[0];
    return r;
  }
  Octonion imag_part() const {
    Octonion r = *this;
    r.coeffs_[0] = 0;
    return r;
  }

 private:
  std::array<Rat, 8> coeffs_;
};

namespace detail {

struct ProductTable {
  // sign[i][j], index[i][j] describe e_i * e_j = sign * e_index for i,j in 1..7, i != j.
  int sign[8][8] = {};
  int index[8][8] = {};

  ProductTable() {
    constexpr int triples[7][3] = {{1, 2, 4}, {2, 3, 5}, {3, 4, 6}, {4, 5, 7},
                                   {5, 6, 1}, {6, 7, 2}, {7, 1, 3}};
    for (const auto& t : triples) {
      const int a = t[0], b = t[1], c = t[2];
      const int cyc[3][3] = {{a, b, c}, {b, c, a}, {c, a, b}};
      for (const auto& p : cyc) {
        sign[p[0]][p[1]] = 1;
        index[p[0]][p[1]] = p[2];
        sign[p[1]][p[0]] = -1;
        index[p[1]][p[0]] = p[2];
      }
    }
  }
};

inline const ProductTable& product_table() {
  static const ProductTable t;
  return t;
}

}  // namespace detail

inline Octonion multiply(const Octonion& a, const Octonion& b) {
  const auto& t = detail::product_table();
  Octonion r;
  for (std::size_t i = 0; i < 8; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < 8; ++j) {
      if (b[j] == 0) continue;
      const Rat v = a[i] * b[j];
      if (i == 0)
        r[j] += v;
      else if (j == 0)
        r[i] += v;
      else if (i == j)
        r[0] -= v;
      else
        r[t.index[i][j]] += t.sign[i][j] > 0 ? v : -v;
    }
  }
  return r;
}

inline Octonion operator*(const Octonion& a, const Octonion& b) { return multiply(a, b); }

inline Octonion conjugate(const Octonion& a) {
  Octonion r = -a;
  r[0] = a[0];
  return r;
}

/// Re(a conj(b)); the standard euclidean inner product in the e-basis.
inline Rat inner(const Octonion& a, const Octonion& b) {
  Rat s = 0;
  for (std::size_t i = 0; i < 8; ++i) s += a[i] * b[i];
  return s;
}

inline Rat norm(const Octonion& a) { return inner(a, a); }

inline Octonion commutator(const Octonion& x, const Octonion& y) {
  return multiply(x, y) - multiply(y, x);
}

inline Octonion associator(const Octonion& x, const Octonion& y, const Octonion& z) {
  return multiply(multiply(x, y), z) - multiply(x, multiply(y, z));
}

}  // namespace octolab
