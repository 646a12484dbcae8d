#pragma once

#include <utility>

#include "octolab/octonion.hpp"

namespace octolab {

/// Element of C (the commuting complexification unit), used for the
/// complex-valued quadratic form on bioctonions.
struct ComplexRat {
  Rat re = 0;
  Rat im = 0;

  bool operator==(const ComplexRat&) const = default;
  ComplexRat operator+(const ComplexRat& o) const { return {re + o.re, im + o.im}; }
  ComplexRat operator*(const ComplexRat& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  bool is_zero() const { return re == 0 && im == 0; }
};

/// Complexified octonion p + i q with i commuting with all of O.
struct BiOctonion {
  Octonion re;
  Octonion im;

  bool operator==(const BiOctonion&) const = default;
  bool is_zero() const { return re.is_zero() && im.is_zero(); }
};

inline BiOctonion bioct_multiply(const BiOctonion& a, const BiOctonion& b) {
  return {multiply(a.re, b.re) - multiply(a.im, b.im),
          multiply(a.re, b.im) + multiply(a.im, b.re)};
}

/// Complex quadratic form N(z) = sum_k (re_k + i im_k)^2; multiplicative.
inline ComplexRat bioct_quadratic_form(const BiOctonion& z) {
  ComplexRat n;
  for (std::size_t k = 0; k < 8; ++k) {
    ComplexRat c{z.re[k], z.im[k]};
    n = n + c * c;
  }
  return n;
}

/// A null zero-divisor pair: both factors nonzero, product zero, N = 0 on each.
inline std::pair<BiOctonion, BiOctonion> zero_divisor_witness() {
  const Octonion one = Octonion::one();
  const Octonion e1 = Octonion::basis(1);
  return {BiOctonion{one, e1}, BiOctonion{one, -e1}};
}

}  // namespace octolab
