#pragma once

#include <array>
#include <stdexcept>
#include <vector>

#include "octolab/octonion.hpp"
#include "octolab/ratmat.hpp"

namespace octolab {

namespace detail {
inline void require_imaginary(const Octonion& x, const char* who) {
  if (!x.is_imaginary()) throw std::domain_error(std::string(who) + " requires imaginary arguments");
}
}  // namespace detail

/// Associative 3-form phi(x,y,z) = Re(x conj(yz)) on imaginary octonions.
inline Rat phi(const Octonion& x, const Octonion& y, const Octonion& z) {
  detail::require_imaginary(x, "phi");
  detail::require_imaginary(y, "phi");
  detail::require_imaginary(z, "phi");
  return inner(x, multiply(y, z));  // inner(a,b) = Re(a conj(b))
}

/// Coassociative 4-form psi(x,y,z,w) = (1/2) <x, y(conj(z)w) - w(conj(z)y)>.
inline Rat psi(const Octonion& x, const Octonion& y, const Octonion& z, const Octonion& w) {
  detail::require_imaginary(x, "psi");
  detail::require_imaginary(y, "psi");
  detail::require_imaginary(z, "psi");
  detail::require_imaginary(w, "psi");
  const Octonion t =
      multiply(y, multiply(conjugate(z), w)) - multiply(w, multiply(conjugate(z), y));
  return inner(x, t) / 2;
}

inline bool is_orthonormal(const std::vector<Octonion>& v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i; j < v.size(); ++j)
      if (inner(v[i], v[j]) != (i == j ? 1 : 0)) return false;
  return true;
}

/// True iff the orthonormal imaginary triple spans an associative 3-plane.
/// Cross-checked against |phi| = 1 by the verification suite.
inline bool is_associative_plane(const Octonion& x, const Octonion& y, const Octonion& z) {
  detail::require_imaginary(x, "is_associative_plane");
  detail::require_imaginary(y, "is_associative_plane");
  detail::require_imaginary(z, "is_associative_plane");
  if (!is_orthonormal({x, y, z}))
    throw std::domain_error("is_associative_plane requires an orthonormal triple");
  return associator(x, y, z).is_zero();
}

/// Subalgebra of O given by an orthonormal basis closed under multiplication.
struct Subalgebra {
  std::vector<Octonion> basis;  // contains 1 first
  std::size_t dim() const { return basis.size(); }

  bool multiplication_closed() const {
    RowSpan span(8);
    for (const auto& b : basis)
      span.insert({b.coeffs().begin(), b.coeffs().end()});
    for (const auto& a : basis)
      for (const auto& b : basis) {
        const Octonion p = multiply(a, b);
        if (!span.contains({p.coeffs().begin(), p.coeffs().end()})) return false;
      }
    return true;
  }

  bool associator_free() const {
    for (const auto& a : basis)
      for (const auto& b : basis)
        for (const auto& c : basis)
          if (!associator(a, b, c).is_zero()) return false;
    return true;
  }
};

/// Quaternionic subalgebra {1, a, b, ab} generated by orthonormal imaginary
/// a, b with ab also orthogonal to 1.
inline Subalgebra quaternion_hull(const Octonion& a, const Octonion& b) {
  detail::require_imaginary(a, "quaternion_hull");
  detail::require_imaginary(b, "quaternion_hull");
  if (norm(a) != 1 || norm(b) != 1 || inner(a, b) != 0)
    throw std::invalid_argument("quaternion_hull requires orthonormal generators");
  const Octonion ab = multiply(a, b);
  if (inner(ab, Octonion::one()) != 0)
    throw std::invalid_argument("quaternion_hull generators are degenerate");
  return Subalgebra{{Octonion::one(), a, b, ab}};
}

/// Orthonormal basis of the orthogonal complement of a dim-4 subalgebra
/// within O: 4 imaginary directions, found among the standard basis for
/// basis-aligned hulls and by exact elimination otherwise.
inline std::vector<Octonion> coassociative_complement(const Subalgebra& s) {
  if (s.dim() != 4) throw std::domain_error("coassociative_complement requires a dim-4 subalgebra");
  // rows: <x, b_i> = 0
  std::vector<std::vector<Rat>> rows;
  for (const auto& b : s.basis) rows.emplace_back(b.coeffs().begin(), b.coeffs().end());
  auto ns = nullspace(std::move(rows));
  if (ns.size() != 4) throw std::domain_error("complement is not 4-dimensional");
  // Gram-Schmidt stays rational only when the square norms are rational squares;
  // for basis-aligned hulls the nullspace vectors are already signed basis vectors.
  std::vector<Octonion> out;
  for (auto& v : ns) {
    std::array<Rat, 8> c;
    std::copy(v.begin(), v.end(), c.begin());
    Octonion o{c};
    const auto n = norm(o);
    if (n != 1) {
      const auto r = rat_sqrt(n);
      if (!r) throw std::domain_error("complement basis is not rational-orthonormalizable");
      o = o * (1 / *r);
    }
    out.push_back(std::move(o));
  }
  if (!is_orthonormal(out))
    throw std::domain_error("complement basis is not orthonormal");
  return out;
}

struct HodgeDualReport {
  bool exact_agreement = true;
  // quadruples (i<j<k<l) where psi differs from *phi, with both values
  std::vector<std::array<int, 4>> mismatches;
  int phi_support = 0;
  int psi_support = 0;
};

namespace detail {
inline int perm_sign(const std::vector<int>& p) {
  int s = 1;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) s = -s;
  return s;
}
}  // namespace detail

/// Component-wise comparison of psi with the Hodge dual of phi on Im(O),
/// orientation e1^...^e7 = +1.
inline HodgeDualReport hodge_dual_check() {
  HodgeDualReport rep;
  auto e = [](int i) { return Octonion::basis(static_cast<std::size_t>(i)); };
  for (int i = 1; i <= 7; ++i)
    for (int j = i + 1; j <= 7; ++j)
      for (int k = j + 1; k <= 7; ++k)
        if (phi(e(i), e(j), e(k)) != 0) ++rep.phi_support;
  for (int i = 1; i <= 7; ++i)
    for (int j = i + 1; j <= 7; ++j)
      for (int k = j + 1; k <= 7; ++k)
        for (int l = k + 1; l <= 7; ++l) {
          const Rat ps = psi(e(i), e(j), e(k), e(l));
          if (ps != 0) ++rep.psi_support;
          // complement triple and epsilon sign
          std::vector<int> perm{i, j, k, l};
          for (int m = 1; m <= 7; ++m)
            if (m != i && m != j && m != k && m != l) perm.push_back(m);
          const Rat dual = detail::perm_sign(perm) * phi(e(perm[4]), e(perm[5]), e(perm[6]));
          if (ps != dual) {
            rep.exact_agreement = false;
            rep.mismatches.push_back({i, j, k, l});
          }
        }
  return rep;
}

}  // namespace octolab
