#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "octolab/octonion.hpp"
#include "octolab/ratmat.hpp"

namespace octolab {

/// Linearly independent set of n x n rational matrices, optionally closed
/// under commutator. Member order is the insertion sequence of the closure.
class LieBasis {
 public:
  LieBasis(std::size_t n, std::vector<RatMatrix> members, bool closed)
      : n_(n), members_(std::move(members)), closed_(closed), span_(n * n) {
    for (const auto& m : members_) {
      if (m.rows() != n_ || m.cols() != n_) throw std::domain_error("LieBasis dimension mismatch");
      if (!span_.insert(m.flatten())) throw std::domain_error("LieBasis members must be independent");
    }
  }

  std::size_t matrix_dim() const { return n_; }
  std::size_t dimension() const { return members_.size(); }
  bool closed() const { return closed_; }
  const std::vector<RatMatrix>& members() const { return members_; }

  bool contains(const RatMatrix& m) const { return span_.contains(m.flatten()); }

  bool contains_all(const LieBasis& other) const {
    for (const auto& m : other.members())
      if (!contains(m)) return false;
    return true;
  }

  /// Exact coordinates of m in this basis, or nullopt if m is outside the span.
  std::optional<std::vector<Rat>> coordinates(const RatMatrix& m) const {
    std::vector<std::vector<Rat>> cols;
    cols.reserve(members_.size());
    for (const auto& b : members_) cols.push_back(b.flatten());
    return solve_columns(cols, m.flatten());
  }

  RatMatrix combine(const std::vector<Rat>& coords) const {
    if (coords.size() != members_.size()) throw std::domain_error("coordinate length mismatch");
    RatMatrix m(n_, n_);
    for (std::size_t t = 0; t < coords.size(); ++t)
      if (coords[t] != 0) m = m + members_[t] * coords[t];
    return m;
  }

  /// Verifies bracket closure by exact span membership of all pairs.
  bool verify_closed() const {
    for (std::size_t i = 0; i < members_.size(); ++i)
      for (std::size_t j = i + 1; j < members_.size(); ++j)
        if (!contains(bracket(members_[i], members_[j]))) return false;
    return true;
  }

  /// FNV-1a hash of the canonical reduced-row-echelon form of the span.
  std::uint64_t fingerprint() const {
    std::uint64_t h = 1469598103934665603ull;
    auto feed = [&](const std::string& s) {
      for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
      }
    };
    for (const auto& row : span_.rows())
      for (const auto& v : row) feed(rat_str(v) + ";");
    return h;
  }

 private:
  std::size_t n_;
  std::vector<RatMatrix> members_;
  bool closed_;
  RowSpan span_;
};

/// Smallest bracket-closed rational span containing the generators.
/// Deterministic: generators in order, then brackets in generation order.
inline LieBasis lie_closure(const std::vector<RatMatrix>& gens, int max_generations = 10) {
  if (gens.empty()) throw std::domain_error("lie_closure needs at least one generator");
  const std::size_t n = gens[0].rows();
  for (const auto& g : gens)
    if (g.rows() != n || g.cols() != n) throw std::domain_error("generator dimension mismatch");

  RowSpan span(n * n);
  std::vector<RatMatrix> members;
  for (const auto& g : gens)
    if (span.insert(g.flatten())) members.push_back(g);

  std::size_t frontier_begin = 0;
  for (int gen = 0; gen < max_generations; ++gen) {
    const std::size_t old_size = members.size();
    for (std::size_t i = 0; i < old_size; ++i) {
      const std::size_t j0 = (i >= frontier_begin) ? i + 1 : frontier_begin;
      for (std::size_t j = j0; j < old_size; ++j) {
        RatMatrix br = bracket(members[i], members[j]);
        if (span.insert(br.flatten())) members.push_back(std::move(br));
      }
    }
    if (members.size() == old_size) return LieBasis(n, std::move(members), true);
    frontier_begin = old_size;
  }
  throw std::runtime_error("lie_closure did not stabilize within the generation cap");
}

/// 8x8 matrix of x -> a*x in the standard octonion basis.
inline RatMatrix left_mult_matrix(const Octonion& a) {
  RatMatrix m(8, 8);
  for (std::size_t j = 0; j < 8; ++j) {
    const Octonion col = multiply(a, Octonion::basis(j));
    for (std::size_t i = 0; i < 8; ++i) m(i, j) = col[i];
  }
  return m;
}

inline std::vector<RatMatrix> left_mult_generators() {
  std::vector<RatMatrix> g;
  for (int i = 1; i <= 7; ++i) g.push_back(left_mult_matrix(Octonion::basis(i)));
  return g;
}

/// Derivations of O: null space of D(e_i e_j) = D(e_i) e_j + e_i D(e_j)
/// over all 64 basis pairs, unknowns the 64 entries of D.
inline LieBasis derivation_algebra() {
  std::vector<std::vector<Rat>> rows;
  rows.reserve(512);
  for (std::size_t i = 0; i < 8; ++i) {
    for (std::size_t j = 0; j < 8; ++j) {
      const Octonion pij = multiply(Octonion::basis(i), Octonion::basis(j));
      for (std::size_t m = 0; m < 8; ++m) {
        std::vector<Rat> row(64, Rat(0));
        for (std::size_t b = 0; b < 8; ++b) row[m * 8 + b] += pij[b];
        for (std::size_t a = 0; a < 8; ++a) {
          row[a * 8 + i] -= multiply(Octonion::basis(a), Octonion::basis(j))[m];
          row[a * 8 + j] -= multiply(Octonion::basis(i), Octonion::basis(a))[m];
        }
        rows.push_back(std::move(row));
      }
    }
  }
  std::vector<RatMatrix> members;
  for (const auto& v : nullspace(std::move(rows)))
    members.push_back(RatMatrix::from_flat(8, 8, v));
  return LieBasis(8, std::move(members), true);
}

/// {a in span(ambient) : a v = 0}, closed under bracket for ambient closed.
inline LieBasis stabilizer_subalgebra(const LieBasis& ambient, const Octonion& v) {
  const std::size_t n = ambient.matrix_dim();
  std::vector<Rat> vec(v.coeffs().begin(), v.coeffs().end());
  // equations over coordinates x_t: sum_t x_t (members[t] v) = 0
  std::vector<std::vector<Rat>> rows(n, std::vector<Rat>(ambient.dimension(), Rat(0)));
  for (std::size_t t = 0; t < ambient.dimension(); ++t) {
    const auto mv = ambient.members()[t].apply(vec);
    for (std::size_t i = 0; i < n; ++i) rows[i][t] = mv[i];
  }
  std::vector<RatMatrix> members;
  for (const auto& c : nullspace(std::move(rows))) members.push_back(ambient.combine(c));
  return LieBasis(n, std::move(members), true);
}

struct TrialityTriple {
  RatMatrix a;
  RatMatrix a_prime;
  RatMatrix a_dblprime;
};

namespace detail {

inline const std::vector<std::pair<int, int>>& antisym_pairs() {
  static const auto pairs = [] {
    std::vector<std::pair<int, int>> p;
    for (int a = 0; a < 8; ++a)
      for (int b = a + 1; b < 8; ++b) p.emplace_back(a, b);
    return p;
  }();
  return pairs;
}

inline RatMatrix antisym_from_coords(const std::vector<Rat>& c, std::size_t offset) {
  RatMatrix m(8, 8);
  const auto& pairs = antisym_pairs();
  for (std::size_t t = 0; t < pairs.size(); ++t) {
    m(pairs[t].first, pairs[t].second) += c[offset + t];
    m(pairs[t].second, pairs[t].first) -= c[offset + t];
  }
  return m;
}

/// Coefficient rows of the triality system a(xy) = a'(x)y + x a''(y),
/// unknowns the 28+28 antisymmetric coordinates of (a', a'').
/// 512 equations: one per (basis x, basis y, component).
inline const std::vector<std::vector<Rat>>& triality_system() {
  static const auto rows = [] {
    std::vector<std::vector<Rat>> r;
    r.reserve(512);
    const auto& pairs = antisym_pairs();
    for (int i = 0; i < 8; ++i) {
      for (int j = 0; j < 8; ++j) {
        for (int m = 0; m < 8; ++m) {
          std::vector<Rat> row(56, Rat(0));
          for (std::size_t t = 0; t < pairs.size(); ++t) {
            const int p = pairs[t].first, q = pairs[t].second;
            Rat v = 0;
            if (i == q) v += multiply(Octonion::basis(p), Octonion::basis(j))[m];
            if (i == p) v -= multiply(Octonion::basis(q), Octonion::basis(j))[m];
            row[t] = v;
            Rat w = 0;
            if (j == q) w += multiply(Octonion::basis(i), Octonion::basis(p))[m];
            if (j == p) w -= multiply(Octonion::basis(i), Octonion::basis(q))[m];
            row[28 + t] = w;
          }
          r.push_back(std::move(row));
        }
      }
    }
    return r;
  }();
  return rows;
}

inline std::vector<Rat> triality_rhs(const RatMatrix& a) {
  std::vector<Rat> rhs;
  rhs.reserve(512);
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) {
      const Octonion xy = multiply(Octonion::basis(i), Octonion::basis(j));
      const auto v = a.apply({xy.coeffs().begin(), xy.coeffs().end()});
      rhs.insert(rhs.end(), v.begin(), v.end());
    }
  return rhs;
}

}  // namespace detail

/// Signals that the companion pair of the infinitesimal triality relation
/// does not exist or is not unique; must not occur for so(8) members.
class TrialityViolation : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Solves a(xy) = a'(x)y + x a''(y) for the unique antisymmetric pair (a', a'').
inline TrialityTriple triality_decompose(const RatMatrix& a) {
  if (a.rows() != 8 || a.cols() != 8 || !a.is_antisymmetric())
    throw std::domain_error("triality_decompose requires an antisymmetric 8x8 matrix");
  std::vector<std::vector<Rat>> cols(56, std::vector<Rat>(512));
  const auto& sys = detail::triality_system();
  for (std::size_t r = 0; r < 512; ++r)
    for (std::size_t c = 0; c < 56; ++c) cols[c][r] = sys[r][c];
  const auto sol = solve_columns(cols, detail::triality_rhs(a));
  if (!sol) throw TrialityViolation("triality system has no unique solution");
  return {a, detail::antisym_from_coords(*sol, 0), detail::antisym_from_coords(*sol, 28)};
}

/// Batch decomposition of a whole basis with a single elimination pass
/// (the coefficient matrix is shared; only the right-hand sides differ).
inline std::vector<TrialityTriple> triality_decompose_all(const std::vector<RatMatrix>& as) {
  const std::size_t k = as.size();
  std::vector<std::vector<Rat>> aug(512, std::vector<Rat>(56 + k, Rat(0)));
  const auto& sys = detail::triality_system();
  for (std::size_t r = 0; r < 512; ++r)
    for (std::size_t c = 0; c < 56; ++c) aug[r][c] = sys[r][c];
  for (std::size_t t = 0; t < k; ++t) {
    if (!as[t].is_antisymmetric())
      throw std::domain_error("triality_decompose requires antisymmetric matrices");
    const auto rhs = detail::triality_rhs(as[t]);
    for (std::size_t r = 0; r < 512; ++r) aug[r][56 + t] = rhs[r];
  }
  const auto pivots = rref_in_place(aug);
  std::size_t sys_rank = 0;
  for (auto c : pivots) {
    if (c < 56)
      ++sys_rank;
    else
      throw TrialityViolation("triality system inconsistent for an input matrix");
  }
  if (sys_rank != 56) throw TrialityViolation("triality solution not unique");
  std::vector<TrialityTriple> out;
  out.reserve(k);
  for (std::size_t t = 0; t < k; ++t) {
    std::vector<Rat> x(56, Rat(0));
    for (std::size_t ri = 0; ri < pivots.size(); ++ri) x[pivots[ri]] = aug[ri][56 + t];
    out.push_back({as[t], detail::antisym_from_coords(x, 0), detail::antisym_from_coords(x, 28)});
  }
  return out;
}

inline bool triality_identity_holds(const TrialityTriple& t) {
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) {
      const Octonion x = Octonion::basis(i), y = Octonion::basis(j);
      const Octonion xy = multiply(x, y);
      auto vec = [](const std::vector<Rat>& v) {
        std::array<Rat, 8> a;
        std::copy(v.begin(), v.end(), a.begin());
        return Octonion(a);
      };
      const Octonion lhs = vec(t.a.apply({xy.coeffs().begin(), xy.coeffs().end()}));
      const Octonion r1 =
          multiply(vec(t.a_prime.apply({x.coeffs().begin(), x.coeffs().end()})), y);
      const Octonion r2 =
          multiply(x, vec(t.a_dblprime.apply({y.coeffs().begin(), y.coeffs().end()})));
      if (lhs != r1 + r2) return false;
    }
  return true;
}

struct TrialityProbeResult {
  bool theta_bijective = false;
  bool theta_cubed_identity = false;
  std::size_t theta_rank = 0;
  // Max-norm style witness: number of basis members where theta^3 differs.
  std::size_t theta_cubed_deviations = 0;
};

/// Iterates theta: a -> a' three times over a closed basis and reports
/// whether theta^3 is the identity in this normalization. Reported, not asserted.
inline TrialityProbeResult triality_order_probe(const LieBasis& closure) {
  const auto triples = triality_decompose_all(closure.members());
  // theta as a matrix on closure coordinates
  const std::size_t d = closure.dimension();
  std::vector<std::vector<Rat>> theta_cols(d);
  for (std::size_t t = 0; t < d; ++t) {
    const auto c = closure.coordinates(triples[t].a_prime);
    if (!c) throw TrialityViolation("theta image left the closure span");
    theta_cols[t] = *c;
  }
  TrialityProbeResult res;
  {
    std::vector<std::vector<Rat>> rows(d, std::vector<Rat>(d));
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t t = 0; t < d; ++t) rows[i][t] = theta_cols[t][i];
    res.theta_rank = rank(rows);
    res.theta_bijective = res.theta_rank == d;
  }
  auto apply_theta = [&](const std::vector<Rat>& coords) {
    std::vector<Rat> out(d, Rat(0));
    for (std::size_t t = 0; t < d; ++t)
      if (coords[t] != 0)
        for (std::size_t i = 0; i < d; ++i) out[i] += coords[t] * theta_cols[t][i];
    return out;
  };
  res.theta_cubed_identity = true;
  for (std::size_t t = 0; t < d; ++t) {
    std::vector<Rat> c(d, Rat(0));
    c[t] = 1;
    const auto c3 = apply_theta(apply_theta(apply_theta(c)));
    bool same = true;
    for (std::size_t i = 0; i < d; ++i)
      if (c3[i] != (i == t ? Rat(1) : Rat(0))) same = false;
    if (!same) {
      res.theta_cubed_identity = false;
      ++res.theta_cubed_deviations;
    }
  }
  return res;
}

}  // namespace octolab
