#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "octolab/rational.hpp"

namespace octolab {

/// Rational 4-vector in quaternion coordinates {1, i, j, k}.
using RootVec = std::array<Rat, 4>;

inline Rat dot(const RootVec& a, const RootVec& b) {
  Rat s = 0;
  for (int i = 0; i < 4; ++i) s += a[i] * b[i];
  return s;
}
inline RootVec rv_sub(const RootVec& a, const RootVec& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]};
}
inline RootVec rv_scale(const Rat& c, const RootVec& a) {
  return {c * a[0], c * a[1], c * a[2], c * a[3]};
}
inline RootVec rv_neg(const RootVec& a) { return {-a[0], -a[1], -a[2], -a[3]}; }

struct RootSet {
  std::vector<RootVec> vectors;

  bool contains(const RootVec& v) const {
    return std::find(vectors.begin(), vectors.end(), v) != vectors.end();
  }
};

/// The 24 Hurwitz units {+-1, +-i, +-j, +-k, (+-1 +-i +-j +-k)/2}.
inline RootSet d4_roots() {
  RootSet rs;
  for (int axis = 0; axis < 4; ++axis)
    for (int s : {1, -1}) {
      RootVec v{};
      v[axis] = s;
      rs.vectors.push_back(v);
    }
  for (int s0 : {1, -1})
    for (int s1 : {1, -1})
      for (int s2 : {1, -1})
        for (int s3 : {1, -1})
          rs.vectors.push_back({rat(s0, 2), rat(s1, 2), rat(s2, 2), rat(s3, 2)});
  return rs;
}

struct RootAxiomReport {
  bool nonzero = true;
  bool negation_closed = true;
  bool reflection_closed = true;
  bool integrality = true;
  std::optional<std::pair<RootVec, RootVec>> witness;  // first failing pair
  bool pass() const { return nonzero && negation_closed && reflection_closed && integrality; }
};

/// Reflection closure s_a(b) = b - 2<b,a>/<a,a> a and Cartan integrality.
inline RootAxiomReport root_axiom_check(const RootSet& rs) {
  if (rs.vectors.empty()) throw std::domain_error("root_axiom_check requires a nonempty set");
  RootAxiomReport rep;
  for (const auto& v : rs.vectors) {
    if (dot(v, v) == 0) rep.nonzero = false;
    if (!rs.contains(rv_neg(v))) {
      rep.negation_closed = false;
      if (!rep.witness) rep.witness = {v, rv_neg(v)};
    }
  }
  for (const auto& a : rs.vectors) {
    const Rat aa = dot(a, a);
    if (aa == 0) continue;
    for (const auto& b : rs.vectors) {
      const Rat c = 2 * dot(b, a) / aa;
      if (rat_den(c) != 1) {
        rep.integrality = false;
        if (!rep.witness) rep.witness = {a, b};
      }
      const RootVec refl = rv_sub(b, rv_scale(c, a));
      if (!rs.contains(refl)) {
        rep.reflection_closed = false;
        if (!rep.witness) rep.witness = {a, b};
      }
    }
  }
  return rep;
}

struct DynkinType {
  // Concatenated component labels, e.g. "D4", "A1", "A1+A1".
  std::string name;
  std::size_t rank = 0;
  std::size_t root_count = 0;
};

namespace detail {

inline bool lex_positive(const RootVec& v) {
  for (int i = 0; i < 4; ++i) {
    if (v[i] > 0) return true;
    if (v[i] < 0) return false;
  }
  return false;
}

/// Classifies one connected Cartan-matrix component by its Dynkin graph.
inline std::string classify_component(const std::vector<std::vector<Rat>>& cartan,
                                      const std::vector<std::size_t>& comp) {
  const std::size_t n = comp.size();
  if (n == 1) return "A1";
  // adjacency with bond multiplicity m_ij = A_ij * A_ji
  std::vector<std::vector<int>> mult(n, std::vector<int>(n, 0));
  std::vector<int> degree(n, 0);
  int max_mult = 1;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (x == y) continue;
      const Rat m = cartan[comp[x]][comp[y]] * cartan[comp[y]][comp[x]];
      mult[x][y] = static_cast<int>(rat_num(m));
      if (mult[x][y] > 0) ++degree[x];
      max_mult = std::max(max_mult, mult[x][y]);
    }
  const int branch_nodes =
      static_cast<int>(std::count_if(degree.begin(), degree.end(), [](int d) { return d >= 3; }));
  if (max_mult == 3) return "G2";
  if (max_mult == 2) {
    if (branch_nodes > 0) return "unknown";
    if (n == 4) {
      // F4 iff the double bond is interior
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = x + 1; y < n; ++y)
          if (mult[x][y] == 2 && degree[x] == 2 && degree[y] == 2) return "F4";
    }
    // B_n vs C_n by whether the short root sits at the double-bond end:
    // A_xy = -2 means alpha_y is short.
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        if (mult[x][y] == 2 && degree[y] == 1 && cartan[comp[x]][comp[y]] == -2)
          return "B" + std::to_string(n);
    return "C" + std::to_string(n);
  }
  // simply laced
  if (branch_nodes == 0) return "A" + std::to_string(n);
  if (branch_nodes > 1) return "unknown";
  // one trivalent node: branch lengths decide D vs E
  std::size_t center = 0;
  for (std::size_t x = 0; x < n; ++x)
    if (degree[x] >= 3) center = x;
  if (degree[center] != 3) return "unknown";
  std::vector<int> lengths;
  for (std::size_t nb = 0; nb < n; ++nb) {
    if (mult[center][nb] == 0) continue;
    int len = 1;
    std::size_t prev = center, cur = nb;
    while (degree[cur] == 2) {
      for (std::size_t nxt = 0; nxt < n; ++nxt)
        if (nxt != prev && mult[cur][nxt] > 0) {
          prev = cur;
          cur = nxt;
          ++len;
          break;
        }
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end());
  if (lengths.size() != 3) return "unknown";
  if (lengths[0] == 1 && lengths[1] == 1) return "D" + std::to_string(n);
  if (lengths[0] == 1 && lengths[1] == 2 && lengths[2] >= 2 && lengths[2] <= 4)
    return "E" + std::to_string(n);
  return "unknown";
}

}  // namespace detail

/// Selects simple roots from the lexicographic-positive cone, builds the
/// Cartan matrix, and matches the Dynkin graph against the classification.
inline DynkinType dynkin_identify(const RootSet& rs) {
  const auto axioms = root_axiom_check(rs);
  if (!axioms.pass()) throw std::domain_error("dynkin_identify requires a root system");

  std::vector<RootVec> pos;
  for (const auto& v : rs.vectors)
    if (detail::lex_positive(v)) pos.push_back(v);
  // simple = positive, not a sum of two positives
  std::vector<RootVec> simple;
  for (const auto& v : pos) {
    bool decomposable = false;
    for (const auto& a : pos) {
      const RootVec rest = rv_sub(v, a);
      if (rest != v && !(rest == RootVec{}) &&
          std::find(pos.begin(), pos.end(), rest) != pos.end() && a != v) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) simple.push_back(v);
  }
  const std::size_t n = simple.size();
  std::vector<std::vector<Rat>> cartan(n, std::vector<Rat>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      cartan[i][j] = 2 * dot(simple[i], simple[j]) / dot(simple[j], simple[j]);

  // connected components of the Dynkin graph
  std::vector<bool> seen(n, false);
  std::vector<std::string> labels;
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<std::size_t> comp{s};
    seen[s] = true;
    for (std::size_t qi = 0; qi < comp.size(); ++qi)
      for (std::size_t t = 0; t < n; ++t)
        if (!seen[t] && cartan[comp[qi]][t] != 0) {
          seen[t] = true;
          comp.push_back(t);
        }
    labels.push_back(detail::classify_component(cartan, comp));
  }
  std::sort(labels.begin(), labels.end());
  std::string name;
  for (const auto& l : labels) {
    if (!name.empty()) name += "+";
    name += l;
  }
  return {name, n, rs.vectors.size()};
}

// ---------------------------------------------------------------------------
// Coset split of the positive D4 roots per the construction's block lists.

enum class CheckStatus { Pass, Fail, Discrepancy, Indeterminate };

inline std::string status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Discrepancy: return "discrepancy";
    case CheckStatus::Indeterminate: return "indeterminate";
  }
  return "?";
}

struct CosetBlockReport {
  std::string claimed_group;
  std::size_t block_size = 0;
  std::size_t claimed_group_dim = 0;
  bool dim_matches = false;
  bool negation_closed = false;           // literal root-axiom reading
  std::vector<Rat> pairwise_inner_products;  // sorted spectrum of distinct pairs
  CheckStatus status = CheckStatus::Indeterminate;
};

struct CosetSplitReport {
  std::vector<RootVec> positive;   // the declared 12 positive vectors
  bool covers_all_24 = false;      // positive plus negatives reconstruct d4_roots
  std::vector<CosetBlockReport> blocks;
};

/// The declared 12 "positive" vectors: {+1, +i, +j, +k, (+1 +-i +-j +-k)/2}.
inline std::vector<RootVec> positive_d4_roots() {
  std::vector<RootVec> pos;
  for (int axis = 0; axis < 4; ++axis) {
    RootVec v{};
    v[axis] = 1;
    pos.push_back(v);
  }
  for (int s1 : {1, -1})
    for (int s2 : {1, -1})
      for (int s3 : {1, -1}) pos.push_back({rat(1, 2), rat(s1, 2), rat(s2, 2), rat(s3, 2)});
  return pos;
}

inline CosetSplitReport coset_split_report() {
  CosetSplitReport rep;
  rep.positive = positive_d4_roots();

  std::set<std::vector<std::string>> cover;  // canonical string forms
  auto key = [](const RootVec& v) {
    std::vector<std::string> k;
    for (const auto& c : v) k.push_back(rat_str(c));
    return k;
  };
  for (const auto& v : rep.positive) {
    cover.insert(key(v));
    cover.insert(key(rv_neg(v)));
  }
  std::set<std::vector<std::string>> all;
  for (const auto& v : d4_roots().vectors) all.insert(key(v));
  rep.covers_all_24 = cover == all;

  auto analyze = [&](std::vector<RootVec> block, const std::string& group, std::size_t gdim) {
    CosetBlockReport b;
    b.claimed_group = group;
    b.block_size = block.size();
    b.claimed_group_dim = gdim;
    b.dim_matches = block.size() == gdim;
    b.negation_closed = true;
    for (const auto& v : block)
      if (std::find(block.begin(), block.end(), rv_neg(v)) == block.end())
        b.negation_closed = false;
    for (std::size_t x = 0; x < block.size(); ++x)
      for (std::size_t y = x + 1; y < block.size(); ++y)
        b.pairwise_inner_products.push_back(dot(block[x], block[y]));
    std::sort(b.pairwise_inner_products.begin(), b.pairwise_inner_products.end());
    // Dimension counts match the claims; the literal root-subsystem axioms do
    // not (the blocks are not negation-closed). Claims are heuristic, so a
    // failed literal reading yields "indeterminate" rather than "fail".
    if (block.size() == 1)
      b.status = CheckStatus::Pass;  // a single commuting generator is a U(1)
    else if (b.dim_matches && !b.negation_closed)
      b.status = CheckStatus::Indeterminate;
    else if (b.dim_matches && b.negation_closed)
      b.status = CheckStatus::Pass;
    else
      b.status = CheckStatus::Fail;
    return b;
  };

  std::vector<RootVec> su3_block, su2_block, u1_block;
  for (const auto& v : rep.positive) {
    if (v == RootVec{1, 0, 0, 0})
      u1_block.push_back(v);
    else if (v[0] == 0)
      su2_block.push_back(v);
    else if (v[0] == rat(1, 2))
      su3_block.push_back(v);
  }
  rep.blocks.push_back(analyze(su3_block, "SU(3)", 8));
  rep.blocks.push_back(analyze(su2_block, "SU(2)", 3));
  rep.blocks.push_back(analyze(u1_block, "U(1)", 1));
  return rep;
}

// ---------------------------------------------------------------------------
// Dimension bookkeeping.

/// Dimension of a named group: "Spin(n)", "SU(n)", "U(n)", "G2", "D4", "D5", "E6".
inline long group_dim(const std::string& name) {
  auto arg = [&](const std::string& prefix) -> std::optional<long> {
    if (name.rfind(prefix + "(", 0) == 0 && name.back() == ')') {
      return std::stol(name.substr(prefix.size() + 1, name.size() - prefix.size() - 2));
    }
    return std::nullopt;
  };
  if (auto n = arg("Spin")) return *n * (*n - 1) / 2;
  if (auto n = arg("SU")) return *n * *n - 1;
  if (auto n = arg("U")) return *n * *n;
  if (name == "G2") return 14;
  if (name == "D4") return 28;
  if (name == "D5") return 45;
  if (name == "E6") return 78;
  throw std::domain_error("unknown group name: " + name);
}

struct SymmetricSpaceRow {
  std::string gauge_group;
  std::string symmetric_space;
  std::string psi_force;      // listed internal-space geometry
  long coset_dim = 0;
  long listed_space_dim = 0;
  CheckStatus status = CheckStatus::Pass;
};

/// Row-by-row dimension audit of the gauge-group / symmetric-space table.
inline std::vector<SymmetricSpaceRow> symmetric_space_check() {
  std::vector<SymmetricSpaceRow> rows;
  auto add = [&](std::string g, std::string space, std::string psi, long coset, long listed) {
    SymmetricSpaceRow r{std::move(g), std::move(space), std::move(psi), coset, listed};
    r.status = coset == listed ? CheckStatus::Pass : CheckStatus::Discrepancy;
    rows.push_back(std::move(r));
  };
  add("Spin(5)", "Spin(5)/Spin(4)", "S4", group_dim("Spin(5)") - group_dim("Spin(4)"), 4);
  add("SU(3)", "SU(3)/(SU(2)xU(1))", "CP2",
      group_dim("SU(3)") - (group_dim("SU(2)") + group_dim("U(1)")), 4);
  add("SU(2)", "SU(2)/U(1)", "S2xS2", group_dim("SU(2)") - group_dim("U(1)"), 4);
  add("U(1)", "U(1)", "S1xS1xS1xS1", group_dim("U(1)"), 4);
  return rows;
}

struct ShilovCase {
  std::string coset;
  long real_dim = 0;
  long complex_dim = 0;
  long boundary_dim = 0;  // dimension of the named Shilov boundary
  bool matches = false;
};

/// E6/(D5xU(1)), D5/(D4xU(1)) and Spin(8)/U(4) dimension identities.
inline std::vector<ShilovCase> shilov_check() {
  std::vector<ShilovCase> out;
  {
    ShilovCase c{"E6/(D5xU(1))", group_dim("E6") - group_dim("D5") - 1, 0, 0, false};
    c.complex_dim = c.real_dim / 2;
    c.boundary_dim = 2 * 8;  // two copies of S7 x RP1
    c.matches = c.real_dim == 32 && c.complex_dim == 16 && c.boundary_dim == c.complex_dim;
    out.push_back(c);
  }
  {
    ShilovCase c{"D5/(D4xU(1))", group_dim("D5") - group_dim("D4") - 1, 0, 0, false};
    c.complex_dim = c.real_dim / 2;
    c.boundary_dim = 8;  // S7 x RP1
    c.matches = c.real_dim == 16 && c.complex_dim == 8 && c.boundary_dim == c.complex_dim;
    out.push_back(c);
  }
  {
    ShilovCase c{"Spin(8)/U(4)", group_dim("Spin(8)") - group_dim("U(4)"), 0, 0, false};
    c.boundary_dim = 12;  // count of positive roots
    c.matches = c.real_dim == 12 &&
                c.real_dim == static_cast<long>(positive_d4_roots().size());
    out.push_back(c);
  }
  return out;
}

}  // namespace octolab
