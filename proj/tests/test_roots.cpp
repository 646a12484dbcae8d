#include <doctest.h>

#include "octolab/roots.hpp"

using namespace octolab;

TEST_CASE("the 24 Hurwitz units form a norm-1 root set") {
  const auto rs = d4_roots();
  REQUIRE(rs.vectors.size() == 24);
  std::set<std::vector<std::string>> distinct;
  for (const auto& v : rs.vectors) {
    CHECK(dot(v, v) == 1);
    std::vector<std::string> k;
    for (const auto& c : v) k.push_back(rat_str(c));
    distinct.insert(k);
  }
  CHECK(distinct.size() == 24);

  // inner products only take the values 0, +-1/2, +-1
  for (const auto& a : rs.vectors)
    for (const auto& b : rs.vectors) {
      const Rat d = dot(a, b);
      CHECK((d == 0 || d == 1 || d == -1 || d == rat(1, 2) || d == rat(-1, 2)));
    }
}

TEST_CASE("root axioms hold for the Hurwitz units") {
  const auto rep = root_axiom_check(d4_roots());
  CHECK(rep.pass());
  CHECK(rep.nonzero);
  CHECK(rep.negation_closed);
  CHECK(rep.reflection_closed);
  CHECK(rep.integrality);
  CHECK_FALSE(rep.witness.has_value());
}

TEST_CASE("root axioms detect failures with a witness") {
  // {+i, +j} is not negation closed
  RootSet bad;
  bad.vectors.push_back({0, 1, 0, 0});
  bad.vectors.push_back({0, 0, 1, 0});
  const auto rep = root_axiom_check(bad);
  CHECK_FALSE(rep.pass());
  CHECK_FALSE(rep.negation_closed);
  REQUIRE(rep.witness.has_value());
  CHECK(rep.witness->second == rv_neg(rep.witness->first));

  CHECK_THROWS_AS(root_axiom_check(RootSet{}), std::domain_error);
}

TEST_CASE("dynkin identification") {
  SUBCASE("Hurwitz units are D4") {
    const auto t = dynkin_identify(d4_roots());
    CHECK(t.name == "D4");
    CHECK(t.rank == 4);
    CHECK(t.root_count == 24);
  }
  SUBCASE("a single +- pair is A1") {
    RootSet rs;
    rs.vectors.push_back({1, 0, 0, 0});
    rs.vectors.push_back({-1, 0, 0, 0});
    const auto t = dynkin_identify(rs);
    CHECK(t.name == "A1");
    CHECK(t.rank == 1);
  }
  SUBCASE("a hexagon in a plane is A2") {
    RootSet rs;
    const std::vector<RootVec> pos{{1, -1, 0, 0}, {0, 1, -1, 0}, {1, 0, -1, 0}};
    for (const auto& v : pos) {
      rs.vectors.push_back(v);
      rs.vectors.push_back(rv_neg(v));
    }
    const auto t = dynkin_identify(rs);
    CHECK(t.name == "A2");
    CHECK(t.rank == 2);
    CHECK(t.root_count == 6);
  }
  SUBCASE("two orthogonal pairs are A1+A1") {
    RootSet rs;
    rs.vectors.push_back({1, 0, 0, 0});
    rs.vectors.push_back({-1, 0, 0, 0});
    rs.vectors.push_back({0, 1, 0, 0});
    rs.vectors.push_back({0, -1, 0, 0});
    CHECK(dynkin_identify(rs).name == "A1+A1");
  }
  SUBCASE("non-root-systems are rejected") {
    RootSet bad;
    bad.vectors.push_back({0, 1, 0, 0});
    bad.vectors.push_back({0, 0, 1, 0});
    CHECK_THROWS_AS(dynkin_identify(bad), std::domain_error);
  }
}

TEST_CASE("reflections permute the root set (Weyl orbit regenerates all 24)") {
  const auto rs = d4_roots();
  for (const auto& a : rs.vectors) {
    std::set<std::vector<std::string>> image;
    for (const auto& b : rs.vectors) {
      const RootVec r = rv_sub(b, rv_scale(2 * dot(b, a) / dot(a, a), a));
      CHECK(rs.contains(r));
      std::vector<std::string> k;
      for (const auto& c : r) k.push_back(rat_str(c));
      image.insert(k);
    }
    CHECK(image.size() == 24);
  }
}

TEST_CASE("coset split of the positive roots") {
  const auto rep = coset_split_report();
  REQUIRE(rep.positive.size() == 12);
  CHECK(rep.covers_all_24);
  REQUIRE(rep.blocks.size() == 3);

  const auto& su3 = rep.blocks[0];
  CHECK(su3.claimed_group == "SU(3)");
  CHECK(su3.block_size == 8);
  CHECK(su3.dim_matches);
  CHECK_FALSE(su3.negation_closed);
  CHECK(su3.status == CheckStatus::Indeterminate);

  const auto& su2 = rep.blocks[1];
  CHECK(su2.claimed_group == "SU(2)");
  CHECK(su2.block_size == 3);
  CHECK(su2.dim_matches);
  CHECK_FALSE(su2.negation_closed);
  CHECK(su2.status == CheckStatus::Indeterminate);
  // the {i, j, k} block is pairwise orthogonal
  for (const auto& p : su2.pairwise_inner_products) CHECK(p == 0);

  const auto& u1 = rep.blocks[2];
  CHECK(u1.claimed_group == "U(1)");
  CHECK(u1.block_size == 1);
  CHECK(u1.status == CheckStatus::Pass);

  CHECK(su3.block_size + su2.block_size + u1.block_size == 12);
}

TEST_CASE("group dimension formulas") {
  CHECK(group_dim("Spin(8)") == 28);
  CHECK(group_dim("Spin(5)") == 10);
  CHECK(group_dim("Spin(4)") == 6);
  CHECK(group_dim("SU(3)") == 8);
  CHECK(group_dim("SU(2)") == 3);
  CHECK(group_dim("U(1)") == 1);
  CHECK(group_dim("U(4)") == 16);
  CHECK(group_dim("G2") == 14);
  CHECK(group_dim("D4") == 28);
  CHECK(group_dim("D5") == 45);
  CHECK(group_dim("E6") == 78);
  CHECK_THROWS_AS(group_dim("F4"), std::domain_error);
  CHECK_THROWS_AS(group_dim("nonsense"), std::domain_error);
}

TEST_CASE("symmetric space dimension audit") {
  const auto rows = symmetric_space_check();
  REQUIRE(rows.size() == 4);
  CHECK(rows[0].gauge_group == "Spin(5)");
  CHECK(rows[0].coset_dim == 4);
  CHECK(rows[0].status == CheckStatus::Pass);
  CHECK(rows[1].gauge_group == "SU(3)");
  CHECK(rows[1].coset_dim == 4);
  CHECK(rows[1].status == CheckStatus::Pass);
  // rows 3 and 4: the coset dimension is 2 resp. 1, not the listed 4
  CHECK(rows[2].gauge_group == "SU(2)");
  CHECK(rows[2].coset_dim == 2);
  CHECK(rows[2].listed_space_dim == 4);
  CHECK(rows[2].status == CheckStatus::Discrepancy);
  CHECK(rows[3].gauge_group == "U(1)");
  CHECK(rows[3].coset_dim == 1);
  CHECK(rows[3].listed_space_dim == 4);
  CHECK(rows[3].status == CheckStatus::Discrepancy);
}

TEST_CASE("bounded-domain dimension identities") {
  const auto cases = shilov_check();
  REQUIRE(cases.size() == 3);
  CHECK(cases[0].coset == "E6/(D5xU(1))");
  CHECK(cases[0].real_dim == 32);
  CHECK(cases[0].complex_dim == 16);
  CHECK(cases[0].boundary_dim == 16);
  CHECK(cases[0].matches);
  CHECK(cases[1].coset == "D5/(D4xU(1))");
  CHECK(cases[1].real_dim == 16);
  CHECK(cases[1].complex_dim == 8);
  CHECK(cases[1].matches);
  CHECK(cases[2].coset == "Spin(8)/U(4)");
  CHECK(cases[2].real_dim == 12);
  CHECK(cases[2].boundary_dim == 12);
  CHECK(cases[2].matches);
}
