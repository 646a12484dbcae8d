#include <doctest.h>

#include "octolab/liegen.hpp"

using namespace octolab;

namespace {
Octonion e(std::size_t i) { return Octonion::basis(i); }

// Shared expensive fixtures.
const LieBasis& spin8() {
  static const LieBasis c = lie_closure(left_mult_generators());
  return c;
}
const LieBasis& g2() {
  static const LieBasis d = derivation_algebra();
  return d;
}
}  // namespace

TEST_CASE("left multiplication matrices") {
  CHECK(left_mult_matrix(e(0)) == RatMatrix::identity(8));
  const RatMatrix L1 = left_mult_matrix(e(1));
  CHECK(L1.is_antisymmetric());
  CHECK(L1(1, 0) == 1);  // column of e1*1
  // linearity
  const Octonion a = e(2) * rat(3, 7) + e(5);
  const Octonion b = e(0) * rat(-1, 2) + e(3);
  CHECK(left_mult_matrix(a + b) == left_mult_matrix(a) + left_mult_matrix(b));
}

TEST_CASE("lie_closure of the seven left multiplications is 28-dimensional") {
  const auto& c = spin8();
  CHECK(c.dimension() == 28);
  CHECK(c.closed());
  for (const auto& m : c.members()) CHECK(m.is_antisymmetric());
  CHECK(c.verify_closed());

  SUBCASE("closure is idempotent") {
    const auto again = lie_closure(c.members());
    CHECK(again.dimension() == 28);
    CHECK(again.fingerprint() == c.fingerprint());
  }
  SUBCASE("fingerprint is deterministic") {
    CHECK(lie_closure(left_mult_generators()).fingerprint() == c.fingerprint());
  }
}

TEST_CASE("lie_closure small cases") {
  // single antisymmetric matrix: abelian, dimension 1
  RatMatrix a(4, 4);
  a(0, 1) = 1;
  a(1, 0) = -1;
  CHECK(lie_closure({a}).dimension() == 1);

  // the three standard so(3) generators close at dimension 3
  auto rot = [](int i, int j) {
    RatMatrix m(3, 3);
    m(i, j) = -1;
    m(j, i) = 1;
    return m;
  };
  const auto so3 = lie_closure({rot(1, 2), rot(2, 0), rot(0, 1)});
  CHECK(so3.dimension() == 3);
  CHECK(so3.verify_closed());

  RatMatrix wrong(2, 2);
  CHECK_THROWS_AS(lie_closure({a, wrong}), std::domain_error);
}

TEST_CASE("matrix commutator satisfies the Jacobi identity on the closure basis") {
  const auto& c = spin8();
  const auto& m = c.members();
  // spot-check a deterministic selection of triples; the identity is algebraic
  for (std::size_t i = 0; i < m.size(); i += 5)
    for (std::size_t j = i + 1; j < m.size(); j += 7)
      for (std::size_t k = j + 1; k < m.size(); k += 9) {
        const RatMatrix s = bracket(bracket(m[i], m[j]), m[k]) +
                            bracket(bracket(m[j], m[k]), m[i]) +
                            bracket(bracket(m[k], m[i]), m[j]);
        CHECK(s.is_zero());
      }
}

TEST_CASE("derivation algebra has dimension 14") {
  const auto& d = g2();
  CHECK(d.dimension() == 14);
  CHECK(d.verify_closed());
  const std::vector<Rat> unit{1, 0, 0, 0, 0, 0, 0, 0};
  for (const auto& m : d.members()) CHECK(m.apply(unit) == std::vector<Rat>(8, Rat(0)));
}

TEST_CASE("stabilizer chain 14 <= 21 <= 28 with fiber jumps of 7") {
  const auto& c = spin8();
  const auto stab = stabilizer_subalgebra(c, e(0));
  CHECK(stab.dimension() == 21);
  CHECK(c.contains_all(stab));
  CHECK(stab.contains_all(g2()));
  CHECK(c.dimension() - stab.dimension() == 7);
  CHECK(stab.dimension() - g2().dimension() == 7);

  SUBCASE("stabilizer of 0 is the whole ambient algebra") {
    const auto all = stabilizer_subalgebra(c, Octonion());
    CHECK(all.dimension() == c.dimension());
  }
}

TEST_CASE("triality decomposition is unique and satisfies the defining identity") {
  const auto& c = spin8();
  const auto triples = triality_decompose_all(c.members());
  REQUIRE(triples.size() == 28);
  for (const auto& t : triples) {
    CHECK(t.a_prime.is_antisymmetric());
    CHECK(t.a_dblprime.is_antisymmetric());
    CHECK(triality_identity_holds(t));
  }
  SUBCASE("zero maps to zero") {
    const auto z = triality_decompose(RatMatrix(8, 8));
    CHECK(z.a_prime.is_zero());
    CHECK(z.a_dblprime.is_zero());
  }
  SUBCASE("single-element decompose agrees with the batch") {
    const auto single = triality_decompose(c.members()[3]);
    CHECK(single.a_prime == triples[3].a_prime);
    CHECK(single.a_dblprime == triples[3].a_dblprime);
  }
  CHECK_THROWS_AS(triality_decompose(RatMatrix::identity(8)), std::domain_error);
}

TEST_CASE("triality fixes the derivation algebra pointwise") {
  const auto triples = triality_decompose_all(g2().members());
  for (const auto& t : triples) {
    CHECK(t.a_prime == t.a);
    CHECK(t.a_dblprime == t.a);
  }
}

TEST_CASE("theta preserves brackets on a deterministic pair sample") {
  const auto& c = spin8();
  const auto triples = triality_decompose_all(c.members());
  for (std::size_t i = 0; i < 28; i += 4)
    for (std::size_t j = i + 1; j < 28; j += 5) {
      const RatMatrix br = bracket(triples[i].a, triples[j].a);
      const auto coords = c.coordinates(br);
      REQUIRE(coords.has_value());
      RatMatrix theta_br(8, 8);
      for (std::size_t t = 0; t < 28; ++t)
        if ((*coords)[t] != 0) theta_br = theta_br + triples[t].a_prime * (*coords)[t];
      CHECK(theta_br == bracket(triples[i].a_prime, triples[j].a_prime));
    }
}

TEST_CASE("triality order probe") {
  const auto& c = spin8();
  const auto probe = triality_order_probe(c);
  CHECK(probe.theta_bijective);
  CHECK(probe.theta_rank == 28);
  // theta^3 is not the identity in this normalization; recorded, not asserted
  CHECK(probe.theta_cubed_identity == triality_order_probe(c).theta_cubed_identity);
}
