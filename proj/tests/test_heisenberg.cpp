#include <doctest.h>

#include "octolab/heisenberg.hpp"

using namespace octolab;

namespace {
Octonion e(std::size_t i) { return Octonion::basis(i); }

HeisenbergElement creator(const Octonion& a) { return {a, Octonion(), Octonion(), false}; }
HeisenbergElement annihilator(const Octonion& a) { return {Octonion(), a, Octonion(), false}; }
HeisenbergElement central(const Octonion& a) { return {Octonion(), Octonion(), a, false}; }
}  // namespace

TEST_CASE("products keep only the central entry") {
  const auto p = h_multiply(creator(e(1)), annihilator(e(2)));
  CHECK(p.is_central_only());
  CHECK(p.central == multiply(e(1), e(2)));  // = e4
  CHECK_FALSE(p.lower);

  // the opposite order pairs annihilator-then-creator slots, which vanish
  CHECK(h_multiply(annihilator(e(2)), creator(e(1))).is_zero());
  // central entries annihilate everything
  CHECK(h_multiply(central(e(3)), creator(e(1))).is_zero());
  CHECK(h_multiply(creator(e(1)), central(e(3))).is_zero());
}

TEST_CASE("bracket lands in the center") {
  const auto br = h_bracket(creator(e(1)), annihilator(e(2)));
  CHECK(br.is_central_only());
  CHECK(br.central == multiply(e(1), e(2)));
  CHECK(h_bracket(creator(e(1)), creator(e(2))).is_zero());
  CHECK(h_bracket(central(e(1)), annihilator(e(2))).is_zero());
}

TEST_CASE("index-3 nilpotency is exhaustive over the 24 basis atoms") {
  const auto rep = nilpotency_check();
  CHECK(rep.index3_nilpotent);
  CHECK(rep.squares_central_only);
  CHECK(rep.triples_checked == 24 * 24 * 24);
}

TEST_CASE("dagger is involutive and flips the orientation") {
  const HeisenbergElement m{e(1) + e(5), e(2), e(7) * rat(1, 3), false};
  const auto d = h_dagger(m);
  CHECK(d.lower);
  CHECK(d.creator == conjugate(m.creator));
  CHECK(h_dagger(d) == m);

  // dagger is an anti-homomorphism on the surviving central entry
  const auto a = creator(e(1)), b = annihilator(e(2));
  const auto lhs = h_dagger(h_multiply(a, b));
  const auto rhs = h_multiply(h_dagger(b), h_dagger(a));
  CHECK(lhs.central == rhs.central);
  CHECK(lhs.lower == rhs.lower);
}

TEST_CASE("orientation mixing is rejected") {
  const auto up = creator(e(1));
  const auto down = h_dagger(up);
  CHECK_THROWS_AS(h_multiply(up, down), std::domain_error);
  CHECK_THROWS_AS(up + down, std::domain_error);
}

TEST_CASE("number-operator style element") {
  // a creator with a unit octonion entry has a-dagger * a central entry of norm 1
  const auto a = creator(e(6));
  const auto n = h_multiply(h_dagger(a), h_dagger(annihilator(e(0))));
  CHECK(n.lower);
  const auto sq = h_multiply(a, annihilator(conjugate(e(6))));
  CHECK(sq.central == multiply(e(6), conjugate(e(6))));
  CHECK(sq.central == Octonion::one());
}
