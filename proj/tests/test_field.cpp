#include "doctest.h"
#include "steiner4/field.hpp"
#include "steiner4/number_theory.hpp"

using namespace steiner4;
using namespace steiner4::gf;

TEST_CASE("field axioms hold exhaustively for small fields") {
  for (auto [p, e] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 1}, {2, 3}, {3, 2}, {5, 1}, {2, 4}, {7, 2}}) {
    const Field f = Field::build(p, e);
    CAPTURE(f.q());
    for (Element a = 0; a < f.q(); ++a) {
      CHECK(f.add(a, f.neg(a)) == 0);
      if (a) CHECK(f.mul(a, f.inv(a)) == 1);
      for (Element b = 0; b < f.q(); ++b) {
        CHECK(f.add(a, b) == f.add(b, a));
        CHECK(f.mul(a, b) == f.mul(b, a));
        CHECK(f.sub(f.add(a, b), b) == a);
        const Element c = (a * 7 + b * 3 + 1) % f.q();
        CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
        CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
      }
    }
  }
}

TEST_CASE("prime subfield is integers mod p") {
  const Field f = Field::build(5, 3);
  for (Element a = 0; a < 5; ++a)
    for (Element b = 0; b < 5; ++b) {
      CHECK(f.add(a, b) == (a + b) % 5);
      CHECK(f.mul(a, b) == (a * b) % 5);
    }
}

TEST_CASE("primitive element, logs and Frobenius") {
  for (std::uint64_t q : {4, 8, 9, 25, 27, 49, 64, 81, 121, 125, 128}) {
    const auto pp = *prime_power(q);
    const Field f = Field::build(static_cast<std::uint32_t>(pp.p), pp.e);
    CHECK(f.multiplicative_order(f.primitive()) == q - 1);
    for (Element a = 1; a < f.q(); ++a) CHECK(f.exp(f.log(a)) == a);
    for (Element a = 0; a < f.q(); ++a) {
      CHECK(f.pow(a, q) == a);
      for (Element b = 0; b < f.q(); b += 5) {
        CHECK(f.frobenius(f.add(a, b)) == f.add(f.frobenius(a), f.frobenius(b)));
        CHECK(f.frobenius(f.mul(a, b)) == f.mul(f.frobenius(a), f.frobenius(b)));
      }
    }
    std::size_t squares = 0;
    for (Element a = 1; a < f.q(); ++a) squares += f.is_square(a);
    CHECK(squares == (pp.p == 2 ? q - 1 : (q - 1) / 2));
  }
}

TEST_CASE("is_irreducible agrees with root and product search") {
  // Over GF(2): degree 3 irreducibles are x^3+x+1 and x^3+x^2+1.
  CHECK(is_irreducible({1, 1, 0, 1}, 2));
  CHECK(is_irreducible({1, 0, 1, 1}, 2));
  CHECK_FALSE(is_irreducible({1, 0, 0, 1}, 2));
  // x^4+x^2+1 = (x^2+x+1)^2 has no roots but is reducible.
  CHECK_FALSE(is_irreducible({1, 0, 1, 0, 1}, 2));
  // Count monic irreducible quadratics over GF(5): (25-5)/2 = 10.
  int count = 0;
  for (std::uint32_t c0 = 0; c0 < 5; ++c0)
    for (std::uint32_t c1 = 0; c1 < 5; ++c1) count += is_irreducible({c0, c1, 1}, 5);
  CHECK(count == 10);
  const Field f = Field::build(3, 4);
  CHECK(is_irreducible(f.modulus(), 3));
}

TEST_CASE("PSL(2,q) and PGL(2,q) orders") {
  for (std::uint64_t q : {4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 32}) {
    const auto pp = *prime_power(q);
    const Field f = Field::build(static_cast<std::uint32_t>(pp.p), pp.e);
    const std::uint64_t n = q % 2 ? 2 : 1;
    CHECK(psl2_group(f).order() == q * (q * q - 1) / n);
    CHECK(pgl2_group(f).order() == q * (q * q - 1));
    CHECK(transitivity_degree(pgl2_group(f), 4) == 3);
  }
}

TEST_CASE("Mobius maps act on homogeneous pairs") {
  const Field f = Field::build(7, 1);
  const Mobius inv{0, f.neg(1), 1, 0};
  CHECK(apply(f, inv, 0) == infinity(f));
  CHECK(apply(f, inv, infinity(f)) == 0);
  CHECK(apply(f, inv, 1) == 6);
  const Mobius shift{1, 1, 0, 1};
  CHECK(apply(f, shift, infinity(f)) == infinity(f));
  CHECK(mobius_perm(f, shift).order() == 7);
  CHECK(frobenius_perm(Field::build(2, 3)).order() == 3);
}
