#include "doctest.h"
#include "steiner4/errors.hpp"
#include "steiner4/witt.hpp"

using namespace steiner4;
using namespace steiner4::witt;

TEST_CASE("QR code generator polynomials") {
  const auto g11 = generator_polynomial(QRCodeSpec::for_length(11));
  CHECK(g11.size() == 6);
  CHECK(g11.back() == 1);
  const auto g23 = generator_polynomial(QRCodeSpec::for_length(23));
  CHECK(g23.size() == 12);
  // x^23 - 1 over GF(2): the generator divides it, so g(1) = 1 + ... has odd weight 7.
  std::size_t weight = 0;
  for (auto c : g23) weight += c;
  CHECK(weight == 7);
  CHECK_THROWS_AS(QRCodeSpec::for_length(13), InputError);
}

TEST_CASE("Witt designs are Steiner 4-designs") {
  const auto w11 = witt_design(11);
  CHECK(w11.b() == 66);
  CHECK(w11.k() == 5);
  CHECK(verify_steiner(w11, 4).pass);
  const auto w23 = witt_design(23);
  CHECK(w23.b() == 253);
  CHECK(w23.k() == 7);
  CHECK(verify_steiner(w23, 4).pass);
  // Derived at a point: 3-(22,6,1).
  const auto d = derived_design(w23, 0);
  CHECK(d.b() == 77);
  CHECK(verify_steiner(d, 3).pass);
}

TEST_CASE("Mathieu data validation catches corruption") {
  auto data = mathieu_data(11);
  const auto design = witt_design(11);
  CHECK_NOTHROW(validate_mathieu(data, design));
  auto wrong_order = data;
  wrong_order.expected_order = 7921;
  CHECK_THROWS_AS(validate_mathieu(wrong_order, design), DataIntegrityError);
  auto dropped = data;
  dropped.generators.pop_back();
  CHECK_THROWS_AS(validate_mathieu(dropped, design), DataIntegrityError);
  auto bad_degree = data;
  bad_degree.generators[0] = Permutation::identity(12);
  CHECK_THROWS_AS(validate_mathieu(bad_degree, design), DataIntegrityError);
}

TEST_CASE("Mathieu groups act flag-transitively") {
  for (std::uint32_t v : {11u, 23u}) {
    const auto pv = verify_pair(v);
    CHECK(pv.pass());
    CHECK(pv.flags.flag_orbit == pv.flags.flag_count);
    CHECK(pv.point_2transitive);
  }
  CHECK(mathieu_group(11).order() == 7920);
  CHECK(mathieu_group(23).order() == 10200960);
}
