#include "doctest.h"
#include "steiner4/errors.hpp"
#include "steiner4/number_theory.hpp"
#include "steiner4/psl2_orbits.hpp"

using namespace steiner4;
using namespace steiner4::psl2;

namespace {

gf::Field field_for(std::uint64_t q) {
  const auto pp = *prime_power(q);
  return gf::Field::build(static_cast<std::uint32_t>(pp.p), pp.e);
}

}  // namespace

TEST_CASE("spec grammar round trips") {
  for (const char* text : {"cyclic:5", "dihedral:6", "ea:9", "semi:9:4", "a4", "s4", "a5", "psl2:3", "pgl2:3"}) {
    const auto s = SubgroupSpec::parse(text);
    CHECK(s.to_string() == text);
    CHECK(SubgroupSpec::parse(s.to_string()) == s);
  }
  CHECK(SubgroupSpec::parse("A5") == SubgroupSpec::parse("a5"));
  CHECK(SubgroupSpec::parse("PSL2:4").qbar == 4);
  CHECK_THROWS_AS(SubgroupSpec::parse("cyclic"), InputError);
  CHECK_THROWS_AS(SubgroupSpec::parse("semi:9"), InputError);
  CHECK_THROWS_AS(SubgroupSpec::parse("m11"), InputError);
}

TEST_CASE("context validation") {
  CHECK_THROWS_AS(Psl2Context::make(3), InputError);
  CHECK_THROWS_AS(Psl2Context::make(12), InputError);
  const auto c = Psl2Context::make(27);
  CHECK(c.p == 3);
  CHECK(c.e == 3);
  CHECK(c.n == 2);
  CHECK(c.plus() == 14);
  CHECK(c.minus() == 13);
}

TEST_CASE("A5 on PG(1,11) has a single orbit of length 12") {
  const auto ctx = Psl2Context::make(11);
  const auto prof = closed_form_profile(ctx, SubgroupSpec::parse("a5"));
  CHECK(format_profile(prof) == "12:1");
}

TEST_CASE("absent classes are rejected") {
  const auto ctx = Psl2Context::make(37);
  CHECK(absent_reason(ctx, SubgroupSpec::parse("s4")));
  CHECK_THROWS_AS(closed_form_profile(ctx, SubgroupSpec::parse("s4")), InputError);
  CHECK(absent_reason(Psl2Context::make(13), SubgroupSpec::parse("a5")));
  CHECK_FALSE(absent_reason(Psl2Context::make(29), SubgroupSpec::parse("a5")));
  CHECK(absent_reason(Psl2Context::make(11), SubgroupSpec::parse("cyclic:7")));
}

TEST_CASE("profiles satisfy the mass identity and orbit-stabilizer") {
  for (const auto& pp : prime_powers_in(4, 200)) {
    const auto ctx = Psl2Context::make(ipow(pp.p, pp.e));
    for (const auto& spec : valid_specs(ctx)) {
      const auto prof = closed_form_profile(ctx, spec);
      CHECK(profile_mass(prof) == ctx.q + 1);
      const auto order = subgroup_order(ctx, spec);
      for (const auto& [len, count] : prof) {
        CHECK(count > 0);
        CHECK(order % len == 0);
      }
    }
  }
}

TEST_CASE("closed forms agree with constructed subgroups for small q") {
  for (std::uint64_t q : {4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29, 31, 32}) {
    const auto ctx = Psl2Context::make(q);
    const auto f = field_for(q);
    for (const auto& spec : valid_specs(ctx)) {
      CAPTURE(q);
      CAPTURE(spec.to_string());
      const PermGroup h = construct_subgroup(f, spec, kDefaultSeed);
      CHECK(h.order() == subgroup_order(ctx, spec));
      CHECK(brute_profile(h) == closed_form_profile(ctx, spec));
    }
  }
}

TEST_CASE("construction does not depend on the seed beyond conjugacy") {
  const auto ctx = Psl2Context::make(29);
  const auto f = field_for(29);
  for (const char* text : {"a5", "a4", "s4", "dihedral:15", "cyclic:7"}) {
    const auto spec = SubgroupSpec::parse(text);
    if (absent_reason(ctx, spec)) continue;
    for (std::uint64_t seed : {1ull, 2ull, 12345ull})
      CHECK(brute_profile(construct_subgroup(f, spec, seed)) == closed_form_profile(ctx, spec));
  }
}

TEST_CASE("polyhedral element-order census") {
  const auto f = field_for(11);
  const auto census = element_order_census(construct_subgroup(f, SubgroupSpec::parse("a5"), kDefaultSeed));
  CHECK(census == std::map<std::uint64_t, std::uint64_t>{{1, 1}, {2, 15}, {3, 20}, {5, 24}});
}
