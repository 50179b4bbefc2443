#include <set>

#include "doctest.h"
#include "steiner4/classifier.hpp"
#include "steiner4/design.hpp"
#include "steiner4/number_theory.hpp"

using namespace steiner4;
using namespace steiner4::classify;

namespace {

using Params = std::vector<std::pair<std::string, std::uint64_t>>;

bool has_params(const ReportEntry& e, const Params& want) {
  for (const auto& [k, v] : want) {
    bool hit = false;
    for (const auto& [ek, ev] : e.params) hit |= ek == k && ev == v;
    if (!hit) return false;
  }
  return true;
}

const ReportEntry& find(const std::vector<ReportEntry>& es, const Params& want) {
  for (const auto& e : es)
    if (has_params(e, want)) return e;
  FAIL("entry not found");
  throw;
}

std::set<std::string> failed_at(const ReportEntry& e, std::uint64_t k) {
  for (const auto& kill : e.witness["kills"])
    if (kill["k"].get<std::uint64_t>() == k) return kill["failed"].get<std::set<std::string>>();
  return {};
}

// Oracle for P(k): product of three consecutive integers.
BigInt p_oracle(std::uint64_t k) {
  BigInt x = 1;
  for (std::uint64_t i = 1; i <= 3; ++i) x *= BigInt(k) - i;
  return x;
}

}  // namespace

TEST_CASE("solve_q reproduces the reference values") {
  CHECK(solve_q(6, 2, 2, EquationVariant::Eq0).q == 17u);
  CHECK(solve_q(12, 5, 2, EquationVariant::Eq0).q == 101u);
  CHECK(solve_q(20, 3, 2, EquationVariant::Eq0).q == 971u);
  CHECK(solve_q(8, 3, 2, EquationVariant::Eq0).q == 37u);
  CHECK(psl2::absent_reason(psl2::Psl2Context::make(37), psl2::SubgroupSpec::parse("s4")));
}

TEST_CASE("solve_q failure reasons") {
  CHECK(solve_q(5, 7, 2, EquationVariant::Eq0).reason == "non-integer");
  // 24/1 + 2 = 26
  CHECK(solve_q(5, 1, 1, EquationVariant::Eq0).reason == "not a prime power");
  // 24/2 + 2 = 14
  CHECK(solve_q(5, 1, 2, EquationVariant::Eq0).reason == "not a prime power");
  // 60/4 + 2 = 17, odd q with n = 1
  CHECK(solve_q(6, 4, 1, EquationVariant::Eq0).reason == "n mismatch");
  CHECK(solve_q(4, 1, 1, EquationVariant::Eq0).reason == "invalid input");
}

TEST_CASE("solve_q inverts the equations exactly") {
  for (std::uint64_t k = 5; k <= 200; ++k)
    for (std::uint64_t pw = 1; pw <= 60; ++pw)
      for (std::uint64_t n : {1, 2})
        for (auto var : {EquationVariant::Eq0, EquationVariant::Eq0NltG, EquationVariant::CondB})
          for (std::uint64_t s : {1, 2, 3}) {
            if (var != EquationVariant::CondB && s != 1) continue;
            const auto r = solve_q(k, pw, n, var, s);
            if (!r.q) continue;
            const std::uint64_t q = *r.q;
            CHECK(equation_residual(q, k, pw, n, var, s) == 0);
            CHECK(eq1_holds(q, k, pw, n, var, s));
            CHECK(eq0_equiv_holds(q, k, pw, n, var, s));
            CHECK(prime_power(q));
            CHECK(q % 2 == (n == 2 ? 1u : 0u));
            // independent forward evaluation
            BigInt lhs = (BigInt(q) - 2) * pw;
            if (var == EquationVariant::Eq0) CHECK(lhs * n == p_oracle(k));
            if (var == EquationVariant::Eq0NltG) CHECK(lhs * n == 2 * p_oracle(k));
            if (var == EquationVariant::CondB) CHECK(lhs == p_oracle(k) * s);
          }
}

TEST_CASE("falling3 matches the oracle") {
  for (std::uint64_t k = 3; k < 500; ++k) CHECK(falling3(k) == p_oracle(k));
}

TEST_CASE("hypotheses use actual orbit lengths") {
  for (const auto& pp : prime_powers_in(4, 128)) {
    const auto ctx = psl2::Psl2Context::make(ipow(pp.p, pp.e));
    for (const auto& h : enumerate_hypotheses(ctx)) {
      const auto prof = psl2::closed_form_profile(ctx, h.spec);
      REQUIRE(prof.contains(h.orbit_length));
      CHECK(prof.at(h.orbit_length) >= h.orbits_on_block);
      CHECK(h.k == h.orbit_length * h.orbits_on_block);
      CHECK(psl2::subgroup_order(ctx, h.spec) == h.pointwise_order * h.orbit_length);
      if (h.variant == EquationVariant::CondB) {
        CHECK(ctx.p == 2);
        CHECK(ctx.e % h.s == 0);
        CHECK(is_prime(h.s));
      }
      if (h.variant == EquationVariant::Eq0NltG) CHECK(ctx.odd());
    }
  }
}

TEST_CASE("PSL(2,q) scan endpoints") {
  const auto r17 = psl2_scan_q(17);
  bool cited = false;
  for (const auto& o : r17.solved)
    if (o.hypothesis.k == 6) cited |= o.refuted_by == Refutation::Nonexistence;
  CHECK(cited);

  const auto r101 = psl2_scan_q(101);
  bool a5 = false;
  for (const auto& o : r101.solved)
    if (o.hypothesis.k == 12 && o.hypothesis.spec == psl2::SubgroupSpec::parse("a5")) {
      a5 = true;
      CHECK(o.hypothesis.pointwise_order == 5);
      CHECK(o.refuted_by == Refutation::OrbitDesign);
    }
  CHECK(a5);

  for (const auto& e : psl2_case_scan(200)) CHECK(e.verdict != Verdict::Survivor);
}

TEST_CASE("nonexistence table") {
  CHECK(known_nonexistent(4, 18, 6, 1));
  CHECK_FALSE(known_nonexistent(4, 23, 7, 1));
  REQUIRE(nonexistence_table().size() == 1);
  CHECK_NOTHROW(citation(nonexistence_table()[0].citation_key));
}

TEST_CASE("AGammaL(1) scan") {
  const auto es = check_affine_gammaL1(10000);
  for (const auto& e : es) CHECK(e.verdict == Verdict::EliminatedMechanized);
  const auto& e32 = find(es, {{"v", 32}});
  CHECK(e32.witness["k_max"] == 8);
  CHECK(e32.witness["k_min_inequality"] == 7);
  CHECK(e32.witness["checked"].size() == 2);
  for (const auto& c : e32.witness["checked"]) CHECK(c["failed"].size() >= 1);
  const auto& e243 = find(es, {{"v", 243}});
  CHECK(e243.witness["k_max"] == 18);
  CHECK(e243.witness["k_min_inequality"] == 50);
}

TEST_CASE("fixed-degree endpoints") {
  const auto sp = scan_family(Family::AffineSp, Limits{});
  const auto& v16 = find(sp, {{"v", 16}});
  CHECK(v16.verdict == Verdict::EliminatedMechanized);
  CHECK(failed_at(v16, 5).contains("lemma_d"));
  CHECK(failed_at(v16, 6).contains("lemma_d"));

  const auto g2 = scan_family(Family::AffineG2, Limits{});
  const auto& v64 = find(g2, {{"v", 64}});
  CHECK(v64.verdict == Verdict::EliminatedMechanized);
  for (std::uint64_t k = 5; k <= 10; ++k) CHECK(failed_at(v64, k).contains("divprop"));

  const auto m = scan_family(Family::Mathieu, Limits{});
  for (std::uint64_t k = 5; k <= 7; ++k) CHECK(find(m, {{"v", 22}, {"k", k}}).verdict == Verdict::EliminatedMechanized);

  const auto psl7 = check_psl3(7);
  CHECK(psl7.verdict == Verdict::EliminatedMechanized);
  CHECK(failed_at(psl7, 6).contains("lemma_d"));
  CHECK(failed_at(psl7, 8).contains("derived_lambda_2"));

  const auto psl13 = check_psl3(13);
  CHECK(psl13.verdict == Verdict::EliminatedMechanized);
  CHECK(failed_at(psl13, 8).size() > 0);
  CHECK(failed_at(psl13, 12).size() > 0);
}

TEST_CASE("PSU, Suzuki, Ree and Sp(2d,2) scans") {
  for (const auto& e : check_psu3(1000)) CHECK(e.verdict == Verdict::EliminatedMechanized);
  const auto psu = check_psu3(3);
  REQUIRE(psu.size() == 1);
  CHECK(psu[0].witness["k_range"] == Json::array({5, 7}));
  CHECK(psu[0].witness["modulus"] == 325);

  const auto sz = check_sz(10);
  CHECK(sz.size() == 10);
  for (const auto& e : sz) {
    CHECK(e.verdict == Verdict::EliminatedMechanized);
    CHECK(e.witness["uniform_bound"] == true);
  }
  CHECK(sz[0].witness["k_max"] == 10);
  CHECK(sz[0].witness["max_P"] == 504);
  CHECK(sz[0].witness["bound"] == 558);
  for (const auto& e : check_ree(6)) CHECK(e.verdict == Verdict::EliminatedMechanized);

  const auto sp = check_sp2d2(1'000'000);
  const auto& v120 = find(sp, {{"d", 4}, {"v", 120}});
  CHECK(v120.witness["k5"]["first_failure"] == "lambda_1");
  CHECK(v120.witness["k5"]["value"] == "273819/4");
}

TEST_CASE("report JSON round trip and canonical order") {
  Limits l;
  l.psl2_max_q = 64;
  l.max_v = 5000;
  l.psu3_max_q = 50;
  l.sz_max_e = 3;
  l.ree_max_e = 2;
  const auto rep = run_classification(l);
  const std::string text = serialize_report(rep.entries);
  CHECK(serialize_json(Json::parse(text)) == text);

  auto shuffled = rep.entries;
  std::reverse(shuffled.begin(), shuffled.end());
  canonical_sort(shuffled);
  CHECK(serialize_report(shuffled) == text);

  l.jobs = 4;
  CHECK(serialize_report(run_classification(l).entries) == text);
}

TEST_CASE("cited entries are exactly ledger citations") {
  Limits l;
  l.psl2_max_q = 100;
  l.max_v = 20000;
  const auto rep = run_classification(l);
  std::set<std::string> keys;
  for (const auto& c : cited_ledger()) keys.insert(c.key);
  for (const auto& e : rep.entries) {
    if (e.verdict != Verdict::EliminatedCited) continue;
    CHECK(keys.contains(e.rule));
    CHECK(e.citation == citation(e.rule).text);
  }
  CHECK(rep.matches_main_theorem);
}

TEST_CASE("family names") {
  for (Family f : all_families()) CHECK(family_from_cli_name(family_cli_name(f)) == f);
  CHECK_FALSE(family_from_cli_name("nope"));
}
