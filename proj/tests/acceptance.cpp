// One PASS/FAIL line per acceptance criterion; exit 0 iff all pass.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "cli.hpp"
#include "steiner4/classifier.hpp"
#include "steiner4/design.hpp"
#include "steiner4/number_theory.hpp"
#include "steiner4/psl2_orbits.hpp"
#include "steiner4/witt.hpp"

using namespace steiner4;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

// Counts blocks through every t-subset by direct inclusion, independent of verify_steiner.
std::pair<std::size_t, bool> exact_cover(const IncidenceStructure& d, std::uint32_t t) {
  std::vector<std::uint32_t> masks;
  for (const auto& b : d.blocks()) {
    std::uint32_t m = 0;
    for (Point x : b) m |= 1u << x;
    masks.push_back(m);
  }
  std::size_t subsets = 0;
  bool ok = true;
  for (std::uint32_t s = 0; s < (1u << d.v()); ++s) {
    if (static_cast<std::uint32_t>(__builtin_popcount(s)) != t) continue;
    ++subsets;
    int c = 0;
    for (auto m : masks) c += (m & s) == s;
    ok &= c == 1;
  }
  return {subsets, ok};
}

Outcome witt_criterion(std::uint32_t v, std::size_t blocks, std::size_t quadruples, std::uint64_t order,
                       std::size_t flags, double limit) {
  Outcome o;
  const auto t0 = Clock::now();
  const auto design = witt::witt_design(v);
  o.require(design.b() == blocks, "block count " + std::to_string(design.b()));
  const auto [subsets, exact] = exact_cover(design, 4);
  o.require(subsets == quadruples, "quadruples " + std::to_string(subsets));
  o.require(exact, "some quadruple not covered exactly once");
  o.require(verify_steiner(design, 4).pass, "verify_steiner failed");
  const auto pv = witt::verify_pair(v);
  o.require(pv.group_order == order, "group order " + pv.group_order.str());
  o.require(pv.flags.flag_orbit == flags && pv.flags.pass, "flag orbit " + std::to_string(pv.flags.flag_orbit));
  const double dt = seconds_since(t0);
  o.require(dt < limit, "runtime " + std::to_string(dt) + " s");
  std::ostringstream ss;
  ss << "b=" << design.b() << " quadruples=" << subsets << " |G|=" << pv.group_order
     << " flag orbit=" << pv.flags.flag_orbit << " (" << dt << " s)";
  if (o.detail.empty()) o.detail = ss.str();
  return o;
}

Outcome criterion1() { return witt_criterion(11, 66, 330, 7920, 330, 5.0); }
Outcome criterion2() { return witt_criterion(23, 253, 8855, 10200960, 1771, 60.0); }

Outcome criterion3() {
  Outcome o;
  for (std::uint32_t v : {11u, 23u}) {
    const auto pv = witt::verify_pair(v);
    o.require(pv.flags.pass, "v=" + std::to_string(v) + " not flag-transitive");
    o.require(is_point_2transitive(witt::mathieu_group(v)), "v=" + std::to_string(v) + " not point 2-transitive");
  }
  if (o.pass) o.detail = "M11 and M23 are point 2-transitive";
  return o;
}

Outcome criterion4() {
  Outcome o;
  const auto t0 = Clock::now();
  std::vector<std::uint64_t> qs;
  for (const auto& pp : prime_powers_in(4, 81)) qs.push_back(ipow(pp.p, pp.e));
  qs.insert(qs.end(), {121, 125, 128});
  std::size_t specs = 0, bad = 0;
  for (std::uint64_t q : qs) {
    const auto ctx = psl2::Psl2Context::make(q);
    const auto field = gf::Field::build(static_cast<std::uint32_t>(ctx.p), ctx.e);
    for (const auto& spec : psl2::valid_specs(ctx)) {
      ++specs;
      const auto h = psl2::construct_subgroup(field, spec, psl2::kDefaultSeed);
      if (psl2::brute_profile(h) != psl2::closed_form_profile(ctx, spec)) {
        ++bad;
        o.require(false, "q=" + std::to_string(q) + " " + spec.to_string());
      }
    }
  }
  const double dt = seconds_since(t0);
  o.require(dt < 60.0, "runtime " + std::to_string(dt) + " s");
  if (o.pass)
    o.detail = std::to_string(qs.size()) + " fields, " + std::to_string(specs) + " classes, " + std::to_string(bad) +
               " disagreements (" + std::to_string(dt) + " s)";
  return o;
}

Outcome criterion5() {
  using classify::EquationVariant;
  Outcome o;
  const std::vector<std::tuple<std::uint64_t, std::uint64_t, std::uint64_t>> cases{
      {6, 2, 17}, {12, 5, 101}, {20, 3, 971}, {8, 3, 37}};
  for (auto [k, pw, q] : cases) {
    const auto r = classify::solve_q(k, pw, 2, EquationVariant::Eq0);
    o.require(r.q == q, "k=" + std::to_string(k) + " gave " + (r.q ? std::to_string(*r.q) : r.reason));
  }
  const auto s4 = psl2::absent_reason(psl2::Psl2Context::make(37), psl2::SubgroupSpec::parse("s4"));
  o.require(s4.has_value() && 37 % 8 != 1 && 37 % 8 != 7, "S4 not rejected at q=37");
  if (o.pass) o.detail = "k=6->17, k=12->101, k=20->971, k=8->37 (S4 absent: " + *s4 + ")";
  return o;
}

std::set<std::string> failed_at(const classify::ReportEntry& e, std::uint64_t k) {
  for (const auto& kill : e.witness["kills"])
    if (kill["k"].get<std::uint64_t>() == k) return kill["failed"].get<std::set<std::string>>();
  return {};
}

const classify::ReportEntry* find(const std::vector<classify::ReportEntry>& es,
                                  std::vector<std::pair<std::string, std::uint64_t>> want) {
  for (const auto& e : es) {
    bool all = true;
    for (const auto& w : want) all &= std::find(e.params.begin(), e.params.end(), w) != e.params.end();
    if (all) return &e;
  }
  return nullptr;
}

Outcome criterion6() {
  using classify::Family;
  using classify::Verdict;
  Outcome o;
  const classify::Limits lim;

  const auto sp = classify::scan_family(Family::AffineSp, lim);
  const auto* v16 = find(sp, {{"v", 16}});
  o.require(v16 && v16->verdict == Verdict::EliminatedMechanized && failed_at(*v16, 5).contains("lemma_d") &&
                failed_at(*v16, 6).contains("lemma_d"),
            "v=16");

  const auto g2 = classify::scan_family(Family::AffineG2, lim);
  const auto* v64 = find(g2, {{"v", 64}});
  bool all_div = v64 && v64->verdict == Verdict::EliminatedMechanized;
  for (std::uint64_t k = 5; all_div && k <= 10; ++k) all_div = failed_at(*v64, k).contains("divprop");
  o.require(all_div, "v=64");

  const auto m = classify::scan_family(Family::Mathieu, lim);
  for (std::uint64_t k = 5; k <= 7; ++k) {
    const auto* e = find(m, {{"v", 22}, {"k", k}});
    o.require(e && e->verdict == Verdict::EliminatedMechanized, "v=22 k=" + std::to_string(k));
  }

  const auto psl7 = classify::check_psl3(7);
  o.require(psl7.verdict == Verdict::EliminatedMechanized && failed_at(psl7, 6).contains("lemma_d") &&
                failed_at(psl7, 8).contains("derived_lambda_2"),
            "PSL(3,7)");

  std::size_t scanned = 0;
  for (Family f : {Family::Sz, Family::Ree, Family::PSU3})
    for (const auto& e : classify::scan_family(f, lim)) {
      ++scanned;
      o.require(e.verdict != Verdict::Survivor, classify::family_tag(f) + " survivor");
    }
  if (o.pass)
    o.detail = "v=16, v=64, v=22, PSL(3,7) endpoints hold; " + std::to_string(scanned) + " Sz/Ree/PSU entries eliminated";
  return o;
}

std::string run_classify(const std::filesystem::path& out, int& code) {
  const std::string path = out.string();
  const char* argv[] = {"steiner4", "classify", "--out", path.c_str()};
  std::ostringstream log, err;
  code = cli::run(4, argv, log, err);
  std::ifstream in(out, std::ios::binary);
  std::stringstream text;
  text << in.rdbuf();
  return text.str();
}

std::string first_report;

Outcome criterion7() {
  using classify::Verdict;
  Outcome o;
  const auto t0 = Clock::now();
  const auto path = std::filesystem::temp_directory_path() / "steiner4_acceptance_1.json";
  int code = -1;
  first_report = run_classify(path, code);
  std::filesystem::remove(path);
  const double dt = seconds_since(t0);
  o.require(code == 0, "classify exit code " + std::to_string(code));
  o.require(dt < 600.0, "runtime " + std::to_string(dt) + " s");

  const auto json = classify::Json::parse(first_report);
  std::set<std::string> keys;
  for (const auto& c : classify::cited_ledger()) keys.insert(c.key);
  std::set<std::string> survivors;
  std::size_t mech = 0, cited = 0;
  for (const auto& e : json) {
    const std::string verdict = e["verdict"];
    if (verdict == "Survivor") {
      o.require(e["witness"].value("verified", false), "unverified survivor");
      survivors.insert(e["witness"].value("group", std::string("?")) + " 4-(" + std::to_string(e["params"]["v"].get<int>()) +
                       "," + std::to_string(e["params"]["k"].get<int>()) + ",1)");
    } else if (verdict == "EliminatedMechanized") {
      ++mech;
    } else if (verdict == "EliminatedCited") {
      ++cited;
      o.require(keys.contains(e["rule"].get<std::string>()), "citation outside ledger");
    } else {
      o.require(false, "unknown verdict " + verdict);
    }
  }
  o.require(survivors == std::set<std::string>{"M11 4-(11,5,1)", "M23 4-(23,7,1)"}, "survivor set");
  if (o.pass) {
    std::ostringstream ss;
    ss << json.size() << " entries: " << mech << " mechanized, " << cited << " cited, survivors {M11 4-(11,5,1), "
       << "M23 4-(23,7,1)} (" << dt << " s)";
    o.detail = ss.str();
  }
  return o;
}

Outcome criterion8() {
  Outcome o;
  const auto path = std::filesystem::temp_directory_path() / "steiner4_acceptance_2.json";
  int code = -1;
  const std::string second = run_classify(path, code);
  std::filesystem::remove(path);
  o.require(!first_report.empty(), "first run missing");
  o.require(second == first_report, "reports differ");
  if (o.pass) o.detail = "two classify runs byte-identical (" + std::to_string(second.size()) + " bytes)";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"1 Witt 4-(11,5,1) and M11", criterion1},
      {"2 Witt 4-(23,7,1) and M23", criterion2},
      {"3 flag-transitive implies point 2-transitive", criterion3},
      {"4 orbit closed forms vs oracle", criterion4},
      {"5 orbit equation solver values", criterion5},
      {"6 elimination endpoints", criterion6},
      {"7 full classification", criterion7},
      {"8 determinism", criterion8},
  };
  bool all = true;
  for (const auto& [name, fn] : criteria) {
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    all &= o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << name << ": " << o.detail << std::endl;
  }
  return all ? 0 : 1;
}
