#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "steiner4/bigint.hpp"
#include "steiner4/psl2_orbits.hpp"

namespace steiner4::classify {

// ---------------------------------------------------------------------------
// Report types

enum class Family {
  AffineGammaL1,
  AffineSL,
  AffineSp,
  AffineG2,
  AffineSporadic,
  Alt,
  PSL2,
  PSLd,
  PSU3,
  Sz,
  Ree,
  Sp2d2,
  PSL2_11,
  PSL2_8,
  Mathieu,
  M11_12,
  A7_15,
  HS,
  Co3,
};

enum class Verdict { Survivor, EliminatedMechanized, EliminatedCited };

std::string family_tag(Family f);
/// CLI spelling, e.g. "affine-gammal1", "psl2", "mathieu".
std::string family_cli_name(Family f);
std::optional<Family> family_from_cli_name(const std::string& name);
const std::vector<Family>& all_families();
std::string verdict_name(Verdict v);

using Json = nlohmann::ordered_json;

struct ReportEntry {
  Family family = Family::Alt;
  std::vector<std::pair<std::string, std::uint64_t>> params;  // ordered, compared lexicographically by value
  Verdict verdict = Verdict::EliminatedMechanized;
  std::string rule;
  Json witness = Json::object();
  std::string citation;
};

struct Citation {
  std::string key;
  std::string text;
};

/// Every structural argument and external fact the report may cite.
const std::vector<Citation>& cited_ledger();
const Citation& citation(const std::string& key);

/// Known non-existence results (t, v, k, lambda) -> citation key.
struct NonexistenceEntry {
  std::uint64_t t, v, k, lambda;
  std::string citation_key;
};
const std::vector<NonexistenceEntry>& nonexistence_table();
std::optional<std::string> known_nonexistent(std::uint64_t t, std::uint64_t v, std::uint64_t k, std::uint64_t lambda);

// ---------------------------------------------------------------------------
// PSL(2,q) subcase

/// Which orbit equation a hypothesis uses.
enum class EquationVariant {
  Eq0,      // N = G: (q-2) |PSL_0B| n = (k-1)(k-2)(k-3)
  Eq0NltG,  // q odd, N < G: (q-2) |PSL_0B| n / 2 = (k-1)(k-2)(k-3)
  CondB,    // q even, N < G: (q-2) |PSL_0B| = (k-1)(k-2)(k-3) s
};

std::string variant_name(EquationVariant v);

/// P(k) = (k-1)(k-2)(k-3).
BigInt falling3(std::uint64_t k);

struct SolveResult {
  std::optional<std::uint64_t> q;
  std::string reason;  // "ok", "non-integer", "not a prime power", "q < 5", "n mismatch"
};

/// Solves the variant's linear equation for q. `s` is used by CondB only.
SolveResult solve_q(std::uint64_t k, std::uint64_t pointwise_order, std::uint64_t n, EquationVariant variant,
                    std::uint64_t s = 1);

/// Left side minus right side of the variant's equation, exactly.
BigInt equation_residual(std::uint64_t q, std::uint64_t k, std::uint64_t pointwise_order, std::uint64_t n,
                         EquationVariant variant, std::uint64_t s = 1);

/// k | (q-2)|PSL_0B| n + 6 (scaled as in the variant).
bool eq1_holds(std::uint64_t q, std::uint64_t k, std::uint64_t pointwise_order, std::uint64_t n,
               EquationVariant variant, std::uint64_t s = 1);
/// (q-2)|PSL_0B| n + 6 = k(k^2-6k+11) (scaled as in the variant).
bool eq0_equiv_holds(std::uint64_t q, std::uint64_t k, std::uint64_t pointwise_order, std::uint64_t n,
                     EquationVariant variant, std::uint64_t s = 1);

struct StabilizerHypothesis {
  psl2::SubgroupSpec spec;           // class of PSL(2,q)_B
  std::uint64_t orbit_length = 0;    // length of 0^{PSL(2,q)_B}
  std::uint64_t pointwise_order = 0; // |PSL(2,q)_0B| = |spec| / orbit_length
  EquationVariant variant = EquationVariant::Eq0;
  std::uint64_t s = 1;               // scale: 1 (Eq0), 2 (Eq0NltG), prime s (CondB)
  std::uint32_t orbits_on_block = 1; // PSL(2,q)_B-orbits on B: 1, 2 or s
  std::uint64_t k = 0;               // orbit_length * orbits_on_block
};

/// How a hypothesis was disposed of.
enum class Refutation {
  Equation,
  KRange,
  Admissibility,
  Divprop,
  Nonexistence,
  OrbitDesign,
  None,  // survivor
};
std::string refutation_name(Refutation r);

struct HypothesisOutcome {
  StabilizerHypothesis hypothesis;
  Refutation refuted_by = Refutation::None;
  std::string detail;
};

struct Psl2QResult {
  std::uint64_t q = 0;
  std::size_t hypotheses = 0;
  /// Outcomes of every hypothesis that solved its equation (the rest fail at Refutation::Equation).
  std::vector<HypothesisOutcome> solved;
};

/// All hypotheses at a single q.
std::vector<StabilizerHypothesis> enumerate_hypotheses(const psl2::Psl2Context& ctx);

Psl2QResult psl2_scan_q(std::uint64_t q, std::uint64_t seed = psl2::kDefaultSeed);

// ---------------------------------------------------------------------------
// Checkers and the full run

struct Limits {
  std::uint64_t psl2_max_q = 1000;
  std::uint64_t psu3_max_q = 1000;
  std::uint64_t max_v = 1'000'000;
  std::uint32_t sz_max_e = 10;
  std::uint32_t ree_max_e = 6;
  std::uint64_t seed = psl2::kDefaultSeed;
  unsigned jobs = 1;
};

/// Report entries of one family, canonically ordered.
std::vector<ReportEntry> scan_family(Family family, const Limits& limits);

std::vector<ReportEntry> psl2_case_scan(std::uint64_t q_max, std::uint64_t seed = psl2::kDefaultSeed);
std::vector<ReportEntry> check_affine_gammaL1(std::uint64_t max_v);
std::vector<ReportEntry> check_psu3(std::uint64_t q_max);
std::vector<ReportEntry> check_sz(std::uint32_t e_max);
std::vector<ReportEntry> check_ree(std::uint32_t e_max);
std::vector<ReportEntry> check_sp2d2(std::uint64_t max_v);
/// PSL(3,q) on points of PG(2,q).
ReportEntry check_psl3(std::uint64_t q);
/// PSL(d,q), d >= 3, v <= max_v.
std::vector<ReportEntry> check_psld(std::uint64_t max_v);
/// Fixed-degree and sporadic entries: AffineSporadic, AffineG2, Alt, PSL2_11, PSL2_8, Mathieu, M11_12, A7_15, HS, Co3.
std::vector<ReportEntry> check_small_cases(Family family, std::uint64_t max_v);

struct ClassificationReport {
  std::vector<ReportEntry> entries;
  /// (group name, "4-(v,k,1)") for each Survivor.
  std::vector<std::pair<std::string, std::string>> survivors;
  bool matches_main_theorem = false;
};

ClassificationReport run_classification(const Limits& limits);

/// Sorts by family, then params.
void canonical_sort(std::vector<ReportEntry>& entries);

Json entry_to_json(const ReportEntry& e);
Json report_to_json(const std::vector<ReportEntry>& entries);
/// A JSON array with one compact entry per line.
std::string serialize_json(const Json& report);
std::string serialize_report(const std::vector<ReportEntry>& entries);

/// Survivors expected by the classification: (M11, 4-(11,5,1)) and (M23, 4-(23,7,1)).
bool survivors_match_main_theorem(const std::vector<ReportEntry>& entries);

}  // namespace steiner4::classify
