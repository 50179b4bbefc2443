#include <algorithm>

#include "steiner4/classifier.hpp"
#include "steiner4/errors.hpp"

namespace steiner4::classify {

namespace {

struct FamilyName {
  Family family;
  const char* tag;
  const char* cli;
};

constexpr FamilyName kFamilies[] = {
    {Family::AffineGammaL1, "AffineGammaL1", "affine-gammal1"},
    {Family::AffineSL, "AffineSL", "affine-sl"},
    {Family::AffineSp, "AffineSp", "affine-sp"},
    {Family::AffineG2, "AffineG2", "affine-g2"},
    {Family::AffineSporadic, "AffineSporadic", "affine-sporadic"},
    {Family::Alt, "Alt", "alt"},
    {Family::PSL2, "PSL2", "psl2"},
    {Family::PSLd, "PSLd", "psld"},
    {Family::PSU3, "PSU3", "psu3"},
    {Family::Sz, "Sz", "sz"},
    {Family::Ree, "Ree", "ree"},
    {Family::Sp2d2, "Sp2d2", "sp2d2"},
    {Family::PSL2_11, "PSL2_11", "psl2-11"},
    {Family::PSL2_8, "PSL2_8", "psl2-8"},
    {Family::Mathieu, "Mathieu", "mathieu"},
    {Family::M11_12, "M11_12", "m11-12"},
    {Family::A7_15, "A7_15", "a7-15"},
    {Family::HS, "HS", "hs"},
    {Family::Co3, "Co3", "co3"},
};

const FamilyName& lookup(Family f) {
  for (const auto& n : kFamilies)
    if (n.family == f) return n;
  throw InternalError("unknown family");
}

}  // namespace

std::string family_tag(Family f) { return lookup(f).tag; }
std::string family_cli_name(Family f) { return lookup(f).cli; }

std::optional<Family> family_from_cli_name(const std::string& name) {
  for (const auto& n : kFamilies)
    if (name == n.cli) return n.family;
  return std::nullopt;
}

const std::vector<Family>& all_families() {
  static const std::vector<Family> all = [] {
    std::vector<Family> out;
    for (const auto& n : kFamilies) out.push_back(n.family);
    return out;
  }();
  return all;
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Survivor: return "Survivor";
    case Verdict::EliminatedMechanized: return "EliminatedMechanized";
    case Verdict::EliminatedCited: return "EliminatedCited";
  }
  return "?";
}

const std::vector<Citation>& cited_ledger() {
  static const std::vector<Citation> ledger{
      {"nonexistence-4-18-6-1", "Witt (1938): no 4-(18,6,1) design exists"},
      {"kantor-4-transitive",
       "Kantor (1985): a 4-transitive group on a non-trivial Steiner 4-design is M11 on 4-(11,5,1) or M23 on "
       "4-(23,7,1)"},
      {"affine-sl-transvection", "transvection and dilatation fixed points force blocks into affine subspaces"},
      {"affine-sp-transvection", "symplectic transvection fixed points force blocks into affine subspaces"},
      {"affine-sp-hyperbolic", "Sp(2d,2) on 2^{2d}: hyperbolic pairs force blocks into affine planes"},
      {"affine-g2-form", "G2(q) fixed points on the alternating trilinear form bound k"},
      {"psl3-4-block-stabilizer", "PSL(3,4), k=5: block stabilizer order count"},
      {"psl3-collinearity", "PSL(3,q): translation group of a line forces collinear blocks"},
      {"psld-induction", "PSL(d,q), d>3: induction on d from d=3"},
      {"m24-embedding", "embedding in M24: the invariant structure is a 3-(12,6,2) design, not a Steiner system"},
      {"sp2d2-hyperbolic", "Sp(2d,2) on quadratic forms: the hyperbolic-line argument forces k=5"},
  };
  return ledger;
}

const Citation& citation(const std::string& key) {
  for (const auto& c : cited_ledger())
    if (c.key == key) return c;
  throw InternalError("unknown citation key: " + key);
}

const std::vector<NonexistenceEntry>& nonexistence_table() {
  static const std::vector<NonexistenceEntry> table{{4, 18, 6, 1, "nonexistence-4-18-6-1"}};
  return table;
}

std::optional<std::string> known_nonexistent(std::uint64_t t, std::uint64_t v, std::uint64_t k,
                                             std::uint64_t lambda) {
  for (const auto& e : nonexistence_table())
    if (e.t == t && e.v == v && e.k == k && e.lambda == lambda) return e.citation_key;
  return std::nullopt;
}

void canonical_sort(std::vector<ReportEntry>& entries) {
  std::stable_sort(entries.begin(), entries.end(), [](const ReportEntry& a, const ReportEntry& b) {
    if (a.family != b.family) return a.family < b.family;
    return std::lexicographical_compare(a.params.begin(), a.params.end(), b.params.begin(), b.params.end(),
                                        [](const auto& x, const auto& y) { return x.second < y.second; });
  });
}

Json entry_to_json(const ReportEntry& e) {
  Json params = Json::object();
  for (const auto& [k, v] : e.params) params[k] = v;
  return Json{{"family", family_tag(e.family)}, {"params", params},   {"verdict", verdict_name(e.verdict)},
              {"rule", e.rule},                 {"witness", e.witness}, {"citation", e.citation}};
}

Json report_to_json(const std::vector<ReportEntry>& entries) {
  Json out = Json::array();
  for (const auto& e : entries) out.push_back(entry_to_json(e));
  return out;
}

std::string serialize_json(const Json& report) {
  std::string out = "[\n";
  for (std::size_t i = 0; i < report.size(); ++i) out += report[i].dump() + (i + 1 < report.size() ? ",\n" : "\n");
  return out + "]\n";
}

std::string serialize_report(const std::vector<ReportEntry>& entries) { return serialize_json(report_to_json(entries)); }

}  // namespace steiner4::classify
