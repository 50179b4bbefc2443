#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "steiner4/classifier.hpp"
#include "steiner4/design.hpp"
#include "steiner4/errors.hpp"
#include "steiner4/field.hpp"
#include "steiner4/number_theory.hpp"
#include "steiner4/psl2_orbits.hpp"
#include "steiner4/witt.hpp"

namespace steiner4::cli {

namespace {

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kUsage = 2;

struct Options {
  std::string file, group, out, emit, family, subgroup;
  std::uint32_t t = 4;
  std::uint32_t v = 0;
  std::uint64_t q = 0;
  std::optional<std::uint64_t> max_q, max_v;
  std::optional<std::uint32_t> max_e;
  std::uint64_t seed = psl2::kDefaultSeed;
  unsigned jobs = 1;
  bool oracle = false;
  bool verify = false;
};

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot open " + path + " for writing");
  f << text;
  if (!f) throw InputError("failed writing " + path);
}

int cmd_verify_design(const Options& o, std::ostream& out) {
  const IncidenceStructure d = read_design_file(o.file);
  const SteinerVerdict sv = verify_steiner(d, o.t);
  out << "design: v=" << d.v() << " k=" << d.k() << " b=" << d.b() << "\n";
  if (sv.pass) {
    out << "steiner " << o.t << "-design: PASS\n";
  } else {
    out << "steiner " << o.t << "-design: FAIL";
    if (sv.witness) {
      out << " (subset {";
      for (std::size_t i = 0; i < sv.witness->size(); ++i) out << (i ? " " : "") << (*sv.witness)[i];
      out << "} covered " << sv.witness_count << " times)";
    }
    out << "\n";
  }
  bool ok = sv.pass;
  if (!o.group.empty()) {
    const PermGroup g = read_group_file(o.group);
    require_automorphisms(d, g);
    const FlagTransitivity ft = is_flag_transitive(d, g);
    const bool two = is_point_2transitive(g);
    out << "group order: " << g.order() << "\n";
    out << "flag orbit: " << ft.flag_orbit << " of " << ft.flag_count << "\n";
    out << "flag-transitive: " << (ft.pass ? "PASS" : "FAIL") << "\n";
    out << "point 2-transitive: " << (two ? "PASS" : "FAIL") << "\n";
    ok = ok && ft.pass && two;
  }
  return ok ? kOk : kMismatch;
}

int cmd_witt(const Options& o, std::ostream& out) {
  const IncidenceStructure d = witt::witt_design(o.v);
  if (!o.emit.empty()) {
    std::ostringstream text;
    write_design(text, d);
    write_text(o.emit, text.str(), out);
  }
  if (!o.verify) {
    if (o.emit.empty()) out << "4-(" << d.v() << "," << d.k() << ",1): " << d.b() << " blocks\n";
    return kOk;
  }
  const witt::PairVerdict pv = witt::verify_pair(o.v);
  std::ostream& log = o.emit == "-" ? std::cerr : out;
  log << "blocks: " << pv.blocks << "\n";
  log << "steiner: " << (pv.steiner ? "PASS" : "FAIL") << "\n";
  log << "group order: " << pv.group_order << "\n";
  log << "flag orbit: " << pv.flags.flag_orbit << " of " << pv.flags.flag_count << "\n";
  log << "block orbit: " << pv.block_orbit << "\n";
  log << "point 2-transitive: " << (pv.point_2transitive ? "PASS" : "FAIL") << "\n";
  log << (pv.pass() ? "PASS" : "FAIL: " + *pv.failure) << "\n";
  return pv.pass() ? kOk : kMismatch;
}

int cmd_orbits(const Options& o, std::ostream& out) {
  const auto ctx = psl2::Psl2Context::make(o.q);
  const auto spec = psl2::SubgroupSpec::parse(o.subgroup);
  const auto closed = psl2::closed_form_profile(ctx, spec);
  out << psl2::format_profile(closed) << "\n";
  if (!o.oracle) return kOk;
  const gf::Field f = gf::Field::build(static_cast<std::uint32_t>(ctx.p), ctx.e);
  const PermGroup h = psl2::construct_subgroup(f, spec, o.seed);
  const auto brute = psl2::brute_profile(h);
  if (brute == closed) {
    out << "AGREE\n";
    return kOk;
  }
  out << "DISAGREE: oracle " << psl2::format_profile(brute) << "\n";
  return kMismatch;
}

classify::Limits limits_from(const Options& o) {
  classify::Limits l;
  if (o.max_q) l.psl2_max_q = l.psu3_max_q = *o.max_q;
  if (o.max_v) l.max_v = *o.max_v;
  if (o.max_e) l.sz_max_e = l.ree_max_e = *o.max_e;
  l.seed = o.seed;
  l.jobs = o.jobs;
  return l;
}

void summarize(const std::vector<classify::ReportEntry>& entries, std::ostream& out) {
  std::size_t mech = 0, cited = 0, surv = 0;
  for (const auto& e : entries) {
    if (e.verdict == classify::Verdict::EliminatedMechanized) ++mech;
    if (e.verdict == classify::Verdict::EliminatedCited) ++cited;
    if (e.verdict == classify::Verdict::Survivor) ++surv;
  }
  out << "entries: " << entries.size() << " mechanized: " << mech << " cited: " << cited << " survivors: " << surv
      << "\n";
}

// Survivors are acceptable only when they are the verified Witt pairs.
bool survivors_expected(const std::vector<classify::ReportEntry>& entries) {
  for (const auto& e : entries) {
    if (e.verdict != classify::Verdict::Survivor) continue;
    if (e.family != classify::Family::Mathieu || !e.witness.value("verified", false)) return false;
  }
  return true;
}

int cmd_scan(const Options& o, std::ostream& out) {
  const auto fam = classify::family_from_cli_name(o.family);
  if (!fam) throw InputError("unknown family: " + o.family);
  const auto entries = classify::scan_family(*fam, limits_from(o));
  const std::string json = classify::serialize_report(entries);
  if (o.out.empty()) {
    out << json;
  } else {
    write_text(o.out, json, out);
    summarize(entries, out);
  }
  return survivors_expected(entries) ? kOk : kMismatch;
}

int cmd_classify(const Options& o, std::ostream& out) {
  const auto rep = classify::run_classification(limits_from(o));
  if (!o.out.empty()) write_text(o.out, classify::serialize_report(rep.entries), out);
  std::ostream& log = o.out == "-" ? std::cerr : out;
  summarize(rep.entries, log);
  for (const auto& [group, design] : rep.survivors) log << "survivor: " << group << " " << design << "\n";
  log << (rep.matches_main_theorem ? "survivor set matches: PASS" : "survivor set mismatch: FAIL") << "\n";
  return rep.matches_main_theorem ? kOk : kMismatch;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Flag-transitive Steiner 4-design classifier", "steiner4"};
  app.require_subcommand(1, 1);
  Options o;

  auto* verify = app.add_subcommand("verify-design", "check a design file (and optionally a group)");
  verify->add_option("--file", o.file, "design file")->required()->check(CLI::ExistingFile);
  verify->add_option("--t", o.t, "strength")->check(CLI::Range(1u, 8u));
  verify->add_option("--group", o.group, "group file")->check(CLI::ExistingFile);

  auto* witt_cmd = app.add_subcommand("witt", "build a Witt design");
  witt_cmd->add_option("--v", o.v, "11 or 23")->required()->check(CLI::IsMember({11u, 23u}));
  witt_cmd->add_flag("--verify", o.verify, "verify design and Mathieu group");
  witt_cmd->add_option("--emit", o.emit, "write the design ('-' for stdout)");

  auto* orbits_cmd = app.add_subcommand("orbits", "orbit profile of a PSL(2,q) subgroup class");
  orbits_cmd->add_option("--q", o.q, "prime power q > 3")->required();
  orbits_cmd->add_option("--subgroup", o.subgroup, "cyclic:c | dihedral:c | ea:qbar | semi:qbar:c | a4 | s4 | a5 | psl2:qbar | pgl2:qbar")
      ->required();
  orbits_cmd->add_flag("--oracle", o.oracle, "compare against a constructed subgroup");
  orbits_cmd->add_option("--seed", o.seed, "search seed");

  auto* scan_cmd = app.add_subcommand("scan", "run one family checker");
  scan_cmd->add_option("--family", o.family, "family name")->required();
  auto add_limits = [&](CLI::App* c) {
    c->add_option("--max-q", o.max_q, "largest q for PSL(2,q) and PSU(3,q)")->check(CLI::Range(5ull, 100000ull));
    c->add_option("--max-v", o.max_v, "largest degree for v-bounded families")->check(CLI::Range(5ull, 100000000ull));
    c->add_option("--max-e", o.max_e, "largest e for Sz (q=2^(2e+1)) and Ree (q=3^(2e+1))")->check(CLI::Range(1u, 12u));
    c->add_option("--out", o.out, "report file ('-' for stdout)");
    c->add_option("--seed", o.seed, "search seed");
    c->add_option("--jobs", o.jobs, "worker threads")->check(CLI::Range(1u, 256u));
  };
  add_limits(scan_cmd);

  auto* classify_cmd = app.add_subcommand("classify", "run every family checker and the Witt verification");
  add_limits(classify_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    const CLI::App* sub = nullptr;
    for (const auto* s : app.get_subcommands()) sub = s;
    err << (sub ? sub->help() : app.help());
    return kUsage;
  }

  try {
    if (*verify) return cmd_verify_design(o, out);
    if (*witt_cmd) return cmd_witt(o, out);
    if (*orbits_cmd) return cmd_orbits(o, out);
    if (*scan_cmd) return cmd_scan(o, out);
    if (*classify_cmd) return cmd_classify(o, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const DataIntegrityError& e) {
    err << "data integrity: " << e.what() << "\n";
    return kMismatch;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return kMismatch;
  }
  return kUsage;
}

}  // namespace steiner4::cli
