#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "steiner4/field.hpp"
#include "steiner4/permutation.hpp"

namespace steiner4::psl2 {

/// q = p^e > 3 with n = gcd(2, q-1).
struct Psl2Context {
  std::uint64_t q = 0;
  std::uint64_t p = 0;
  std::uint32_t e = 0;
  std::uint64_t n = 0;

  /// Throws InputError unless q is a prime power > 3.
  static Psl2Context make(std::uint64_t q);

  std::uint64_t plus() const { return (q + 1) / n; }   // (q+1)/n
  std::uint64_t minus() const { return (q - 1) / n; }  // (q-1)/n
  bool odd() const { return n == 2; }
};

enum class SubgroupKind { Cyclic, Dihedral, ElemAbelian, SemidirectEA, A4, S4, A5, PSL2Sub, PGL2Sub };

/// A conjugacy-level subgroup class of PSL(2,q). Parameters unused by a kind stay 0.
struct SubgroupSpec {
  SubgroupKind kind = SubgroupKind::Cyclic;
  std::uint64_t c = 0;
  std::uint64_t qbar = 0;

  /// Grammar: cyclic:c | dihedral:c | ea:qbar | semi:qbar:c | a4 | s4 | a5 | psl2:qbar | pgl2:qbar
  /// (keywords are case-insensitive).
  static SubgroupSpec parse(const std::string& text);
  std::string to_string() const;

  friend bool operator==(const SubgroupSpec&, const SubgroupSpec&) = default;
};

/// Orbit length -> number of orbits of that length; zero counts are omitted.
using OrbitProfile = std::map<std::uint64_t, std::uint64_t>;

/// Why the class does not exist at this q, or nullopt if it does.
std::optional<std::string> absent_reason(const Psl2Context& ctx, const SubgroupSpec& spec);

/// Order of the abstract subgroup. Requires a valid spec.
std::uint64_t subgroup_order(const Psl2Context& ctx, const SubgroupSpec& spec);

/// The profile given by the lemma branch matching (ctx, spec).
/// Throws InputError("subgroup class absent: ...") for invalid specs.
OrbitProfile closed_form_profile(const Psl2Context& ctx, const SubgroupSpec& spec);

/// Every valid spec at q in a fixed order: cyclic, dihedral, ea, semi, a4, s4, a5, psl2, pgl2,
/// parameters ascending. Cyclic and dihedral use c >= 2.
std::vector<SubgroupSpec> valid_specs(const Psl2Context& ctx);

/// A subgroup of psl2_group(field) realizing the class, found by a seeded
/// search where needed and checked by order (and element-order census for A4, S4, A5).
PermGroup construct_subgroup(const gf::Field& field, const SubgroupSpec& spec, std::uint64_t seed);

/// Orbit lengths by direct closure.
OrbitProfile brute_profile(const PermGroup& group);

/// Element order -> number of elements, by full enumeration. Throws if the group exceeds `limit`.
std::map<std::uint64_t, std::uint64_t> element_order_census(const PermGroup& group, std::size_t limit = 100000);

/// "l:c l:c ..." sorted by length.
std::string format_profile(const OrbitProfile& profile);

/// Sum of l * N_l.
std::uint64_t profile_mass(const OrbitProfile& profile);

inline constexpr std::uint64_t kDefaultSeed = 0x5eed;

}  // namespace steiner4::psl2
