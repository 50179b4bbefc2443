#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "steiner4/bigint.hpp"
#include "steiner4/design.hpp"
#include "steiner4/permutation.hpp"

namespace steiner4::witt {

/// Quadratic-residue code of prime length over GF(characteristic).
struct QRCodeSpec {
  std::uint32_t length = 0;
  std::uint32_t characteristic = 0;
  std::vector<std::uint32_t> residues;  // nonzero squares mod length, ascending

  /// length 11 -> ternary, length 23 -> binary.
  static QRCodeSpec for_length(std::uint32_t v);
};

/// prod_{r in residues} (x - alpha^r) with alpha a primitive length-th root of unity;
/// coefficients c_0..c_deg in GF(p).
std::vector<std::uint32_t> generator_polynomial(const QRCodeSpec& spec);

/// Supports of minimum-weight codewords (weight 5 for v=11, 7 for v=23), deduplicated.
IncidenceStructure witt_design(std::uint32_t v);

struct MathieuData {
  std::uint32_t degree = 0;
  std::vector<Permutation> generators;
  BigInt expected_order;
  std::size_t expected_transitivity = 0;
};

/// Raw vendored data, unvalidated.
MathieuData mathieu_data(std::uint32_t v);

/// Checks order, transitivity degree and that each generator preserves witt_design(v).
/// Throws DataIntegrityError on any mismatch.
void validate_mathieu(const MathieuData& data, const IncidenceStructure& design);

/// Validated M11 / M23 on the points of witt_design(v).
PermGroup mathieu_group(std::uint32_t v);

struct PairVerdict {
  std::uint32_t v = 0;
  std::size_t blocks = 0;
  bool steiner = false;
  BigInt group_order;
  FlagTransitivity flags;
  std::size_t block_orbit = 0;
  bool point_2transitive = false;
  std::optional<std::string> failure;  // first failing sub-check
  bool pass() const { return !failure.has_value(); }
};

PairVerdict verify_pair(std::uint32_t v);

struct MainTheoremVerdict {
  PairVerdict m11;
  PairVerdict m23;
  bool pass() const { return m11.pass() && m23.pass(); }
};

MainTheoremVerdict verify_main_theorem();

}  // namespace steiner4::witt
