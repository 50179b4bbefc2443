#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "steiner4/bigint.hpp"
#include "steiner4/permutation.hpp"

namespace steiner4 {

/// Parameters t-(v,k,lambda) and the chain lambda_i = lambda C(v-i,t-i)/C(k-i,t-i)
/// for i = 0..t (lambda_0 = b, lambda_1 = r).
struct DesignParams {
  std::uint64_t t = 0, v = 0, k = 0, lambda = 0;
  std::vector<BigRational> lambdas;

  const BigRational& b() const { return lambdas[0]; }
  const BigRational& r() const { return lambdas[1]; }
  /// lambda_2; only meaningful for t >= 2.
  const BigRational& lambda2() const { return lambdas[2]; }

  bool integral(std::size_t i) const;
  bool admissible() const;
  /// Smallest i with non-integral lambda_i.
  std::optional<std::size_t> first_failure() const;
  /// For t = 4: (k-2)(k-3) | (v-2)(v-3).
  std::optional<bool> quadruple_divisibility() const;
};

DesignParams params_from(std::uint64_t t, std::uint64_t v, std::uint64_t k, std::uint64_t lambda);

/// floor(sqrt(v) + 5/2), the upper bound on k for a non-trivial Steiner 4-design.
std::uint64_t k_upper_bound(std::uint64_t v);

struct CamBounds {
  bool bound_a = false;  // v >= (t+1)(k-t+1)
  bool bound_b = false;  // v-t+1 >= (k-t+2)(k-t+1), t > 2
  bool equality_b = false;
  /// Equality in bound (b) at one of the listed tuples (3,4,8), (3,6,22),
  /// (3,12,112), (4,7,23), (5,8,24).
  bool listed_equality_case = false;
  bool ok() const { return bound_a && bound_b; }
};

CamBounds cam_bounds(std::uint64_t t, std::uint64_t v, std::uint64_t k);

/// Points 0..v-1, blocks as strictly increasing k-subsets, sorted and unique.
class IncidenceStructure {
 public:
  /// Validates and canonicalizes: blocks sorted, equal size, in range, no duplicates.
  IncidenceStructure(std::uint32_t v, std::vector<std::vector<Point>> blocks);

  std::uint32_t v() const { return v_; }
  std::uint32_t k() const { return k_; }
  std::size_t b() const { return blocks_.size(); }
  const std::vector<std::vector<Point>>& blocks() const { return blocks_; }

  /// Index of the block equal to `sorted_set`, or nullopt.
  std::optional<std::size_t> find_block(const std::vector<Point>& sorted_set) const;

 private:
  std::uint32_t v_;
  std::uint32_t k_;
  std::vector<std::vector<Point>> blocks_;
};

struct Flag {
  Point x;
  std::size_t block;
};

struct SteinerVerdict {
  bool pass = false;
  /// Lexicographically smallest t-subset covered a number of times != 1.
  std::optional<std::vector<Point>> witness;
  std::uint64_t witness_count = 0;
};

/// Every t-subset lies in exactly one block (counted per block).
SteinerVerdict verify_steiner(const IncidenceStructure& design, std::uint32_t t);

/// Blocks through x with x removed; points above x shift down by one.
IncidenceStructure derived_design(const IncidenceStructure& design, Point x);

/// Throws InputError("not an automorphism group") when some generator does
/// not map blocks to blocks.
void require_automorphisms(const IncidenceStructure& design, const PermGroup& group);

/// Length of the orbit of block 0 under the induced action on blocks.
std::size_t block_orbit_size(const IncidenceStructure& design, const PermGroup& group);

struct FlagTransitivity {
  bool pass = false;
  std::size_t flag_orbit = 0;
  std::size_t flag_count = 0;
};

FlagTransitivity is_flag_transitive(const IncidenceStructure& design, const PermGroup& group);

bool is_point_2transitive(const PermGroup& group);

/// r | |G_x|.
bool divprop_check(const DesignParams& params, const BigInt& gx_order);

/// Design file: "v k b\n" then b lines of k sorted, space-separated points.
IncidenceStructure read_design(std::istream& in);
void write_design(std::ostream& out, const IncidenceStructure& design);
IncidenceStructure read_design_file(const std::string& path);
void write_design_file(const std::string& path, const IncidenceStructure& design);

}  // namespace steiner4
