#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "steiner4/bigint.hpp"

namespace steiner4 {

using Point = std::uint32_t;

/// Maximum supported degree for permutation groups.
inline constexpr std::size_t kMaxDegree = std::size_t{1} << 16;

/// A permutation of 0..degree-1 stored as its image array.
///
/// Composition follows the right-action convention used in computational
/// group theory: x^(g*h) = (x^g)^h, i.e. `g * h` applies g first.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree);

  std::size_t degree() const { return images_.size(); }
  Point operator[](Point x) const { return images_[x]; }
  std::span<const Point> images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;
  Permutation pow(std::int64_t n) const;
  std::uint64_t order() const;
  std::size_t fixed_point_count() const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Point> images_;
};

/// Image of a point set under g, re-sorted.
std::vector<Point> set_image(const Permutation& g, std::span<const Point> set);

/// Base and strong generating set built by deterministic Schreier-Sims.
class StabilizerChain {
 public:
  struct Level {
    Point base_point;
    std::vector<Permutation> generators;  // strong generators fixing earlier base points
    std::vector<Point> orbit;             // orbit of base_point, in discovery order
    std::vector<std::int32_t> transversal_index;  // point -> index into transversal, -1 if absent
    std::vector<Permutation> transversal;         // transversal[i] maps base_point to orbit[i]
  };

  /// Base points are taken from `base_prefix` first, then extended with the
  /// smallest point moved by each new generator.
  StabilizerChain(std::size_t degree, std::span<const Permutation> generators,
                  std::span<const Point> base_prefix = {});

  std::size_t degree() const { return degree_; }
  const std::vector<Level>& levels() const { return levels_; }
  std::vector<Point> base() const;
  BigInt order() const;

  /// True iff g is an element of the group.
  bool contains(const Permutation& g) const;

  /// Strong generators of the pointwise stabilizer of the first `depth` base points.
  std::vector<Permutation> stabilizer_generators(std::size_t depth) const;

 private:
  struct SiftResult {
    Permutation residue;
    std::size_t level;
  };
  SiftResult sift(Permutation g, std::size_t from_level) const;
  void rebuild_orbit(std::size_t level);
  void add_base_point(Point b);
  void run();

  std::size_t degree_;
  std::vector<Level> levels_;
};

/// A permutation group given by generators; the stabilizer chain and order are
/// computed on first use and shared between copies.
class PermGroup {
 public:
  PermGroup(std::size_t degree, std::vector<Permutation> generators);

  static PermGroup trivial(std::size_t degree);

  std::size_t degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return generators_; }

  const StabilizerChain& chain() const;
  BigInt order() const { return chain().order(); }
  bool contains(const Permutation& g) const { return chain().contains(g); }

 private:
  struct Cache;
  std::size_t degree_;
  std::vector<Permutation> generators_;
  std::shared_ptr<Cache> cache_;
};

/// Smallest generator-closed set containing seed, sorted ascending.
std::vector<Point> orbit(const PermGroup& group, Point seed);

/// Orbits partitioning 0..degree-1, each sorted, ordered by smallest element.
std::vector<std::vector<Point>> orbits(const PermGroup& group);

BigInt group_order(const PermGroup& group);

PermGroup point_stabilizer(const PermGroup& group, Point x);

/// Pointwise stabilizer of a sequence of distinct points.
PermGroup pointwise_stabilizer(const PermGroup& group, std::span<const Point> points);

/// Largest t <= max_t for which the group is t-transitive.
std::size_t transitivity_degree(const PermGroup& group, std::size_t max_t);

/// Group file: "degree m\n" followed by m lines of space-separated images.
PermGroup read_group(std::istream& in);
void write_group(std::ostream& out, const PermGroup& group);
PermGroup read_group_file(const std::string& path);
void write_group_file(const std::string& path, const PermGroup& group);

}  // namespace steiner4
