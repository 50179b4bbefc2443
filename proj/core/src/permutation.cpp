#include "steiner4/permutation.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>

#include "steiner4/errors.hpp"

namespace steiner4 {

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point y : images_) {
    if (y >= images_.size() || seen[y])
      throw InputError("permutation images are not a bijection on 0..degree-1");
    seen[y] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  Permutation inv;
  inv.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv.images_[images_[i]] = static_cast<Point>(i);
  return inv;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  Permutation r;
  r.images_.resize(a.images_.size());
  for (std::size_t i = 0; i < a.images_.size(); ++i) r.images_[i] = b.images_[a.images_[i]];
  return r;
}

Permutation Permutation::pow(std::int64_t n) const {
  Permutation base = n < 0 ? inverse() : *this;
  std::uint64_t m = n < 0 ? static_cast<std::uint64_t>(-n) : static_cast<std::uint64_t>(n);
  Permutation result = identity(degree());
  while (m > 0) {
    if (m & 1u) result = result * base;
    base = base * base;
    m >>= 1u;
  }
  return result;
}

std::uint64_t Permutation::order() const {
  std::vector<bool> seen(images_.size(), false);
  std::uint64_t ord = 1;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

std::size_t Permutation::fixed_point_count() const {
  std::size_t n = 0;
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] == i) ++n;
  return n;
}

std::vector<Point> set_image(const Permutation& g, std::span<const Point> set) {
  std::vector<Point> out;
  out.reserve(set.size());
  for (Point x : set) {
    if (x >= g.degree()) throw InputError("set_image: point out of range");
    out.push_back(g[x]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// StabilizerChain

StabilizerChain::StabilizerChain(std::size_t degree, std::span<const Permutation> generators,
                                 std::span<const Point> base_prefix)
    : degree_(degree) {
  for (Point b : base_prefix) {
    if (b >= degree) throw InputError("base point out of range");
    add_base_point(b);
  }
  for (const Permutation& g : generators) {
    if (g.degree() != degree) throw InputError("generator degree mismatch");
    if (g.is_identity()) continue;

    std::size_t depth = 0;
    while (depth < levels_.size() && g[levels_[depth].base_point] == levels_[depth].base_point)
      ++depth;
    if (depth == levels_.size()) {
      Point moved = 0;
      while (g[moved] == moved) ++moved;
      add_base_point(moved);
    }
    for (std::size_t l = 0; l <= depth && l < levels_.size(); ++l) levels_[l].generators.push_back(g);
  }
  for (std::size_t l = 0; l < levels_.size(); ++l) rebuild_orbit(l);
  run();
}

void StabilizerChain::add_base_point(Point b) {
  Level level;
  level.base_point = b;
  levels_.push_back(std::move(level));
  rebuild_orbit(levels_.size() - 1);
}

void StabilizerChain::rebuild_orbit(std::size_t l) {
  Level& level = levels_[l];
  level.orbit.assign(1, level.base_point);
  level.transversal_index.assign(degree_, -1);
  level.transversal.assign(1, Permutation::identity(degree_));
  level.transversal_index[level.base_point] = 0;
  for (std::size_t i = 0; i < level.orbit.size(); ++i) {
    Point x = level.orbit[i];
    for (const Permutation& s : level.generators) {
      Point y = s[x];
      if (level.transversal_index[y] >= 0) continue;
      level.transversal_index[y] = static_cast<std::int32_t>(level.orbit.size());
      level.orbit.push_back(y);
      level.transversal.push_back(level.transversal[i] * s);
    }
  }
}

StabilizerChain::SiftResult StabilizerChain::sift(Permutation g, std::size_t from_level) const {
  for (std::size_t l = from_level; l < levels_.size(); ++l) {
    const Level& level = levels_[l];
    Point beta = g[level.base_point];
    std::int32_t idx = level.transversal_index[beta];
    if (idx < 0) return {std::move(g), l};
    g = g * level.transversal[static_cast<std::size_t>(idx)].inverse();
  }
  return {std::move(g), levels_.size()};
}

void StabilizerChain::run() {
  std::size_t i = levels_.size();
  while (i > 0) {
    std::size_t level_idx = i - 1;
    bool extended = false;
    const Level& level = levels_[level_idx];
    for (std::size_t oi = 0; !extended && oi < level.orbit.size(); ++oi) {
      Point beta = level.orbit[oi];
      for (std::size_t si = 0; si < level.generators.size(); ++si) {
        const Permutation& s = level.generators[si];
        Point image = s[beta];
        std::size_t target = static_cast<std::size_t>(level.transversal_index[image]);
        Permutation us = level.transversal[oi] * s;
        if (us == level.transversal[target]) continue;
        Permutation h = us * level.transversal[target].inverse();

        SiftResult res = sift(std::move(h), level_idx + 1);
        if (res.level == levels_.size() && res.residue.is_identity()) continue;

        std::size_t j = res.level;
        if (j == levels_.size()) {
          Point moved = 0;
          while (res.residue[moved] == moved) ++moved;
          add_base_point(moved);
        }
        for (std::size_t l = level_idx + 1; l <= j; ++l) {
          levels_[l].generators.push_back(res.residue);
          rebuild_orbit(l);
        }
        i = j + 1;
        extended = true;
        break;
      }
    }
    if (!extended) --i;
  }
}

std::vector<Point> StabilizerChain::base() const {
  std::vector<Point> b;
  for (const Level& l : levels_) b.push_back(l.base_point);
  return b;
}

BigInt StabilizerChain::order() const {
  BigInt ord = 1;
  for (const Level& l : levels_) ord *= l.orbit.size();
  return ord;
}

bool StabilizerChain::contains(const Permutation& g) const {
  if (g.degree() != degree_) return false;
  SiftResult res = sift(g, 0);
  return res.level == levels_.size() && res.residue.is_identity();
}

std::vector<Permutation> StabilizerChain::stabilizer_generators(std::size_t depth) const {
  if (depth >= levels_.size()) return {};
  return levels_[depth].generators;
}

// ---------------------------------------------------------------------------
// PermGroup

struct PermGroup::Cache {
  std::once_flag once;
  std::unique_ptr<StabilizerChain> chain;
};

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators)
    : degree_(degree), generators_(std::move(generators)), cache_(std::make_shared<Cache>()) {
  if (degree == 0 || degree > kMaxDegree) throw InputError("group degree must be in 1..65536");
  if (generators_.empty()) throw InputError("a group needs at least one generator");
  for (const Permutation& g : generators_)
    if (g.degree() != degree) throw InputError("all generators must share the group degree");
}

PermGroup PermGroup::trivial(std::size_t degree) {
  return PermGroup(degree, {Permutation::identity(degree)});
}

const StabilizerChain& PermGroup::chain() const {
  std::call_once(cache_->once, [this] {
    cache_->chain = std::make_unique<StabilizerChain>(degree_, generators_);
  });
  return *cache_->chain;
}

std::vector<Point> orbit(const PermGroup& group, Point seed) {
  if (seed >= group.degree()) throw InputError("orbit: seed out of range");
  std::vector<bool> seen(group.degree(), false);
  std::vector<Point> out{seed};
  seen[seed] = true;
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (const Permutation& g : group.generators()) {
      Point y = g[out[i]];
      if (!seen[y]) {
        seen[y] = true;
        out.push_back(y);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<Point>> orbits(const PermGroup& group) {
  std::vector<bool> seen(group.degree(), false);
  std::vector<std::vector<Point>> out;
  for (Point x = 0; x < group.degree(); ++x) {
    if (seen[x]) continue;
    auto o = orbit(group, x);
    for (Point y : o) seen[y] = true;
    out.push_back(std::move(o));
  }
  return out;
}

BigInt group_order(const PermGroup& group) { return group.order(); }

PermGroup pointwise_stabilizer(const PermGroup& group, std::span<const Point> points) {
  StabilizerChain chain(group.degree(), group.generators(), points);
  auto gens = chain.stabilizer_generators(points.size());
  if (gens.empty()) return PermGroup::trivial(group.degree());
  return PermGroup(group.degree(), std::move(gens));
}

PermGroup point_stabilizer(const PermGroup& group, Point x) {
  if (x >= group.degree()) throw InputError("point_stabilizer: point out of range");
  const Point pts[] = {x};
  return pointwise_stabilizer(group, pts);
}

std::size_t transitivity_degree(const PermGroup& group, std::size_t max_t) {
  const std::size_t n = group.degree();
  if (max_t > n) throw InputError("transitivity_degree: max_t exceeds degree");
  std::vector<Point> prefix(max_t);
  std::iota(prefix.begin(), prefix.end(), Point{0});
  StabilizerChain chain(n, group.generators(), prefix);
  std::size_t t = 0;
  for (std::size_t i = 0; i < max_t; ++i) {
    if (chain.levels()[i].orbit.size() != n - i) break;
    t = i + 1;
  }
  return t;
}

// ---------------------------------------------------------------------------
// Group file format

PermGroup read_group(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw InputError("group file: missing header line");
  std::istringstream header(line);
  long long degree = -1;
  long long count = -1;
  if (!(header >> degree >> count) || degree <= 0 || count <= 0)
    throw InputError("group file: header must be 'degree m' with positive integers");
  if (static_cast<std::size_t>(degree) > kMaxDegree) throw InputError("group file: degree too large");

  std::vector<Permutation> gens;
  for (long long i = 0; i < count; ++i) {
    if (!std::getline(in, line)) throw InputError("group file: fewer generator lines than declared");
    std::istringstream row(line);
    std::vector<Point> images;
    long long v = 0;
    while (row >> v) {
      if (v < 0 || v >= degree) throw InputError("group file: image out of range");
      images.push_back(static_cast<Point>(v));
    }
    if (!row.eof()) throw InputError("group file: non-numeric token");
    if (images.size() != static_cast<std::size_t>(degree))
      throw InputError("group file: generator line has wrong length");
    gens.emplace_back(std::move(images));
  }
  return PermGroup(static_cast<std::size_t>(degree), std::move(gens));
}

void write_group(std::ostream& out, const PermGroup& group) {
  out << group.degree() << ' ' << group.generators().size() << '\n';
  for (const Permutation& g : group.generators()) {
    bool first = true;
    for (Point y : g.images()) {
      if (!first) out << ' ';
      out << y;
      first = false;
    }
    out << '\n';
  }
}

PermGroup read_group_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open group file: " + path);
  return read_group(in);
}

void write_group_file(const std::string& path, const PermGroup& group) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write group file: " + path);
  write_group(out, group);
}

}  // namespace steiner4
