#include "steiner4/design.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "steiner4/errors.hpp"
#include "steiner4/number_theory.hpp"

namespace steiner4 {

// ---------------------------------------------------------------------------
// Parameters

bool DesignParams::integral(std::size_t i) const {
  return boost::multiprecision::denominator(lambdas.at(i)) == 1;
}

bool DesignParams::admissible() const { return !first_failure().has_value(); }

std::optional<std::size_t> DesignParams::first_failure() const {
  for (std::size_t i = 0; i < lambdas.size(); ++i)
    if (!integral(i)) return i;
  return std::nullopt;
}

std::optional<bool> DesignParams::quadruple_divisibility() const {
  if (t != 4) return std::nullopt;
  BigInt lhs = BigInt(k - 2) * (k - 3);
  BigInt rhs = BigInt(v - 2) * (v - 3);
  return rhs % lhs == 0;
}

DesignParams params_from(std::uint64_t t, std::uint64_t v, std::uint64_t k, std::uint64_t lambda) {
  if (t == 0 || t > k || k > v || lambda == 0)
    throw InputError("design parameters must satisfy 0 < t <= k <= v and lambda > 0");
  DesignParams p;
  p.t = t;
  p.v = v;
  p.k = k;
  p.lambda = lambda;
  for (std::uint64_t i = 0; i <= t; ++i)
    p.lambdas.emplace_back(BigInt(lambda) * binomial(v - i, t - i), binomial(k - i, t - i));
  return p;
}

std::uint64_t k_upper_bound(std::uint64_t v) {
  // floor(sqrt(v) + 5/2) = s + 2 if sqrt(v) < s + 1/2 (i.e. v <= s^2 + s), else s + 3
  const std::uint64_t s = isqrt(v);
  return v <= s * s + s ? s + 2 : s + 3;
}

CamBounds cam_bounds(std::uint64_t t, std::uint64_t v, std::uint64_t k) {
  CamBounds c;
  if (k + 1 < t) return c;
  const auto sv = static_cast<std::int64_t>(v);
  const auto st = static_cast<std::int64_t>(t);
  const auto sk = static_cast<std::int64_t>(k);
  c.bound_a = sv >= (st + 1) * (sk - st + 1);
  if (t > 2) {
    const std::int64_t lhs = sv - st + 1;
    const std::int64_t rhs = (sk - st + 2) * (sk - st + 1);
    c.bound_b = lhs >= rhs;
    c.equality_b = lhs == rhs;
  } else {
    c.bound_b = true;
  }
  static constexpr std::uint64_t kListed[][3] = {{3, 4, 8}, {3, 6, 22}, {3, 12, 112}, {4, 7, 23}, {5, 8, 24}};
  for (const auto& row : kListed)
    if (row[0] == t && row[1] == k && row[2] == v) c.listed_equality_case = c.equality_b;
  return c;
}

// ---------------------------------------------------------------------------
// Incidence structures

IncidenceStructure::IncidenceStructure(std::uint32_t v, std::vector<std::vector<Point>> blocks)
    : v_(v), k_(0), blocks_(std::move(blocks)) {
  if (blocks_.empty()) throw InputError("design has no blocks");
  k_ = static_cast<std::uint32_t>(blocks_.front().size());
  for (auto& block : blocks_) {
    if (block.size() != k_) throw InputError("blocks must all have the same size");
    std::sort(block.begin(), block.end());
    if (std::adjacent_find(block.begin(), block.end()) != block.end())
      throw InputError("block contains a repeated point");
    if (!block.empty() && block.back() >= v_) throw InputError("block point out of range");
  }
  std::sort(blocks_.begin(), blocks_.end());
  if (std::adjacent_find(blocks_.begin(), blocks_.end()) != blocks_.end())
    throw InputError("duplicate block (repeated blocks are not supported)");
}

std::optional<std::size_t> IncidenceStructure::find_block(const std::vector<Point>& sorted_set) const {
  auto it = std::lower_bound(blocks_.begin(), blocks_.end(), sorted_set);
  if (it == blocks_.end() || *it != sorted_set) return std::nullopt;
  return static_cast<std::size_t>(it - blocks_.begin());
}

namespace {

constexpr std::uint64_t kMaxSubsetTable = 100'000'000;

// Colex ranking of t-subsets of 0..v-1.
class SubsetRanker {
 public:
  SubsetRanker(std::uint32_t v, std::uint32_t t) : t_(t), table_(v + 1, std::vector<std::uint64_t>(t + 1, 0)) {
    for (std::uint32_t n = 0; n <= v; ++n) {
      table_[n][0] = 1;
      for (std::uint32_t j = 1; j <= t && j <= n; ++j)
        table_[n][j] = table_[n - 1][j - 1] + (j <= n - 1 ? table_[n - 1][j] : 0);
    }
    total_ = table_[v][t];
  }
  std::uint64_t total() const { return total_; }
  std::uint64_t rank(const Point* sorted) const {
    std::uint64_t r = 0;
    for (std::uint32_t i = 0; i < t_; ++i) r += sorted[i] >= i + 1 ? table_[sorted[i]][i + 1] : 0;
    return r;
  }

 private:
  std::uint32_t t_;
  std::vector<std::vector<std::uint64_t>> table_;
  std::uint64_t total_ = 0;
};

// Calls fn(subset) for every t-subset of `pool` in lexicographic order; stops when fn returns false.
template <typename Fn>
bool for_each_subset(const std::vector<Point>& pool, std::uint32_t t, Fn&& fn) {
  const std::size_t n = pool.size();
  if (t > n) return true;
  std::vector<std::size_t> idx(t);
  for (std::uint32_t i = 0; i < t; ++i) idx[i] = i;
  std::vector<Point> subset(t);
  while (true) {
    for (std::uint32_t i = 0; i < t; ++i) subset[i] = pool[idx[i]];
    if (!fn(subset)) return false;
    std::size_t i = t;
    while (i > 0 && idx[i - 1] == n - t + (i - 1)) --i;
    if (i == 0) return true;
    ++idx[i - 1];
    for (std::size_t j = i; j < t; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

SteinerVerdict verify_steiner(const IncidenceStructure& design, std::uint32_t t) {
  if (t == 0 || t > design.k()) throw InputError("verify_steiner: need 0 < t <= k");
  SubsetRanker ranker(design.v(), t);
  if (ranker.total() > kMaxSubsetTable) throw InputError("verify_steiner: too many t-subsets");

  std::vector<std::uint8_t> counts(ranker.total(), 0);
  for (const auto& block : design.blocks()) {
    for_each_subset(block, t, [&](const std::vector<Point>& s) {
      auto& c = counts[ranker.rank(s.data())];
      if (c < 255) ++c;
      return true;
    });
  }

  SteinerVerdict verdict;
  verdict.pass = std::all_of(counts.begin(), counts.end(), [](std::uint8_t c) { return c == 1; });
  if (verdict.pass) return verdict;

  std::vector<Point> all(design.v());
  for (Point x = 0; x < design.v(); ++x) all[x] = x;
  for_each_subset(all, t, [&](const std::vector<Point>& s) {
    std::uint8_t c = counts[ranker.rank(s.data())];
    if (c == 1) return true;
    verdict.witness = s;
    verdict.witness_count = c;
    return false;
  });
  return verdict;
}

IncidenceStructure derived_design(const IncidenceStructure& design, Point x) {
  if (x >= design.v()) throw InputError("derived_design: point out of range");
  if (design.v() < 2) throw InputError("derived_design: need at least two points");
  std::vector<std::vector<Point>> blocks;
  for (const auto& block : design.blocks()) {
    if (!std::binary_search(block.begin(), block.end(), x)) continue;
    std::vector<Point> reduced;
    for (Point y : block)
      if (y != x) reduced.push_back(y > x ? y - 1 : y);
    blocks.push_back(std::move(reduced));
  }
  return IncidenceStructure(design.v() - 1, std::move(blocks));
}

// ---------------------------------------------------------------------------
// Group actions on blocks and flags

namespace {

// images[g][b] = index of the image of block b under generator g.
std::vector<std::vector<std::size_t>> block_action(const IncidenceStructure& design, const PermGroup& group) {
  if (group.degree() != design.v()) throw InputError("group degree does not match design point count");
  std::vector<std::vector<std::size_t>> images;
  for (const Permutation& g : group.generators()) {
    std::vector<std::size_t> row(design.b());
    for (std::size_t bi = 0; bi < design.b(); ++bi) {
      auto idx = design.find_block(set_image(g, design.blocks()[bi]));
      if (!idx) throw InputError("not an automorphism group: a generator does not preserve the blocks");
      row[bi] = *idx;
    }
    images.push_back(std::move(row));
  }
  return images;
}

}  // namespace

void require_automorphisms(const IncidenceStructure& design, const PermGroup& group) {
  (void)block_action(design, group);
}

std::size_t block_orbit_size(const IncidenceStructure& design, const PermGroup& group) {
  auto action = block_action(design, group);
  std::vector<bool> seen(design.b(), false);
  std::vector<std::size_t> queue{0};
  seen[0] = true;
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (const auto& row : action) {
      std::size_t nb = row[queue[i]];
      if (!seen[nb]) {
        seen[nb] = true;
        queue.push_back(nb);
      }
    }
  return queue.size();
}

FlagTransitivity is_flag_transitive(const IncidenceStructure& design, const PermGroup& group) {
  auto action = block_action(design, group);
  const std::size_t k = design.k();
  // flag (block bi, position j) -> bi * k + j
  FlagTransitivity out;
  out.flag_count = design.b() * k;
  std::vector<bool> seen(out.flag_count, false);
  std::vector<std::size_t> queue{0};
  seen[0] = true;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const std::size_t bi = queue[i] / k;
    const Point x = design.blocks()[bi][queue[i] % k];
    for (std::size_t gi = 0; gi < action.size(); ++gi) {
      const std::size_t nb = action[gi][bi];
      const Point y = group.generators()[gi][x];
      const auto& target = design.blocks()[nb];
      const std::size_t pos = static_cast<std::size_t>(std::lower_bound(target.begin(), target.end(), y) - target.begin());
      const std::size_t flag = nb * k + pos;
      if (!seen[flag]) {
        seen[flag] = true;
        queue.push_back(flag);
      }
    }
  }
  out.flag_orbit = queue.size();
  out.pass = out.flag_orbit == out.flag_count;
  return out;
}

bool is_point_2transitive(const PermGroup& group) {
  if (group.degree() < 2) return false;
  return transitivity_degree(group, 2) >= 2;
}

bool divprop_check(const DesignParams& params, const BigInt& gx_order) {
  if (!params.integral(1)) return false;
  const BigInt r = boost::multiprecision::numerator(params.r());
  return r != 0 && gx_order % r == 0;
}

// ---------------------------------------------------------------------------
// Design file format

IncidenceStructure read_design(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw InputError("design file: missing header line");
  std::istringstream header(line);
  long long v = -1, k = -1, b = -1;
  if (!(header >> v >> k >> b) || v <= 0 || k <= 0 || b <= 0)
    throw InputError("design file: header must be 'v k b' with positive integers");
  std::vector<std::vector<Point>> blocks;
  for (long long i = 0; i < b; ++i) {
    if (!std::getline(in, line)) throw InputError("design file: fewer blocks than declared");
    std::istringstream row(line);
    std::vector<Point> block;
    long long x = 0;
    while (row >> x) {
      if (x < 0 || x >= v) throw InputError("design file: point out of range");
      block.push_back(static_cast<Point>(x));
    }
    if (!row.eof()) throw InputError("design file: non-numeric token");
    if (block.size() != static_cast<std::size_t>(k)) throw InputError("design file: block has wrong size");
    if (!std::is_sorted(block.begin(), block.end())) throw InputError("design file: block is not sorted");
    blocks.push_back(std::move(block));
  }
  return IncidenceStructure(static_cast<std::uint32_t>(v), std::move(blocks));
}

void write_design(std::ostream& out, const IncidenceStructure& design) {
  out << design.v() << ' ' << design.k() << ' ' << design.b() << '\n';
  for (const auto& block : design.blocks()) {
    for (std::size_t i = 0; i < block.size(); ++i) {
      if (i) out << ' ';
      out << block[i];
    }
    out << '\n';
  }
}

IncidenceStructure read_design_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open design file: " + path);
  return read_design(in);
}

void write_design_file(const std::string& path, const IncidenceStructure& design) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write design file: " + path);
  write_design(out, design);
}

}  // namespace steiner4
