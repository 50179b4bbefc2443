#include "steiner4/psl2_orbits.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "steiner4/errors.hpp"
#include "steiner4/number_theory.hpp"

namespace steiner4::psl2 {

Psl2Context Psl2Context::make(std::uint64_t q) {
  auto pp = prime_power(q);
  if (!pp || q <= 3) throw InputError("q must be a prime power greater than 3");
  Psl2Context ctx;
  ctx.q = q;
  ctx.p = pp->p;
  ctx.e = pp->e;
  ctx.n = std::gcd<std::uint64_t, std::uint64_t>(2, q - 1);
  return ctx;
}

// ---------------------------------------------------------------------------
// Spec grammar

namespace {

std::vector<std::string> split_colon(const std::string& s) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : s) {
    if (ch == ':') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
    }
  }
  parts.push_back(cur);
  return parts;
}

std::uint64_t parse_positive(const std::string& s, const std::string& what) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char ch) { return std::isdigit(ch); }))
    throw InputError("subgroup spec: " + what + " must be a positive integer");
  std::uint64_t v = 0;
  for (char ch : s) {
    if (v > (std::uint64_t{1} << 40)) throw InputError("subgroup spec: " + what + " too large");
    v = v * 10 + static_cast<std::uint64_t>(ch - '0');
  }
  if (v == 0) throw InputError("subgroup spec: " + what + " must be positive");
  return v;
}

}  // namespace

SubgroupSpec SubgroupSpec::parse(const std::string& text) {
  const auto parts = split_colon(text);
  const std::string& head = parts[0];
  SubgroupSpec s;
  auto want = [&](std::size_t n) {
    if (parts.size() != n) throw InputError("subgroup spec '" + text + "': wrong number of parameters");
  };
  if (head == "cyclic" || head == "dihedral") {
    want(2);
    s.kind = head == "cyclic" ? SubgroupKind::Cyclic : SubgroupKind::Dihedral;
    s.c = parse_positive(parts[1], "c");
  } else if (head == "ea") {
    want(2);
    s.kind = SubgroupKind::ElemAbelian;
    s.qbar = parse_positive(parts[1], "qbar");
  } else if (head == "semi") {
    want(3);
    s.kind = SubgroupKind::SemidirectEA;
    s.qbar = parse_positive(parts[1], "qbar");
    s.c = parse_positive(parts[2], "c");
  } else if (head == "a4" || head == "s4" || head == "a5") {
    want(1);
    s.kind = head == "a4" ? SubgroupKind::A4 : head == "s4" ? SubgroupKind::S4 : SubgroupKind::A5;
  } else if (head == "psl2" || head == "pgl2") {
    want(2);
    s.kind = head == "psl2" ? SubgroupKind::PSL2Sub : SubgroupKind::PGL2Sub;
    s.qbar = parse_positive(parts[1], "qbar");
  } else {
    throw InputError("unknown subgroup spec '" + text + "'");
  }
  return s;
}

std::string SubgroupSpec::to_string() const {
  switch (kind) {
    case SubgroupKind::Cyclic: return "cyclic:" + std::to_string(c);
    case SubgroupKind::Dihedral: return "dihedral:" + std::to_string(c);
    case SubgroupKind::ElemAbelian: return "ea:" + std::to_string(qbar);
    case SubgroupKind::SemidirectEA: return "semi:" + std::to_string(qbar) + ":" + std::to_string(c);
    case SubgroupKind::A4: return "a4";
    case SubgroupKind::S4: return "s4";
    case SubgroupKind::A5: return "a5";
    case SubgroupKind::PSL2Sub: return "psl2:" + std::to_string(qbar);
    case SubgroupKind::PGL2Sub: return "pgl2:" + std::to_string(qbar);
  }
  throw InternalError("unknown subgroup kind");
}

// ---------------------------------------------------------------------------
// Validity

namespace {

// f with qbar = p^f, or 0.
std::uint32_t subfield_exponent(const Psl2Context& ctx, std::uint64_t qbar) {
  std::uint64_t x = 1;
  for (std::uint32_t f = 0; f <= ctx.e; ++f) {
    if (x == qbar) return f;
    x *= ctx.p;
  }
  return 0;
}

bool divides(std::uint64_t a, std::uint64_t b) { return a != 0 && b % a == 0; }

bool a5_exists(const Psl2Context& ctx) {
  if (!ctx.odd()) return false;
  return ctx.p == 5 || (ctx.q * ctx.q - 1) % 5 == 0;
}

}  // namespace

std::optional<std::string> absent_reason(const Psl2Context& ctx, const SubgroupSpec& spec) {
  switch (spec.kind) {
    case SubgroupKind::Cyclic:
    case SubgroupKind::Dihedral:
      if (spec.c < 2) return "c must be at least 2";
      if (!divides(spec.c, ctx.plus()) && !divides(spec.c, ctx.minus())) return "c must divide (q+1)/n or (q-1)/n";
      return std::nullopt;
    case SubgroupKind::ElemAbelian: {
      if (subfield_exponent(ctx, spec.qbar) == 0) return "qbar must be p^f with 1 <= f <= e";
      return std::nullopt;
    }
    case SubgroupKind::SemidirectEA:
      if (subfield_exponent(ctx, spec.qbar) == 0) return "qbar must be p^f with 1 <= f <= e";
      if (spec.c < 2) return "c must be at least 2";
      if (!divides(spec.c, spec.qbar - 1)) return "c must divide qbar-1";
      if (!divides(spec.c, ctx.minus())) return "c must divide (q-1)/n";
      return std::nullopt;
    case SubgroupKind::A4:
      if (!ctx.odd() && ctx.e % 2 != 0) return "A4 needs q odd or q = 2^e with e even";
      return std::nullopt;
    case SubgroupKind::S4:
      if (!ctx.odd() || (ctx.q % 8 != 1 && ctx.q % 8 != 7)) return "S4 needs q = +-1 (mod 8)";
      return std::nullopt;
    case SubgroupKind::A5:
      if (!ctx.odd()) return "A5 at even q is psl2:4";
      if (!a5_exists(ctx)) return "A5 needs p = 5 or q^2 = 1 (mod 5)";
      return std::nullopt;
    case SubgroupKind::PSL2Sub:
    case SubgroupKind::PGL2Sub: {
      const std::uint32_t f = subfield_exponent(ctx, spec.qbar);
      if (f == 0 || ctx.e % f != 0) return "qbar^m = q needs qbar = p^f with f | e";
      if (spec.kind == SubgroupKind::PGL2Sub && ((ctx.e / f) % 2 != 0)) return "PGL(2,qbar) needs m > 1 even";
      return std::nullopt;
    }
  }
  return "unknown subgroup kind";
}

namespace {

void require_valid(const Psl2Context& ctx, const SubgroupSpec& spec) {
  if (auto why = absent_reason(ctx, spec))
    throw InputError("subgroup class absent: " + spec.to_string() + " at q=" + std::to_string(ctx.q) + " (" + *why + ")");
}

std::uint64_t psl2_order(std::uint64_t qb) { return qb * (qb * qb - 1) / std::gcd<std::uint64_t, std::uint64_t>(2, qb - 1); }

}  // namespace

std::uint64_t subgroup_order(const Psl2Context& ctx, const SubgroupSpec& spec) {
  require_valid(ctx, spec);
  switch (spec.kind) {
    case SubgroupKind::Cyclic: return spec.c;
    case SubgroupKind::Dihedral: return 2 * spec.c;
    case SubgroupKind::ElemAbelian: return spec.qbar;
    case SubgroupKind::SemidirectEA: return spec.qbar * spec.c;
    case SubgroupKind::A4: return 12;
    case SubgroupKind::S4: return 24;
    case SubgroupKind::A5: return 60;
    case SubgroupKind::PSL2Sub: return psl2_order(spec.qbar);
    case SubgroupKind::PGL2Sub: return spec.qbar * (spec.qbar * spec.qbar - 1);
  }
  throw InternalError("unknown subgroup kind");
}

// ---------------------------------------------------------------------------
// Closed forms

namespace {

class ProfileBuilder {
 public:
  explicit ProfileBuilder(std::uint64_t q) : q_(q) {}
  // Adds count orbits of length len; count is given as num/den and must be a non-negative integer.
  ProfileBuilder& add(std::uint64_t len, std::int64_t num, std::int64_t den = 1) {
    if (num < 0 || num % den != 0) throw InternalError("closed form gives a non-integral or negative orbit count");
    if (num / den > 0) profile_[len] += static_cast<std::uint64_t>(num / den);
    return *this;
  }
  OrbitProfile done() const {
    if (profile_mass(profile_) != q_ + 1) throw InternalError("closed form violates the mass identity");
    return profile_;
  }

 private:
  std::uint64_t q_;
  OrbitProfile profile_;
};

OrbitProfile cyclic_profile(const Psl2Context& ctx, std::uint64_t c) {
  const auto q = static_cast<std::int64_t>(ctx.q);
  const auto sc = static_cast<std::int64_t>(c);
  ProfileBuilder b(ctx.q);
  if (divides(c, ctx.plus())) return b.add(c, q + 1, sc).done();
  if (divides(c, ctx.minus())) return b.add(1, 2).add(c, q - 1, sc).done();
  throw InternalError("cyclic: no branch");
}

OrbitProfile dihedral_profile(const Psl2Context& ctx, std::uint64_t c) {
  const auto q = static_cast<std::int64_t>(ctx.q);
  const auto sc = static_cast<std::int64_t>(c);
  ProfileBuilder b(ctx.q);
  if (!ctx.odd()) {
    if (divides(c, ctx.q + 1)) return b.add(c, 1).add(2 * c, q + 1 - sc, 2 * sc).done();
    if (divides(c, ctx.q - 1)) return b.add(2, 1).add(c, 1).add(2 * c, q - 1 - sc, 2 * sc).done();
  } else if (ctx.q % 4 == 1) {
    if (divides(c, (ctx.q + 1) / 2)) return b.add(c, 2).add(2 * c, q + 1 - 2 * sc, 2 * sc).done();
    if (divides(c, (ctx.q - 1) / 2)) {
      if (c == 2) return b.add(2, 3).add(4, q - 5, 4).done();
      return b.add(2, 1).add(c, 2).add(2 * c, q - 1 - 2 * sc, 2 * sc).done();
    }
  } else {
    if (divides(c, (ctx.q + 1) / 2)) return b.add(2 * c, q + 1, 2 * sc).done();
    if (divides(c, (ctx.q - 1) / 2)) return b.add(2, 1).add(2 * c, q - 1, 2 * sc).done();
  }
  throw InternalError("dihedral: no branch");
}

OrbitProfile a4_profile(const Psl2Context& ctx) {
  const auto q = static_cast<std::int64_t>(ctx.q);
  ProfileBuilder b(ctx.q);
  if (!ctx.odd()) return b.add(1, 1).add(4, 1).add(12, q - 4, 12).done();
  const bool plus3 = (ctx.q + 1) / 2 % 3 == 0;
  const bool minus3 = (ctx.q - 1) / 2 % 3 == 0;
  const bool p3 = ctx.p == 3;
  if (ctx.q % 4 == 1) {
    if (plus3) return b.add(6, 1).add(12, q - 5, 12).done();
    if (minus3) return b.add(4, 2).add(6, 1).add(12, q - 13, 12).done();
    if (p3) return b.add(4, 1).add(6, 1).add(12, q - 9, 12).done();
  } else {
    if (plus3) return b.add(12, q + 1, 12).done();
    if (minus3) return b.add(4, 2).add(12, q - 7, 12).done();
    if (p3) return b.add(4, 1).add(12, q - 3, 12).done();
  }
  throw InternalError("A4: no branch");
}

OrbitProfile s4_profile(const Psl2Context& ctx) {
  const auto q = static_cast<std::int64_t>(ctx.q);
  ProfileBuilder b(ctx.q);
  const bool plus3 = (ctx.q + 1) / 2 % 3 == 0;
  const bool minus3 = (ctx.q - 1) / 2 % 3 == 0;
  if (ctx.q % 8 == 1) {
    if (plus3) return b.add(6, 1).add(12, 1).add(24, q - 17, 24).done();
    if (minus3) return b.add(6, 1).add(8, 1).add(12, 1).add(24, q - 25, 24).done();
    if (ctx.p == 3) return b.add(4, 1).add(6, 1).add(24, q - 9, 24).done();
  } else if (ctx.q % 8 == 7) {
    if (plus3) return b.add(24, q + 1, 24).done();
    if (minus3) return b.add(8, 1).add(24, q - 7, 24).done();
  }
  throw InternalError("S4: no branch");
}

OrbitProfile a5_profile(const Psl2Context& ctx) {
  const auto q = static_cast<std::int64_t>(ctx.q);
  ProfileBuilder b(ctx.q);
  const std::uint64_t hp = (ctx.q + 1) / 2;
  const std::uint64_t hm = (ctx.q - 1) / 2;
  if (ctx.q % 4 == 1) {
    if (ctx.p == 5 && ctx.e % 2 == 1) return b.add(6, 1).add(60, q - 5, 60).done();
    if (ctx.p == 5) return b.add(6, 1).add(20, 1).add(60, q - 25, 60).done();
    if (hp % 15 == 0) return b.add(30, 1).add(60, q - 29, 60).done();
    if (hp % 3 == 0 && hm % 5 == 0) return b.add(12, 1).add(30, 1).add(60, q - 41, 60).done();
    if (hm % 3 == 0 && hp % 5 == 0) return b.add(20, 1).add(30, 1).add(60, q - 49, 60).done();
    if (hm % 15 == 0) return b.add(12, 1).add(20, 1).add(30, 1).add(60, q - 61, 60).done();
    if (ctx.p == 3 && hp % 5 == 0) return b.add(10, 1).add(60, q - 9, 60).done();
    if (ctx.p == 3 && hm % 5 == 0) return b.add(10, 1).add(12, 1).add(60, q - 21, 60).done();
  } else if (ctx.q % 4 == 3) {
    if (hp % 15 == 0) return b.add(60, q + 1, 60).done();
    if (hp % 3 == 0 && hm % 5 == 0) return b.add(12, 1).add(60, q - 11, 60).done();
    if (hm % 3 == 0 && hp % 5 == 0) return b.add(20, 1).add(60, q - 19, 60).done();
    if (hm % 15 == 0) return b.add(12, 1).add(20, 1).add(60, q - 31, 60).done();
  }
  throw InternalError("A5: no branch");
}

OrbitProfile subline_profile(const Psl2Context& ctx, std::uint64_t qbar, std::uint64_t regular) {
  std::uint32_t f = subfield_exponent(ctx, qbar);
  const std::uint32_t m = ctx.e / f;
  ProfileBuilder b(ctx.q);
  std::int64_t rest = static_cast<std::int64_t>(ctx.q + 1 - (qbar + 1));
  b.add(qbar + 1, 1);
  if (m % 2 == 0) {
    b.add(qbar * (qbar - 1), 1);
    rest -= static_cast<std::int64_t>(qbar * (qbar - 1));
  }
  return b.add(regular, rest, static_cast<std::int64_t>(regular)).done();
}

}  // namespace

OrbitProfile closed_form_profile(const Psl2Context& ctx, const SubgroupSpec& spec) {
  require_valid(ctx, spec);
  const auto q = static_cast<std::int64_t>(ctx.q);
  switch (spec.kind) {
    case SubgroupKind::Cyclic: return cyclic_profile(ctx, spec.c);
    case SubgroupKind::Dihedral: return dihedral_profile(ctx, spec.c);
    case SubgroupKind::ElemAbelian:
      return ProfileBuilder(ctx.q).add(1, 1).add(spec.qbar, q, static_cast<std::int64_t>(spec.qbar)).done();
    case SubgroupKind::SemidirectEA: {
      const auto qb = static_cast<std::int64_t>(spec.qbar);
      return ProfileBuilder(ctx.q)
          .add(1, 1)
          .add(spec.qbar, 1)
          .add(spec.c * spec.qbar, q - qb, static_cast<std::int64_t>(spec.c) * qb)
          .done();
    }
    case SubgroupKind::A4: return a4_profile(ctx);
    case SubgroupKind::S4: return s4_profile(ctx);
    case SubgroupKind::A5: return a5_profile(ctx);
    case SubgroupKind::PSL2Sub: return subline_profile(ctx, spec.qbar, psl2_order(spec.qbar));
    case SubgroupKind::PGL2Sub:
      return subline_profile(ctx, spec.qbar, spec.qbar * (spec.qbar * spec.qbar - 1));
  }
  throw InternalError("unknown subgroup kind");
}

std::vector<SubgroupSpec> valid_specs(const Psl2Context& ctx) {
  std::vector<SubgroupSpec> out;
  std::set<std::uint64_t> cs;
  for (auto d : divisors(ctx.plus()))
    if (d >= 2) cs.insert(d);
  for (auto d : divisors(ctx.minus()))
    if (d >= 2) cs.insert(d);
  for (auto c : cs) out.push_back({SubgroupKind::Cyclic, c, 0});
  for (auto c : cs) out.push_back({SubgroupKind::Dihedral, c, 0});
  for (std::uint32_t f = 1; f <= ctx.e; ++f) out.push_back({SubgroupKind::ElemAbelian, 0, ipow(ctx.p, f)});
  for (std::uint32_t f = 1; f <= ctx.e; ++f) {
    const std::uint64_t qb = ipow(ctx.p, f);
    for (auto c : divisors(std::gcd(qb - 1, ctx.minus())))
      if (c >= 2) out.push_back({SubgroupKind::SemidirectEA, c, qb});
  }
  for (auto kind : {SubgroupKind::A4, SubgroupKind::S4, SubgroupKind::A5}) {
    SubgroupSpec s{kind, 0, 0};
    if (!absent_reason(ctx, s)) out.push_back(s);
  }
  for (auto kind : {SubgroupKind::PSL2Sub, SubgroupKind::PGL2Sub})
    for (std::uint32_t f = 1; f <= ctx.e; ++f) {
      SubgroupSpec s{kind, 0, ipow(ctx.p, f)};
      if (!absent_reason(ctx, s)) out.push_back(s);
    }
  return out;
}

// ---------------------------------------------------------------------------
// Construction

namespace {

using gf::Element;
using gf::Field;
using gf::Mobius;

class Constructor {
 public:
  Constructor(const Field& f, std::uint64_t seed) : f_(f), ctx_(Psl2Context::make(f.q())), rng_(seed) {}

  Permutation mobius(Element a, Element b, Element c, Element d) const { return gf::mobius_perm(f_, {a, b, c, d}); }

  // x -> alpha x; alpha must be a square when q is odd.
  Permutation scale(Element alpha) const { return mobius(alpha, 0, 0, 1); }
  Permutation translate(Element w) const { return mobius(1, w, 0, 1); }
  Permutation minus_inverse() const { return mobius(0, f_.neg(1), 1, 0); }

  Permutation random_element() {
    std::uniform_int_distribution<Element> pick(0, f_.q() - 1);
    while (true) {
      Mobius m{pick(rng_), pick(rng_), pick(rng_), pick(rng_)};
      Element det = gf::determinant(f_, m);
      if (det == 0 || !f_.is_square(det)) continue;
      return gf::mobius_perm(f_, m);
    }
  }

  // Random element of order exactly `order`, taken as a power of a random element.
  Permutation random_of_order(std::uint64_t order, std::uint64_t must_divide = 0) {
    for (std::size_t tries = 0; tries < kMaxTries; ++tries) {
      Permutation g = random_element();
      std::uint64_t o = g.order();
      if (o % order != 0) continue;
      if (must_divide && must_divide % o != 0) continue;
      return g.pow(static_cast<std::int64_t>(o / order));
    }
    throw InternalError("subgroup search exhausted its attempt budget");
  }

  const Field& field() const { return f_; }
  const Psl2Context& ctx() const { return ctx_; }

  static constexpr std::size_t kMaxTries = 2'000'000;

 private:
  const Field& f_;
  Psl2Context ctx_;
  std::mt19937_64 rng_;
};

// x -> mu x together with translations by a GF(p)-basis of a qbar-element F-subspace, F = GF(p)(mu).
std::vector<Permutation> borel_generators(const Constructor& ctor, std::uint64_t qbar, Element mu) {
  const Field& f = ctor.field();
  std::vector<bool> in_sub(f.q(), false);
  std::vector<Element> sub{0};
  in_sub[0] = true;
  auto add_vector = [&](Element y) {
    // sub := sub + GF(p) y
    const std::size_t base = sub.size();
    for (std::uint32_t k = 1; k < f.p(); ++k) {
      Element ky = f.mul(k, y);
      for (std::size_t i = 0; i < base; ++i) {
        Element z = f.add(sub[i], ky);
        if (!in_sub[z]) {
          in_sub[z] = true;
          sub.push_back(z);
        }
      }
    }
  };

  std::vector<Element> scalars{0};  // F = additive span of powers of mu
  {
    std::vector<bool> in_f(f.q(), false);
    in_f[0] = true;
    Element power = 1;
    do {
      const std::size_t base = scalars.size();
      if (!in_f[power]) {
        for (std::uint32_t k = 1; k < f.p(); ++k) {
          Element kp = f.mul(k, power);
          for (std::size_t i = 0; i < base; ++i) {
            Element z = f.add(scalars[i], kp);
            if (!in_f[z]) {
              in_f[z] = true;
              scalars.push_back(z);
            }
          }
        }
      }
      power = f.mul(power, mu);
    } while (power != 1);
  }

  std::vector<Permutation> gens;
  for (Element x = 1; x < f.q() && sub.size() < qbar; ++x) {
    if (in_sub[x]) continue;
    for (Element lambda : scalars) {
      if (lambda == 0) continue;
      Element y = f.mul(lambda, x);
      if (in_sub[y]) continue;
      add_vector(y);
      gens.push_back(ctor.translate(y));
    }
  }
  if (sub.size() != qbar) throw InternalError("no F-subspace of the requested size");
  if (mu != 1) gens.push_back(ctor.scale(mu));
  if (gens.empty()) gens.push_back(Permutation::identity(f.q() + 1));
  return gens;
}

void expect_order(const PermGroup& g, std::uint64_t order, const SubgroupSpec& spec) {
  if (g.order() != order)
    throw InternalError("constructed " + spec.to_string() + " has order " + g.order().str() + ", expected " +
                        std::to_string(order));
}

// Fixed element-order census for the polyhedral groups.
std::map<std::uint64_t, std::uint64_t> expected_census(SubgroupKind kind) {
  switch (kind) {
    case SubgroupKind::A4: return {{1, 1}, {2, 3}, {3, 8}};
    case SubgroupKind::S4: return {{1, 1}, {2, 9}, {3, 8}, {4, 6}};
    case SubgroupKind::A5: return {{1, 1}, {2, 15}, {3, 20}, {5, 24}};
    default: return {};
  }
}

PermGroup polyhedral(Constructor& ctor, const SubgroupSpec& spec, std::uint64_t r) {
  const std::uint64_t degree = ctor.field().q() + 1;
  for (std::size_t tries = 0; tries < Constructor::kMaxTries; ++tries) {
    Permutation x = ctor.random_of_order(2);
    Permutation y = ctor.random_of_order(3);
    if ((x * y).order() != r) continue;
    PermGroup g(degree, {x, y});
    const std::uint64_t order = r == 3 ? 12 : r == 4 ? 24 : 60;
    expect_order(g, order, spec);
    if (element_order_census(g) != expected_census(spec.kind))
      throw InternalError("constructed " + spec.to_string() + " has the wrong element-order census");
    return g;
  }
  throw InternalError("subgroup search exhausted its attempt budget");
}

}  // namespace

PermGroup construct_subgroup(const gf::Field& field, const SubgroupSpec& spec, std::uint64_t seed) {
  Constructor ctor(field, seed);
  const Psl2Context& ctx = ctor.ctx();
  require_valid(ctx, spec);
  const std::uint64_t degree = field.q() + 1;
  const std::uint64_t order = subgroup_order(ctx, spec);

  auto torus_element = [&](std::uint64_t c) {
    if (divides(c, ctx.minus())) return ctor.scale(field.exp((field.q() - 1) / c));
    return ctor.random_of_order(c, ctx.plus());
  };

  PermGroup group = PermGroup::trivial(degree);
  switch (spec.kind) {
    case SubgroupKind::Cyclic:
      group = PermGroup(degree, {torus_element(spec.c)});
      break;
    case SubgroupKind::Dihedral: {
      Permutation g = torus_element(spec.c);
      if (divides(spec.c, ctx.minus())) {
        group = PermGroup(degree, {g, ctor.minus_inverse()});
        break;
      }
      const Permutation g_inv = g.inverse();
      bool found = false;
      for (std::size_t tries = 0; tries < Constructor::kMaxTries && !found; ++tries) {
        Permutation h = ctor.random_of_order(2);
        if (h == g || h * g * h != g_inv) continue;
        group = PermGroup(degree, {g, h});
        found = true;
      }
      if (!found) throw InternalError("no inverting involution found");
      break;
    }
    case SubgroupKind::ElemAbelian:
      group = PermGroup(degree, borel_generators(ctor, spec.qbar, 1));
      break;
    case SubgroupKind::SemidirectEA:
      group = PermGroup(degree, borel_generators(ctor, spec.qbar, field.exp((field.q() - 1) / spec.c)));
      break;
    case SubgroupKind::A4: return polyhedral(ctor, spec, 3);
    case SubgroupKind::S4: return polyhedral(ctor, spec, 4);
    case SubgroupKind::A5: return polyhedral(ctor, spec, 5);
    case SubgroupKind::PSL2Sub:
    case SubgroupKind::PGL2Sub: {
      const Element zeta = field.exp((field.q() - 1) / (spec.qbar - 1));
      const Element s = spec.kind == SubgroupKind::PSL2Sub ? field.mul(zeta, zeta) : zeta;
      group = PermGroup(degree, {ctor.translate(1), ctor.scale(s), ctor.minus_inverse()});
      break;
    }
  }
  expect_order(group, order, spec);
  return group;
}

OrbitProfile brute_profile(const PermGroup& group) {
  OrbitProfile profile;
  for (const auto& o : orbits(group)) ++profile[o.size()];
  return profile;
}

std::map<std::uint64_t, std::uint64_t> element_order_census(const PermGroup& group, std::size_t limit) {
  if (group.order() > limit) throw InputError("element_order_census: group too large");
  std::set<Permutation> seen{Permutation::identity(group.degree())};
  std::vector<Permutation> queue(seen.begin(), seen.end());
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (const Permutation& s : group.generators()) {
      Permutation g = queue[i] * s;
      if (seen.insert(g).second) queue.push_back(std::move(g));
    }
  std::map<std::uint64_t, std::uint64_t> census;
  for (const Permutation& g : queue) ++census[g.order()];
  return census;
}

std::string format_profile(const OrbitProfile& profile) {
  std::ostringstream out;
  bool first = true;
  for (const auto& [len, count] : profile) {
    if (!first) out << ' ';
    out << len << ':' << count;
    first = false;
  }
  return out.str();
}

std::uint64_t profile_mass(const OrbitProfile& profile) {
  std::uint64_t m = 0;
  for (const auto& [len, count] : profile) m += len * count;
  return m;
}

}  // namespace steiner4::psl2
