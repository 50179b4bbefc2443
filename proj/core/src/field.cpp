#include "steiner4/field.hpp"

#include <numeric>

#include "steiner4/errors.hpp"
#include "steiner4/number_theory.hpp"

namespace steiner4::gf {
namespace {

using Poly = std::vector<std::uint32_t>;  // coefficients, low degree first

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo monic b over GF(p).
Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() >= b.size()) {
    std::uint32_t lead = a.back();
    std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) {
      std::uint32_t sub = static_cast<std::uint32_t>((std::uint64_t{lead} * b[i]) % p);
      a[shift + i] = (a[shift + i] + p - sub) % p;
    }
    trim(a);
  }
  return a;
}

Poly digits(std::uint64_t index, std::uint32_t p, std::uint32_t len) {
  Poly d(len, 0);
  for (std::uint32_t i = 0; i < len; ++i) {
    d[i] = static_cast<std::uint32_t>(index % p);
    index /= p;
  }
  return d;
}

}  // namespace

bool is_irreducible(const std::vector<std::uint32_t>& coeffs, std::uint32_t p) {
  const std::size_t n = coeffs.size() - 1;
  if (n == 0) return false;
  if (n == 1) return true;
  for (std::size_t deg = 1; deg <= n / 2; ++deg) {
    const std::uint64_t count = ipow(p, static_cast<std::uint32_t>(deg));
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      Poly div = digits(idx, p, static_cast<std::uint32_t>(deg));
      div.push_back(1);
      if (poly_mod(coeffs, div, p).empty()) return false;
    }
  }
  return true;
}

Field Field::build(std::uint32_t p, std::uint32_t e) {
  if (!is_prime(p)) throw InputError("field_build: p must be prime");
  if (e < 1) throw InputError("field_build: exponent must be >= 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < e; ++i) {
    q *= p;
    if (q > (1u << 16)) throw InputError("field_build: p^e exceeds 2^16");
  }

  Field f;
  f.p_ = p;
  f.e_ = e;
  f.q_ = static_cast<std::uint32_t>(q);

  for (std::uint64_t idx = 0; idx < q; ++idx) {
    Poly cand = digits(idx, p, e);
    cand.push_back(1);
    if (is_irreducible(cand, p)) {
      f.modulus_ = std::move(cand);
      break;
    }
  }
  if (f.modulus_.empty()) throw InternalError("no irreducible polynomial found");

  // Multiplicative group: smallest element whose order is q-1.
  const std::uint64_t m = q - 1;
  const auto primes = prime_divisors(m);
  auto slow_pow = [&f](Element a, std::uint64_t n) {
    Element r = 1;
    while (n > 0) {
      if (n & 1u) r = f.slow_mul(r, a);
      a = f.slow_mul(a, a);
      n >>= 1u;
    }
    return r;
  };
  for (Element g = 1; g < q; ++g) {
    bool ok = true;
    for (std::uint64_t r : primes)
      if (slow_pow(g, m / r) == 1) {
        ok = false;
        break;
      }
    if (ok || m == 1) {
      f.primitive_ = g;
      break;
    }
  }
  if (f.primitive_ == 0) throw InternalError("multiplicative group not cyclic");

  f.exp_.resize(m);
  f.log_.assign(q, 0);
  Element x = 1;
  for (std::uint64_t k = 0; k < m; ++k) {
    f.exp_[k] = x;
    f.log_[x] = static_cast<std::uint32_t>(k);
    x = f.slow_mul(x, f.primitive_);
  }
  if (x != 1) throw InternalError("primitive element has wrong order");
  return f;
}

Element Field::slow_mul(Element a, Element b) const {
  Poly pa = digits(a, p_, e_);
  Poly pb = digits(b, p_, e_);
  Poly prod(2 * e_, 0);
  for (std::uint32_t i = 0; i < e_; ++i)
    for (std::uint32_t j = 0; j < e_; ++j)
      prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{pa[i]} * pb[j]) % p_);
  Poly r = poly_mod(std::move(prod), modulus_, p_);
  Element out = 0;
  for (std::size_t i = r.size(); i-- > 0;) out = out * p_ + r[i];
  return out;
}

Element Field::add(Element a, Element b) const {
  if (e_ == 1) return (a + b) % p_;
  if (p_ == 2) return a ^ b;
  Element out = 0;
  Element scale = 1;
  while (a > 0 || b > 0) {
    out += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return out;
}

Element Field::neg(Element a) const {
  if (p_ == 2) return a;
  Element out = 0;
  Element scale = 1;
  while (a > 0) {
    out += ((p_ - a % p_) % p_) * scale;
    a /= p_;
    scale *= p_;
  }
  return out;
}

Element Field::sub(Element a, Element b) const { return add(a, neg(b)); }

Element Field::mul(Element a, Element b) const {
  if (a == 0 || b == 0) return 0;
  return exp_[(std::uint64_t{log_[a]} + log_[b]) % (q_ - 1)];
}

Element Field::inv(Element a) const {
  if (a == 0) throw InputError("inverse of zero");
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

Element Field::pow(Element a, std::uint64_t n) const {
  if (n == 0) return 1;
  if (a == 0) return 0;
  return exp_[(std::uint64_t{log_[a]} * (n % (q_ - 1))) % (q_ - 1)];
}

std::uint32_t Field::log(Element a) const {
  if (a == 0) throw InputError("log of zero");
  return log_[a];
}

std::uint64_t Field::multiplicative_order(Element a) const {
  if (a == 0) throw InputError("zero has no multiplicative order");
  const std::uint64_t m = q_ - 1;
  return m / std::gcd<std::uint64_t, std::uint64_t>(m, log_[a]);
}

bool Field::is_square(Element a) const {
  if (a == 0 || p_ == 2) return true;
  return log_[a] % 2 == 0;
}

// ---------------------------------------------------------------------------
// Projective line

ProjPoint apply(const Field& f, const Mobius& m, ProjPoint x) {
  Element hx, hy;
  if (x == infinity(f)) {
    hx = 1;
    hy = 0;
  } else {
    hx = x;
    hy = 1;
  }
  Element nx = f.add(f.mul(m.a, hx), f.mul(m.b, hy));
  Element ny = f.add(f.mul(m.c, hx), f.mul(m.d, hy));
  if (ny == 0) return infinity(f);
  return f.div(nx, ny);
}

Element determinant(const Field& f, const Mobius& m) {
  return f.sub(f.mul(m.a, m.d), f.mul(m.b, m.c));
}

Permutation mobius_perm(const Field& f, const Mobius& m) {
  if (determinant(f, m) == 0) throw InputError("singular fractional linear map");
  std::vector<Point> images(f.q() + 1);
  for (ProjPoint x = 0; x <= f.q(); ++x) images[x] = apply(f, m, x);
  return Permutation(std::move(images));
}

namespace {

void require_q_gt_3(const Field& f) {
  if (f.q() <= 3) throw InputError("PSL(2,q)/PGL(2,q) on the projective line needs q > 3");
}

}  // namespace

PermGroup psl2_group(const Field& f) {
  require_q_gt_3(f);
  const Element w = f.primitive();
  std::vector<Permutation> gens{
      mobius_perm(f, {1, 1, 0, 1}),
      mobius_perm(f, {w, 0, 0, f.inv(w)}),
      mobius_perm(f, {0, f.neg(1), 1, 0}),
  };
  return PermGroup(f.q() + 1, std::move(gens));
}

PermGroup pgl2_group(const Field& f) {
  require_q_gt_3(f);
  std::vector<Permutation> gens{
      mobius_perm(f, {1, 1, 0, 1}),
      mobius_perm(f, {f.primitive(), 0, 0, 1}),
      mobius_perm(f, {0, f.neg(1), 1, 0}),
  };
  return PermGroup(f.q() + 1, std::move(gens));
}

Permutation frobenius_perm(const Field& f) {
  std::vector<Point> images(f.q() + 1);
  for (Element x = 0; x < f.q(); ++x) images[x] = f.frobenius(x);
  images[f.q()] = f.q();
  return Permutation(std::move(images));
}

}  // namespace steiner4::gf
