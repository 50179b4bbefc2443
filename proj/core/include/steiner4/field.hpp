#pragma once

#include <cstdint>
#include <vector>

#include "steiner4/permutation.hpp"

namespace steiner4::gf {

using Element = std::uint32_t;

/// GF(p^e) with elements enumerated in p-ary counting order of their
/// coefficient vectors: element index = c_0 + c_1 p + ... + c_{e-1} p^{e-1}
/// for the residue class c_0 + c_1 x + ... mod the field modulus. The prime
/// subfield is therefore the indices 0..p-1.
class Field {
 public:
  /// Deterministic construction: the modulus is the first monic irreducible
  /// of degree e in counting order of its lower coefficients.
  static Field build(std::uint32_t p, std::uint32_t e);

  std::uint32_t p() const { return p_; }
  std::uint32_t e() const { return e_; }
  std::uint32_t q() const { return q_; }
  /// Coefficients c_0..c_e of the monic modulus (c_e == 1).
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  Element zero() const { return 0; }
  Element one() const { return 1; }
  /// Smallest-index generator of the multiplicative group.
  Element primitive() const { return primitive_; }

  Element add(Element a, Element b) const;
  Element sub(Element a, Element b) const;
  Element neg(Element a) const;
  Element mul(Element a, Element b) const;
  Element inv(Element a) const;
  Element div(Element a, Element b) const { return mul(a, inv(b)); }
  Element pow(Element a, std::uint64_t n) const;
  /// x -> x^p.
  Element frobenius(Element a) const { return pow(a, p_); }

  /// primitive()^k.
  Element exp(std::uint64_t k) const { return exp_[k % (q_ - 1)]; }
  /// Discrete log base primitive(); a must be nonzero.
  std::uint32_t log(Element a) const;

  std::uint64_t multiplicative_order(Element a) const;
  bool is_square(Element a) const;

 private:
  Field() = default;
  Element slow_mul(Element a, Element b) const;

  std::uint32_t p_ = 0;
  std::uint32_t e_ = 0;
  std::uint32_t q_ = 0;
  std::vector<std::uint32_t> modulus_;
  Element primitive_ = 0;
  std::vector<Element> exp_;
  std::vector<std::uint32_t> log_;
};

/// True iff the monic polynomial with coefficients c_0..c_n (c_n == 1) is
/// irreducible over GF(p), by trial division by every monic polynomial of
/// degree 1..n/2.
bool is_irreducible(const std::vector<std::uint32_t>& coeffs, std::uint32_t p);

/// Point index on the projective line PG(1,q): 0..q-1 are field elements,
/// q is the point at infinity.
using ProjPoint = std::uint32_t;

inline ProjPoint infinity(const Field& f) { return f.q(); }

/// 2x2 matrix (a b; c d) acting as x -> (a x + b) / (c x + d).
struct Mobius {
  Element a, b, c, d;
};

/// Image of a projective point, computed on homogeneous pairs (x : y) with
/// infinity = (1 : 0).
ProjPoint apply(const Field& f, const Mobius& m, ProjPoint x);

Element determinant(const Field& f, const Mobius& m);

/// The fractional linear map as a permutation of the q+1 projective points.
Permutation mobius_perm(const Field& f, const Mobius& m);

/// Generators of PSL(2,q): x -> x+1, x -> w^2 x, x -> -1/x (w primitive).
/// Requires q > 3.
PermGroup psl2_group(const Field& f);

/// Generators of PGL(2,q): x -> x+1, x -> w x, x -> -1/x. Requires q > 3.
PermGroup pgl2_group(const Field& f);

/// x -> x^p on field points, fixing infinity.
Permutation frobenius_perm(const Field& f);

}  // namespace steiner4::gf
