#include "steiner4/witt.hpp"

#include <algorithm>

#include "steiner4/errors.hpp"
#include "steiner4/field.hpp"

namespace steiner4::witt {

QRCodeSpec QRCodeSpec::for_length(std::uint32_t v) {
  QRCodeSpec s;
  if (v == 11) {
    s.characteristic = 3;
  } else if (v == 23) {
    s.characteristic = 2;
  } else {
    throw InputError("Witt designs are available for v = 11 and v = 23 only");
  }
  s.length = v;
  for (std::uint32_t x = 1; x < v; ++x) s.residues.push_back(x * x % v);
  std::sort(s.residues.begin(), s.residues.end());
  s.residues.erase(std::unique(s.residues.begin(), s.residues.end()), s.residues.end());
  return s;
}

std::vector<std::uint32_t> generator_polynomial(const QRCodeSpec& spec) {
  // Smallest extension containing a primitive length-th root of unity.
  std::uint32_t e = 1;
  std::uint64_t pe = spec.characteristic;
  while ((pe - 1) % spec.length != 0) {
    pe *= spec.characteristic;
    ++e;
  }
  const gf::Field f = gf::Field::build(spec.characteristic, e);
  const gf::Element alpha = f.exp((f.q() - 1) / spec.length);

  std::vector<gf::Element> poly{1};
  for (std::uint32_t r : spec.residues) {
    const gf::Element root = f.pow(alpha, r);
    std::vector<gf::Element> next(poly.size() + 1, 0);
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] = f.add(next[i + 1], poly[i]);
      next[i] = f.sub(next[i], f.mul(root, poly[i]));
    }
    poly = std::move(next);
  }
  for (gf::Element c : poly)
    if (c >= spec.characteristic) throw InternalError("QR generator polynomial is not defined over the prime field");
  return {poly.begin(), poly.end()};
}

IncidenceStructure witt_design(std::uint32_t v) {
  const QRCodeSpec spec = QRCodeSpec::for_length(v);
  const auto g = generator_polynomial(spec);
  const std::uint32_t p = spec.characteristic;
  const std::uint32_t dim = v - static_cast<std::uint32_t>(g.size() - 1);
  const std::uint32_t weight = v == 11 ? 5 : 7;
  const std::size_t expected = v == 11 ? 66 : 253;

  std::vector<std::uint32_t> msg(dim, 0);
  std::vector<std::vector<Point>> blocks;
  while (true) {
    std::vector<std::uint32_t> word(v, 0);
    for (std::uint32_t i = 0; i < dim; ++i)
      if (msg[i])
        for (std::size_t j = 0; j < g.size(); ++j) word[i + j] = (word[i + j] + msg[i] * g[j]) % p;
    std::vector<Point> support;
    for (std::uint32_t i = 0; i < v; ++i)
      if (word[i]) support.push_back(i);
    if (support.size() == weight) blocks.push_back(std::move(support));

    std::uint32_t i = 0;
    while (i < dim && ++msg[i] == p) msg[i++] = 0;
    if (i == dim) break;
  }
  std::sort(blocks.begin(), blocks.end());
  blocks.erase(std::unique(blocks.begin(), blocks.end()), blocks.end());
  if (blocks.size() != expected)
    throw InternalError("Witt construction produced " + std::to_string(blocks.size()) + " blocks");
  return IncidenceStructure(v, std::move(blocks));
}

void validate_mathieu(const MathieuData& data, const IncidenceStructure& design) {
  if (data.generators.empty()) throw DataIntegrityError("Mathieu data has no generators");
  for (const Permutation& g : data.generators)
    if (g.degree() != data.degree) throw DataIntegrityError("Mathieu generator has the wrong degree");
  PermGroup group(data.degree, data.generators);
  if (group.order() != data.expected_order)
    throw DataIntegrityError("Mathieu group order is " + group.order().str() + ", expected " +
                             data.expected_order.str());
  const std::size_t t = transitivity_degree(group, data.expected_transitivity + 1);
  if (t != data.expected_transitivity)
    throw DataIntegrityError("Mathieu group transitivity degree is " + std::to_string(t));
  try {
    require_automorphisms(design, group);
  } catch (const InputError& err) {
    throw DataIntegrityError(std::string("Mathieu generators: ") + err.what());
  }
}

PermGroup mathieu_group(std::uint32_t v) {
  MathieuData data = mathieu_data(v);
  validate_mathieu(data, witt_design(v));
  return PermGroup(data.degree, std::move(data.generators));
}

PairVerdict verify_pair(std::uint32_t v) {
  PairVerdict out;
  out.v = v;
  const IncidenceStructure design = witt_design(v);
  out.blocks = design.b();
  out.steiner = verify_steiner(design, 4).pass;
  if (!out.steiner) {
    out.failure = "steiner";
    return out;
  }
  PermGroup group = PermGroup::trivial(v);
  try {
    group = mathieu_group(v);
  } catch (const DataIntegrityError& err) {
    out.failure = std::string("group: ") + err.what();
    return out;
  }
  out.group_order = group.order();
  out.flags = is_flag_transitive(design, group);
  out.block_orbit = block_orbit_size(design, group);
  out.point_2transitive = is_point_2transitive(group);
  if (!out.flags.pass)
    out.failure = "flag-transitivity";
  else if (out.block_orbit != design.b())
    out.failure = "block-transitivity";
  else if (!out.point_2transitive)
    out.failure = "point 2-transitivity";
  return out;
}

MainTheoremVerdict verify_main_theorem() { return {verify_pair(11), verify_pair(23)}; }

}  // namespace steiner4::witt
