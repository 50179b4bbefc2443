#include <sstream>

#include "steiner4/errors.hpp"
#include "steiner4/witt.hpp"

namespace steiner4::witt {
namespace {

// Group-file format; points are those of witt_design(v).
constexpr const char* kM11 =
    "11 3\n"
    "1 2 3 4 5 6 7 8 9 10 0\n"
    "0 3 6 9 1 4 7 10 2 5 8\n"
    "0 1 2 4 9 8 10 3 6 7 5\n";

constexpr const char* kM23 =
    "23 3\n"
    "1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16 17 18 19 20 21 22 0\n"
    "0 2 4 6 8 10 12 14 16 18 20 22 1 3 5 7 9 11 13 15 17 19 21\n"
    "0 1 2 4 3 5 12 8 7 19 10 14 6 22 11 15 16 20 21 9 17 18 13\n";

}  // namespace

MathieuData mathieu_data(std::uint32_t v) {
  if (v != 11 && v != 23) throw InputError("Mathieu groups are available for v = 11 and v = 23 only");
  std::istringstream in(v == 11 ? kM11 : kM23);
  PermGroup g = read_group(in);
  MathieuData d;
  d.degree = v;
  d.generators = g.generators();
  d.expected_order = v == 11 ? BigInt(7920) : BigInt(10200960);
  d.expected_transitivity = 4;
  return d;
}

}  // namespace steiner4::witt
