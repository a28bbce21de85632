#pragma once

#include <iosfwd>

#include "mobius/matroid.hpp"

namespace mobius {

struct BmxParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Text format:
//   BMX 1
//   elements: <labels>
//   rows: <r>
//   <r lines of 0/1, one column per label>
// Emission uses the reduced representation whose identity block sits on the
// lexicographically least basis in label order.
void write_bmx(std::ostream& os, const BinaryMatroid& m);
BinaryMatroid read_bmx(std::istream& is);
BinaryMatroid read_bmx_file(const std::string& path);

}  // namespace mobius
