#include "mobius/bmx.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace mobius {

void write_bmx(std::ostream& os, const BinaryMatroid& m) {
  os << "BMX 1\n";
  os << "elements:";
  for (const auto& l : m.labels()) os << ' ' << l;
  os << "\nrows: " << m.rank() << "\n";
  for (int r = 0; r < m.rank(); ++r) {
    for (int c = 0; c < m.size(); ++c)
      os << (m.rep().get(static_cast<std::size_t>(r), static_cast<std::size_t>(c))
                 ? '1'
                 : '0');
    os << '\n';
  }
}

BinaryMatroid read_bmx(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line != "BMX 1")
    throw BmxParseError("bmx: missing 'BMX 1' header");
  if (!std::getline(is, line) || line.rfind("elements:", 0) != 0)
    throw BmxParseError("bmx: missing 'elements:' line");
  std::istringstream els(line.substr(9));
  std::vector<std::string> labels;
  for (std::string tok; els >> tok;) labels.push_back(tok);
  if (!std::getline(is, line) || line.rfind("rows:", 0) != 0)
    throw BmxParseError("bmx: missing 'rows:' line");
  int rows = 0;
  try {
    rows = std::stoi(line.substr(5));
  } catch (const std::exception&) {
    throw BmxParseError("bmx: bad row count");
  }
  if (rows < 0 || rows > 64) throw BmxParseError("bmx: bad row count");
  std::vector<std::string> bits;
  for (int r = 0; r < rows; ++r) {
    if (!std::getline(is, line)) throw BmxParseError("bmx: missing matrix row");
    if (line.size() != labels.size())
      throw BmxParseError("bmx: row length does not match element count");
    for (char ch : line)
      if (ch != '0' && ch != '1') throw BmxParseError("bmx: bad matrix entry");
    bits.push_back(line);
  }
  if (labels.empty() && rows == 0) return BinaryMatroid();
  return BinaryMatroid::from_matrix(labels, Gf2Matrix::from_strings(bits));
}

BinaryMatroid read_bmx_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw BmxParseError("bmx: cannot open " + path);
  return read_bmx(f);
}

}  // namespace mobius
