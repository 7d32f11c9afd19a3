#include "delone/pointset.hpp"

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace delone {

void write_points_csv(std::ostream& os, const PointSet& pts) {
  os << "k";
  for (int j = 1; j <= pts.dim; ++j) os << ",x" << j;
  os << "\n";
  char buf[40];
  for (std::int64_t i = 0; i < pts.size(); ++i) {
    os << (i + 1);
    const auto p = pts.point(i);
    for (double v : p) {
      std::snprintf(buf, sizeof buf, "%.17g", v);
      os << ',' << buf;
    }
    os << "\n";
  }
}

PointSet read_points_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw std::runtime_error("points csv: empty input");
  int dim = 0;
  for (char c : line)
    if (c == ',') ++dim;
  if (dim < 1) throw std::runtime_error("points csv: malformed header");
  PointSet out;
  out.dim = dim;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string cell;
    if (!std::getline(ss, cell, ',')) throw std::runtime_error("points csv: malformed row");
    for (int j = 0; j < dim; ++j) {
      if (!std::getline(ss, cell, ',')) throw std::runtime_error("points csv: short row");
      out.data.push_back(std::stod(cell));
    }
  }
  return out;
}

}  // namespace delone
