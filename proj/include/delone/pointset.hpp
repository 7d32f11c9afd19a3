#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

namespace delone {

/// Flat row-major storage for n-dimensional points.
struct PointSet {
  int dim = 0;
  std::vector<double> data;

  std::int64_t size() const { return static_cast<std::int64_t>(data.size()) / dim; }
  std::span<const double> point(std::int64_t i) const {
    return {data.data() + i * dim, static_cast<size_t>(dim)};
  }
  void push_back(std::span<const double> p) { data.insert(data.end(), p.begin(), p.end()); }
};

/// CSV layout: header "k,x1,...,xn", one row per point, k starting at 1,
/// coordinates printed with 17 significant digits.
void write_points_csv(std::ostream& os, const PointSet& pts);
PointSet read_points_csv(std::istream& is);

}  // namespace delone
