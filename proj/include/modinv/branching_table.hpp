#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "modinv/types.hpp"

namespace modinv {

// b(τ, λ): multiplicity of base label λ in extended label τ.  Row 0 is the extended vacuum.
struct BranchingTable {
  std::string name;
  std::vector<std::string> rows;
  std::vector<std::string> cols;
  IntMatrix b;

  int column(const std::string& label) const {
    auto it = std::find(cols.begin(), cols.end(), label);
    if (it == cols.end()) throw Error(name + ": unknown base label " + label);
    return static_cast<int>(it - cols.begin());
  }
};

// Columns are ordered by first appearance, scanning rows in order.
inline BranchingTable table_from_rows(std::string name, std::vector<std::string> row_names,
                                      const std::vector<std::vector<std::string>>& contents) {
  BranchingTable t;
  t.name = std::move(name);
  t.rows = std::move(row_names);
  for (const auto& row : contents)
    for (const auto& lab : row)
      if (std::find(t.cols.begin(), t.cols.end(), lab) == t.cols.end()) t.cols.push_back(lab);
  t.b = IntMatrix::Zero(static_cast<Eigen::Index>(contents.size()), static_cast<Eigen::Index>(t.cols.size()));
  for (std::size_t r = 0; r < contents.size(); ++r)
    for (const auto& lab : contents[r]) t.b(static_cast<Eigen::Index>(r), t.column(lab)) += 1;
  if (t.b(0, 0) != 1) throw Error(t.name + ": vacuum entry b(0,0) must be 1");
  return t;
}

}  // namespace modinv
