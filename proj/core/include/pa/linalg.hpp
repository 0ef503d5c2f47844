#pragma once

#include <cstddef>
#include <vector>

#include "pa/scalar.hpp"

namespace pa {

using Vector = std::vector<Scalar>;

// Exact rank; pivots on the smallest-magnitude nonzero entry of each column.
std::size_t rank(std::vector<Vector> rows);

// Reduced row-echelon basis maintained incrementally. Pivots are the first
// nonzero column of each row and are normalized to 1.
class EchelonBasis {
public:
  explicit EchelonBasis(std::size_t ncols = 0) : ncols_(ncols) {}

  std::size_t ncols() const { return ncols_; }
  std::size_t dim() const { return rows_.size(); }
  const Vector &row(std::size_t i) const { return rows_[i].v; }
  std::size_t pivot(std::size_t i) const { return rows_[i].pivot; }
  std::vector<Vector> rows() const;

  // Subtracts the basis component in place; w is zero afterwards iff it lies
  // in the span.
  void reduce(Vector &w) const;
  bool contains(Vector w) const;
  // Returns true when w enlarged the span.
  bool insert(Vector w);

  friend bool operator==(const EchelonBasis &a, const EchelonBasis &b);

private:
  struct Row {
    Vector v;
    std::vector<std::size_t> nz;
    std::size_t pivot = 0;
  };
  static void refresh(Row &r);

  std::size_t ncols_;
  std::vector<Row> rows_; // sorted by pivot
};

} // namespace pa
