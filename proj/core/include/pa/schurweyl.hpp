#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "pa/algebra.hpp"
#include "pa/report.hpp"
#include "pa/scalar.hpp"
#include "pa/setpart.hpp"

namespace pa {

struct RepresentationError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

using Tuple = std::vector<int>; // entries in [1, n]

// Exact sparse matrix on M_n^{tensor k}. Rows are indexed by the top tuple r',
// columns by the bottom tuple r; tuples are stored as mixed-radix codes with
// the first coordinate most significant, so code order is tuple order.
class SparseMatrix {
public:
  using Key = std::pair<std::uint64_t, std::uint64_t>; // (row, col)

  SparseMatrix() = default;
  SparseMatrix(int n, int k);

  static SparseMatrix identity(int n, int k);

  int n() const { return n_; }
  int k() const { return k_; }
  std::uint64_t dim() const { return dim_; }
  const std::map<Key, Scalar> &entries() const { return entries_; }
  std::size_t nnz() const { return entries_.size(); }
  bool is_zero() const { return entries_.empty(); }

  std::uint64_t encode(const Tuple &t) const;
  Tuple decode(std::uint64_t code) const;

  Scalar at(std::uint64_t row, std::uint64_t col) const;
  void add(std::uint64_t row, std::uint64_t col, const Scalar &v);
  void set(std::uint64_t row, std::uint64_t col, const Scalar &v);

  SparseMatrix &operator+=(const SparseMatrix &o);
  SparseMatrix &operator-=(const SparseMatrix &o);
  SparseMatrix &operator*=(const Scalar &s);
  friend SparseMatrix operator+(SparseMatrix a, const SparseMatrix &b) { return a += b; }
  friend SparseMatrix operator-(SparseMatrix a, const SparseMatrix &b) { return a -= b; }
  friend SparseMatrix operator*(const Scalar &s, SparseMatrix a) { return a *= s; }
  friend SparseMatrix operator*(const SparseMatrix &a, const SparseMatrix &b);
  friend bool operator==(const SparseMatrix &a, const SparseMatrix &b) = default;

private:
  void check_shape(const SparseMatrix &o) const;

  int n_ = 0;
  int k_ = 0;
  std::uint64_t dim_ = 1;
  std::map<Key, Scalar> entries_;
};

SparseMatrix phi_orbit(const SetPartition &pi, int n);
SparseMatrix phi_diagram(const SetPartition &pi, int n);
SparseMatrix phi(const Element &a, int n);
SparseMatrix phi_half(const Element &a, int n);
SparseMatrix perm_matrix(const Permutation &sigma, int n, int k);

std::vector<Element> kernel_basis(const Level &level, int n);
// Permutations used by commutant_check: all of S_n (or S_{n-1} at half
// levels) when trials reaches the group order, otherwise a seeded sample.
std::vector<Permutation> commutant_permutations(const Level &level, int n, int trials);
CheckResult check_commutes(const std::string &name, const SparseMatrix &m,
                           const std::vector<Permutation> &perms);
Report commutant_check(const Level &level, int n, int trials);
long centralizer_dim(const Level &level, int n);
long image_rank(const Level &level, int n);

// All permutations of [1, m] in lexicographic order.
std::vector<Permutation> all_permutations(int m);

} // namespace pa
