#pragma once

#include <map>
#include <vector>

#include "pa/algebra.hpp"
#include "pa/report.hpp"
#include "pa/schurweyl.hpp"

namespace pa {

struct PoleError : std::domain_error {
  using std::domain_error::domain_error;
};

struct UndefinedIdempotent : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct SizeGuardError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Shape [n-k, k].
struct TwoRowPartition {
  int n = 0;
  int k = 0;
};

using CycleType = std::vector<int>;

// Partition with n+1-k isolated columns followed by 2k-n-1 vertical edges
// (n >= k > n/2), or the identity partition (k > n).
SetPartition essential_partition(int k, int n);
Element essential_idempotent(const Level &level, int n);
Scalar c_const(int k, int n);
Scalar hook_dim_two_row(int n, int k);
Scalar xi_coefficient(int pn_value, int k, int n);
// f^{[n-k,k]} c(pi, n) with the pole at n = 2k-1 cancelled.
Scalar xi_term_coefficient(int pn_value, int k, int n);
std::vector<SetPartition> rook_partitions(int k);
Element xi(int k, int n);
Element xi_half(int k, int n);
std::map<SetPartition, Scalar> xi_diagram_coefficients(int k, int n);

CycleType cycle_type(const Permutation &sigma);
long two_row_character(const CycleType &ct, int n, int j);
// Number of t-subsets of [1,n] fixed setwise by a permutation of the cycle type.
long fixed_subsets(const CycleType &ct, int t);
SparseMatrix epsilon_image(int n, int j, const Level &level);

Report verify_steps(int k, int n);
Report verify_xief(int k);
Report verify_square_identity(int n, int ell);
Report verify_noncentrality(int k, int n);

// Exposed for the noncentrality report and its tests.
SetPartition noncentrality_witness(int k);

} // namespace pa
