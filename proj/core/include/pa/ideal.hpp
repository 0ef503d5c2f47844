#pragma once

#include <functional>
#include <optional>
#include <unordered_map>
#include <vector>

#include "pa/algebra.hpp"
#include "pa/linalg.hpp"
#include "pa/report.hpp"

namespace pa {

// Span inside P_k(n) in diagram-basis coordinates (canonical partition order).
struct SubspaceBasis {
  Level level;
  Scalar n;
  EchelonBasis rows;
  std::vector<long> rounds; // dimension after each closure round

  long dim() const { return static_cast<long>(rows.dim()); }
};

struct ClosureOptions {
  bool override_size_guard = false;
  // Stop as soon as the span reaches this dimension. Only sound when the
  // closure is known to lie in a subspace of that dimension.
  std::optional<long> stop_at_dim;
  // verify_*_generation: pass dim ker Phi as stop_at_dim. The generator is
  // checked to lie in ker Phi, which is an ideal, so the bound holds.
  bool stop_at_kernel_dim = false;
  // called after every round with the dimension reached
  std::function<void(long)> on_round;
};

constexpr long kIdealSizeGuard = 5000;

// Diagram-basis index of a level with its multiplication table.
class DiagramBasisIndex {
public:
  explicit DiagramBasisIndex(const Level &level);

  const Level &level() const { return level_; }
  std::size_t size() const { return parts_.size(); }
  const SetPartition &at(std::size_t i) const { return parts_[i]; }
  std::size_t index(const SetPartition &p) const;

  Vector to_vector(const Element &diagram_element) const;
  Element to_element(const Vector &v, const Scalar &xi) const;

  // d_i * d_j = xi^removed d_product
  struct Product {
    std::uint32_t index;
    std::uint8_t removed;
  };
  Product product(std::size_t i, std::size_t j) const;

private:
  Level level_;
  std::vector<SetPartition> parts_;
  std::unordered_map<SetPartition, std::size_t> lookup_;
  mutable std::vector<Product> table_; // lazily filled, row-major
  mutable std::vector<char> filled_;
};

SubspaceBasis ideal_closure(const std::vector<Element> &generators, const Level &level, int n,
                            const ClosureOptions &options = {});
Report verify_kernel_generation(const Level &level, int n, const ClosureOptions &options = {});
Report verify_enn_generation(const Level &level, int n, const ClosureOptions &options = {});
Element enn_generator(const Level &level, int n);
SubspaceBasis propagating_ideal(const Level &level, int ell, const Scalar &xi);
Report verify_propagating_ideal(const Level &level, int ell, const Scalar &xi);

// Whether Phi_{level,n} kills the vector (diagram coordinates). Every entry of
// Phi(v) equals the sum of v over the refinements of some partition of the
// level with at most n blocks, so only those sums are evaluated.
class PhiKernelTest {
public:
  PhiKernelTest(const DiagramBasisIndex &idx, int n);
  bool vanishes(const Vector &v) const;

private:
  std::vector<std::vector<std::uint32_t>> up_; // coarsenings with <= n blocks
  std::size_t targets_ = 0;
};

// Diagram-basis elements spanned by the rows.
std::vector<Element> subspace_elements(const SubspaceBasis &s);

} // namespace pa
