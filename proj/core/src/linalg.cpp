#include "pa/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace pa {

std::size_t rank(std::vector<Vector> rows) {
  if (rows.empty())
    return 0;
  const std::size_t ncols = rows.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
    std::size_t best = rows.size();
    for (std::size_t i = r; i < rows.size(); ++i) {
      if (rows[i][c].is_zero())
        continue;
      if (best == rows.size() || rows[i][c].abs() < rows[best][c].abs())
        best = i;
    }
    if (best == rows.size())
      continue;
    std::swap(rows[r], rows[best]);
    const Vector &piv = rows[r];
    std::vector<std::size_t> nz;
    for (std::size_t j = c; j < ncols; ++j)
      if (!piv[j].is_zero())
        nz.push_back(j);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][c].is_zero())
        continue;
      Scalar f = rows[i][c] / piv[c];
      for (std::size_t j : nz)
        rows[i][j].add_mul(-f, piv[j]);
    }
    ++r;
  }
  return r;
}

void EchelonBasis::refresh(Row &r) {
  r.nz.clear();
  for (std::size_t j = r.pivot; j < r.v.size(); ++j)
    if (!r.v[j].is_zero())
      r.nz.push_back(j);
}

std::vector<Vector> EchelonBasis::rows() const {
  std::vector<Vector> out;
  out.reserve(rows_.size());
  for (const auto &r : rows_)
    out.push_back(r.v);
  return out;
}

void EchelonBasis::reduce(Vector &w) const {
  if (w.size() != ncols_)
    throw std::invalid_argument("vector length does not match the ambient dimension");
  for (const auto &r : rows_) {
    if (w[r.pivot].is_zero())
      continue;
    Scalar f = -w[r.pivot];
    for (std::size_t j : r.nz)
      w[j].add_mul(f, r.v[j]);
  }
}

bool EchelonBasis::contains(Vector w) const {
  reduce(w);
  return std::all_of(w.begin(), w.end(), [](const Scalar &s) { return s.is_zero(); });
}

bool EchelonBasis::insert(Vector w) {
  reduce(w);
  std::size_t p = 0;
  while (p < w.size() && w[p].is_zero())
    ++p;
  if (p == w.size())
    return false;
  Row fresh;
  fresh.pivot = p;
  if (!w[p].is_one()) {
    Scalar inv = Scalar(1) / w[p];
    for (std::size_t j = p; j < w.size(); ++j)
      if (!w[j].is_zero())
        w[j] *= inv;
  }
  fresh.v = std::move(w);
  refresh(fresh);
  for (auto &r : rows_) {
    if (r.v[p].is_zero())
      continue;
    Scalar f = -r.v[p];
    for (std::size_t j : fresh.nz)
      r.v[j].add_mul(f, fresh.v[j]);
    refresh(r);
  }
  auto pos = std::lower_bound(rows_.begin(), rows_.end(), p,
                              [](const Row &r, std::size_t piv) { return r.pivot < piv; });
  rows_.insert(pos, std::move(fresh));
  return true;
}

bool operator==(const EchelonBasis &a, const EchelonBasis &b) {
  if (a.ncols_ != b.ncols_ || a.rows_.size() != b.rows_.size())
    return false;
  for (std::size_t i = 0; i < a.rows_.size(); ++i)
    if (a.rows_[i].pivot != b.rows_[i].pivot || a.rows_[i].v != b.rows_[i].v)
      return false;
  return true;
}

} // namespace pa
