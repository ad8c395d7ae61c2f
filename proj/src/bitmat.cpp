#include "fsrkit/bitmat.hpp"

#include <bit>

namespace fsrkit {

BitMatrix BitMatrix::identity(int n) {
  BitMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

void BitMatrix::xor_row(int dst, int src) {
  uint64_t* d = row(dst);
  const uint64_t* s = row(src);
  for (int w = 0; w < wpr_; ++w) d[w] ^= s[w];
}

bool BitMatrix::row_is_zero(int r) const {
  const uint64_t* p = row(r);
  for (int w = 0; w < wpr_; ++w)
    if (p[w]) return false;
  return true;
}

bool BitMatrix::is_zero() const {
  for (uint64_t v : w_)
    if (v) return false;
  return true;
}

BitMatrix mul(const BitMatrix& a, const BitMatrix& b) {
  if (a.cols() != b.rows()) throw Error("matrix dimensions do not match");
  BitMatrix out(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    const uint64_t* ar = a.row(i);
    uint64_t* orow = out.row(i);
    for (int w = 0; w < a.words_per_row(); ++w) {
      uint64_t v = ar[w];
      while (v) {
        int j = w * 64 + std::countr_zero(v);
        v &= v - 1;
        const uint64_t* br = b.row(j);
        for (int k = 0; k < b.words_per_row(); ++k) orow[k] ^= br[k];
      }
    }
  }
  return out;
}

std::vector<uint64_t> vec_mul(const std::vector<uint64_t>& vec, const BitMatrix& m) {
  std::vector<uint64_t> out(static_cast<std::size_t>(m.words_per_row()), 0);
  for (std::size_t w = 0; w < vec.size(); ++w) {
    uint64_t v = vec[w];
    while (v) {
      int j = static_cast<int>(w) * 64 + std::countr_zero(v);
      v &= v - 1;
      if (j >= m.rows()) throw Error("vector bit outside matrix rows");
      const uint64_t* br = m.row(j);
      for (int k = 0; k < m.words_per_row(); ++k) out[static_cast<std::size_t>(k)] ^= br[k];
    }
  }
  return out;
}

SolveResult solve(BitMatrix a, std::vector<uint8_t> rhs) {
  int rows = a.rows(), cols = a.cols();
  if (static_cast<int>(rhs.size()) != rows) throw Error("rhs size does not match rows");

  std::vector<int> pivot_row_of_col(cols, -1);
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (a.get(r, c)) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != rank) {
      for (int w = 0; w < a.words_per_row(); ++w)
        std::swap(a.row(pivot)[w], a.row(rank)[w]);
      std::swap(rhs[pivot], rhs[rank]);
    }
    for (int r = 0; r < rows; ++r) {
      if (r != rank && a.get(r, c)) {
        a.xor_row(r, rank);
        rhs[r] ^= rhs[rank];
      }
    }
    pivot_row_of_col[c] = rank;
    ++rank;
  }

  SolveResult res;
  res.rank = rank;
  for (int r = rank; r < rows; ++r)
    if (rhs[r]) {
      res.status = SolveStatus::inconsistent;
      return res;
    }

  res.solution.assign(static_cast<std::size_t>(cols), 0);
  for (int c = 0; c < cols; ++c)
    if (pivot_row_of_col[c] >= 0)
      res.solution[static_cast<std::size_t>(c)] = rhs[pivot_row_of_col[c]];

  if (rank == cols) {
    res.status = SolveStatus::unique;
    return res;
  }
  res.status = SolveStatus::underdetermined;
  // Kernel basis: one vector per free column.
  for (int c = 0; c < cols; ++c) {
    if (pivot_row_of_col[c] >= 0) continue;
    std::vector<uint8_t> v(static_cast<std::size_t>(cols), 0);
    v[static_cast<std::size_t>(c)] = 1;
    for (int c2 = 0; c2 < cols; ++c2) {
      int pr = pivot_row_of_col[c2];
      if (pr >= 0 && a.get(pr, c)) v[static_cast<std::size_t>(c2)] = 1;
    }
    res.kernel.push_back(std::move(v));
  }
  return res;
}

}  // namespace fsrkit
