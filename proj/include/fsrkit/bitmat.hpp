#pragma once

#include <cstdint>
#include <vector>

#include "fsrkit/anf.hpp"

namespace fsrkit {

// A dense matrix over GF(2), rows packed into 64-bit words.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), wpr_((cols + 63) / 64),
        w_(static_cast<std::size_t>(rows) * wpr_, 0) {}

  static BitMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int words_per_row() const { return wpr_; }

  bool get(int r, int c) const {
    return (w_[static_cast<std::size_t>(r) * wpr_ + (c >> 6)] >> (c & 63)) & 1;
  }
  void set(int r, int c, bool v) {
    uint64_t bit = uint64_t{1} << (c & 63);
    std::size_t idx = static_cast<std::size_t>(r) * wpr_ + (c >> 6);
    if (v)
      w_[idx] |= bit;
    else
      w_[idx] &= ~bit;
  }
  uint64_t* row(int r) { return w_.data() + static_cast<std::size_t>(r) * wpr_; }
  const uint64_t* row(int r) const { return w_.data() + static_cast<std::size_t>(r) * wpr_; }
  void xor_row(int dst, int src);
  bool row_is_zero(int r) const;
  bool is_zero() const;

  friend bool operator==(const BitMatrix& a, const BitMatrix& b) = default;

 private:
  int rows_ = 0, cols_ = 0, wpr_ = 0;
  std::vector<uint64_t> w_;
};

// out.row(i) = XOR of b's rows selected by the set bits of a.row(i).
BitMatrix mul(const BitMatrix& a, const BitMatrix& b);

// XOR of m's rows selected by the set bits of vec (vec.size() == m.rows()).
std::vector<uint64_t> vec_mul(const std::vector<uint64_t>& vec, const BitMatrix& m);

enum class SolveStatus { unique, underdetermined, inconsistent };

struct SolveResult {
  SolveStatus status = SolveStatus::inconsistent;
  int rank = 0;
  std::vector<uint8_t> solution;        // one solution when status != inconsistent
  std::vector<std::vector<uint8_t>> kernel;  // basis of the homogeneous solutions
};

// Solves A x = rhs over GF(2). A is consumed by value (eliminated in place).
SolveResult solve(BitMatrix a, std::vector<uint8_t> rhs);

}  // namespace fsrkit
