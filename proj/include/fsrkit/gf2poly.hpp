#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "fsrkit/anf.hpp"

namespace fsrkit {

// A polynomial over GF(2), bit-packed with coefficient of x^i at bit i.
class Gf2Poly {
 public:
  Gf2Poly() = default;  // zero

  static Gf2Poly one();
  static Gf2Poly x();
  // Sum of x^e over the listed exponents.
  static Gf2Poly of(std::initializer_list<int> exponents);

  int degree() const;  // -1 for zero
  bool is_zero() const { return w_.empty(); }
  bool coeff(int i) const;
  void set_coeff(int i, bool v);
  int weight() const;
  std::vector<int> exponents() const;

  // Coefficients of x^j for j in [0, degree+1), as 0/1 bytes.
  std::vector<uint8_t> coeff_bytes() const;
  // x^k * p(1/x) for k = degree: the coefficient list reversed.
  Gf2Poly reciprocal() const;

  friend Gf2Poly operator^(const Gf2Poly& a, const Gf2Poly& b);
  friend Gf2Poly operator*(const Gf2Poly& a, const Gf2Poly& b);
  static std::pair<Gf2Poly, Gf2Poly> divmod(const Gf2Poly& num, const Gf2Poly& den);
  friend Gf2Poly operator/(const Gf2Poly& a, const Gf2Poly& b);
  friend Gf2Poly operator%(const Gf2Poly& a, const Gf2Poly& b);
  friend bool operator==(const Gf2Poly& a, const Gf2Poly& b) = default;

  std::string format() const;  // "x^4 + x + 1"

 private:
  void trim();
  std::vector<uint64_t> w_;
};

Gf2Poly gcd(Gf2Poly a, Gf2Poly b);
Gf2Poly lcm(const Gf2Poly& a, const Gf2Poly& b);

// Connection polynomial C of a shortest LFSR generating `seq`:
// sum_{i=0..L} C_i * seq[t-i] = 0 for all t >= L, with C_0 = 1 and
// L = max(degree, declared length of the recurrence).
struct BmResult {
  Gf2Poly connection;
  int L = 0;
};
BmResult berlekamp_massey(const std::vector<uint8_t>& seq);

// Smallest-degree polynomial p with sum_j p_j * seq[t+j] = 0 for all t,
// derived from the Berlekamp-Massey recurrence.
Gf2Poly annihilator(const std::vector<uint8_t>& seq);

// True iff sum_j p_j * seq[t+j] = 0 for every complete window in seq.
bool annihilates(const Gf2Poly& p, const std::vector<uint8_t>& seq);

}  // namespace fsrkit
