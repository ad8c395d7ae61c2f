#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fsrkit/bitmat.hpp"
#include "fsrkit/fsr.hpp"
#include "fsrkit/gf2poly.hpp"

namespace fsrkit {

// A Fibonacci register with purely linear feedback and a nonlinear output
// filter: the normal form the attacks operate on.
struct FilterGenerator {
  FsrSpec spec;

  static FilterGenerator from_spec(const FsrSpec& spec);
  int n() const { return spec.n; }
  const BooleanFunction& filter() const { return spec.output; }
};

// All monomials over x_0..x_{n-1} of degree <= d, in canonical order.
// Index 0 is the constant monomial (when d >= 0).
class MonomialBasis {
 public:
  MonomialBasis(int n, int d);

  int n() const { return n_; }
  int d() const { return d_; }
  std::size_t size() const { return monos_.size(); }
  const Monomial& at(std::size_t idx) const { return monos_[idx]; }
  std::size_t index_of(const Monomial& m) const;

  // Coefficient row over the basis, packed into 64-bit words.
  std::vector<uint64_t> row_of(const BooleanFunction& f) const;
  BooleanFunction function_of(const std::vector<uint64_t>& row) const;
  std::size_t words() const { return (monos_.size() + 63) / 64; }

  static unsigned __int128 size_of(int n, int d);  // sum of C(n,i), i <= d

 private:
  int n_, d_;
  std::vector<Monomial> monos_;
};

// Row mu holds the coefficients of "mu after one clock" over the same
// basis: row(next-state coefficients) = row(current) * matrix.
BitMatrix monomial_step_matrix(const FilterGenerator& gen, int d);

// One multiplier: g = product of (x_v ^ 1) over `factors`, h = filter * g
// with deg h < deg filter.
struct Multiplier {
  std::vector<int> factors;
  BooleanFunction g;
  BooleanFunction h;
  int h_degree = 0;
};

// All factor sets of at most max_e stages whose product with the filter
// drops its degree, found by intersecting the top-degree terms.
std::vector<Multiplier> multiplier_search(const BooleanFunction& filter, int max_e);

// The clock-t equation h(X) ^ z*g(X) = 0 as a function of the state.
BooleanFunction relation(const BooleanFunction& h, const BooleanFunction& g, bool z);

// Smallest polynomial found to annihilate every monomial sequence of
// degree <= d along the generator's state cycle (verified on a fresh
// window; the constant sequence contributes a factor x+1).
Gf2Poly char_poly(const FilterGenerator& gen, int d);

struct AttackReport {
  RegisterState recovered;
  long equations_used = 0;
  long data_bits = 0;     // keystream bits consumed
  double wall_ms = 0.0;
  bool verified = false;  // recovered state re-generates the keystream
  std::string note;
};

AttackReport standard_attack(const FilterGenerator& gen,
                             const std::vector<uint8_t>& z, int max_e = 2);

AttackReport rh_attack(const FilterGenerator& gen, const std::vector<uint8_t>& z);

enum class AttackKind { standard, rh };

struct ComplexityEstimate {
  AttackKind kind = AttackKind::standard;
  int n = 0;
  int d = 0;    // relation degree (standard)
  int e = 0;    // multiplier degree (standard)
  int d_f = 0;  // filter degree (rh)
  double omega = 2.807;
  double c = 1.0;
  double data_log2 = 0;
  double precomputation_log2 = 0;
  double substitution_log2 = 0;  // standard only
  double solving_log2 = 0;
};

ComplexityEstimate estimate_standard(int n, int d, int e, double omega = 2.807,
                                     double c = 1.0);
ComplexityEstimate estimate_rh(int n, int d_f, double omega = 2.807);

}  // namespace fsrkit
