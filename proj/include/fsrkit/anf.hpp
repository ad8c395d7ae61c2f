#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fsrkit {

// Variable indices live in [0, kMaxVars).
inline constexpr int kMaxVars = 256;
inline constexpr int kStateWords = kMaxVars / 64;

using StateWords = std::array<uint64_t, kStateWords>;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : Error {
  std::size_t position;
  ParseError(const std::string& msg, std::size_t pos)
      : Error(msg + " at position " + std::to_string(pos)), position(pos) {}
};

// A product of distinct variables, stored as a bitmask over kMaxVars
// variables. The empty product is the constant 1.
class Monomial {
 public:
  Monomial() : bits_{} {}

  static Monomial one() { return Monomial(); }
  static Monomial var(int i);
  static Monomial of(std::initializer_list<int> vars);

  bool is_one() const;
  int degree() const;
  bool contains(int i) const { return (bits_[i >> 6] >> (i & 63)) & 1; }
  int min_var() const;  // -1 for the constant monomial
  int max_var() const;  // -1 for the constant monomial
  std::vector<int> vars() const;
  const StateWords& mask() const { return bits_; }

  // Idempotent product: the union of the two variable sets.
  Monomial times(const Monomial& o) const;
  Monomial without(int i) const;

  // Adds k to every variable index. Fails if any index leaves [0, n-1].
  Monomial shifted(int k, int n) const;
  // Adds k to every variable index modulo n. All indices must be < n.
  Monomial shifted_wrap(int k, int n) const;

  bool evaluate(const StateWords& state) const;

  std::string format() const;

  friend bool operator==(const Monomial& a, const Monomial& b) = default;
  // Order: by degree, then lexicographically by the sorted index list.
  friend bool operator<(const Monomial& a, const Monomial& b);

 private:
  StateWords bits_;
};

// A Boolean function in algebraic normal form: an XOR of monomials, kept as
// a sorted, duplicate-free term list. The empty list is the zero function.
class BooleanFunction {
 public:
  BooleanFunction() = default;

  static BooleanFunction zero() { return {}; }
  static BooleanFunction one();
  static BooleanFunction var(int i);
  static BooleanFunction from_terms(std::vector<Monomial> terms);

  const std::vector<Monomial>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  bool has_term(const Monomial& m) const;
  int degree() const;  // -1 for the zero function
  std::vector<int> dep() const;
  StateWords dep_mask() const;

  BooleanFunction& operator^=(const BooleanFunction& o);
  BooleanFunction& operator^=(const Monomial& m);  // toggles one term

  bool evaluate(const StateWords& state) const;

  // XOR of t\{x_i} over all terms t containing x_i.
  BooleanFunction derivative(int i) const;
  // Replaces x_i by x_i ^ r; equals f ^ derivative(i)*r.
  BooleanFunction substitute_tap(int i, const BooleanFunction& r) const;
  // Replaces x_i by r (full substitution, not a toggle).
  BooleanFunction substitute(int i, const BooleanFunction& r) const;
  BooleanFunction shift_indices(int k, int n, bool wrap) const;

  std::string format() const;
  static BooleanFunction parse(std::string_view text);

  friend bool operator==(const BooleanFunction& a,
                         const BooleanFunction& b) = default;
  friend BooleanFunction operator^(BooleanFunction a, const BooleanFunction& b) {
    a ^= b;
    return a;
  }
  friend BooleanFunction operator*(const BooleanFunction& a,
                                   const BooleanFunction& b);

 private:
  std::vector<Monomial> terms_;
};

}  // namespace fsrkit
