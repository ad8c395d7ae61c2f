#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "fsrkit/fsr.hpp"

namespace fsrkit {

// One compensation function per stage. Entry i rewrites stage i of one
// register in terms of the other: moved-register stage i equals original
// stage i XOR entry i evaluated on the original state. Entry i may only
// tap stages strictly below i; entry 0 is always zero.
class CompensationList {
 public:
  CompensationList() = default;
  explicit CompensationList(int n) : entries_(static_cast<std::size_t>(n)) {}

  int n() const { return static_cast<int>(entries_.size()); }
  const BooleanFunction& operator[](int i) const { return entries_[static_cast<std::size_t>(i)]; }
  BooleanFunction& operator[](int i) { return entries_[static_cast<std::size_t>(i)]; }
  bool all_zero() const;
  void validate() const;  // entry i taps only [0, i-1]

  std::string format() const;  // "C<i> = <anf>" lines, zero entries omitted
  static CompensationList parse(std::string_view text, int n);

  friend bool operator==(const CompensationList& a, const CompensationList& b) = default;

 private:
  std::vector<BooleanFunction> entries_;
};

// Moving monomial m from stage `from` down to stage `to`.
struct ShiftMove {
  Monomial m;
  int from = 0;
  int to = 0;
  friend bool operator==(const ShiftMove& a, const ShiftMove& b) = default;
};

struct ShiftPlan {
  std::vector<ShiftMove> moves;

  // One move per line: "m=<monomial> from=<stage> to=<stage>".
  std::string format() const;
  static ShiftPlan parse(std::string_view text);
};

// Moves monomial m from feedback a to feedback b (b < a): f_a loses the
// term m and f_b gets m shifted by -(a-b) toggled in. Requires m to be a
// term of f_a and every variable of m at or above a-b. Pure structural
// rewrite: no compensation is applied.
FsrSpec shift_monomial(const FsrSpec& spec, const Monomial& m, int a, int b);

// Compensation induced by moving m from stage a to stage b in a register of
// n stages: entry i = m shifted by -(a-i+1) for i in (b, a], zero elsewhere.
// Requires b in [a - min_var(m), a - 1].
CompensationList compensation_list(const Monomial& m, int a, int b, int n);

// Entrywise XOR of per-move lists.
CompensationList combine(const std::vector<CompensationList>& lists);

// Applies "x_i -> x_i ^ C[i]" for i = n-1 down to 0. Taps introduced by one
// substitution are rewritten by the later (lower) steps.
BooleanFunction compensate_iterative(const BooleanFunction& f, const CompensationList& c);

// Applies "x_i -> x_i ^ C[i]" to every original tap in one simultaneous
// pass; taps introduced by the substitution are left alone. Inverse of
// compensate_iterative.
BooleanFunction compensate_single_pass(const BooleanFunction& f, const CompensationList& c);

struct TransformOutcome {
  FsrSpec spec;
  RegisterState init;
  CompensationList comp;  // relates the two registers stage by stage
};

// Fibonacci-to-Galois: applies the plan's moves (every from must be n-1),
// compensates the feedback deviations, the output function and the initial
// state so that the returned register generates the same output sequence.
TransformOutcome fib_to_galois(const FsrSpec& fib, const ShiftPlan& plan,
                               const RegisterState& init);

// Galois-to-Fibonacci for registers whose stage-i deviation taps only
// [0, i] (stage n-1 unconstrained).
TransformOutcome galois_to_fib(const FsrSpec& gal, const RegisterState& init);

// Specialized Galois-to-Fibonacci for uniform registers (every deviation
// taps at or below the lowest modified stage). Same result as
// galois_to_fib but built without iterated rewriting.
TransformOutcome uniform_galois_to_fib(const FsrSpec& gal, const RegisterState& init);

struct RelationResult {
  bool ok = true;
  int stage = -1;   // first divergent stage when !ok
  long clock = -1;  // first divergent clock when !ok
};

// Checks gal-state(i, t) == fib-state(i, t) ^ C[i](fib-state(t)) for every
// stage i and every t < T.
RelationResult state_relation_check(const FsrSpec& fib, const FsrSpec& gal,
                                    const CompensationList& c,
                                    const RegisterState& fib_init,
                                    const RegisterState& gal_init, long T);

}  // namespace fsrkit
