#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fsrkit/anf.hpp"

namespace fsrkit {

// Bit i of `w` is the content of stage i. Stage 0 is the output end; stage
// n-1 receives the feedback in a plain shift register.
struct RegisterState {
  StateWords w{};
  int n = 0;

  static RegisterState zeros(int n);
  // Leftmost character of `bits` is stage n-1, rightmost is stage 0.
  static RegisterState from_string(std::string_view bits);

  bool get(int i) const { return (w[i >> 6] >> (i & 63)) & 1; }
  void set(int i, bool v) {
    uint64_t bit = uint64_t{1} << (i & 63);
    if (v)
      w[i >> 6] |= bit;
    else
      w[i >> 6] &= ~bit;
  }
  void flip(int i) { w[i >> 6] ^= uint64_t{1} << (i & 63); }
  bool is_zero() const;
  std::string to_string() const;

  friend bool operator==(const RegisterState& a, const RegisterState& b) = default;
};

// A feedback shift register: n stages, one update function per stage
// (all stages update simultaneously from the old state), and an output
// function. Output is taken before each clock.
struct FsrSpec {
  int n = 0;
  std::vector<BooleanFunction> feedback;  // feedback[i] updates stage i
  BooleanFunction output;

  // Pure shift skeleton: f_i = x_{i+1}, f_{n-1} = x_0, output = x_0.
  static FsrSpec shift_register(int n);

  // g_i = f_i ^ x_{i+1} (or f_{n-1} ^ x_0): the deviation from the skeleton.
  BooleanFunction g_part(int i) const;
  void set_g_part(int i, const BooleanFunction& g);

  bool is_fibonacci() const;
  void validate() const;  // checks sizes and that all taps are < n

  friend bool operator==(const FsrSpec& a, const FsrSpec& b) = default;
};

enum class Classification { fibonacci, uniform_galois, general_galois };

std::string to_string(Classification c);

Classification classify(const FsrSpec& spec);

// Smallest stage index whose update differs from the pure shift skeleton
// (n-1 if none below it differ). For a uniform Galois register every
// feedback tap of every g-part lies at or below this index.
int classify_tau(const FsrSpec& spec);

RegisterState step(const FsrSpec& spec, const RegisterState& s);

// Simultaneous-update simulator with the shift skeleton precomputed.
class Simulator {
 public:
  explicit Simulator(const FsrSpec& spec);
  RegisterState step(const RegisterState& s) const;
  bool output(const RegisterState& s) const { return spec_.output.evaluate(s.w); }
  // T output bits, one per clock, each taken before stepping.
  std::vector<uint8_t> keystream(RegisterState s, long T) const;
  const FsrSpec& spec() const { return spec_; }

 private:
  FsrSpec spec_;
  std::vector<std::pair<int, BooleanFunction>> deviations_;  // nonzero g-parts, stage n-1 last
};

std::vector<uint8_t> keystream(const FsrSpec& spec, const RegisterState& init, long T);

// Length of the state cycle through `init`. Requires n <= 24; fails if the
// walk returns to a state other than `init` (init not on a cycle).
uint64_t period(const FsrSpec& spec, const RegisterState& init);

struct ParsedFsr {
  FsrSpec spec;
  std::optional<RegisterState> init;
};

// Text format: "n = <int>" first, then optional "f<i> = <anf>" lines
// (stages omitted default to the shift skeleton), "z = <anf>", and an
// optional "init = <bits>" (leftmost bit is stage n-1). '#' starts a comment.
ParsedFsr parse_fsr(std::string_view text);
std::string format_fsr(const FsrSpec& spec, const RegisterState* init = nullptr);

}  // namespace fsrkit
