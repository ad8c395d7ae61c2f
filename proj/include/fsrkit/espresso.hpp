#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <vector>

#include "fsrkit/transform.hpp"

namespace fsrkit {

inline constexpr int kEspressoBits = 256;

using EspressoKey = std::array<uint8_t, 16>;  // 128-bit key, bit 0 = k_0
using EspressoIv = std::array<uint8_t, 12>;   // 96-bit IV

// The 256-stage linear register underlying the cipher: six feedback taps on
// stage 255, trivial elsewhere, plus the cipher's output filter.
FsrSpec build_base_lfsr();

// The published two-modified-stage register (stages 255 and 217).
FsrSpec build_espresso_f();

// The production register: fourteen modified stages, all deviations tapping
// at or below stage 193, same output filter.
FsrSpec build_espresso_g();

// Key/IV loading: stages 0..127 get the key bits, 128..223 the IV bits,
// 224..254 are set to one, stage 255 to zero. Bits are taken LSB-first
// from each byte.
RegisterState espresso_load(const EspressoKey& key, const EspressoIv& iv);

// State after the 256 initialization clocks (output feeds back into stages
// 255 and 217, nothing is emitted).
RegisterState espresso_init_state(const EspressoKey& key, const EspressoIv& iv);

// T keystream bits following initialization.
std::vector<uint8_t> espresso_keystream(const EspressoKey& key, const EspressoIv& iv, long T);

struct OutputStats {
  std::size_t monomials = 0;
  int variables = 0;
  int degree = 0;
};

struct EspressoTransformResult {
  FsrSpec lfsr;            // linear register equivalent to the production one
  CompensationList comp;   // stage relation between the two registers
  OutputStats output_stats;
  // Rewritten output taps x_i ^ comp[i] for the filter's compensated stages.
  std::map<int, BooleanFunction> compensated_taps;
};

// Rewrites the production register as a linear register with a nonlinear
// output filter. Checks that the linear feedback comes out as expected.
EspressoTransformResult transform_espresso();

// The plan that rebuilds the production register from the base linear one.
ShiftPlan espresso_shift_plan();

// True iff the production register and its linear filter equivalent emit
// identical keystream for `trials` random key/IV pairs over `bits` clocks.
bool espresso_equivalence_check(uint64_t seed, int trials, long bits);

}  // namespace fsrkit
