#include <set>
#include <vector>

#include "doctest.h"
#include "fsrkit/espresso.hpp"

using namespace fsrkit;

namespace {

BooleanFunction bf(const char* text) { return BooleanFunction::parse(text); }

// The published output filter, transcribed here again as a check on the
// builder's copy.
const char* kFilterText =
    "x80 + x99 + x137 + x227 + x222 + x187 + x243*x217 + x247*x231 + x213*x235"
    " + x255*x251 + x181*x239 + x174*x44 + x164*x29"
    " + x255*x247*x243*x213*x181*x174";

EspressoKey key_of(std::initializer_list<uint8_t> bytes) {
  EspressoKey k{};
  std::size_t i = 0;
  for (uint8_t b : bytes) k[i++] = b;
  return k;
}

EspressoIv iv_of(std::initializer_list<uint8_t> bytes) {
  EspressoIv iv{};
  std::size_t i = 0;
  for (uint8_t b : bytes) iv[i++] = b;
  return iv;
}

}  // namespace

TEST_SUITE("espresso") {

TEST_CASE("the three registers carry the published functions") {
  FsrSpec base = build_base_lfsr();
  CHECK(base.n == 256);
  CHECK(base.feedback[255] == bf("x0 + x12 + x48 + x115 + x133 + x213"));
  CHECK(base.output == bf(kFilterText));
  CHECK(base.output.term_count() == 14);
  CHECK(base.output.degree() == 6);
  CHECK(classify(base) == Classification::fibonacci);

  FsrSpec f = build_espresso_f();
  CHECK(f.feedback[255] ==
        bf("x0 + x12 + x48 + x115 + x133 + x213 + x41*x70 + x46*x87"));
  CHECK(f.feedback[217] == bf("x218 + x3*x32 + x8*x49 + x14*x72 + x17*x92 + "
                              "x24*x119 + x36*x145 + x49*x72*x92*x119"));
  CHECK(f.feedback[100] == bf("x101"));  // untouched stages shift
  CHECK(f.output == base.output);

  FsrSpec g = build_espresso_g();
  CHECK(g.feedback[255] == bf("x0 + x41*x70"));
  CHECK(g.feedback[251] == bf("x252 + x42*x83 + x8"));
  CHECK(g.feedback[247] == bf("x248 + x44*x102 + x40"));
  CHECK(g.feedback[243] == bf("x244 + x43*x118 + x103"));
  CHECK(g.feedback[239] == bf("x240 + x46*x141 + x117"));
  CHECK(g.feedback[235] == bf("x236 + x67*x90*x110*x137"));
  CHECK(g.feedback[231] == bf("x232 + x50*x159 + x189"));
  CHECK(g.feedback[217] == bf("x218 + x3*x32"));
  CHECK(g.feedback[213] == bf("x214 + x4*x45"));
  CHECK(g.feedback[209] == bf("x210 + x6*x64"));
  CHECK(g.feedback[205] == bf("x206 + x5*x80"));
  CHECK(g.feedback[201] == bf("x202 + x8*x103"));
  CHECK(g.feedback[197] == bf("x198 + x29*x52*x72*x99"));
  CHECK(g.feedback[193] == bf("x194 + x12*x121"));
  int modified = 0;
  for (int i = 0; i < 256; ++i)
    if (!g.g_part(i).is_zero()) ++modified;
  CHECK(modified == 14);
  CHECK(g.output == base.output);
}

TEST_CASE("both cipher registers are uniform") {
  CHECK(classify(build_espresso_g()) == Classification::uniform_galois);
  CHECK(classify_tau(build_espresso_g()) == 193);
  CHECK(classify(build_espresso_f()) == Classification::uniform_galois);
  CHECK(classify_tau(build_espresso_f()) == 217);
}

TEST_CASE("key and IV bits land LSB-first") {
  RegisterState s = espresso_load(key_of({0x01}), iv_of({}));
  CHECK(s.get(0));
  for (int i = 1; i < 224; ++i) CHECK(!s.get(i));
  for (int i = 224; i < 255; ++i) CHECK(s.get(i));
  CHECK(!s.get(255));

  RegisterState s2 = espresso_load(key_of({0x80, 0x01}), iv_of({0x05}));
  CHECK(s2.get(7));    // key byte 0, bit 7
  CHECK(s2.get(8));    // key byte 1, bit 0
  CHECK(s2.get(128));  // IV byte 0, bit 0
  CHECK(s2.get(130));  // IV byte 0, bit 2
  CHECK(!s2.get(129));
  CHECK(!s2.get(0));
}

TEST_CASE("initialization stirs the loaded state deterministically") {
  EspressoKey k = key_of({1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16});
  EspressoIv iv = iv_of({21, 22, 23, 24, 25, 26, 27, 28, 29, 30, 31, 32});
  RegisterState a = espresso_init_state(k, iv);
  RegisterState b = espresso_init_state(k, iv);
  CHECK(a == b);
  CHECK(a != espresso_load(k, iv));
  EspressoKey k2 = k;
  k2[0] ^= 1;
  CHECK(a != espresso_init_state(k2, iv));

  std::vector<uint8_t> z1 = espresso_keystream(k, iv, 64);
  std::vector<uint8_t> z2 = espresso_keystream(k, iv, 64);
  CHECK(z1 == z2);
  CHECK(z1.size() == 64);
}

TEST_CASE("the move plan rebuilds the production register exactly") {
  EspressoTransformResult res = transform_espresso();
  ShiftPlan plan = espresso_shift_plan();
  CHECK(plan.moves.size() == 18);
  for (const ShiftMove& mv : plan.moves) CHECK(mv.from == 255);

  TransformOutcome fwd =
      fib_to_galois(res.lfsr, plan, RegisterState::zeros(kEspressoBits));
  CHECK(fwd.spec == build_espresso_g());  // feedbacks and the output filter
  CHECK(fwd.comp == res.comp);
}

TEST_CASE("the production register rewrites onto the base register") {
  EspressoTransformResult res = transform_espresso();
  FsrSpec base = build_base_lfsr();
  CHECK(res.lfsr.feedback == base.feedback);
  CHECK(classify(res.lfsr) == Classification::fibonacci);

  CHECK(res.output_stats.monomials == 2289);
  CHECK(res.output_stats.variables == 104);
  CHECK(res.output_stats.degree == 12);
  CHECK(res.lfsr.output != base.output);
  CHECK(res.lfsr.output.term_count() == 2289);

  std::set<int> keys;
  for (const auto& [i, tap] : res.compensated_taps) keys.insert(i);
  CHECK(keys == std::set<int>{213, 217, 222, 227, 231, 235, 239, 243, 247, 251, 255});

  CHECK(res.compensated_taps.at(213) ==
        bf("x213 + x31*x140 + x44*x67*x87*x114 + x19*x114 + x12*x87 + x9*x67"));
  CHECK(res.compensated_taps.at(217) ==
        bf("x217 + x35*x144 + x48*x71*x91*x118 + x23*x118 + x16*x91 + x13*x71 + x7*x48"));
  CHECK(res.compensated_taps.at(222) ==
        bf("x222 + x40*x149 + x53*x76*x96*x123 + x28*x123 + x21*x96 + x18*x76 + "
           "x12*x53 + x7*x36"));
  CHECK(res.compensated_taps.at(227) ==
        bf("x227 + x45*x154 + x58*x81*x101*x128 + x33*x128 + x26*x101 + x23*x81 + "
           "x17*x58 + x12*x41"));
  CHECK(res.compensated_taps.at(231) ==
        bf("x231 + x49*x158 + x62*x85*x105*x132 + x37*x132 + x30*x105 + x27*x85 + "
           "x21*x62 + x16*x45"));
  CHECK(res.compensated_taps.at(235) ==
        bf("x235 + x66*x89*x109*x136 + x41*x136 + x34*x109 + x31*x89 + x25*x66 + "
           "x20*x49 + x192"));
  CHECK(res.compensated_taps.at(239) ==
        bf("x239 + x45*x140 + x38*x113 + x35*x93 + x29*x70 + x24*x53 + x196"));
  CHECK(res.compensated_taps.at(243) ==
        bf("x243 + x42*x117 + x39*x97 + x33*x74 + x28*x57 + x200 + x120"));
  CHECK(res.compensated_taps.at(247) ==
        bf("x247 + x43*x101 + x37*x78 + x32*x61 + x204 + x124 + x106"));
  CHECK(res.compensated_taps.at(251) ==
        bf("x251 + x41*x82 + x36*x65 + x208 + x128 + x110 + x43"));
  CHECK(res.compensated_taps.at(255) ==
        bf("x255 + x40*x69 + x212 + x132 + x114 + x47 + x11"));

  // One combined entry away from the filter's taps, fixed independently.
  CHECK(res.comp[198] == bf("x16*x125 + x29*x52*x72*x99"));
  CHECK(res.comp[193].is_zero());
  CHECK(res.comp[0].is_zero());
}

TEST_CASE("the two-modified-stage register has a different linear part") {
  FsrSpec f = build_espresso_f();
  TransformOutcome out = galois_to_fib(f, RegisterState::zeros(kEspressoBits));
  BooleanFunction expect =
      bf("x0 + x12 + x48 + x115 + x133 + x213 + x52*x110 + x55*x130 + x62*x157 + "
         "x74*x183 + x87*x110*x130*x157");
  CHECK(out.spec.feedback[255] == expect);
  CHECK(out.spec.feedback[255] != build_base_lfsr().feedback[255]);
  // Same result through the uniform-only path.
  TransformOutcome uni = uniform_galois_to_fib(f, RegisterState::zeros(kEspressoBits));
  CHECK(uni.spec == out.spec);
  CHECK(keystream(f, espresso_load(key_of({5}), iv_of({9})), 512) ==
        keystream(out.spec,
                  galois_to_fib(f, espresso_load(key_of({5}), iv_of({9}))).init, 512));
}

TEST_CASE("cipher and rewritten register generate the same keystream") {
  CHECK(espresso_equivalence_check(42, 3, 512));
}

TEST_CASE("flipping key bits changes the keystream") {
  EspressoKey k = key_of({1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16});
  EspressoIv iv = iv_of({9, 8, 7, 6, 5, 4, 3, 2, 1, 0, 1, 2});
  std::vector<uint8_t> base = espresso_keystream(k, iv, 512);
  for (int bit : {0, 63, 127}) {
    EspressoKey k2 = k;
    k2[static_cast<std::size_t>(bit / 8)] ^= static_cast<uint8_t>(1u << (bit % 8));
    CHECK(espresso_keystream(k2, iv, 512) != base);
  }
}

}  // TEST_SUITE
