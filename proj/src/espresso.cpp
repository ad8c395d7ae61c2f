#include "fsrkit/espresso.hpp"

#include <random>

namespace fsrkit {

namespace {

const char* kOutputFilter =
    "x80 + x99 + x137 + x227 + x222 + x187 + x243*x217 + x247*x231 + x213*x235 + "
    "x255*x251 + x181*x239 + x174*x44 + x164*x29 + x255*x247*x243*x213*x181*x174";

BooleanFunction F(const char* text) { return BooleanFunction::parse(text); }

}  // namespace

FsrSpec build_base_lfsr() {
  FsrSpec spec = FsrSpec::shift_register(kEspressoBits);
  spec.feedback[255] = F("x0 + x12 + x48 + x115 + x133 + x213");
  spec.output = F(kOutputFilter);
  return spec;
}

FsrSpec build_espresso_f() {
  FsrSpec spec = FsrSpec::shift_register(kEspressoBits);
  spec.feedback[255] = F("x0 + x12 + x48 + x115 + x133 + x213 + x41*x70 + x46*x87");
  spec.feedback[217] =
      F("x218 + x3*x32 + x8*x49 + x14*x72 + x17*x92 + x24*x119 + x36*x145 + "
        "x49*x72*x92*x119");
  spec.output = F(kOutputFilter);
  return spec;
}

FsrSpec build_espresso_g() {
  FsrSpec spec = FsrSpec::shift_register(kEspressoBits);
  spec.feedback[255] = F("x0 + x41*x70");
  spec.feedback[251] = F("x252 + x42*x83 + x8");
  spec.feedback[247] = F("x248 + x44*x102 + x40");
  spec.feedback[243] = F("x244 + x43*x118 + x103");
  spec.feedback[239] = F("x240 + x46*x141 + x117");
  spec.feedback[235] = F("x236 + x67*x90*x110*x137");
  spec.feedback[231] = F("x232 + x50*x159 + x189");
  spec.feedback[217] = F("x218 + x3*x32");
  spec.feedback[213] = F("x214 + x4*x45");
  spec.feedback[209] = F("x210 + x6*x64");
  spec.feedback[205] = F("x206 + x5*x80");
  spec.feedback[201] = F("x202 + x8*x103");
  spec.feedback[197] = F("x198 + x29*x52*x72*x99");
  spec.feedback[193] = F("x194 + x12*x121");
  spec.output = F(kOutputFilter);
  return spec;
}

RegisterState espresso_load(const EspressoKey& key, const EspressoIv& iv) {
  RegisterState s = RegisterState::zeros(kEspressoBits);
  for (int i = 0; i < 128; ++i) s.set(i, (key[static_cast<std::size_t>(i / 8)] >> (i % 8)) & 1);
  for (int i = 0; i < 96; ++i)
    s.set(128 + i, (iv[static_cast<std::size_t>(i / 8)] >> (i % 8)) & 1);
  for (int i = 224; i < 255; ++i) s.set(i, true);
  s.set(255, false);
  return s;
}

RegisterState espresso_init_state(const EspressoKey& key, const EspressoIv& iv) {
  FsrSpec g = build_espresso_g();
  FsrSpec init_spec = g;
  init_spec.feedback[255] ^= g.output;
  init_spec.feedback[217] ^= g.output;
  Simulator sim(init_spec);
  RegisterState s = espresso_load(key, iv);
  for (int t = 0; t < 256; ++t) s = sim.step(s);
  return s;
}

std::vector<uint8_t> espresso_keystream(const EspressoKey& key, const EspressoIv& iv, long T) {
  return keystream(build_espresso_g(), espresso_init_state(key, iv), T);
}

ShiftPlan espresso_shift_plan() {
  ShiftPlan plan;
  auto add = [&](const char* mono, int to) {
    BooleanFunction f = F(mono);
    plan.moves.push_back({f.terms()[0], 255, to});
  };
  add("x12", 251);
  add("x48", 247);
  add("x115", 243);
  add("x133", 239);
  add("x213", 231);
  add("x41*x70", 217);
  add("x46*x87", 213);
  add("x46*x87", 251);
  add("x52*x110", 209);
  add("x52*x110", 247);
  add("x55*x130", 205);
  add("x55*x130", 243);
  add("x62*x157", 201);
  add("x62*x157", 239);
  add("x87*x110*x130*x157", 197);
  add("x87*x110*x130*x157", 235);
  add("x74*x183", 193);
  add("x74*x183", 231);
  return plan;
}

EspressoTransformResult transform_espresso() {
  FsrSpec g = build_espresso_g();
  TransformOutcome moved = uniform_galois_to_fib(g, RegisterState::zeros(kEspressoBits));

  EspressoTransformResult res;
  res.lfsr = moved.spec;
  res.comp = moved.comp;

  FsrSpec base = build_base_lfsr();
  if (res.lfsr.feedback != base.feedback)
    throw Error("rewritten register is not the expected linear one: f255 = " +
                res.lfsr.feedback[255].format());

  const BooleanFunction& out = res.lfsr.output;
  res.output_stats.monomials = out.term_count();
  res.output_stats.variables = static_cast<int>(out.dep().size());
  res.output_stats.degree = out.degree();

  for (int i : g.output.dep()) {
    if (!res.comp[i].is_zero()) {
      BooleanFunction tap = BooleanFunction::var(i) ^ res.comp[i];
      res.compensated_taps.emplace(i, std::move(tap));
    }
  }
  return res;
}

bool espresso_equivalence_check(uint64_t seed, int trials, long bits) {
  EspressoTransformResult tr = transform_espresso();
  FsrSpec g = build_espresso_g();
  Simulator gsim(g), lsim(tr.lfsr);
  std::mt19937_64 rng(seed);
  for (int trial = 0; trial < trials; ++trial) {
    EspressoKey key;
    EspressoIv iv;
    for (auto& b : key) b = static_cast<uint8_t>(rng());
    for (auto& b : iv) b = static_cast<uint8_t>(rng());
    RegisterState gs = espresso_init_state(key, iv);
    // Rewrite the post-initialization state into the linear register's
    // coordinates: ascending, each entry tapping only already-moved stages.
    RegisterState ls = gs;
    for (int i = 0; i < tr.comp.n(); ++i)
      if (!tr.comp[i].is_zero() && tr.comp[i].evaluate(ls.w)) ls.flip(i);
    std::vector<uint8_t> a = gsim.keystream(gs, bits);
    std::vector<uint8_t> b = lsim.keystream(ls, bits);
    if (a != b) return false;
  }
  return true;
}

}  // namespace fsrkit
