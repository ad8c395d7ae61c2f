#include "fsrkit/fsr.hpp"

#include <algorithm>
#include <charconv>

namespace fsrkit {

RegisterState RegisterState::zeros(int n) {
  if (n < 1 || n > kMaxVars)
    throw Error("register size " + std::to_string(n) + " out of range [1, " +
                std::to_string(kMaxVars) + "]");
  RegisterState s;
  s.n = n;
  return s;
}

RegisterState RegisterState::from_string(std::string_view bits) {
  RegisterState s = zeros(static_cast<int>(bits.size()));
  for (std::size_t i = 0; i < bits.size(); ++i) {
    char c = bits[bits.size() - 1 - i];
    if (c != '0' && c != '1')
      throw Error(std::string("invalid state bit '") + c + "'");
    s.set(static_cast<int>(i), c == '1');
  }
  return s;
}

bool RegisterState::is_zero() const {
  for (uint64_t v : w)
    if (v) return false;
  return true;
}

std::string RegisterState::to_string() const {
  std::string out(n, '0');
  for (int i = 0; i < n; ++i)
    if (get(i)) out[n - 1 - i] = '1';
  return out;
}

FsrSpec FsrSpec::shift_register(int n) {
  if (n < 2 || n > kMaxVars)
    throw Error("register size " + std::to_string(n) + " out of range [2, " +
                std::to_string(kMaxVars) + "]");
  FsrSpec spec;
  spec.n = n;
  spec.feedback.reserve(n);
  for (int i = 0; i + 1 < n; ++i) spec.feedback.push_back(BooleanFunction::var(i + 1));
  spec.feedback.push_back(BooleanFunction::var(0));
  spec.output = BooleanFunction::var(0);
  return spec;
}

BooleanFunction FsrSpec::g_part(int i) const {
  BooleanFunction g = feedback[i];
  g ^= Monomial::var(i + 1 < n ? i + 1 : 0);
  return g;
}

void FsrSpec::set_g_part(int i, const BooleanFunction& g) {
  feedback[i] = g;
  feedback[i] ^= Monomial::var(i + 1 < n ? i + 1 : 0);
}

bool FsrSpec::is_fibonacci() const {
  for (int i = 0; i + 1 < n; ++i)
    if (feedback[i] != BooleanFunction::var(i + 1)) return false;
  return true;
}

void FsrSpec::validate() const {
  if (n < 2 || n > kMaxVars) throw Error("register size out of range");
  if (static_cast<int>(feedback.size()) != n)
    throw Error("expected " + std::to_string(n) + " feedback functions, got " +
                std::to_string(feedback.size()));
  auto check = [&](const BooleanFunction& f, const std::string& what) {
    std::vector<int> d = f.dep();
    if (!d.empty() && d.back() >= n)
      throw Error(what + " taps x" + std::to_string(d.back()) +
                  " outside register of size " + std::to_string(n));
  };
  for (int i = 0; i < n; ++i) check(feedback[i], "feedback f" + std::to_string(i));
  check(output, "output");
}

std::string to_string(Classification c) {
  switch (c) {
    case Classification::fibonacci: return "fibonacci";
    case Classification::uniform_galois: return "uniform-galois";
    case Classification::general_galois: return "general-galois";
  }
  return "?";
}

int classify_tau(const FsrSpec& spec) {
  for (int i = 0; i + 1 < spec.n; ++i)
    if (spec.feedback[i] != BooleanFunction::var(i + 1)) return i;
  return spec.n - 1;
}

Classification classify(const FsrSpec& spec) {
  spec.validate();
  if (spec.is_fibonacci()) return Classification::fibonacci;
  int tau = classify_tau(spec);
  // Uniform: every modified stage i >= tau deviates from the skeleton only
  // through taps at or below tau, and stage n-1 keeps its x_0 term.
  for (int i = tau; i < spec.n; ++i) {
    BooleanFunction g = spec.feedback[i];
    g ^= Monomial::var(i + 1 < spec.n ? i + 1 : 0);
    std::vector<int> d = g.dep();
    if (!d.empty() && d.back() > tau) return Classification::general_galois;
    if (i == spec.n - 1 && !d.empty() && d.front() == 0)
      return Classification::general_galois;  // f_{n-1} must keep a clean x_0 term
  }
  return Classification::uniform_galois;
}

RegisterState step(const FsrSpec& spec, const RegisterState& s) {
  RegisterState next = RegisterState::zeros(spec.n);
  for (int i = 0; i < spec.n; ++i) next.set(i, spec.feedback[i].evaluate(s.w));
  return next;
}

Simulator::Simulator(const FsrSpec& spec) : spec_(spec) {
  spec_.validate();
  for (int i = 0; i + 1 < spec_.n; ++i) {
    BooleanFunction g = spec_.g_part(i);
    if (!g.is_zero()) deviations_.emplace_back(i, std::move(g));
  }
  deviations_.emplace_back(spec_.n - 1, spec_.g_part(spec_.n - 1));
}

RegisterState Simulator::step(const RegisterState& s) const {
  RegisterState next;
  next.n = s.n;
  // Shift skeleton: stage i takes stage i+1, stage n-1 takes stage 0.
  for (int w = 0; w < kStateWords; ++w) {
    next.w[w] = s.w[w] >> 1;
    if (w + 1 < kStateWords) next.w[w] |= s.w[w + 1] << 63;
  }
  next.set(s.n - 1, s.get(0));
  for (const auto& [i, g] : deviations_)
    if (g.evaluate(s.w)) next.flip(i);
  return next;
}

std::vector<uint8_t> Simulator::keystream(RegisterState s, long T) const {
  if (s.n != spec_.n) throw Error("state size does not match register size");
  std::vector<uint8_t> out;
  out.reserve(static_cast<std::size_t>(T));
  for (long t = 0; t < T; ++t) {
    out.push_back(static_cast<uint8_t>(spec_.output.evaluate(s.w)));
    s = step(s);
  }
  return out;
}

std::vector<uint8_t> keystream(const FsrSpec& spec, const RegisterState& init, long T) {
  return Simulator(spec).keystream(init, T);
}

uint64_t period(const FsrSpec& spec, const RegisterState& init) {
  if (spec.n > 24)
    throw Error("period is only computed for registers of at most 24 stages");
  if (init.n != spec.n) throw Error("state size does not match register size");
  Simulator sim(spec);
  uint64_t limit = uint64_t{1} << spec.n;
  RegisterState s = sim.step(init);
  for (uint64_t t = 1; t <= limit; ++t) {
    if (s == init) return t;
    s = sim.step(s);
  }
  throw Error("initial state is not on a cycle");
}

ParsedFsr parse_fsr(std::string_view text) {
  ParsedFsr out;
  int n = -1;
  std::vector<std::pair<int, BooleanFunction>> stages;
  std::optional<BooleanFunction> z;
  std::optional<std::string> init_bits;

  std::size_t pos = 0;
  int lineno = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++lineno;
    if (std::size_t hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    auto trim = [](std::string_view v) {
      while (!v.empty() && std::isspace(static_cast<unsigned char>(v.front()))) v.remove_prefix(1);
      while (!v.empty() && std::isspace(static_cast<unsigned char>(v.back()))) v.remove_suffix(1);
      return v;
    };
    line = trim(line);
    if (line.empty()) {
      if (pos > text.size()) break;
      continue;
    }
    std::size_t eq = line.find('=');
    if (eq == std::string_view::npos)
      throw Error("line " + std::to_string(lineno) + ": expected '<name> = <value>'");
    std::string_view key = trim(line.substr(0, eq));
    std::string_view val = trim(line.substr(eq + 1));
    auto fail = [&](const std::string& msg) {
      throw Error("line " + std::to_string(lineno) + ": " + msg);
    };
    if (key == "n") {
      int v = 0;
      auto [p, ec] = std::from_chars(val.data(), val.data() + val.size(), v);
      if (ec != std::errc() || p != val.data() + val.size()) fail("invalid register size");
      n = v;
    } else if (key == "z") {
      if (n < 0) fail("'n' must come first");
      z = BooleanFunction::parse(val);
    } else if (key == "init") {
      if (n < 0) fail("'n' must come first");
      if (static_cast<int>(val.size()) != n)
        fail("init must have exactly " + std::to_string(n) + " bits");
      init_bits = std::string(val);
    } else if (key.size() > 1 && key[0] == 'f') {
      if (n < 0) fail("'n' must come first");
      int idx = 0;
      auto [p, ec] = std::from_chars(key.data() + 1, key.data() + key.size(), idx);
      if (ec != std::errc() || p != key.data() + key.size()) fail("invalid stage name");
      if (idx < 0 || idx >= n) fail("stage index out of range");
      stages.emplace_back(idx, BooleanFunction::parse(val));
    } else {
      fail("unknown entry '" + std::string(key) + "'");
    }
    if (pos > text.size()) break;
  }
  if (n < 0) throw Error("missing 'n ='");
  if (!z) throw Error("missing 'z ='");
  FsrSpec spec = FsrSpec::shift_register(n);
  for (auto& [idx, f] : stages) spec.feedback[idx] = std::move(f);
  spec.output = std::move(*z);
  spec.validate();
  out.spec = std::move(spec);
  if (init_bits) out.init = RegisterState::from_string(*init_bits);
  return out;
}

std::string format_fsr(const FsrSpec& spec, const RegisterState* init) {
  std::string out = "n = " + std::to_string(spec.n) + "\n";
  for (int i = 0; i < spec.n; ++i) {
    BooleanFunction skeleton = BooleanFunction::var(i + 1 < spec.n ? i + 1 : 0);
    if (spec.feedback[i] != skeleton)
      out += "f" + std::to_string(i) + " = " + spec.feedback[i].format() + "\n";
  }
  out += "z = " + spec.output.format() + "\n";
  if (init) out += "init = " + init->to_string() + "\n";
  return out;
}

}  // namespace fsrkit
