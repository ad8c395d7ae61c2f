#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "fsrkit/attack.hpp"
#include "fsrkit/espresso.hpp"
#include "fsrkit/fsr.hpp"
#include "fsrkit/transform.hpp"

using json = nlohmann::ordered_json;
using namespace fsrkit;

namespace {

// Exit codes: 0 ok, 1 usage, 2 domain error, 3 verification failure.
struct VerificationFailure {
  std::string message;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << content;
}

std::vector<uint8_t> read_bitstream(const std::string& path) {
  std::string text = read_file(path);
  std::vector<uint8_t> bits;
  for (char c : text) {
    if (c == '0' || c == '1')
      bits.push_back(static_cast<uint8_t>(c - '0'));
    else if (!std::isspace(static_cast<unsigned char>(c)))
      throw Error(std::string("invalid keystream character '") + c + "' in " + path);
  }
  return bits;
}

std::string bits_to_string(const std::vector<uint8_t>& bits) {
  std::string out;
  out.reserve(bits.size());
  for (uint8_t b : bits) out += static_cast<char>('0' + (b & 1));
  return out;
}

std::string bits_to_hex(const std::vector<uint8_t>& bits) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  for (std::size_t i = 0; i < bits.size(); i += 8) {
    unsigned byte = 0;
    for (std::size_t j = 0; j < 8 && i + j < bits.size(); ++j)
      byte |= static_cast<unsigned>(bits[i + j] & 1) << j;  // first bit = LSB
    out += digits[byte >> 4];
    out += digits[byte & 15];
  }
  return out;
}

template <std::size_t N>
std::array<uint8_t, N> parse_hex(const std::string& hex, const char* what) {
  if (hex.size() != 2 * N)
    throw Error(std::string(what) + " must be " + std::to_string(2 * N) +
                " hex characters, got " + std::to_string(hex.size()));
  std::array<uint8_t, N> out{};
  auto nibble = [&](char c) -> unsigned {
    if (c >= '0' && c <= '9') return static_cast<unsigned>(c - '0');
    if (c >= 'a' && c <= 'f') return static_cast<unsigned>(c - 'a' + 10);
    if (c >= 'A' && c <= 'F') return static_cast<unsigned>(c - 'A' + 10);
    throw Error(std::string("invalid hex character '") + c + "' in " + what);
  };
  for (std::size_t i = 0; i < N; ++i)
    out[i] = static_cast<uint8_t>(nibble(hex[2 * i]) << 4 | nibble(hex[2 * i + 1]));
  return out;
}

struct SpecArgs {
  std::string spec_path;
  std::string init_bits;  // optional override
};

ParsedFsr load_spec(const SpecArgs& args) {
  ParsedFsr parsed = parse_fsr(read_file(args.spec_path));
  if (!args.init_bits.empty()) {
    RegisterState s = RegisterState::from_string(args.init_bits);
    if (s.n != parsed.spec.n)
      throw Error("--init has " + std::to_string(s.n) + " bits, register has " +
                  std::to_string(parsed.spec.n));
    parsed.init = s;
  }
  return parsed;
}

RegisterState require_init(const ParsedFsr& parsed, const char* what) {
  if (!parsed.init)
    throw Error(std::string(what) + ": no initial state (add 'init =' to the file or pass --init)");
  return *parsed.init;
}

std::string fmt2(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

void print_attack_report(const AttackReport& rep, bool as_json) {
  std::fprintf(stderr, "wall-ms = %.1f\n", rep.wall_ms);
  if (as_json) {
    json j;
    j["recovered"] = rep.recovered.to_string();
    j["equations"] = rep.equations_used;
    j["data_bits"] = rep.data_bits;
    j["verified"] = rep.verified;
    j["note"] = rep.note;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "recovered = " << rep.recovered.to_string() << "\n"
              << "equations = " << rep.equations_used << "\n"
              << "data-bits = " << rep.data_bits << "\n"
              << "verified = " << (rep.verified ? "true" : "false") << "\n"
              << "note = " << rep.note << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"algebra on feedback shift registers: simulation, Fibonacci/Galois "
               "transformation and filter-generator attacks"};
  app.require_subcommand(1);
  int rc = 0;

  // ---- simulate ----
  auto sim_args = std::make_shared<SpecArgs>();
  auto sim_bits = std::make_shared<long>(0);
  auto sim_json = std::make_shared<bool>(false);
  CLI::App* sim = app.add_subcommand("simulate", "clock a register and print its output bits");
  sim->add_option("--spec", sim_args->spec_path, "register spec file")->required();
  sim->add_option("--init", sim_args->init_bits, "initial state (overrides the file)");
  sim->add_option("--bits", *sim_bits, "number of output bits")->required();
  sim->add_flag("--json", *sim_json);
  sim->callback([=]() {
    ParsedFsr parsed = load_spec(*sim_args);
    RegisterState init = require_init(parsed, "simulate");
    if (*sim_bits < 0) throw Error("--bits must be nonnegative");
    std::vector<uint8_t> ks = keystream(parsed.spec, init, *sim_bits);
    if (*sim_json) {
      json j;
      j["bits"] = *sim_bits;
      j["keystream"] = bits_to_string(ks);
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << bits_to_string(ks) << "\n";
    }
  });

  // ---- classify ----
  auto cls_args = std::make_shared<SpecArgs>();
  auto cls_json = std::make_shared<bool>(false);
  CLI::App* cls = app.add_subcommand("classify", "report the register's structural class");
  cls->add_option("--spec", cls_args->spec_path, "register spec file")->required();
  cls->add_flag("--json", *cls_json);
  cls->callback([=]() {
    ParsedFsr parsed = load_spec(*cls_args);
    Classification c = classify(parsed.spec);
    if (*cls_json) {
      json j;
      j["class"] = to_string(c);
      j["tau"] = classify_tau(parsed.spec);
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << to_string(c) << "\n";
    }
  });

  // ---- transform ----
  CLI::App* tr = app.add_subcommand("transform", "rewrite a register between Fibonacci and Galois forms");
  tr->require_subcommand(1);
  struct TransformArgs {
    SpecArgs spec;
    std::string plan_path;
    std::string out_path;
    std::string comp_out;
    bool as_json = false;
  };
  auto emit_transform = [](const TransformOutcome& out, const TransformArgs& args) {
    std::string spec_text = format_fsr(out.spec, &out.init);
    std::string comp_text = out.comp.format();
    if (!args.comp_out.empty()) write_file(args.comp_out, comp_text);
    if (args.as_json) {
      json j;
      j["class"] = to_string(classify(out.spec));
      j["spec"] = spec_text;
      j["init"] = out.init.to_string();
      j["comp"] = comp_text;
      if (!args.out_path.empty()) write_file(args.out_path, spec_text);
      std::cout << j.dump(2) << "\n";
    } else if (!args.out_path.empty()) {
      write_file(args.out_path, spec_text);
    } else {
      std::cout << spec_text;
    }
  };
  auto add_transform_common = [](CLI::App* cmd, TransformArgs& args, bool with_plan) {
    cmd->add_option("--spec", args.spec.spec_path, "register spec file")->required();
    if (with_plan) cmd->add_option("--plan", args.plan_path, "shift plan file")->required();
    cmd->add_option("--init", args.spec.init_bits, "initial state (overrides the file)");
    cmd->add_option("--out", args.out_path, "write the transformed spec here instead of stdout");
    cmd->add_option("--comp-out", args.comp_out, "write the compensation list here");
    cmd->add_flag("--json", args.as_json);
  };

  auto f2g_args = std::make_shared<TransformArgs>();
  CLI::App* f2g = tr->add_subcommand("fib2gal", "apply a shift plan to a Fibonacci register");
  add_transform_common(f2g, *f2g_args, true);
  f2g->callback([=]() {
    ParsedFsr parsed = load_spec(f2g_args->spec);
    RegisterState init = parsed.init ? *parsed.init : RegisterState::zeros(parsed.spec.n);
    ShiftPlan plan = ShiftPlan::parse(read_file(f2g_args->plan_path));
    emit_transform(fib_to_galois(parsed.spec, plan, init), *f2g_args);
  });

  auto g2f_args = std::make_shared<TransformArgs>();
  CLI::App* g2f = tr->add_subcommand("gal2fib", "rewrite a Galois register as Fibonacci");
  add_transform_common(g2f, *g2f_args, false);
  g2f->callback([=]() {
    ParsedFsr parsed = load_spec(g2f_args->spec);
    RegisterState init = parsed.init ? *parsed.init : RegisterState::zeros(parsed.spec.n);
    emit_transform(galois_to_fib(parsed.spec, init), *g2f_args);
  });

  auto uni_args = std::make_shared<TransformArgs>();
  CLI::App* uni = tr->add_subcommand("uniform", "rewrite a uniform Galois register as Fibonacci");
  add_transform_common(uni, *uni_args, false);
  uni->callback([=]() {
    ParsedFsr parsed = load_spec(uni_args->spec);
    RegisterState init = parsed.init ? *parsed.init : RegisterState::zeros(parsed.spec.n);
    emit_transform(uniform_galois_to_fib(parsed.spec, init), *uni_args);
  });

  // ---- espresso ----
  CLI::App* esp = app.add_subcommand("espresso", "the 256-stage stream cipher and its linear rewrite");
  esp->require_subcommand(1);

  auto ek_key = std::make_shared<std::string>();
  auto ek_iv = std::make_shared<std::string>();
  auto ek_bits = std::make_shared<long>(0);
  auto ek_fmt = std::make_shared<std::string>("bits");
  auto ek_json = std::make_shared<bool>(false);
  CLI::App* ek = esp->add_subcommand("keystream", "generate keystream from key and IV");
  ek->add_option("--key", *ek_key, "128-bit key, 32 hex chars, byte 0 first, LSB-first bits")
      ->required();
  ek->add_option("--iv", *ek_iv, "96-bit IV, 24 hex chars")->required();
  ek->add_option("--bits", *ek_bits, "number of keystream bits")->required();
  ek->add_option("--format", *ek_fmt, "bits|hex")->check(CLI::IsMember({"bits", "hex"}));
  ek->add_flag("--json", *ek_json);
  ek->callback([=]() {
    if (*ek_bits < 0) throw Error("--bits must be nonnegative");
    EspressoKey key = parse_hex<16>(*ek_key, "--key");
    EspressoIv iv = parse_hex<12>(*ek_iv, "--iv");
    std::vector<uint8_t> ks = espresso_keystream(key, iv, *ek_bits);
    std::string text = *ek_fmt == "hex" ? bits_to_hex(ks) : bits_to_string(ks);
    if (*ek_json) {
      json j;
      j["bits"] = *ek_bits;
      j["format"] = *ek_fmt;
      j["keystream"] = text;
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << text << "\n";
    }
  });

  auto et_out = std::make_shared<std::string>();
  auto et_comp = std::make_shared<std::string>();
  auto et_json = std::make_shared<bool>(false);
  CLI::App* et = esp->add_subcommand("transform",
                                     "rewrite the cipher as a linear register with a filter");
  et->add_option("--out", *et_out, "write the rewritten spec here instead of stdout");
  et->add_option("--comp-out", *et_comp, "write the compensation list here");
  et->add_flag("--json", *et_json);
  et->callback([=]() {
    EspressoTransformResult res = transform_espresso();
    std::string spec_text = format_fsr(res.lfsr);
    std::ostringstream stats;
    stats << "# monomials = " << res.output_stats.monomials << "\n"
          << "# variables = " << res.output_stats.variables << "\n"
          << "# degree = " << res.output_stats.degree << "\n";
    for (const auto& [i, tap] : res.compensated_taps)
      stats << "# tap x" << i << " = " << tap.format() << "\n";
    if (!et_comp->empty()) write_file(*et_comp, res.comp.format());
    if (*et_json) {
      json j;
      j["feedback"] = res.lfsr.feedback[kEspressoBits - 1].format();
      j["monomials"] = res.output_stats.monomials;
      j["variables"] = res.output_stats.variables;
      j["degree"] = res.output_stats.degree;
      json taps = json::object();
      for (const auto& [i, tap] : res.compensated_taps) taps["x" + std::to_string(i)] = tap.format();
      j["compensated_taps"] = taps;
      j["spec"] = spec_text;
      if (!et_out->empty()) write_file(*et_out, spec_text + stats.str());
      std::cout << j.dump(2) << "\n";
    } else if (!et_out->empty()) {
      write_file(*et_out, spec_text + stats.str());
    } else {
      std::cout << spec_text << stats.str();
    }
  });

  auto ev_seed = std::make_shared<uint64_t>(1);
  auto ev_trials = std::make_shared<int>(10);
  auto ev_bits = std::make_shared<long>(1024);
  auto ev_json = std::make_shared<bool>(false);
  CLI::App* ev = esp->add_subcommand("verify",
                                     "check cipher vs rewritten register on random key/IV pairs");
  ev->add_option("--seed", *ev_seed, "random seed (default 1)");
  ev->add_option("--trials", *ev_trials, "number of key/IV pairs (default 10)");
  ev->add_option("--bits", *ev_bits, "keystream bits per trial (default 1024)");
  ev->add_flag("--json", *ev_json);
  ev->callback([=]() {
    if (*ev_trials < 1 || *ev_bits < 1) throw Error("--trials and --bits must be positive");
    bool ok = espresso_equivalence_check(*ev_seed, *ev_trials, *ev_bits);
    if (*ev_json) {
      json j;
      j["ok"] = ok;
      j["trials"] = *ev_trials;
      j["bits"] = *ev_bits;
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << (ok ? "ok" : "mismatch") << " trials=" << *ev_trials
                << " bits=" << *ev_bits << "\n";
    }
    if (!ok) throw VerificationFailure{"keystreams diverged"};
  });

  // ---- attack ----
  CLI::App* atk = app.add_subcommand("attack", "algebraic attacks on linear filter generators");
  atk->require_subcommand(1);

  auto as_args = std::make_shared<SpecArgs>();
  auto as_ks = std::make_shared<std::string>();
  auto as_maxe = std::make_shared<int>(2);
  auto as_json = std::make_shared<bool>(false);
  CLI::App* as = atk->add_subcommand("standard", "multiplier-reduced linearization attack");
  as->add_option("--spec", as_args->spec_path, "generator spec file")->required();
  as->add_option("--keystream", *as_ks, "keystream file of 0/1 characters")->required();
  as->add_option("--max-e", *as_maxe, "largest multiplier size to search (default 2)");
  as->add_flag("--json", *as_json);
  as->callback([=]() {
    FilterGenerator gen = FilterGenerator::from_spec(load_spec(*as_args).spec);
    AttackReport rep = standard_attack(gen, read_bitstream(*as_ks), *as_maxe);
    print_attack_report(rep, *as_json);
  });

  auto ar_args = std::make_shared<SpecArgs>();
  auto ar_ks = std::make_shared<std::string>();
  auto ar_json = std::make_shared<bool>(false);
  CLI::App* ar = atk->add_subcommand("rh", "whole-filter recurrence attack");
  ar->add_option("--spec", ar_args->spec_path, "generator spec file")->required();
  ar->add_option("--keystream", *ar_ks, "keystream file of 0/1 characters")->required();
  ar->add_flag("--json", *ar_json);
  ar->callback([=]() {
    FilterGenerator gen = FilterGenerator::from_spec(load_spec(*ar_args).spec);
    AttackReport rep = rh_attack(gen, read_bitstream(*ar_ks));
    print_attack_report(rep, *ar_json);
  });

  auto ae_kind = std::make_shared<std::string>();
  auto ae_n = std::make_shared<int>(0);
  auto ae_d = std::make_shared<int>(-1);
  auto ae_e = std::make_shared<int>(-1);
  auto ae_df = std::make_shared<int>(-1);
  auto ae_omega = std::make_shared<double>(2.807);
  auto ae_c = std::make_shared<double>(1.0);
  auto ae_json = std::make_shared<bool>(false);
  CLI::App* ae = atk->add_subcommand("estimate", "full-scale complexity figures (log2)");
  ae->add_option("--kind", *ae_kind, "standard|rh")->required()
      ->check(CLI::IsMember({"standard", "rh"}));
  ae->add_option("--n", *ae_n, "register size")->required();
  ae->add_option("--d", *ae_d, "relation degree (standard)");
  ae->add_option("--e", *ae_e, "multiplier size (standard)");
  ae->add_option("--df", *ae_df, "filter degree (rh)");
  ae->add_option("--omega", *ae_omega, "linear-algebra exponent (default 2.807)");
  ae->add_option("--c", *ae_c, "precomputation constant (default 1)");
  ae->add_flag("--json", *ae_json);
  ae->callback([=]() {
    ComplexityEstimate est;
    if (*ae_kind == "standard") {
      if (*ae_d < 0 || *ae_e < 0) throw Error("standard estimate needs --d and --e");
      est = estimate_standard(*ae_n, *ae_d, *ae_e, *ae_omega, *ae_c);
    } else {
      if (*ae_df < 0) throw Error("rh estimate needs --df");
      est = estimate_rh(*ae_n, *ae_df, *ae_omega);
    }
    if (*ae_json) {
      json j;
      j["kind"] = *ae_kind;
      j["data_log2"] = est.data_log2;
      j["precomputation_log2"] = est.precomputation_log2;
      if (*ae_kind == "standard") j["substitution_log2"] = est.substitution_log2;
      j["solving_log2"] = est.solving_log2;
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "data = 2^" << fmt2(est.data_log2) << "\n";
      std::cout << "precomputation = 2^" << fmt2(est.precomputation_log2) << "\n";
      if (*ae_kind == "standard")
        std::cout << "substitution = 2^" << fmt2(est.substitution_log2) << "\n";
      std::cout << "solving = 2^" << fmt2(est.solving_log2) << "\n";
    }
  });

  auto am_fn = std::make_shared<std::string>();
  auto am_file = std::make_shared<std::string>();
  auto am_esp = std::make_shared<bool>(false);
  auto am_maxe = std::make_shared<int>(2);
  auto am_json = std::make_shared<bool>(false);
  CLI::App* am = atk->add_subcommand("multipliers", "factor sets that lower the filter degree");
  am->add_option("--function", *am_fn, "function in algebraic normal form");
  am->add_option("--function-file", *am_file, "file holding the function");
  am->add_flag("--espresso", *am_esp, "use the rewritten cipher's output filter");
  am->add_option("--max-e", *am_maxe, "largest factor set (default 2)");
  am->add_flag("--json", *am_json);
  am->callback([=]() {
    int sources = (!am_fn->empty()) + (!am_file->empty()) + (*am_esp ? 1 : 0);
    if (sources != 1) throw Error("give exactly one of --function, --function-file, --espresso");
    BooleanFunction f;
    if (*am_esp)
      f = transform_espresso().lfsr.output;
    else if (!am_file->empty())
      f = BooleanFunction::parse(read_file(*am_file));
    else
      f = BooleanFunction::parse(*am_fn);
    std::vector<Multiplier> mults = multiplier_search(f, *am_maxe);
    if (*am_json) {
      json arr = json::array();
      for (const Multiplier& m : mults) {
        json jm;
        jm["factors"] = m.factors;
        jm["h_degree"] = m.h_degree;
        jm["h_terms"] = m.h.term_count();
        arr.push_back(jm);
      }
      json j;
      j["count"] = mults.size();
      j["multipliers"] = arr;
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "count = " << mults.size() << "\n";
      for (const Multiplier& m : mults) {
        std::string fs;
        for (int v : m.factors) fs += (fs.empty() ? "x" : "*x") + std::to_string(v);
        std::cout << fs << " -> degree " << m.h_degree << " (" << m.h.term_count()
                  << " terms)\n";
      }
    }
  });

  // ---- verify-relation ----
  auto vr_fib = std::make_shared<SpecArgs>();
  auto vr_gal = std::make_shared<SpecArgs>();
  auto vr_comp = std::make_shared<std::string>();
  auto vr_clocks = std::make_shared<long>(1000);
  auto vr_json = std::make_shared<bool>(false);
  CLI::App* vr = app.add_subcommand("verify-relation",
                                    "check the stage relation between two registers");
  vr->add_option("--fib", vr_fib->spec_path, "Fibonacci register spec file")->required();
  vr->add_option("--fib-init", vr_fib->init_bits, "its initial state (overrides the file)");
  vr->add_option("--gal", vr_gal->spec_path, "Galois register spec file")->required();
  vr->add_option("--gal-init", vr_gal->init_bits, "its initial state (overrides the file)");
  vr->add_option("--comp", *vr_comp, "compensation list file")->required();
  vr->add_option("--clocks", *vr_clocks, "clocks to check (default 1000)");
  vr->add_flag("--json", *vr_json);
  vr->callback([=]() {
    ParsedFsr fib = load_spec(*vr_fib);
    ParsedFsr gal = load_spec(*vr_gal);
    RegisterState fi = require_init(fib, "verify-relation --fib");
    RegisterState gi = require_init(gal, "verify-relation --gal");
    CompensationList comp = CompensationList::parse(read_file(*vr_comp), fib.spec.n);
    RelationResult res = state_relation_check(fib.spec, gal.spec, comp, fi, gi, *vr_clocks);
    if (*vr_json) {
      json j;
      j["ok"] = res.ok;
      if (!res.ok) {
        j["stage"] = res.stage;
        j["clock"] = res.clock;
      }
      std::cout << j.dump(2) << "\n";
    } else if (res.ok) {
      std::cout << "ok clocks=" << *vr_clocks << "\n";
    } else {
      std::cout << "divergence stage=" << res.stage << " clock=" << res.clock << "\n";
    }
    if (!res.ok) throw VerificationFailure{"state relation violated"};
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const VerificationFailure& e) {
    std::cerr << "verification failed: " << e.message << "\n";
    return 3;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}
