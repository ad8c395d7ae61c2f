#include "fsrkit/attack.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <random>

namespace fsrkit {

namespace {

constexpr long kDeskBasisCap = 4096;   // direct attacks stay desk-sized
constexpr int kMaxRetries = 5;         // extra equation batches before giving up
constexpr int kKernelCap = 10;         // enumerate at most 2^10 kernel candidates

double now_ms() {
  using namespace std::chrono;
  return duration<double, std::milli>(steady_clock::now().time_since_epoch()).count();
}

}  // namespace

FilterGenerator FilterGenerator::from_spec(const FsrSpec& spec) {
  spec.validate();
  if (!spec.is_fibonacci()) throw Error("generator must be a Fibonacci register");
  const BooleanFunction& fb = spec.feedback[spec.n - 1];
  if (fb.degree() != 1 || fb.has_term(Monomial::one()))
    throw Error("generator feedback must be linear in the state");
  if (spec.output.degree() < 1) throw Error("output filter must depend on the state");
  return FilterGenerator{spec};
}

MonomialBasis::MonomialBasis(int n, int d) : n_(n), d_(d) {
  if (n < 1 || n > kMaxVars) throw Error("basis variable count out of range");
  if (d > n) d = n;
  unsigned __int128 sz = size_of(n, d);
  if (sz > static_cast<unsigned __int128>(1) << 22)
    throw Error("monomial basis too large to enumerate");
  if (d < 0) return;
  monos_.reserve(static_cast<std::size_t>(sz));
  monos_.push_back(Monomial::one());
  std::vector<int> idx;
  for (int k = 1; k <= d; ++k) {
    idx.assign(static_cast<std::size_t>(k), 0);
    for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
    while (true) {
      Monomial m;
      for (int v : idx) m = m.times(Monomial::var(v));
      monos_.push_back(m);
      // next combination in lexicographic order
      int i = k - 1;
      while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
      if (i < 0) break;
      ++idx[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < k; ++j)
        idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
}

unsigned __int128 MonomialBasis::size_of(int n, int d) {
  if (d < 0) return 0;
  if (d > n) d = n;
  unsigned __int128 total = 0, binom = 1;
  for (int i = 0; i <= d; ++i) {
    if (i > 0) binom = binom * static_cast<unsigned>(n - i + 1) / static_cast<unsigned>(i);
    total += binom;
  }
  return total;
}

std::size_t MonomialBasis::index_of(const Monomial& m) const {
  auto it = std::lower_bound(monos_.begin(), monos_.end(), m);
  if (it == monos_.end() || !(*it == m))
    throw Error("monomial " + m.format() + " outside the basis");
  return static_cast<std::size_t>(it - monos_.begin());
}

std::vector<uint64_t> MonomialBasis::row_of(const BooleanFunction& f) const {
  std::vector<uint64_t> row(words(), 0);
  for (const Monomial& t : f.terms()) {
    std::size_t c = index_of(t);
    row[c >> 6] ^= uint64_t{1} << (c & 63);
  }
  return row;
}

BooleanFunction MonomialBasis::function_of(const std::vector<uint64_t>& row) const {
  std::vector<Monomial> terms;
  for (std::size_t w = 0; w < row.size(); ++w) {
    uint64_t v = row[w];
    while (v) {
      std::size_t c = w * 64 + static_cast<std::size_t>(std::countr_zero(v));
      v &= v - 1;
      if (c >= monos_.size()) throw Error("row bit outside the basis");
      terms.push_back(monos_[c]);
    }
  }
  return BooleanFunction::from_terms(std::move(terms));
}

BitMatrix monomial_step_matrix(const FilterGenerator& gen, int d) {
  MonomialBasis basis(gen.n(), d);
  int n = gen.n();
  BitMatrix R(static_cast<int>(basis.size()), static_cast<int>(basis.size()));
  for (std::size_t idx = 0; idx < basis.size(); ++idx) {
    BooleanFunction image = BooleanFunction::one();
    for (int v : basis.at(idx).vars())
      image = image * (v + 1 < n ? BooleanFunction::var(v + 1) : gen.spec.feedback[n - 1]);
    std::vector<uint64_t> row = basis.row_of(image);
    for (std::size_t w = 0; w < row.size(); ++w)
      R.row(static_cast<int>(idx))[w] = row[w];
  }
  return R;
}

std::vector<Multiplier> multiplier_search(const BooleanFunction& filter, int max_e) {
  std::vector<Multiplier> out;
  if (filter.is_zero() || filter.degree() <= 1 || max_e < 1) return out;

  std::map<std::vector<int>, BooleanFunction> found;
  // Candidates must divide every top-degree term, otherwise multiplying by
  // (x_v ^ 1) keeps a top-degree term alive and the degree cannot drop.
  auto candidates_of = [](const BooleanFunction& f) {
    StateWords common;
    common.fill(~uint64_t{0});
    int top = f.degree();
    const auto& terms = f.terms();
    for (auto it = terms.rbegin(); it != terms.rend() && it->degree() == top; ++it)
      for (int w = 0; w < kStateWords; ++w) common[w] &= it->mask()[w];
    std::vector<int> vars;
    for (int w = 0; w < kStateWords; ++w) {
      uint64_t v = common[w];
      while (v) {
        vars.push_back(w * 64 + std::countr_zero(v));
        v &= v - 1;
      }
    }
    return vars;
  };

  auto recurse = [&](auto&& self, const BooleanFunction& prod,
                     const std::vector<int>& factors) -> void {
    if (static_cast<int>(factors.size()) >= max_e) return;
    if (prod.is_zero()) return;
    for (int v : candidates_of(prod)) {
      if (std::find(factors.begin(), factors.end(), v) != factors.end()) continue;
      BooleanFunction child = prod * (BooleanFunction::var(v) ^ BooleanFunction::one());
      if (child.degree() >= prod.degree()) continue;
      std::vector<int> fs = factors;
      fs.insert(std::upper_bound(fs.begin(), fs.end(), v), v);
      if (found.emplace(fs, child).second) self(self, child, fs);
    }
  };
  recurse(recurse, filter, {});

  for (auto& [fs, h] : found) {
    Multiplier m;
    m.factors = fs;
    m.g = BooleanFunction::one();
    for (int v : fs) m.g = m.g * (BooleanFunction::var(v) ^ BooleanFunction::one());
    m.h = h;
    m.h_degree = h.degree();
    out.push_back(std::move(m));
  }
  std::sort(out.begin(), out.end(), [](const Multiplier& a, const Multiplier& b) {
    if (a.h_degree != b.h_degree) return a.h_degree < b.h_degree;
    return a.factors < b.factors;
  });
  return out;
}

BooleanFunction relation(const BooleanFunction& h, const BooleanFunction& g, bool z) {
  return z ? h ^ g : h;
}

Gf2Poly char_poly(const FilterGenerator& gen, int d) {
  if (d < 0) return Gf2Poly::one();
  int n = gen.n();
  MonomialBasis basis(n, d);
  long D = static_cast<long>(basis.size());
  if (D > kDeskBasisCap)
    throw Error("relation degree too large for direct computation; use the estimator");

  std::vector<RegisterState> seeds;
  RegisterState first = RegisterState::zeros(n);
  first.set(0, true);
  seeds.push_back(first);
  std::mt19937_64 rng(0x0ddc0ffee);
  for (int k = 0; k < 2; ++k) {
    RegisterState s = RegisterState::zeros(n);
    do {
      for (int i = 0; i < n; ++i) s.set(i, (rng() >> 17) & 1);
    } while (s.is_zero());
    seeds.push_back(s);
  }

  Simulator sim(gen.spec);
  long W = 2 * D + 64;
  for (int attempt = 0; attempt < 2; ++attempt, W *= 2) {
    const long fresh = 128;            // verification window past the fit
    long total = W + fresh + W + 64;   // covers every p degree up to W
    Gf2Poly p = Gf2Poly::one();
    bool ok = true;
    std::vector<std::vector<RegisterState>> tracks;
    for (const RegisterState& seed : seeds) {
      std::vector<RegisterState> states;
      states.reserve(static_cast<std::size_t>(total));
      RegisterState s = seed;
      for (long t = 0; t < total; ++t) {
        states.push_back(s);
        s = sim.step(s);
      }
      tracks.push_back(std::move(states));
    }
    std::vector<uint8_t> seq(static_cast<std::size_t>(W));
    for (const auto& states : tracks) {
      for (std::size_t c = 0; c < basis.size(); ++c) {
        const Monomial& mu = basis.at(c);
        for (long t = 0; t < W; ++t)
          seq[static_cast<std::size_t>(t)] =
              mu.evaluate(states[static_cast<std::size_t>(t)].w);
        if (annihilates(p, seq)) continue;
        p = lcm(p, annihilator(seq));
      }
    }
    // Verify on clocks the fit never saw. A fit degree beyond the window
    // means the sequences were not recurrent within it: count as failure.
    if (p.degree() > W + 64) continue;
    std::vector<int> es = p.exponents();
    for (const auto& states : tracks) {
      for (std::size_t c = 0; c < basis.size() && ok; ++c) {
        const Monomial& mu = basis.at(c);
        for (long t = W; t < W + fresh && ok; ++t) {
          uint8_t acc = 0;
          for (int e : es) acc ^= mu.evaluate(states[static_cast<std::size_t>(t + e)].w);
          if (acc) ok = false;
        }
      }
    }
    if (ok) return p;
  }
  throw Error("annihilating polynomial failed fresh-window verification");
}

namespace {

struct LinearSystem {
  std::vector<std::vector<uint64_t>> rows;  // over the unknown columns
  std::vector<uint8_t> rhs;
};

// Extracts the register state from a monomial-basis assignment and checks
// it against the full keystream. Returns true when it matches.
bool try_candidate(const FilterGenerator& gen, const MonomialBasis& basis,
                   const std::vector<uint8_t>& assignment,  // over columns 1..
                   const std::vector<uint8_t>& z, RegisterState& out) {
  RegisterState s = RegisterState::zeros(gen.n());
  for (int v = 0; v < gen.n(); ++v) {
    std::size_t idx = basis.index_of(Monomial::var(v));
    if (assignment[idx - 1]) s.set(v, true);
  }
  Simulator sim(gen.spec);
  RegisterState cur = s;
  for (std::size_t t = 0; t < z.size(); ++t) {
    if (static_cast<uint8_t>(sim.output(cur)) != z[t]) return false;
    cur = sim.step(cur);
  }
  out = s;
  return true;
}

// Solve, enumerate a small kernel if needed, and hard-verify candidates.
// Returns true on success; `need_more` reports a rank deficit too large to
// enumerate.
bool solve_and_verify(const FilterGenerator& gen, const MonomialBasis& basis,
                      const LinearSystem& sys, const std::vector<uint8_t>& z,
                      AttackReport& report, bool& need_more) {
  need_more = false;
  std::size_t cols = basis.size() - 1;
  BitMatrix a(static_cast<int>(sys.rows.size()), static_cast<int>(cols));
  for (std::size_t r = 0; r < sys.rows.size(); ++r)
    for (std::size_t w = 0; w < sys.rows[r].size(); ++w)
      a.row(static_cast<int>(r))[w] = sys.rows[r][w];
  SolveResult sol = solve(std::move(a), sys.rhs);
  if (sol.status == SolveStatus::inconsistent)
    throw Error("equation system inconsistent: keystream does not match the generator");
  if (sol.status == SolveStatus::unique) {
    if (try_candidate(gen, basis, sol.solution, z, report.recovered)) {
      report.verified = true;
      return true;
    }
    throw Error("unique solution failed keystream verification");
  }
  if (sol.kernel.size() > static_cast<std::size_t>(kKernelCap)) {
    need_more = true;
    return false;
  }
  std::vector<uint8_t> cand(cols, 0);
  std::size_t hits = 0;
  RegisterState winner;
  for (uint64_t mask = 0; mask < (uint64_t{1} << sol.kernel.size()); ++mask) {
    cand = sol.solution;
    for (std::size_t k = 0; k < sol.kernel.size(); ++k)
      if ((mask >> k) & 1)
        for (std::size_t cix = 0; cix < cols; ++cix) cand[cix] ^= sol.kernel[k][cix];
    RegisterState s;
    if (try_candidate(gen, basis, cand, z, s)) {
      if (hits == 0) winner = s;
      ++hits;
    }
  }
  if (hits > 0) {
    report.recovered = winner;
    report.verified = true;
    if (hits > 1)
      report.note += " (" + std::to_string(hits) + " states match the keystream)";
    return true;
  }
  need_more = true;
  return false;
}

}  // namespace

AttackReport standard_attack(const FilterGenerator& gen,
                             const std::vector<uint8_t>& z, int max_e) {
  double t0 = now_ms();
  int n = gen.n();
  const BooleanFunction& f = gen.filter();

  std::vector<Multiplier> mults = multiplier_search(f, max_e);
  Multiplier chosen;
  if (mults.empty()) {
    chosen.g = BooleanFunction::one();
    chosen.h = f;
    chosen.h_degree = f.degree();
  } else {
    chosen = mults.front();
  }
  int e = static_cast<int>(chosen.factors.size());
  int d = chosen.h_degree;
  bool filtered = !chosen.factors.empty();

  unsigned __int128 d128 = MonomialBasis::size_of(n, d);
  unsigned __int128 e128 = MonomialBasis::size_of(n, e);
  if (d128 > kDeskBasisCap || e128 > kDeskBasisCap)
    throw Error("attack degrees too large for direct solving; use the estimator");
  long D = static_cast<long>(d128);
  long E = static_cast<long>(e128);
  long U = filtered ? E : D;  // linearized unknown count (incl. the constant)
  long min_bits = D + E - 1;
  if (static_cast<long>(z.size()) < min_bits)
    throw Error("insufficient keystream: need at least " + std::to_string(min_bits) +
                " bits, got " + std::to_string(z.size()));

  Gf2Poly p = filtered ? char_poly(gen, d) : Gf2Poly::one();
  long P = p.degree();
  if (static_cast<long>(z.size()) < P + U)
    throw Error("insufficient keystream after filtering: need " +
                std::to_string(P + U) + " bits, got " + std::to_string(z.size()));
  std::vector<int> pexp = p.exponents();

  // Coefficient rows of g (or of the filter itself) along the clocks.
  MonomialBasis basis(n, filtered ? e : d);
  BitMatrix R = monomial_step_matrix(gen, filtered ? e : d);
  std::vector<uint64_t> cur = basis.row_of(filtered ? chosen.g : chosen.h);
  std::vector<std::vector<uint64_t>> coef;
  coef.reserve(z.size());
  auto ensure_coef = [&](long upto) {
    while (static_cast<long>(coef.size()) <= upto) {
      coef.push_back(cur);
      cur = vec_mul(cur, R);
    }
  };

  AttackReport report;
  report.note = filtered
                    ? "multiplier {" + chosen.g.format() + "}, relation degree " +
                          std::to_string(d) + ", filter polynomial degree " + std::to_string(P)
                    : "no multiplier found; direct linearization at degree " + std::to_string(d);

  LinearSystem sys;
  long t_next = 0;
  long target = U;
  for (int round = 0; round <= kMaxRetries; ++round) {
    while (static_cast<long>(sys.rows.size()) < target &&
           t_next + P < static_cast<long>(z.size())) {
      long t = t_next++;
      std::vector<uint64_t> row(basis.words(), 0);
      if (filtered) {
        for (int j : pexp) {
          if (z[static_cast<std::size_t>(t + j)]) {
            ensure_coef(t + j);
            const std::vector<uint64_t>& r = coef[static_cast<std::size_t>(t + j)];
            for (std::size_t w = 0; w < row.size(); ++w) row[w] ^= r[w];
          }
        }
      } else {
        ensure_coef(t);
        row = coef[static_cast<std::size_t>(t)];
      }
      uint8_t rhs = filtered ? 0 : z[static_cast<std::size_t>(t)];
      rhs ^= static_cast<uint8_t>(row[0] & 1);  // constant column has value 1
      row[0] &= ~uint64_t{1};
      bool zero = true;
      for (uint64_t w : row)
        if (w) zero = false;
      if (zero && !rhs) continue;
      if (zero && rhs)
        throw Error("contradictory equation: keystream does not match the generator");
      // Drop the constant column: shift the packed row down one bit.
      std::vector<uint64_t> packed((basis.size() - 1 + 63) / 64, 0);
      for (std::size_t c = 1; c < basis.size(); ++c)
        if ((row[c >> 6] >> (c & 63)) & 1) packed[(c - 1) >> 6] |= uint64_t{1} << ((c - 1) & 63);
      sys.rows.push_back(std::move(packed));
      sys.rhs.push_back(rhs);
      report.data_bits = std::max(report.data_bits, t + P + 1);
    }
    if (sys.rows.empty())
      throw Error("no usable equations: keystream too short or all-zero");
    bool need_more = false;
    report.equations_used = static_cast<long>(sys.rows.size());
    if (solve_and_verify(gen, basis, sys, z, report, need_more)) {
      report.wall_ms = now_ms() - t0;
      return report;
    }
    if (!need_more) break;
    if (t_next + P >= static_cast<long>(z.size()))
      throw Error("rank deficient after exhausting the keystream: need more data");
    target += U;
  }
  throw Error("state not recovered: rank deficiency persisted after " +
              std::to_string(kMaxRetries) + " extra batches");
}

AttackReport rh_attack(const FilterGenerator& gen, const std::vector<uint8_t>& z) {
  double t0 = now_ms();
  int n = gen.n();
  const BooleanFunction& f = gen.filter();
  int d_f = f.degree();
  if (d_f < 1) throw Error("output filter must depend on the state");

  unsigned __int128 d128 = MonomialBasis::size_of(n, d_f);
  if (d128 > kDeskBasisCap)
    throw Error("filter degree too large for direct solving; use the estimator");
  long D = static_cast<long>(d128);
  if (static_cast<long>(z.size()) < D)
    throw Error("insufficient keystream: need at least " + std::to_string(D) +
                " bits, got " + std::to_string(z.size()));

  MonomialBasis basis(n, d_f);
  BitMatrix R = monomial_step_matrix(gen, d_f);
  std::vector<std::vector<uint64_t>> coef{basis.row_of(f)};
  auto ensure_coef = [&](long upto) {
    while (static_cast<long>(coef.size()) <= upto)
      coef.push_back(vec_mul(coef.back(), R));
  };

  // Nonlinear coefficient columns, in packed-row bit positions.
  std::vector<std::size_t> nonlinear;
  for (std::size_t c = 0; c < basis.size(); ++c)
    if (basis.at(c).degree() >= 2) nonlinear.push_back(c);

  // Fit an annihilator of every nonlinear coefficient sequence. These
  // sequences do not depend on the state: this is pure precomputation.
  long dim2 = static_cast<long>(nonlinear.size());
  long W = 2 * dim2 + 64;
  Gf2Poly p;
  bool fitted = false;
  for (int attempt = 0; attempt < 2 && !fitted; ++attempt, W *= 2) {
    p = Gf2Poly::one();
    ensure_coef(W);
    std::vector<uint8_t> seq(static_cast<std::size_t>(W));
    for (std::size_t c : nonlinear) {
      for (long s = 0; s < W; ++s)
        seq[static_cast<std::size_t>(s)] =
            (coef[static_cast<std::size_t>(s)][c >> 6] >> (c & 63)) & 1;
      if (annihilates(p, seq)) continue;
      p = lcm(p, annihilator(seq));
    }
    // Verify on fresh clocks: the filtered coefficient vector must be
    // linear there. A fit beyond the window is a failed fit.
    if (p.degree() > W + 64) continue;
    ensure_coef(W + 128 + p.degree());
    bool ok = true;
    std::vector<int> es = p.exponents();
    for (long t = W; t < W + 128 && ok; ++t) {
      std::vector<uint64_t> star(basis.words(), 0);
      for (int e : es) {
        const std::vector<uint64_t>& r = coef[static_cast<std::size_t>(t + e)];
        for (std::size_t w = 0; w < star.size(); ++w) star[w] ^= r[w];
      }
      for (std::size_t c : nonlinear)
        if ((star[c >> 6] >> (c & 63)) & 1) ok = false;
    }
    fitted = ok;
  }
  if (!fitted)
    throw Error("filter-recurrence polynomial failed fresh-window verification");
  long P = p.degree();
  std::vector<int> pexp = p.exponents();
  if (static_cast<long>(z.size()) < n + P)
    throw Error("insufficient keystream after filtering: need " + std::to_string(n + P) +
                " bits, got " + std::to_string(z.size()));

  AttackReport report;
  report.note = "filter degree " + std::to_string(d_f) + ", filter polynomial degree " +
                std::to_string(P);

  LinearSystem sys;
  MonomialBasis linear_basis(n, 1);
  long t_next = 0;
  long target = n;
  for (int round = 0; round <= kMaxRetries; ++round) {
    while (static_cast<long>(sys.rows.size()) < target &&
           t_next + P < static_cast<long>(z.size())) {
      long t = t_next++;
      ensure_coef(t + P);
      std::vector<uint64_t> star(basis.words(), 0);
      uint8_t zstar = 0;
      for (int e : pexp) {
        const std::vector<uint64_t>& r = coef[static_cast<std::size_t>(t + e)];
        for (std::size_t w = 0; w < star.size(); ++w) star[w] ^= r[w];
        zstar ^= z[static_cast<std::size_t>(t + e)];
      }
      for (std::size_t c : nonlinear)
        if ((star[c >> 6] >> (c & 63)) & 1)
          throw Error("filtered equation kept a nonlinear term at clock " +
                      std::to_string(t));
      uint8_t rhs = zstar ^ static_cast<uint8_t>(star[0] & 1);
      // Keep the n linear columns (basis indices 1..n).
      std::vector<uint64_t> packed((static_cast<std::size_t>(n) + 63) / 64, 0);
      for (int v = 0; v < n; ++v) {
        std::size_t c = static_cast<std::size_t>(v) + 1;
        if ((star[c >> 6] >> (c & 63)) & 1)
          packed[static_cast<std::size_t>(v) >> 6] |= uint64_t{1} << (v & 63);
      }
      bool zero = true;
      for (uint64_t w : packed)
        if (w) zero = false;
      if (zero && !rhs) continue;
      if (zero && rhs)
        throw Error("contradictory equation: keystream does not match the generator");
      sys.rows.push_back(std::move(packed));
      sys.rhs.push_back(rhs);
      report.data_bits = std::max(report.data_bits, t + P + 1);
    }
    if (sys.rows.empty())
      throw Error("no usable equations: keystream too short or filter too degenerate");
    bool need_more = false;
    report.equations_used = static_cast<long>(sys.rows.size());
    if (solve_and_verify(gen, linear_basis, sys, z, report, need_more)) {
      report.wall_ms = now_ms() - t0;
      return report;
    }
    if (!need_more) break;
    if (t_next + P >= static_cast<long>(z.size()))
      throw Error("rank deficient after exhausting the keystream: need more data");
    target += n;
  }
  throw Error("state not recovered: rank deficiency persisted after " +
              std::to_string(kMaxRetries) + " extra batches");
}

namespace {

double log2_u128(unsigned __int128 v) {
  return std::log2(static_cast<long double>(v));
}

}  // namespace

ComplexityEstimate estimate_standard(int n, int d, int e, double omega, double c) {
  if (n < 1 || d < 0 || e < 1 || d > n || e > n) throw Error("estimate parameters out of range");
  ComplexityEstimate est;
  est.kind = AttackKind::standard;
  est.n = n;
  est.d = d;
  est.e = e;
  est.omega = omega;
  est.c = c;
  unsigned __int128 D = MonomialBasis::size_of(n, d);
  unsigned __int128 E = MonomialBasis::size_of(n, e);
  double logD = log2_u128(D), logE = log2_u128(E);
  est.data_log2 = log2_u128(D + E - 1);
  est.substitution_log2 = 1.0 + logD + logE + std::log2(logE);
  double logn = std::log2(static_cast<double>(n));
  est.precomputation_log2 =
      std::log2(c) + logD + std::log2(n * logn * logn + logD * logD * logD);
  est.solving_log2 = omega * logE;
  return est;
}

ComplexityEstimate estimate_rh(int n, int d_f, double omega) {
  if (n < 1 || d_f < 0 || d_f > n) throw Error("estimate parameters out of range");
  ComplexityEstimate est;
  est.kind = AttackKind::rh;
  est.n = n;
  est.d_f = d_f;
  est.omega = omega;
  unsigned __int128 D = MonomialBasis::size_of(n, d_f);
  double logD = log2_u128(D);
  est.data_log2 = logD;
  est.precomputation_log2 = logD + 3.0 * std::log2(logD);
  est.solving_log2 = omega * std::log2(static_cast<double>(n));
  return est;
}

}  // namespace fsrkit
