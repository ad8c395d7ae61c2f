#include "fsrkit/transform.hpp"

#include <charconv>

namespace fsrkit {

bool CompensationList::all_zero() const {
  for (const BooleanFunction& f : entries_)
    if (!f.is_zero()) return false;
  return true;
}

void CompensationList::validate() const {
  for (int i = 0; i < n(); ++i) {
    std::vector<int> d = entries_[static_cast<std::size_t>(i)].dep();
    if (!d.empty() && d.back() >= i)
      throw Error("compensation entry " + std::to_string(i) + " taps stage x" +
                  std::to_string(d.back()) + " (must stay below " + std::to_string(i) + ")");
  }
}

std::string CompensationList::format() const {
  std::string out;
  for (int i = 0; i < n(); ++i)
    if (!entries_[static_cast<std::size_t>(i)].is_zero())
      out += "C" + std::to_string(i) + " = " + entries_[static_cast<std::size_t>(i)].format() + "\n";
  return out;
}

CompensationList CompensationList::parse(std::string_view text, int n) {
  CompensationList c(n);
  std::size_t pos = 0;
  int lineno = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    bool last = eol == text.size();
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
    if (!line.empty()) {
      std::size_t eq = line.find('=');
      if (eq == std::string_view::npos || line[0] != 'C')
        throw Error("line " + std::to_string(lineno) + ": expected 'C<i> = <function>'");
      std::string_view key = trim(line.substr(1, eq - 1));
      int idx = -1;
      auto [p, ec] = std::from_chars(key.data(), key.data() + key.size(), idx);
      if (ec != std::errc() || p != key.data() + key.size() || idx < 0 || idx >= n)
        throw Error("line " + std::to_string(lineno) + ": bad entry index");
      c[idx] = BooleanFunction::parse(line.substr(eq + 1));
    }
    if (last) break;
  }
  c.validate();
  return c;
}

std::string ShiftPlan::format() const {
  std::string out;
  for (const ShiftMove& mv : moves)
    out += "m=" + mv.m.format() + " from=" + std::to_string(mv.from) +
           " to=" + std::to_string(mv.to) + "\n";
  return out;
}

ShiftPlan ShiftPlan::parse(std::string_view text) {
  ShiftPlan plan;
  std::size_t pos = 0;
  int lineno = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    bool last = eol == text.size();
    pos = eol + 1;
    ++lineno;
    if (std::size_t hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    auto fail = [&](const std::string& msg) {
      throw Error("line " + std::to_string(lineno) + ": " + msg);
    };
    // Tokens: m=<monomial> from=<int> to=<int> in any order, whitespace-split.
    std::string_view rest = line;
    ShiftMove mv;
    bool have_m = false, have_from = false, have_to = false, any = false;
    while (true) {
      while (!rest.empty() && std::isspace(static_cast<unsigned char>(rest.front())))
        rest.remove_prefix(1);
      if (rest.empty()) break;
      std::size_t end = 0;
      while (end < rest.size() && !std::isspace(static_cast<unsigned char>(rest[end]))) ++end;
      std::string_view tok = rest.substr(0, end);
      rest.remove_prefix(end);
      any = true;
      auto parse_int = [&](std::string_view v) {
        int out = -1;
        auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
        if (ec != std::errc() || p != v.data() + v.size()) fail("bad integer '" + std::string(v) + "'");
        return out;
      };
      if (tok.starts_with("m=")) {
        BooleanFunction f = BooleanFunction::parse(tok.substr(2));
        if (f.term_count() != 1) fail("move carries exactly one monomial");
        mv.m = f.terms()[0];
        have_m = true;
      } else if (tok.starts_with("from=")) {
        mv.from = parse_int(tok.substr(5));
        have_from = true;
      } else if (tok.starts_with("to=")) {
        mv.to = parse_int(tok.substr(3));
        have_to = true;
      } else {
        fail("unknown token '" + std::string(tok) + "'");
      }
    }
    if (any) {
      if (!have_m || !have_from || !have_to) fail("need m=, from= and to=");
      plan.moves.push_back(mv);
    }
    if (last) break;
  }
  return plan;
}

FsrSpec shift_monomial(const FsrSpec& spec, const Monomial& m, int a, int b) {
  spec.validate();
  if (a < 0 || a >= spec.n || b < 0 || b >= spec.n)
    throw Error("stage out of range");
  if (b >= a) throw Error("destination stage must be below the source stage");
  if (!spec.feedback[a].has_term(m))
    throw Error("monomial " + m.format() + " is not a term of f" + std::to_string(a));
  if (m.is_one()) throw Error("the constant term cannot be moved");
  if (m.min_var() < a - b)
    throw Error("monomial " + m.format() + " cannot move down by " + std::to_string(a - b) +
                " (lowest variable x" + std::to_string(m.min_var()) + ")");
  FsrSpec out = spec;
  out.feedback[a] ^= m;
  out.feedback[b] ^= m.shifted(-(a - b), spec.n);
  return out;
}

CompensationList compensation_list(const Monomial& m, int a, int b, int n) {
  if (a < 1 || a >= n) throw Error("source stage out of range");
  if (m.is_one()) throw Error("the constant term cannot be moved");
  if (m.max_var() >= n) throw Error("monomial taps outside the register");
  int lo = a - m.min_var();
  if (b < lo || b > a - 1)
    throw Error("destination " + std::to_string(b) + " outside [" + std::to_string(lo) +
                ", " + std::to_string(a - 1) + "] for monomial " + m.format());
  CompensationList c(n);
  for (int i = b + 1; i <= a; ++i) c[i] = BooleanFunction::from_terms({m.shifted(-(a - i + 1), n)});
  return c;
}

CompensationList combine(const std::vector<CompensationList>& lists) {
  if (lists.empty()) throw Error("nothing to combine");
  CompensationList out(lists[0].n());
  for (const CompensationList& c : lists) {
    if (c.n() != out.n()) throw Error("compensation lists have different sizes");
    for (int i = 0; i < out.n(); ++i) out[i] ^= c[i];
  }
  return out;
}

BooleanFunction compensate_iterative(const BooleanFunction& f, const CompensationList& c) {
  BooleanFunction out = f;
  for (int i = c.n() - 1; i >= 0; --i)
    if (!c[i].is_zero()) out = out.substitute_tap(i, c[i]);
  return out;
}

BooleanFunction compensate_single_pass(const BooleanFunction& f, const CompensationList& c) {
  BooleanFunction out;
  for (const Monomial& t : f.terms()) {
    BooleanFunction prod = BooleanFunction::one();
    for (int v : t.vars()) {
      BooleanFunction factor = BooleanFunction::var(v);
      if (v < c.n()) factor ^= c[v];
      prod = prod * factor;
    }
    out ^= prod;
  }
  return out;
}

namespace {

// Batch rewrite of a Fibonacci state into the moved register's coordinates:
// every delta is evaluated on the pristine input state.
RegisterState init_to_galois(const RegisterState& s, const CompensationList& c) {
  RegisterState out = s;
  for (int i = 0; i < c.n(); ++i)
    if (!c[i].is_zero() && c[i].evaluate(s.w)) out.flip(i);
  return out;
}

// Inverse direction: ascending in-place rewrite. Entry i only taps stages
// below i, which this loop has already restored to Fibonacci values.
RegisterState init_to_fibonacci(const RegisterState& s, const CompensationList& c) {
  RegisterState out = s;
  for (int i = 0; i < c.n(); ++i)
    if (!c[i].is_zero() && c[i].evaluate(out.w)) out.flip(i);
  return out;
}

}  // namespace

TransformOutcome fib_to_galois(const FsrSpec& fib, const ShiftPlan& plan,
                               const RegisterState& init) {
  fib.validate();
  if (classify(fib) != Classification::fibonacci)
    throw Error("source register is not Fibonacci");
  if (init.n != fib.n) throw Error("state size does not match register size");
  int n = fib.n;

  // Validate every move eagerly so errors name the offending move.
  for (const ShiftMove& mv : plan.moves) {
    std::string where = "move m=" + mv.m.format() + " from=" + std::to_string(mv.from) +
                        " to=" + std::to_string(mv.to) + ": ";
    if (mv.from != n - 1) throw Error(where + "source must be stage " + std::to_string(n - 1));
    if (mv.to < 0 || mv.to >= n - 1) throw Error(where + "destination stage out of range");
    if (mv.m.is_one()) throw Error(where + "the constant term cannot be moved");
    if (mv.m.max_var() >= n) throw Error(where + "monomial taps outside the register");
    int mn = mv.m.min_var();
    if (mn == 0) throw Error(where + "monomial must not tap x0");
    if (mv.to < n - 1 - mn)
      throw Error(where + "destination below " + std::to_string(n - 1 - mn));
  }

  // Apply the moves as XOR toggles on the deviation parts.
  std::vector<BooleanFunction> g(static_cast<std::size_t>(n));
  g[static_cast<std::size_t>(n - 1)] = fib.g_part(n - 1);
  std::vector<CompensationList> per_move;
  per_move.reserve(plan.moves.size());
  for (const ShiftMove& mv : plan.moves) {
    g[static_cast<std::size_t>(n - 1)] ^= mv.m;
    g[static_cast<std::size_t>(mv.to)] ^= mv.m.shifted(-(n - 1 - mv.to), n);
    per_move.push_back(compensation_list(mv.m, n - 1, mv.to, n));
  }
  CompensationList comp = per_move.empty() ? CompensationList(n) : combine(per_move);

  // Rewrite every deviation into the moved register's own coordinates.
  TransformOutcome out;
  out.spec = FsrSpec::shift_register(n);
  for (int i = 0; i < n; ++i) {
    BooleanFunction gi = compensate_iterative(g[static_cast<std::size_t>(i)], comp);
    std::vector<int> d = gi.dep();
    if (!d.empty() && d.back() > i)
      throw Error("compensated deviation at stage " + std::to_string(i) + " taps x" +
                  std::to_string(d.back()) + "; the plan does not yield a Galois register");
    out.spec.set_g_part(i, gi);
  }
  out.spec.output = compensate_iterative(fib.output, comp);
  out.init = init_to_galois(init, comp);
  out.comp = comp;
  return out;
}

namespace {

TransformOutcome galois_to_fib_impl(const FsrSpec& gal, const RegisterState& init,
                                    bool uniform_only) {
  gal.validate();
  if (init.n != gal.n) throw Error("state size does not match register size");
  int n = gal.n;
  Classification cls = classify(gal);
  if (uniform_only && cls != Classification::uniform_galois &&
      cls != Classification::fibonacci)
    throw Error("register is not uniform");
  for (int i = 0; i + 1 < n; ++i) {
    std::vector<int> d = gal.g_part(i).dep();
    if (!d.empty() && d.back() > i)
      throw Error("deviation at stage " + std::to_string(i) + " taps x" +
                  std::to_string(d.back()) + " above the stage; not reachable "
                  "from a Fibonacci register by monomial moves");
  }

  // Ascending recurrence: stage i's deviation, rewritten into the other
  // register's coordinates, joins the carry; the carry shifted one stage up
  // is the next compensation entry. Entry i is final before stage i is
  // processed, so deviations tapping their own stage are handled too. What
  // falls off the top is the last stage's deviation from a plain shift.
  CompensationList comp(n);
  BooleanFunction lifted;
  for (int i = 0; i < n; ++i) {
    BooleanFunction gi = gal.g_part(i);
    if (i + 1 < n)
      for (const Monomial& t : gi.terms())
        if (t.is_one()) throw Error("constant deviation at stage " + std::to_string(i));
    BooleanFunction carry = comp[i].shift_indices(1, n, false);
    carry ^= compensate_single_pass(gi, comp);
    if (i + 1 < n)
      comp[i + 1] = std::move(carry);
    else
      lifted = std::move(carry);
  }

  TransformOutcome out;
  out.spec = FsrSpec::shift_register(n);
  out.spec.set_g_part(n - 1, lifted);
  out.spec.output = compensate_single_pass(gal.output, comp);
  out.init = init_to_fibonacci(init, comp);
  out.comp = comp;
  return out;
}

}  // namespace

TransformOutcome galois_to_fib(const FsrSpec& gal, const RegisterState& init) {
  return galois_to_fib_impl(gal, init, false);
}

TransformOutcome uniform_galois_to_fib(const FsrSpec& gal, const RegisterState& init) {
  return galois_to_fib_impl(gal, init, true);
}

RelationResult state_relation_check(const FsrSpec& fib, const FsrSpec& gal,
                                    const CompensationList& c,
                                    const RegisterState& fib_init,
                                    const RegisterState& gal_init, long T) {
  if (fib.n != gal.n || c.n() != fib.n)
    throw Error("register sizes do not match");
  Simulator fsim(fib), gsim(gal);
  RegisterState fs = fib_init, gs = gal_init;
  for (long t = 0; t < T; ++t) {
    for (int i = 0; i < fib.n; ++i) {
      bool expect = fs.get(i) ^ c[i].evaluate(fs.w);
      if (gs.get(i) != expect) return {false, i, t};
    }
    fs = fsim.step(fs);
    gs = gsim.step(gs);
  }
  return {true, -1, -1};
}

}  // namespace fsrkit
