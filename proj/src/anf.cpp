#include "fsrkit/anf.hpp"

#include <algorithm>
#include <bit>
#include <cctype>

namespace fsrkit {

namespace {

void check_index(int i) {
  if (i < 0 || i >= kMaxVars)
    throw Error("variable index " + std::to_string(i) + " out of range [0, " +
                std::to_string(kMaxVars - 1) + "]");
}

}  // namespace

Monomial Monomial::var(int i) {
  check_index(i);
  Monomial m;
  m.bits_[i >> 6] |= uint64_t{1} << (i & 63);
  return m;
}

Monomial Monomial::of(std::initializer_list<int> vars) {
  Monomial m;
  for (int i : vars) m = m.times(var(i));
  return m;
}

bool Monomial::is_one() const {
  for (uint64_t w : bits_)
    if (w) return false;
  return true;
}

int Monomial::degree() const {
  int d = 0;
  for (uint64_t w : bits_) d += std::popcount(w);
  return d;
}

int Monomial::min_var() const {
  for (int w = 0; w < kStateWords; ++w)
    if (bits_[w]) return w * 64 + std::countr_zero(bits_[w]);
  return -1;
}

int Monomial::max_var() const {
  for (int w = kStateWords - 1; w >= 0; --w)
    if (bits_[w]) return w * 64 + 63 - std::countl_zero(bits_[w]);
  return -1;
}

std::vector<int> Monomial::vars() const {
  std::vector<int> out;
  for (int w = 0; w < kStateWords; ++w) {
    uint64_t v = bits_[w];
    while (v) {
      out.push_back(w * 64 + std::countr_zero(v));
      v &= v - 1;
    }
  }
  return out;
}

Monomial Monomial::times(const Monomial& o) const {
  Monomial m;
  for (int w = 0; w < kStateWords; ++w) m.bits_[w] = bits_[w] | o.bits_[w];
  return m;
}

Monomial Monomial::without(int i) const {
  Monomial m = *this;
  m.bits_[i >> 6] &= ~(uint64_t{1} << (i & 63));
  return m;
}

Monomial Monomial::shifted(int k, int n) const {
  Monomial m;
  for (int v : vars()) {
    if (v >= n)
      throw Error("variable x" + std::to_string(v) + " outside register of size " +
                  std::to_string(n));
    int t = v + k;
    if (t < 0 || t >= n)
      throw Error("shift by " + std::to_string(k) + " moves x" + std::to_string(v) +
                  " outside [0, " + std::to_string(n - 1) + "]");
    m = m.times(var(t));
  }
  return m;
}

Monomial Monomial::shifted_wrap(int k, int n) const {
  Monomial m;
  for (int v : vars()) {
    if (v >= n)
      throw Error("variable x" + std::to_string(v) + " outside register of size " +
                  std::to_string(n));
    int t = ((v + k) % n + n) % n;
    m = m.times(var(t));
  }
  return m;
}

bool Monomial::evaluate(const StateWords& state) const {
  for (int w = 0; w < kStateWords; ++w)
    if ((state[w] & bits_[w]) != bits_[w]) return false;
  return true;
}

std::string Monomial::format() const {
  if (is_one()) return "1";
  std::string out;
  bool first = true;
  for (int v : vars()) {
    if (!first) out += '*';
    out += 'x';
    out += std::to_string(v);
    first = false;
  }
  return out;
}

bool operator<(const Monomial& a, const Monomial& b) {
  int da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  // Same degree: the owner of the lowest differing variable comes first.
  for (int w = 0; w < kStateWords; ++w) {
    uint64_t diff = a.bits_[w] ^ b.bits_[w];
    if (diff) return a.bits_[w] & (diff & -diff);
  }
  return false;
}

BooleanFunction BooleanFunction::one() {
  BooleanFunction f;
  f.terms_.push_back(Monomial::one());
  return f;
}

BooleanFunction BooleanFunction::var(int i) {
  BooleanFunction f;
  f.terms_.push_back(Monomial::var(i));
  return f;
}

BooleanFunction BooleanFunction::from_terms(std::vector<Monomial> terms) {
  std::sort(terms.begin(), terms.end());
  BooleanFunction f;
  f.terms_.reserve(terms.size());
  // XOR semantics: a monomial appearing an even number of times cancels.
  std::size_t i = 0;
  while (i < terms.size()) {
    std::size_t j = i + 1;
    while (j < terms.size() && terms[j] == terms[i]) ++j;
    if ((j - i) & 1) f.terms_.push_back(terms[i]);
    i = j;
  }
  return f;
}

bool BooleanFunction::has_term(const Monomial& m) const {
  return std::binary_search(terms_.begin(), terms_.end(), m);
}

int BooleanFunction::degree() const {
  if (terms_.empty()) return -1;
  return terms_.back().degree();
}

StateWords BooleanFunction::dep_mask() const {
  StateWords m{};
  for (const Monomial& t : terms_)
    for (int w = 0; w < kStateWords; ++w) m[w] |= t.mask()[w];
  return m;
}

std::vector<int> BooleanFunction::dep() const {
  StateWords m = dep_mask();
  std::vector<int> out;
  for (int w = 0; w < kStateWords; ++w) {
    uint64_t v = m[w];
    while (v) {
      out.push_back(w * 64 + std::countr_zero(v));
      v &= v - 1;
    }
  }
  return out;
}

BooleanFunction& BooleanFunction::operator^=(const BooleanFunction& o) {
  std::vector<Monomial> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    if (terms_[i] == o.terms_[j]) {
      ++i;
      ++j;  // equal terms cancel
    } else if (terms_[i] < o.terms_[j]) {
      merged.push_back(terms_[i++]);
    } else {
      merged.push_back(o.terms_[j++]);
    }
  }
  merged.insert(merged.end(), terms_.begin() + i, terms_.end());
  merged.insert(merged.end(), o.terms_.begin() + j, o.terms_.end());
  terms_ = std::move(merged);
  return *this;
}

BooleanFunction& BooleanFunction::operator^=(const Monomial& m) {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m);
  if (it != terms_.end() && *it == m)
    terms_.erase(it);
  else
    terms_.insert(it, m);
  return *this;
}

bool BooleanFunction::evaluate(const StateWords& state) const {
  bool acc = false;
  for (const Monomial& t : terms_) acc ^= t.evaluate(state);
  return acc;
}

BooleanFunction operator*(const BooleanFunction& a, const BooleanFunction& b) {
  std::vector<Monomial> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const Monomial& ta : a.terms_)
    for (const Monomial& tb : b.terms_) prod.push_back(ta.times(tb));
  return BooleanFunction::from_terms(std::move(prod));
}

BooleanFunction BooleanFunction::derivative(int i) const {
  std::vector<Monomial> out;
  for (const Monomial& t : terms_)
    if (t.contains(i)) out.push_back(t.without(i));
  // Removing the same variable from distinct terms keeps them distinct and
  // ordered, so no re-canonicalization is needed.
  BooleanFunction f;
  f.terms_ = std::move(out);
  return f;
}

BooleanFunction BooleanFunction::substitute_tap(int i, const BooleanFunction& r) const {
  if (r.is_zero()) return *this;
  StateWords d = dep_mask();
  if (!((d[i >> 6] >> (i & 63)) & 1)) return *this;
  return *this ^ derivative(i) * r;
}

BooleanFunction BooleanFunction::substitute(int i, const BooleanFunction& r) const {
  StateWords d = dep_mask();
  if (!((d[i >> 6] >> (i & 63)) & 1)) return *this;
  BooleanFunction untouched, factor;
  for (const Monomial& t : terms_) {
    if (t.contains(i))
      factor ^= t.without(i);
    else
      untouched ^= t;
  }
  return untouched ^ factor * r;
}

BooleanFunction BooleanFunction::shift_indices(int k, int n, bool wrap) const {
  if (wrap) {
    std::vector<Monomial> out;
    out.reserve(terms_.size());
    for (const Monomial& t : terms_) out.push_back(t.shifted_wrap(k, n));
    return from_terms(std::move(out));
  }
  // A uniform shift preserves both degrees and relative order.
  BooleanFunction f;
  f.terms_.reserve(terms_.size());
  for (const Monomial& t : terms_) f.terms_.push_back(t.shifted(k, n));
  return f;
}

std::string BooleanFunction::format() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (i) out += " + ";
    out += terms_[i].format();
  }
  return out;
}

BooleanFunction BooleanFunction::parse(std::string_view text) {
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto parse_var = [&]() -> Monomial {
    // caller guarantees text[pos] == 'x'
    std::size_t start = pos;
    ++pos;
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      throw ParseError("expected variable index after 'x'", pos);
    long idx = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      idx = idx * 10 + (text[pos] - '0');
      if (idx >= kMaxVars)
        throw ParseError("variable index too large (limit " +
                             std::to_string(kMaxVars - 1) + ")",
                         start);
      ++pos;
    }
    return Monomial::var(static_cast<int>(idx));
  };

  std::vector<Monomial> terms;
  bool expect_term = true;
  skip_ws();
  if (pos == text.size()) throw ParseError("empty function", pos);
  while (true) {
    skip_ws();
    if (expect_term) {
      if (pos >= text.size()) throw ParseError("expected a term", pos);
      if (text[pos] == '1') {
        ++pos;
        terms.push_back(Monomial::one());
      } else if (text[pos] == '0') {
        ++pos;  // the zero literal contributes no term
      } else if (text[pos] == 'x') {
        Monomial m = parse_var();
        skip_ws();
        while (pos < text.size() && text[pos] == '*') {
          ++pos;
          skip_ws();
          if (pos >= text.size() || text[pos] != 'x')
            throw ParseError("expected a variable after '*'", pos);
          m = m.times(parse_var());
          skip_ws();
        }
        terms.push_back(m);
      } else {
        throw ParseError(std::string("unexpected character '") + text[pos] + "'", pos);
      }
      expect_term = false;
    } else {
      if (pos >= text.size()) break;
      if (text[pos] != '+')
        throw ParseError(std::string("expected '+' but found '") + text[pos] + "'", pos);
      ++pos;
      expect_term = true;
    }
  }
  return from_terms(std::move(terms));
}

}  // namespace fsrkit
