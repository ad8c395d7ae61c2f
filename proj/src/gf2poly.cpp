#include "fsrkit/gf2poly.hpp"

#include <algorithm>
#include <bit>

namespace fsrkit {

void Gf2Poly::trim() {
  while (!w_.empty() && w_.back() == 0) w_.pop_back();
}

Gf2Poly Gf2Poly::one() { return of({0}); }
Gf2Poly Gf2Poly::x() { return of({1}); }

Gf2Poly Gf2Poly::of(std::initializer_list<int> exponents) {
  Gf2Poly p;
  for (int e : exponents) p.set_coeff(e, !p.coeff(e));
  return p;
}

int Gf2Poly::degree() const {
  if (w_.empty()) return -1;
  return static_cast<int>(w_.size()) * 64 - 1 - std::countl_zero(w_.back());
}

bool Gf2Poly::coeff(int i) const {
  std::size_t word = static_cast<std::size_t>(i) >> 6;
  if (i < 0 || word >= w_.size()) return false;
  return (w_[word] >> (i & 63)) & 1;
}

void Gf2Poly::set_coeff(int i, bool v) {
  if (i < 0) throw Error("negative exponent");
  std::size_t word = static_cast<std::size_t>(i) >> 6;
  if (word >= w_.size()) {
    if (!v) return;
    w_.resize(word + 1, 0);
  }
  uint64_t bit = uint64_t{1} << (i & 63);
  if (v)
    w_[word] |= bit;
  else
    w_[word] &= ~bit;
  trim();
}

int Gf2Poly::weight() const {
  int c = 0;
  for (uint64_t v : w_) c += std::popcount(v);
  return c;
}

std::vector<int> Gf2Poly::exponents() const {
  std::vector<int> out;
  for (std::size_t w = 0; w < w_.size(); ++w) {
    uint64_t v = w_[w];
    while (v) {
      out.push_back(static_cast<int>(w) * 64 + std::countr_zero(v));
      v &= v - 1;
    }
  }
  return out;
}

std::vector<uint8_t> Gf2Poly::coeff_bytes() const {
  int d = degree();
  std::vector<uint8_t> out(static_cast<std::size_t>(d + 1), 0);
  for (int i = 0; i <= d; ++i) out[static_cast<std::size_t>(i)] = coeff(i);
  return out;
}

Gf2Poly Gf2Poly::reciprocal() const {
  Gf2Poly r;
  int d = degree();
  for (int i = 0; i <= d; ++i)
    if (coeff(i)) r.set_coeff(d - i, true);
  return r;
}

Gf2Poly operator^(const Gf2Poly& a, const Gf2Poly& b) {
  Gf2Poly out;
  out.w_.resize(std::max(a.w_.size(), b.w_.size()), 0);
  for (std::size_t i = 0; i < out.w_.size(); ++i) {
    uint64_t v = 0;
    if (i < a.w_.size()) v ^= a.w_[i];
    if (i < b.w_.size()) v ^= b.w_[i];
    out.w_[i] = v;
  }
  out.trim();
  return out;
}

Gf2Poly operator*(const Gf2Poly& a, const Gf2Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  Gf2Poly out;
  out.w_.assign(a.w_.size() + b.w_.size(), 0);
  for (std::size_t i = 0; i < a.w_.size(); ++i) {
    uint64_t av = a.w_[i];
    while (av) {
      int bit = std::countr_zero(av);
      av &= av - 1;
      int shift = bit;
      // XOR b shifted by 64*i + shift into out.
      for (std::size_t j = 0; j < b.w_.size(); ++j) {
        uint64_t lo = b.w_[j] << shift;
        out.w_[i + j] ^= lo;
        if (shift) out.w_[i + j + 1] ^= b.w_[j] >> (64 - shift);
      }
    }
  }
  out.trim();
  return out;
}

std::pair<Gf2Poly, Gf2Poly> Gf2Poly::divmod(const Gf2Poly& num, const Gf2Poly& den) {
  if (den.is_zero()) throw Error("polynomial division by zero");
  Gf2Poly q, r = num;
  int dd = den.degree();
  while (!r.is_zero() && r.degree() >= dd) {
    int shift = r.degree() - dd;
    q.set_coeff(shift, true);
    // r ^= den << shift
    Gf2Poly shifted;
    shifted.w_.assign(den.w_.size() + static_cast<std::size_t>(shift) / 64 + 1, 0);
    std::size_t wsh = static_cast<std::size_t>(shift) / 64;
    int bsh = shift & 63;
    for (std::size_t j = 0; j < den.w_.size(); ++j) {
      shifted.w_[j + wsh] ^= den.w_[j] << bsh;
      if (bsh) shifted.w_[j + wsh + 1] ^= den.w_[j] >> (64 - bsh);
    }
    shifted.trim();
    r = r ^ shifted;
  }
  return {q, r};
}

Gf2Poly operator/(const Gf2Poly& a, const Gf2Poly& b) { return Gf2Poly::divmod(a, b).first; }
Gf2Poly operator%(const Gf2Poly& a, const Gf2Poly& b) { return Gf2Poly::divmod(a, b).second; }

Gf2Poly gcd(Gf2Poly a, Gf2Poly b) {
  while (!b.is_zero()) {
    Gf2Poly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

Gf2Poly lcm(const Gf2Poly& a, const Gf2Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return (a / gcd(a, b)) * b;
}

std::string Gf2Poly::format() const {
  if (is_zero()) return "0";
  std::string out;
  std::vector<int> es = exponents();
  for (auto it = es.rbegin(); it != es.rend(); ++it) {
    if (!out.empty()) out += " + ";
    if (*it == 0)
      out += "1";
    else if (*it == 1)
      out += "x";
    else
      out += "x^" + std::to_string(*it);
  }
  return out;
}

BmResult berlekamp_massey(const std::vector<uint8_t>& seq) {
  std::size_t N = seq.size();
  // Byte-valued work arrays keep the discrepancy loop vectorizable.
  std::vector<uint8_t> C(N + 1, 0), B(N + 1, 0);
  C[0] = B[0] = 1;
  int L = 0, m = 1;
  for (std::size_t n = 0; n < N; ++n) {
    uint8_t d = seq[n];
    for (int i = 1; i <= L; ++i) d ^= static_cast<uint8_t>(C[i] & seq[n - i]);
    if (d == 0) {
      ++m;
    } else if (2 * L <= static_cast<int>(n)) {
      std::vector<uint8_t> T(C.begin(), C.begin() + L + 1);
      for (std::size_t i = 0; i + m <= n + 1; ++i) C[i + m] ^= B[i];
      int newL = static_cast<int>(n) + 1 - L;
      B.assign(N + 1, 0);
      std::copy(T.begin(), T.end(), B.begin());
      L = newL;
      m = 1;
    } else {
      for (std::size_t i = 0; i + m <= n + 1; ++i) C[i + m] ^= B[i];
      ++m;
    }
  }
  BmResult res;
  res.L = L;
  for (int i = 0; i <= L; ++i)
    if (C[i]) res.connection.set_coeff(i, true);
  return res;
}

Gf2Poly annihilator(const std::vector<uint8_t>& seq) {
  BmResult bm = berlekamp_massey(seq);
  // The recurrence sum_i C_i s[t+L-i] = 0 reads forward as the reversed
  // coefficient window of length L+1.
  Gf2Poly p;
  for (int i = 0; i <= bm.L; ++i)
    if (bm.connection.coeff(i)) p.set_coeff(bm.L - i, true);
  if (p.is_zero()) p = Gf2Poly::one();  // zero sequence
  return p;
}

bool annihilates(const Gf2Poly& p, const std::vector<uint8_t>& seq) {
  if (p.is_zero()) return false;
  std::vector<int> es = p.exponents();
  int d = p.degree();
  if (static_cast<std::size_t>(d) >= seq.size()) return true;  // no complete window
  for (std::size_t t = 0; t + static_cast<std::size_t>(d) < seq.size(); ++t) {
    uint8_t acc = 0;
    for (int e : es) acc ^= seq[t + static_cast<std::size_t>(e)];
    if (acc) return false;
  }
  return true;
}

}  // namespace fsrkit
