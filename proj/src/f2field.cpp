#include "cliffpar/f2field.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <optional>

#include "cliffpar/errors.hpp"

namespace cliffpar {

// ---------------------------------------------------------------------------
// Gf2Poly

namespace {

// dst ^= src << shift, growing dst as needed.
void xor_shifted(std::vector<std::uint64_t>& dst,
                 const std::vector<std::uint64_t>& src, int shift) {
  const std::size_t word = static_cast<std::size_t>(shift) / 64;
  const int bit = shift % 64;
  const std::size_t need = word + src.size() + (bit != 0 ? 1 : 0);
  if (dst.size() < need) dst.resize(need, 0);
  if (bit == 0) {
    for (std::size_t i = 0; i < src.size(); ++i) dst[word + i] ^= src[i];
    return;
  }
  std::uint64_t carry = 0;
  for (std::size_t i = 0; i < src.size(); ++i) {
    dst[word + i] ^= (src[i] << bit) | carry;
    carry = src[i] >> (64 - bit);
  }
  dst[word + src.size()] ^= carry;
}

int top_bit(const std::vector<std::uint64_t>& w) {
  if (w.empty()) return -1;
  std::uint64_t top = w.back();
  int bit = 63;
  while (!((top >> bit) & 1)) --bit;
  return static_cast<int>(w.size() - 1) * 64 + bit;
}

}  // namespace

int Gf2Poly::degree() const { return top_bit(w_); }

Gf2Poly Gf2Poly::monomial(int deg) {
  std::vector<std::uint64_t> words(static_cast<std::size_t>(deg) / 64 + 1, 0);
  words.back() = std::uint64_t{1} << (deg % 64);
  return Gf2Poly(std::move(words));
}

Gf2Poly operator+(const Gf2Poly& a, const Gf2Poly& b) {
  std::vector<std::uint64_t> words(std::max(a.w_.size(), b.w_.size()), 0);
  for (std::size_t i = 0; i < a.w_.size(); ++i) words[i] ^= a.w_[i];
  for (std::size_t i = 0; i < b.w_.size(); ++i) words[i] ^= b.w_[i];
  return Gf2Poly(std::move(words));
}

Gf2Poly operator*(const Gf2Poly& a, const Gf2Poly& b) {
  if (a.is_zero() || b.is_zero()) return Gf2Poly();
  std::vector<std::uint64_t> out;
  out.reserve(a.w_.size() + b.w_.size());
  for (std::size_t k = 0; k < a.w_.size(); ++k) {
    std::uint64_t word = a.w_[k];
    while (word) {
      int bit = __builtin_ctzll(word);
      word &= word - 1;
      xor_shifted(out, b.w_, static_cast<int>(k) * 64 + bit);
    }
  }
  return Gf2Poly(std::move(out));
}

std::pair<Gf2Poly, Gf2Poly> Gf2Poly::divmod(const Gf2Poly& a,
                                            const Gf2Poly& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  const int db = b.degree();
  const int da = top_bit(a.w_);
  if (da < db) return {Gf2Poly(), a};
  std::vector<std::uint64_t> rem = a.w_;
  std::vector<std::uint64_t> quot(static_cast<std::size_t>(da - db) / 64 + 1,
                                  0);
  int dr = da;
  while (dr >= db) {
    int shift = dr - db;
    quot[static_cast<std::size_t>(shift) / 64] |= std::uint64_t{1}
                                                  << (shift % 64);
    xor_shifted(rem, b.w_, shift);
    // The leading bit cancels; rescan from the previous top.
    while (!rem.empty() && rem.back() == 0) rem.pop_back();
    dr = top_bit(rem);
  }
  return {Gf2Poly(std::move(quot)), Gf2Poly(std::move(rem))};
}

Gf2Poly Gf2Poly::exact_div(const Gf2Poly& a, const Gf2Poly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw DomainError("inexact polynomial division");
  return q;
}

Gf2Poly Gf2Poly::gcd(Gf2Poly a, Gf2Poly b) {
  while (!b.is_zero()) {
    Gf2Poly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// ---------------------------------------------------------------------------
// Gf2BiPoly

Gf2BiPoly Gf2BiPoly::one() { return Gf2BiPoly({Gf2Poly::one()}); }

Gf2BiPoly Gf2BiPoly::monomial(int sdeg, int tdeg) {
  std::vector<Gf2Poly> coeffs(sdeg + 1);
  coeffs[sdeg] = Gf2Poly::monomial(tdeg);
  return Gf2BiPoly(std::move(coeffs));
}

Gf2BiPoly Gf2BiPoly::constant(const Gf2Poly& p) {
  if (p.is_zero()) return Gf2BiPoly();
  return Gf2BiPoly({p});
}

const Gf2Poly& Gf2BiPoly::coeff_s(int i) const {
  static const Gf2Poly kZero;
  if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
  return c_[i];
}

Gf2BiPoly operator+(const Gf2BiPoly& a, const Gf2BiPoly& b) {
  std::vector<Gf2Poly> coeffs(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    coeffs[i] = a.coeff_s(static_cast<int>(i)) + b.coeff_s(static_cast<int>(i));
  }
  return Gf2BiPoly(std::move(coeffs));
}

Gf2BiPoly operator*(const Gf2BiPoly& a, const Gf2BiPoly& b) {
  if (a.is_zero() || b.is_zero()) return Gf2BiPoly();
  std::vector<Gf2Poly> coeffs(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j].is_zero()) continue;
      coeffs[i + j] = coeffs[i + j] + a.c_[i] * b.c_[j];
    }
  }
  return Gf2BiPoly(std::move(coeffs));
}

Gf2Poly Gf2BiPoly::content() const {
  Gf2Poly g;
  for (const auto& c : c_) {
    if (!c.is_zero()) g = Gf2Poly::gcd(g, c);
    if (g.is_one()) break;
  }
  return g;
}

Gf2BiPoly Gf2BiPoly::primitive_part() const {
  if (is_zero()) return Gf2BiPoly();
  Gf2Poly cont = content();
  std::vector<Gf2Poly> coeffs;
  coeffs.reserve(c_.size());
  for (const auto& c : c_) coeffs.push_back(Gf2Poly::exact_div(c, cont));
  return Gf2BiPoly(std::move(coeffs));
}

namespace {

// Exact quotient a / b, or nullopt when b does not divide a. Works on the
// coefficient rows in place.
std::optional<Gf2BiPoly> try_exact_div(const Gf2BiPoly& a,
                                       const Gf2BiPoly& b) {
  if (b.is_zero()) return std::nullopt;
  if (a.is_zero()) return Gf2BiPoly();
  const int da = a.degree_s(), db = b.degree_s();
  if (da < db) return std::nullopt;
  std::vector<Gf2Poly> rem(da + 1);
  for (int i = 0; i <= da; ++i) rem[i] = a.coeff_s(i);
  std::vector<Gf2Poly> quot(da - db + 1);
  const Gf2Poly& lb = b.coeff_s(db);
  for (int shift = da - db; shift >= 0; --shift) {
    Gf2Poly& cur = rem[shift + db];
    if (cur.is_zero()) continue;
    auto [q, r] = Gf2Poly::divmod(cur, lb);
    if (!r.is_zero()) return std::nullopt;
    cur = Gf2Poly();
    for (int i = 0; i < db; ++i) {
      if (!b.coeff_s(i).is_zero()) rem[shift + i] = rem[shift + i] + q * b.coeff_s(i);
    }
    quot[shift] = std::move(q);
  }
  for (const auto& c : rem) {
    if (!c.is_zero()) return std::nullopt;
  }
  return Gf2BiPoly(std::move(quot));
}

}  // namespace

namespace {

// --- arithmetic in GF(2^k) = GF(2)[t]/(u), u irreducible of degree k ---

Gf2Poly mod_reduce(const Gf2Poly& a, const Gf2Poly& u) {
  if (a.degree() < u.degree()) return a;
  return Gf2Poly::divmod(a, u).second;
}

Gf2Poly mod_mul(const Gf2Poly& a, const Gf2Poly& b, const Gf2Poly& u) {
  return mod_reduce(a * b, u);
}

Gf2Poly mod_inverse(const Gf2Poly& a, const Gf2Poly& u) {
  // Extended Euclid; u irreducible and a nonzero mod u, so the gcd is 1.
  Gf2Poly r0 = u, r1 = a, t0, t1 = Gf2Poly::one();
  while (!r1.is_zero()) {
    auto [q, r2] = Gf2Poly::divmod(r0, r1);
    Gf2Poly t2 = t0 + q * t1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  return mod_reduce(t0, u);
}

// t^(2^e) mod u by repeated squaring.
Gf2Poly frobenius_power(int e, const Gf2Poly& u) {
  Gf2Poly x = Gf2Poly::monomial(1);
  for (int i = 0; i < e; ++i) x = mod_mul(x, x, u);
  return x;
}

bool is_irreducible(const Gf2Poly& u) {
  const int k = u.degree();
  if (k <= 0) return false;
  // u irreducible iff t^(2^k) = t mod u and gcd(t^(2^(k/p)) - t, u) = 1
  // for every prime p dividing k.
  if (!(frobenius_power(k, u) == mod_reduce(Gf2Poly::monomial(1), u)))
    return false;
  int rest = k;
  for (int p = 2; p * p <= rest; ++p) {
    if (rest % p != 0) continue;
    while (rest % p == 0) rest /= p;
    Gf2Poly d = frobenius_power(k / p, u) + Gf2Poly::monomial(1);
    if (!Gf2Poly::gcd(d, u).is_one()) return false;
  }
  if (rest > 1 && rest < k) {
    Gf2Poly d = frobenius_power(k / rest, u) + Gf2Poly::monomial(1);
    if (!Gf2Poly::gcd(d, u).is_one()) return false;
  }
  return true;
}

// Smallest irreducible of degree k in a deterministic enumeration of the
// low-order bits; cached, guarded for concurrent use.
const Gf2Poly& irreducible_of_degree(int k) {
  static std::mutex mutex;
  static std::map<int, Gf2Poly> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(k);
  if (it != cache.end()) return it->second;
  for (std::uint64_t low = 1;; low += 2) {
    Gf2Poly cand = Gf2Poly::monomial(k) + Gf2Poly({low});
    if (is_irreducible(cand)) {
      return cache.emplace(k, cand).first->second;
    }
    if (low > (std::uint64_t{1} << 63)) break;
  }
  throw ResourceError("no irreducible polynomial found");  // unreachable
}

std::vector<Gf2Poly> image_mod(const Gf2BiPoly& f, const Gf2Poly& u) {
  std::vector<Gf2Poly> out(f.degree_s() + 1);
  for (int i = 0; i <= f.degree_s(); ++i)
    out[i] = mod_reduce(f.coeff_s(i), u);
  while (!out.empty() && out.back().is_zero()) out.pop_back();
  return out;
}

// Monic gcd of the images in GF(2^k)[s], by plain Euclid without
// coefficient swell.
std::vector<Gf2Poly> image_gcd(std::vector<Gf2Poly> f, std::vector<Gf2Poly> g,
                               const Gf2Poly& u) {
  if (f.size() < g.size()) std::swap(f, g);
  while (!g.empty()) {
    // Make g monic once, so each elimination step needs no inversion.
    Gf2Poly lg_inv = mod_inverse(g.back(), u);
    for (auto& c : g) c = mod_mul(c, lg_inv, u);
    while (f.size() >= g.size()) {
      Gf2Poly factor = f.back();
      std::size_t shift = f.size() - g.size();
      for (std::size_t i = 0; i + 1 < g.size(); ++i) {
        if (g[i].is_zero()) continue;
        f[shift + i] = f[shift + i] + mod_mul(factor, g[i], u);
      }
      f.pop_back();  // the leading term cancels exactly
      while (!f.empty() && f.back().is_zero()) f.pop_back();
    }
    std::swap(f, g);
  }
  return f;  // monic by construction
}

// Max t-degree over the s-coefficients.
int t_degree(const Gf2BiPoly& f) {
  int d = -1;
  for (int i = 0; i <= f.degree_s(); ++i)
    d = std::max(d, f.coeff_s(i).degree());
  return d;
}

std::optional<Gf2BiPoly> try_exact_div(const Gf2BiPoly& a,
                                       const Gf2BiPoly& b);

// Brown-style modular gcd of s-primitive inputs with positive s-degree:
// compute the monic gcd of the images over one large field GF(2^k),
// rescale by the leading-coefficient gcd so the true coefficients lift
// verbatim, and certify by exact division. Unlucky moduli (detected by a
// failed division) double k; for k beyond the resultant degree bound the
// image is provably correct, so the loop terminates.
Gf2BiPoly modular_primitive_gcd(const Gf2BiPoly& a, const Gf2BiPoly& b) {
  Gf2Poly gamma = Gf2Poly::gcd(a.coeff_s(a.degree_s()), b.coeff_s(b.degree_s()));
  const int bound = std::min(t_degree(a), t_degree(b)) + gamma.degree() + 1;
  const long certified = 2L * (static_cast<long>(a.degree_s()) * t_degree(b) +
                               static_cast<long>(b.degree_s()) * t_degree(a)) +
                         bound + 2;
  for (long k = std::max(2, bound);; k *= 2) {
    const Gf2Poly& u = irreducible_of_degree(static_cast<int>(k));
    std::vector<Gf2Poly> h = image_gcd(image_mod(a, u), image_mod(b, u), u);
    if (h.size() <= 1) return Gf2BiPoly::one();
    Gf2Poly gamma_img = mod_reduce(gamma, u);
    std::vector<Gf2Poly> lifted(h.size());
    for (std::size_t i = 0; i < h.size(); ++i)
      lifted[i] = mod_mul(h[i], gamma_img, u);
    Gf2BiPoly candidate = Gf2BiPoly(std::move(lifted)).primitive_part();
    if (try_exact_div(a, candidate) && try_exact_div(b, candidate))
      return candidate;
    if (k > certified)
      throw DomainError("internal: modular gcd failed beyond its bound");
  }
}

}  // namespace

Gf2BiPoly Gf2BiPoly::gcd(const Gf2BiPoly& a, const Gf2BiPoly& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.is_one() || b.is_one()) return one();
  Gf2Poly cont = Gf2Poly::gcd(a.content(), b.content());
  if (a.degree_s() == 0 || b.degree_s() == 0) {
    // The gcd divides an s-constant, so it is the content gcd.
    return constant(cont);
  }
  Gf2BiPoly pp = modular_primitive_gcd(a.primitive_part(), b.primitive_part());
  return constant(cont) * pp;
}

Gf2BiPoly Gf2BiPoly::exact_div(const Gf2BiPoly& a, const Gf2BiPoly& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  auto q = try_exact_div(a, b);
  if (!q) throw DomainError("inexact bivariate division");
  return *q;
}

std::vector<std::pair<int, int>> Gf2BiPoly::monomials() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i <= degree_s(); ++i) {
    for (int j = 0; j <= c_[i].degree(); ++j) {
      if (c_[i].coeff(j)) out.emplace_back(i, j);
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& m, const auto& n) {
    int dm = m.first + m.second, dn = n.first + n.second;
    if (dm != dn) return dm > dn;
    return m.first > n.first;
  });
  return out;
}

bool Gf2BiPoly::is_frobenius_square() const {
  for (int i = 0; i <= degree_s(); ++i) {
    if (c_[i].is_zero()) continue;
    if (i % 2 != 0) return false;
    for (int j = 0; j <= c_[i].degree(); ++j) {
      if (c_[i].coeff(j) && j % 2 != 0) return false;
    }
  }
  return true;
}

Gf2BiPoly Gf2BiPoly::frobenius_sqrt() const {
  if (!is_frobenius_square())
    throw DomainError("not a square in GF(2)[s,t]");
  Gf2BiPoly out;
  for (int i = 0; i <= degree_s(); ++i) {
    for (int j = 0; j <= c_[i].degree(); ++j) {
      if (c_[i].coeff(j)) out = out + monomial(i / 2, j / 2);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// F2RatFun

F2RatFun::F2RatFun(Gf2BiPoly num, Gf2BiPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DomainError("rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = Gf2BiPoly::one();
    return;
  }
  Gf2BiPoly g = Gf2BiPoly::gcd(num_, den_);
  if (!g.is_one()) {
    num_ = Gf2BiPoly::exact_div(num_, g);
    den_ = Gf2BiPoly::exact_div(den_, g);
  }
}

F2RatFun F2RatFun::one() { return from_poly(Gf2BiPoly::one()); }
F2RatFun F2RatFun::s() { return from_poly(Gf2BiPoly::monomial(1, 0)); }
F2RatFun F2RatFun::t() { return from_poly(Gf2BiPoly::monomial(0, 1)); }

F2RatFun F2RatFun::from_poly(const Gf2BiPoly& p) {
  F2RatFun out;
  out.num_ = p;
  out.den_ = Gf2BiPoly::one();
  return out;
}

F2RatFun F2RatFun::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero");
  F2RatFun out;
  out.num_ = den_;
  out.den_ = num_;
  return out;
}

F2RatFun operator+(const F2RatFun& x, const F2RatFun& y) {
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  if (x.den_.is_one() && y.den_.is_one())
    return F2RatFun::from_poly(x.num_ + y.num_);
  // Henrici addition: all gcd work happens on the shared denominator part
  // instead of the full product.
  Gf2BiPoly d = Gf2BiPoly::gcd(x.den_, y.den_);
  F2RatFun out;
  if (d.is_one()) {
    out.num_ = x.num_ * y.den_ + y.num_ * x.den_;
    out.den_ = x.den_ * y.den_;  // already in lowest terms
    if (out.num_.is_zero()) out.den_ = Gf2BiPoly::one();
    return out;
  }
  Gf2BiPoly xr = Gf2BiPoly::exact_div(x.den_, d);
  Gf2BiPoly yr = Gf2BiPoly::exact_div(y.den_, d);
  Gf2BiPoly t = x.num_ * yr + y.num_ * xr;
  if (t.is_zero()) return F2RatFun();
  Gf2BiPoly g2 = Gf2BiPoly::gcd(t, d);
  out.num_ = g2.is_one() ? std::move(t) : Gf2BiPoly::exact_div(t, g2);
  out.den_ = xr * (g2.is_one() ? y.den_ : Gf2BiPoly::exact_div(y.den_, g2));
  return out;
}

F2RatFun operator*(const F2RatFun& x, const F2RatFun& y) {
  if (x.is_zero() || y.is_zero()) return F2RatFun();
  // Cross-cancel so the final product is already reduced.
  Gf2BiPoly g1 = Gf2BiPoly::gcd(x.num_, y.den_);
  Gf2BiPoly g2 = Gf2BiPoly::gcd(y.num_, x.den_);
  F2RatFun out;
  out.num_ = Gf2BiPoly::exact_div(x.num_, g1) * Gf2BiPoly::exact_div(y.num_, g2);
  out.den_ = Gf2BiPoly::exact_div(x.den_, g2) * Gf2BiPoly::exact_div(y.den_, g1);
  return out;
}

F2RatFun operator/(const F2RatFun& x, const F2RatFun& y) {
  return x * y.inverse();
}

bool is_square(const F2RatFun& x) {
  return x.num().is_frobenius_square() && x.den().is_frobenius_square();
}

// ---------------------------------------------------------------------------
// Text form

namespace {

std::string monomial_str(int i, int j) {
  std::string out;
  if (i > 0) {
    out += "s";
    if (i > 1) out += "^" + std::to_string(i);
  }
  if (j > 0) {
    if (!out.empty()) out += "*";
    out += "t";
    if (j > 1) out += "^" + std::to_string(j);
  }
  if (out.empty()) out = "1";
  return out;
}

std::string poly_str(const Gf2BiPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [i, j] : p.monomials()) {
    if (!out.empty()) out += " + ";
    out += monomial_str(i, j);
  }
  return out;
}

bool multi_term(const Gf2BiPoly& p) { return p.monomials().size() > 1; }

// --- parser ---

struct PolyParser {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  char take() {
    skip_ws();
    if (pos >= text.size()) throw ConfigError("unexpected end of scalar");
    return text[pos++];
  }

  int parse_uint() {
    skip_ws();
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      throw ConfigError("expected a number in scalar literal");
    long v = 0;
    while (pos < text.size() &&
           std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = v * 10 + (text[pos] - '0');
      if (v > 1000000) throw ConfigError("exponent too large");
      ++pos;
    }
    return static_cast<int>(v);
  }

  // factor := 's'['^'k] | 't'['^'k] | uint | '(' poly ')'
  Gf2BiPoly parse_factor() {
    char c = peek();
    if (c == '(') {
      take();
      Gf2BiPoly p = parse_poly();
      if (take() != ')') throw ConfigError("missing ')' in scalar literal");
      return p;
    }
    if (c == 's' || c == 't') {
      take();
      int e = 1;
      if (peek() == '^') {
        take();
        e = parse_uint();
      }
      return c == 's' ? Gf2BiPoly::monomial(e, 0) : Gf2BiPoly::monomial(0, e);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      int v = parse_uint();
      return (v % 2 == 1) ? Gf2BiPoly::one() : Gf2BiPoly();
    }
    throw ConfigError("unexpected character in scalar literal");
  }

  // term := factor ('*' factor)*
  Gf2BiPoly parse_term() {
    Gf2BiPoly p = parse_factor();
    while (peek() == '*') {
      take();
      p = p * parse_factor();
    }
    return p;
  }

  // poly := term (('+'|'-') term)*   ('-' is '+' in characteristic two)
  Gf2BiPoly parse_poly() {
    Gf2BiPoly p = parse_term();
    while (peek() == '+' || peek() == '-') {
      take();
      p = p + parse_term();
    }
    return p;
  }
};

Gf2BiPoly parse_poly_string(std::string_view text) {
  PolyParser p{text};
  Gf2BiPoly out = p.parse_poly();
  if (!p.eof()) throw ConfigError("trailing characters in scalar literal");
  return out;
}

// Splits at a top-level '/', returning npos when there is none.
std::size_t top_level_slash(std::string_view text) {
  int depth = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '(') ++depth;
    if (text[i] == ')') --depth;
    if (text[i] == '/' && depth == 0) return i;
  }
  return std::string_view::npos;
}

Gf2BiPoly parse_fraction_side(std::string_view side) {
  Gf2BiPoly p = parse_poly_string(side);
  // A fraction side with several terms must be parenthesised, otherwise the
  // canonical form would not round-trip.
  std::string_view trimmed = side;
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.front())))
    trimmed.remove_prefix(1);
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back())))
    trimmed.remove_suffix(1);
  bool parenthesised = !trimmed.empty() && trimmed.front() == '(' &&
                       trimmed.back() == ')';
  if (multi_term(p) && !parenthesised)
    throw ConfigError("parenthesise multi-term numerator/denominator");
  return p;
}

}  // namespace

std::string F2RatFun::str() const {
  if (is_polynomial()) return poly_str(num_);
  std::string n = poly_str(num_), d = poly_str(den_);
  if (multi_term(num_)) n = "(" + n + ")";
  // The denominator also takes parentheses around a two-variable monomial,
  // so "1/(s*t)" cannot be misread as "(1/s)*t".
  if (multi_term(den_) || d.find('*') != std::string::npos) d = "(" + d + ")";
  return n + "/" + d;
}

F2RatFun F2RatFun::parse(std::string_view text) {
  std::size_t slash = top_level_slash(text);
  if (slash == std::string_view::npos) {
    return from_poly(parse_poly_string(text));
  }
  Gf2BiPoly num = parse_fraction_side(text.substr(0, slash));
  Gf2BiPoly den = parse_fraction_side(text.substr(slash + 1));
  if (den.is_zero()) throw ConfigError("zero denominator in scalar literal");
  return F2RatFun(num, den);
}

}  // namespace cliffpar
