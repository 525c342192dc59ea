#include "simspec/galois/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "simspec/error.hpp"
#include "simspec/galois/number_theory.hpp"

namespace simspec::galois {

namespace {

void check_same(const Polynomial& a, const Polynomial& b) {
  if (a.field() != b.field()) fail(ErrorKind::FieldMismatch, a.field().name() + " vs " + b.field().name());
}

}  // namespace

Polynomial::Polynomial(Field f, std::vector<Raw> coeffs) : f_(f), c_(std::move(coeffs)) { strip(); }

Polynomial::Polynomial(Field f, const std::vector<FieldElement>& coeffs) : f_(f) {
  c_.reserve(coeffs.size());
  for (const auto& e : coeffs) {
    if (e.field() != f) fail(ErrorKind::FieldMismatch, "coefficient outside " + f.name());
    c_.push_back(e.raw());
  }
  strip();
}

Polynomial Polynomial::constant(const FieldElement& c) { return Polynomial(c.field(), std::vector<Raw>{c.raw()}); }

Polynomial Polynomial::monomial(Field f, std::size_t degree, Raw coeff) {
  std::vector<Raw> c(degree + 1, 0);
  c[degree] = coeff;
  return Polynomial(f, std::move(c));
}

Polynomial Polynomial::linear_root(const FieldElement& r) {
  Field f = r.field();
  return Polynomial(f, std::vector<Raw>{f.neg(r.raw()), 1});
}

Polynomial Polynomial::binomial(unsigned k, const FieldElement& c) {
  Field f = c.field();
  std::vector<Raw> v(k + 1, 0);
  v[0] = f.neg(c.raw());
  v[k] = 1;
  return Polynomial(f, std::move(v));
}

void Polynomial::strip() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

std::vector<FieldElement> Polynomial::coeffs() const {
  std::vector<FieldElement> out;
  out.reserve(c_.size());
  for (Raw v : c_) out.emplace_back(f_, v);
  return out;
}

FieldElement Polynomial::coeff(std::size_t i) const { return {f_, i < c_.size() ? c_[i] : 0}; }

FieldElement Polynomial::leading() const {
  if (c_.empty()) fail(ErrorKind::ZeroPolynomial, "leading coefficient of zero");
  return {f_, c_.back()};
}

Polynomial Polynomial::monic() const {
  if (c_.empty()) return *this;
  Raw inv = f_.inv(c_.back());
  std::vector<Raw> out(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) out[i] = f_.mul(c_[i], inv);
  return Polynomial(f_, std::move(out));
}

Polynomial Polynomial::derivative() const {
  if (c_.size() <= 1) return Polynomial(f_);
  std::vector<Raw> out(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) out[i - 1] = f_.mul(c_[i], f_.from_int(static_cast<std::int64_t>(i % f_.characteristic())));
  return Polynomial(f_, std::move(out));
}

FieldElement Polynomial::eval(const FieldElement& x) const {
  if (x.field() != f_) fail(ErrorKind::FieldMismatch, "evaluation point outside " + f_.name());
  Raw acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = f_.add(f_.mul(acc, x.raw()), *it);
  return {f_, acc};
}

Polynomial Polynomial::map_frobenius(std::uint64_t q) const {
  std::vector<Raw> out(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) out[i] = frobenius_power(FieldElement(f_, c_[i]), q).raw();
  return Polynomial(f_, std::move(out));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  check_same(a, b);
  const Field f = a.f_;
  std::vector<Raw> out(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    Raw x = i < a.c_.size() ? a.c_[i] : 0;
    Raw y = i < b.c_.size() ? b.c_[i] : 0;
    out[i] = f.add(x, y);
  }
  return Polynomial(f, std::move(out));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  check_same(a, b);
  const Field f = a.f_;
  std::vector<Raw> out(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    Raw x = i < a.c_.size() ? a.c_[i] : 0;
    Raw y = i < b.c_.size() ? b.c_[i] : 0;
    out[i] = f.sub(x, y);
  }
  return Polynomial(f, std::move(out));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  check_same(a, b);
  const Field f = a.f_;
  if (a.c_.empty() || b.c_.empty()) return Polynomial(f);
  std::vector<Raw> out(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] = f.add(out[i + j], f.mul(a.c_[i], b.c_[j]));
  }
  return Polynomial(f, std::move(out));
}

Polynomial Polynomial::scaled(const FieldElement& c) const {
  if (c.field() != f_) fail(ErrorKind::FieldMismatch, "scalar outside " + f_.name());
  std::vector<Raw> out(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) out[i] = f_.mul(c_[i], c.raw());
  return Polynomial(f_, std::move(out));
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(f_.one());
  Polynomial base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

std::string Polynomial::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    if (c_[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    std::string coeff = FieldElement(f_, c_[i]).to_string();
    if (i == 0) {
      os << coeff;
    } else {
      if (c_[i] != 1) os << coeff << "*";
      os << "x";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& f, const Polynomial& g) {
  check_same(f, g);
  if (g.is_zero()) fail(ErrorKind::DivisionByZero, "polynomial division by zero");
  const Field F = f.field();
  std::vector<Raw> r = f.raw_coeffs();
  const auto& gc = g.raw_coeffs();
  const int dg = g.degree();
  if (f.degree() < dg) return {Polynomial(F), f};
  std::vector<Raw> q(f.degree() - dg + 1, 0);
  const Raw inv_lead = F.inv(gc.back());
  for (int i = f.degree(); i >= dg; --i) {
    Raw c = r[i];
    if (c == 0) continue;
    Raw t = F.mul(c, inv_lead);
    q[i - dg] = t;
    for (int j = 0; j <= dg; ++j) r[i - dg + j] = F.sub(r[i - dg + j], F.mul(t, gc[j]));
  }
  r.resize(dg);
  return {Polynomial(F, std::move(q)), Polynomial(F, std::move(r))};
}

Polynomial operator%(const Polynomial& f, const Polynomial& g) { return divmod(f, g).second; }

Polynomial gcd(const Polynomial& f, const Polynomial& g) {
  check_same(f, g);
  Polynomial a = f, b = g;
  while (!b.is_zero()) {
    Polynomial r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Polynomial exact_div(const Polynomial& f, const Polynomial& g) {
  auto [q, r] = divmod(f, g);
  if (!r.is_zero()) fail(ErrorKind::InvalidArgument, "inexact polynomial division");
  return q;
}

bool divides(const Polynomial& g, const Polynomial& f) { return (f % g).is_zero(); }

unsigned multiplicity(const Polynomial& g, const Polynomial& f) {
  if (g.is_constant()) fail(ErrorKind::InvalidArgument, "multiplicity of a constant");
  if (f.is_zero()) fail(ErrorKind::ZeroPolynomial, "multiplicity in the zero polynomial");
  unsigned e = 0;
  Polynomial cur = f;
  while (true) {
    auto [q, r] = divmod(cur, g);
    if (!r.is_zero()) return e;
    ++e;
    cur = std::move(q);
  }
}

Polynomial powmod(const Polynomial& base, std::uint64_t e, const Polynomial& m) {
  Polynomial result = Polynomial::constant(m.field().one()) % m;
  Polynomial b = base % m;
  while (e) {
    if (e & 1) result = (result * b) % m;
    e >>= 1;
    if (e) b = (b * b) % m;
  }
  return result;
}

bool is_squarefree(const Polynomial& f) {
  if (f.is_zero()) fail(ErrorKind::ZeroPolynomial, "squarefree test of zero");
  if (f.degree() == 0) return true;
  Polynomial d = f.derivative();
  // f' = 0 means f is a p-th power
  if (d.is_zero()) return false;
  return gcd(f, d).degree() == 0;
}

namespace {

// p-th root of a polynomial whose derivative vanishes: only exponents divisible
// by p occur and every coefficient has a unique p-th root in a finite field.
Polynomial pth_root(const Polynomial& f) {
  const Field F = f.field();
  const std::uint64_t p = F.characteristic();
  const std::uint64_t root_exp = F.size() / p;  // a^(q/p) is the p-th root
  const auto& c = f.raw_coeffs();
  std::vector<Raw> out(c.size() / p + 1, 0);
  for (std::size_t i = 0; i < c.size(); i += p) out[i / p] = F.pow(c[i], root_exp);
  return Polynomial(F, std::move(out));
}

void sqf_into(const Polynomial& f, unsigned scale, std::vector<std::pair<unsigned, Polynomial>>& out) {
  // Yun-style decomposition with the finite-characteristic correction.
  const std::uint64_t p = f.field().characteristic();
  if (f.degree() <= 0) return;
  Polynomial d = f.derivative();
  if (d.is_zero()) {
    sqf_into(pth_root(f), scale * static_cast<unsigned>(p), out);
    return;
  }
  Polynomial c = gcd(f, d);
  Polynomial w = exact_div(f, c);
  unsigned i = 1;
  while (w.degree() > 0) {
    Polynomial y = gcd(w, c);
    Polynomial z = exact_div(w, y);
    if (z.degree() > 0) out.emplace_back(i * scale, z.monic());
    ++i;
    w = y;
    c = exact_div(c, y);
  }
  if (c.degree() > 0) sqf_into(pth_root(c), scale * static_cast<unsigned>(p), out);
}

}  // namespace

std::vector<std::pair<unsigned, Polynomial>> squarefree_factorization(const Polynomial& f) {
  if (f.is_zero()) fail(ErrorKind::ZeroPolynomial, "squarefree factorization of zero");
  std::vector<std::pair<unsigned, Polynomial>> raw;
  sqf_into(f.monic(), 1, raw);
  // Parts from different recursion levels can share an exponent; merge them.
  std::sort(raw.begin(), raw.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::pair<unsigned, Polynomial>> out;
  for (auto& [e, g] : raw) {
    if (!out.empty() && out.back().first == e) {
      out.back().second = out.back().second * g;
    } else {
      out.emplace_back(e, g);
    }
  }
  return out;
}

Polynomial radical(const Polynomial& f) {
  Polynomial r = Polynomial::constant(f.field().one());
  for (const auto& [e, g] : squarefree_factorization(f)) r = r * g;
  return r;
}

namespace {

Polynomial x_poly(Field f) { return Polynomial::monomial(f, 1); }

// x^(p^j) mod m, for j = 0..count-1 applications of the p-th power map.
Polynomial frobenius_x(const Polynomial& m, unsigned count) {
  const std::uint64_t p = m.field().characteristic();
  Polynomial h = x_poly(m.field()) % m;
  for (unsigned i = 0; i < count; ++i) h = powmod(h, p, m);
  return h;
}

void split_distinct_linear(const Polynomial& g, std::vector<FieldElement>& out) {
  const Field F = g.field();
  if (g.degree() <= 0) return;
  if (g.degree() == 1) {
    out.emplace_back(F, F.neg(g.monic().raw_coeffs()[0]));
    return;
  }
  if (F.size() <= 64) {
    for (std::uint64_t r = 0; r < F.size(); ++r) {
      FieldElement e(F, r);
      if (g.eval(e).is_zero()) out.push_back(e);
    }
    return;
  }
  const Polynomial x = x_poly(F);
  for (std::uint64_t rank = 1; rank < F.size(); ++rank) {
    FieldElement c = F.element_at_rank(rank);
    Polynomial w(F);
    if (F.characteristic() == 2) {
      Polynomial y = x.scaled(c) % g;
      w = y;
      for (unsigned i = 1; i < F.degree(); ++i) {
        y = (y * y) % g;
        w = w + y;
      }
    } else {
      Polynomial shifted = x + Polynomial::constant(c);
      w = powmod(shifted, (F.size() - 1) / 2, g) - Polynomial::constant(F.one());
    }
    Polynomial d = gcd(g, w);
    if (d.degree() > 0 && d.degree() < g.degree()) {
      split_distinct_linear(d, out);
      split_distinct_linear(exact_div(g, d), out);
      return;
    }
  }
  fail(ErrorKind::InvalidArgument, "equal-degree splitting did not terminate");
}

}  // namespace

std::vector<FieldElement> roots_in_field(const Polynomial& f) {
  if (f.is_zero()) fail(ErrorKind::ZeroPolynomial, "roots of zero");
  if (f.degree() <= 0) return {};
  const Field F = f.field();
  Polynomial m = f.monic();
  Polynomial h = frobenius_x(m, F.degree());
  Polynomial g = gcd(m, h - x_poly(F));
  std::vector<FieldElement> out;
  split_distinct_linear(g, out);
  std::sort(out.begin(), out.end(), enumeration_less);
  return out;
}

bool is_irreducible(const Polynomial& f) {
  if (f.degree() <= 0) return false;
  if (f.degree() == 1) return true;
  const Field F = f.field();
  const auto n = static_cast<unsigned>(f.degree());
  Polynomial m = f.monic();
  const Polynomial x = x_poly(F);
  // x^(q^j) mod m with q = |F|, obtained from degree(F) p-th power steps each.
  auto qpow = [&](unsigned j) { return frobenius_x(m, F.degree() * j); };
  if (qpow(n) != x % m) return false;
  for (std::uint64_t r : prime_divisors(n)) {
    Polynomial h = qpow(n / static_cast<unsigned>(r));
    if (gcd(m, h - x).degree() != 0) return false;
  }
  return true;
}

}  // namespace simspec::galois
