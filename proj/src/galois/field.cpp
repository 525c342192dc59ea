#include "simspec/galois/field.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>

#include "simspec/error.hpp"
#include "simspec/galois/number_theory.hpp"
#include "simspec/galois/polynomial.hpp"

namespace simspec::galois {

namespace detail {

struct FieldData {
  std::uint64_t p = 0;
  unsigned k = 0;
  std::uint64_t size = 0;
  std::vector<std::uint64_t> modulus;
  std::vector<std::uint64_t> pw;  // p^i, i = 0..k
  unsigned __int128 modbits = 0;  // characteristic 2 only
  std::vector<std::uint64_t> order_primes;

  // log/antilog tables, present for small extension fields
  std::vector<std::uint32_t> exp;  // length 2(size-1)
  std::vector<std::uint32_t> log;  // length size

  mutable std::once_flag primitive_once;
  mutable Raw primitive = 0;

  bool char2() const { return p == 2; }
  bool tables() const { return !log.empty(); }
};

}  // namespace detail

namespace {

using detail::FieldData;
using u128 = unsigned __int128;

constexpr std::uint64_t kTableLimit = 1ULL << 20;

Raw slow_mul(const FieldData& d, Raw a, Raw b) {
  if (d.k == 1) return static_cast<Raw>(static_cast<u128>(a) * b % d.p);
  if (d.char2()) {
    u128 prod = 0;
    for (unsigned i = 0; i < d.k; ++i) {
      if ((b >> i) & 1) prod ^= static_cast<u128>(a) << i;
    }
    for (int i = 2 * static_cast<int>(d.k) - 2; i >= static_cast<int>(d.k); --i) {
      if ((prod >> i) & 1) prod ^= d.modbits << (i - d.k);
    }
    return static_cast<Raw>(prod);
  }
  std::array<std::uint64_t, 64> da{}, db{};
  std::array<std::uint64_t, 128> prod{};
  for (unsigned i = 0; i < d.k; ++i) {
    da[i] = a % d.p;
    a /= d.p;
    db[i] = b % d.p;
    b /= d.p;
  }
  for (unsigned i = 0; i < d.k; ++i) {
    if (!da[i]) continue;
    for (unsigned j = 0; j < d.k; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % d.p;
  }
  for (int i = 2 * static_cast<int>(d.k) - 2; i >= static_cast<int>(d.k); --i) {
    std::uint64_t c = prod[i];
    if (!c) continue;
    // x^k = -(m_0 + ... + m_{k-1} x^{k-1})
    for (unsigned j = 0; j < d.k; ++j) {
      std::uint64_t t = c * d.modulus[j] % d.p;
      std::size_t at = i - d.k + j;
      prod[at] = (prod[at] + d.p - t) % d.p;
    }
    prod[i] = 0;
  }
  Raw out = 0;
  for (int i = static_cast<int>(d.k) - 1; i >= 0; --i) out = out * d.p + prod[i];
  return out;
}

Raw slow_pow(const FieldData& d, Raw a, std::uint64_t e) {
  Raw r = 1;
  while (e) {
    if (e & 1) r = slow_mul(d, r, a);
    a = slow_mul(d, a, a);
    e >>= 1;
  }
  return r;
}

std::uint64_t slow_order(const FieldData& d, Raw a) {
  std::uint64_t n = d.size - 1;
  for (std::uint64_t r : d.order_primes) {
    while (n % r == 0 && slow_pow(d, a, n / r) == 1) n /= r;
  }
  return n;
}

Raw rank_to_raw(const FieldData& d, std::uint64_t rank) {
  // rank digits are (c_0, ..., c_{k-1}) with c_0 most significant
  std::vector<std::uint64_t> c(d.k);
  for (int i = static_cast<int>(d.k) - 1; i >= 0; --i) {
    c[i] = rank % d.p;
    rank /= d.p;
  }
  Raw out = 0;
  for (int i = static_cast<int>(d.k) - 1; i >= 0; --i) out = out * d.p + c[i];
  return out;
}

Raw find_primitive(const FieldData& d) {
  if (d.size == 2) return 1;
  for (std::uint64_t rank = 1; rank < d.size; ++rank) {
    Raw a = rank_to_raw(d, rank);
    if (a != 0 && slow_order(d, a) == d.size - 1) return a;
  }
  fail(ErrorKind::InvalidArgument, "no primitive element found");
}

void build_tables(FieldData& d) {
  Raw g = find_primitive(d);
  std::uint64_t n = d.size - 1;
  d.exp.assign(2 * n, 0);
  d.log.assign(d.size, 0);
  Raw x = 1;
  for (std::uint64_t i = 0; i < n; ++i) {
    d.exp[i] = static_cast<std::uint32_t>(x);
    d.exp[i + n] = static_cast<std::uint32_t>(x);
    d.log[x] = static_cast<std::uint32_t>(i);
    x = slow_mul(d, x, g);
  }
  std::call_once(d.primitive_once, [&] { d.primitive = g; });
}

std::vector<std::uint64_t> find_modulus(std::uint64_t p, unsigned k) {
  if (k == 1) return {0, 1};
  Field fp = make_field(p, 1);
  std::uint64_t count = *checked_pow(p, k);
  std::vector<Raw> c(k + 1, 0);
  c[k] = 1;
  for (std::uint64_t rank = 0; rank < count; ++rank) {
    std::uint64_t r = rank;
    for (int i = static_cast<int>(k) - 1; i >= 0; --i) {
      c[i] = r % p;
      r /= p;
    }
    if (c[0] == 0) continue;
    Polynomial f(fp, c);
    if (is_irreducible(f)) return {c.begin(), c.end()};
  }
  fail(ErrorKind::InvalidArgument, "no irreducible polynomial found");
}

struct Registry {
  std::mutex mu;
  std::map<std::pair<std::uint64_t, unsigned>, std::unique_ptr<FieldData>> fields;
  std::map<std::pair<const FieldData*, const FieldData*>, Raw> embeddings;
};

Registry& registry() {
  static Registry r;
  return r;
}

void check_same(const Field& a, const Field& b) {
  if (a != b) fail(ErrorKind::FieldMismatch, a.name() + " vs " + b.name());
}

}  // namespace

Field make_field(std::uint64_t p, unsigned k, std::optional<Field> parent) {
  if (!is_prime(p)) fail(ErrorKind::CompositeCharacteristic, std::to_string(p) + " is not prime");
  if (k < 1) fail(ErrorKind::DegreeZero, "extension degree must be positive");
  auto size = checked_pow(p, k);
  if (!size) fail(ErrorKind::FieldTooLarge, "GF(" + std::to_string(p) + "^" + std::to_string(k) + ")");
  if (parent) {
    if (parent->characteristic() != p || k % parent->degree() != 0) {
      fail(ErrorKind::FieldMismatch, parent->name() + " is not a subfield of GF(" + std::to_string(p) + "^" +
                                         std::to_string(k) + ")");
    }
  }

  Registry& reg = registry();
  {
    std::lock_guard lock(reg.mu);
    auto it = reg.fields.find({p, k});
    if (it != reg.fields.end()) {
      Field f(it->second.get());
      if (parent) (void)embed(parent->one(), f);
      return f;
    }
  }

  // Built outside the lock; a concurrent builder produces the identical field
  // and the first insertion wins.
  auto d = std::make_unique<FieldData>();
  d->p = p;
  d->k = k;
  d->size = *size;
  d->modulus = find_modulus(p, k);
  d->pw.resize(k + 1);
  d->pw[0] = 1;
  for (unsigned i = 1; i <= k; ++i) d->pw[i] = d->pw[i - 1] * p;
  if (p == 2) {
    for (unsigned i = 0; i <= k; ++i) {
      if (d->modulus[i]) d->modbits |= static_cast<u128>(1) << i;
    }
  }
  d->order_primes = prime_divisors(*size - 1 == 0 ? 1 : *size - 1);
  if (k > 1 && *size <= kTableLimit) build_tables(*d);

  Field out;
  {
    std::lock_guard lock(reg.mu);
    auto [it, inserted] = reg.fields.try_emplace({p, k}, std::move(d));
    out = Field(it->second.get());
  }
  if (parent) (void)embed(parent->one(), out);
  return out;
}

Field field_of_size(std::uint64_t q) {
  if (q < 2) fail(ErrorKind::InvalidArgument, "field size must be at least 2");
  for (std::uint64_t p : prime_divisors(q)) {
    if (auto e = exact_log(q, p)) return make_field(p, *e);
  }
  fail(ErrorKind::InvalidArgument, std::to_string(q) + " is not a prime power");
}

std::uint64_t Field::characteristic() const { return d_->p; }
unsigned Field::degree() const { return d_->k; }
std::uint64_t Field::size() const { return d_->size; }
const std::vector<std::uint64_t>& Field::modulus() const { return d_->modulus; }

std::string Field::name() const {
  if (!d_) return "GF(?)";
  return "GF(" + std::to_string(d_->size) + ")";
}

Raw Field::add(Raw a, Raw b) const {
  const FieldData& d = *d_;
  if (d.char2()) return a ^ b;
  if (d.k == 1) {
    Raw s = a + b;
    return s >= d.p ? s - d.p : s;
  }
  Raw out = 0;
  for (unsigned i = 0; i < d.k; ++i) {
    std::uint64_t s = a % d.p + b % d.p;
    if (s >= d.p) s -= d.p;
    out += s * d.pw[i];
    a /= d.p;
    b /= d.p;
  }
  return out;
}

Raw Field::neg(Raw a) const {
  const FieldData& d = *d_;
  if (d.char2()) return a;
  if (d.k == 1) return a == 0 ? 0 : d.p - a;
  Raw out = 0;
  for (unsigned i = 0; i < d.k; ++i) {
    std::uint64_t c = a % d.p;
    out += (c == 0 ? 0 : d.p - c) * d.pw[i];
    a /= d.p;
  }
  return out;
}

Raw Field::sub(Raw a, Raw b) const { return add(a, neg(b)); }

Raw Field::mul(Raw a, Raw b) const {
  const FieldData& d = *d_;
  if (a == 0 || b == 0) return 0;
  if (d.tables()) return d.exp[d.log[a] + d.log[b]];
  return slow_mul(d, a, b);
}

Raw Field::inv(Raw a) const {
  const FieldData& d = *d_;
  if (a == 0) fail(ErrorKind::DivisionByZero, "inverse of zero in " + name());
  if (d.tables()) {
    std::uint64_t n = d.size - 1;
    return d.exp[(n - d.log[a]) % n];
  }
  return slow_pow(d, a, d.size - 2);
}

Raw Field::pow(Raw a, std::uint64_t e) const {
  const FieldData& d = *d_;
  if (e == 0) return 1;
  if (a == 0) return 0;
  if (d.tables()) {
    std::uint64_t n = d.size - 1;
    return d.exp[static_cast<std::uint64_t>(static_cast<u128>(d.log[a]) * (e % n) % n)];
  }
  return slow_pow(d, a, e % (d.size - 1) == 0 ? d.size - 1 : e % (d.size - 1));
}

Raw Field::pow_signed(Raw a, std::int64_t e) const {
  if (e >= 0) return pow(a, static_cast<std::uint64_t>(e));
  Raw ia = inv(a);
  // -e without overflow for INT64_MIN
  return pow(ia, static_cast<std::uint64_t>(-(e + 1)) + 1);
}

Raw Field::from_int(std::int64_t n) const {
  const auto p = static_cast<std::int64_t>(d_->p);
  std::int64_t r = n % p;
  if (r < 0) r += p;
  return static_cast<Raw>(r);
}

std::vector<std::uint64_t> Field::coeffs(Raw a) const {
  std::vector<std::uint64_t> c(d_->k);
  for (unsigned i = 0; i < d_->k; ++i) {
    c[i] = a % d_->p;
    a /= d_->p;
  }
  return c;
}

Raw Field::pack(std::span<const std::uint64_t> c) const {
  if (c.size() > d_->k) fail(ErrorKind::InvalidArgument, "too many coefficients for " + name());
  Raw out = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] >= d_->p) fail(ErrorKind::InvalidArgument, "coefficient out of range for " + name());
    out += c[i] * d_->pw[i];
  }
  return out;
}

std::uint64_t Field::rank_of(Raw a) const {
  std::uint64_t rank = 0;
  auto c = coeffs(a);
  for (unsigned i = 0; i < d_->k; ++i) rank = rank * d_->p + c[i];
  return rank;
}

Raw Field::at_rank(std::uint64_t rank) const {
  if (rank >= d_->size) fail(ErrorKind::InvalidArgument, "rank out of range");
  return rank_to_raw(*d_, rank);
}

FieldElement Field::zero() const { return {*this, 0}; }
FieldElement Field::one() const { return {*this, 1}; }

FieldElement Field::element(Raw packed) const {
  if (packed >= d_->size) fail(ErrorKind::InvalidArgument, "packed value out of range for " + name());
  return {*this, packed};
}

FieldElement Field::from_coeffs(std::span<const std::uint64_t> c) const { return {*this, pack(c)}; }
FieldElement Field::from_integer(std::int64_t n) const { return {*this, from_int(n)}; }
FieldElement Field::element_at_rank(std::uint64_t rank) const { return {*this, at_rank(rank)}; }

FieldElement FieldElement::pow(std::int64_t e) const {
  if (e < 0 && v_ == 0) fail(ErrorKind::DivisionByZero, "negative power of zero");
  return {f_, f_.pow_signed(v_, e)};
}

FieldElement FieldElement::inverse() const { return {f_, f_.inv(v_)}; }

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  check_same(a.f_, b.f_);
  return {a.f_, a.f_.add(a.v_, b.v_)};
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  check_same(a.f_, b.f_);
  return {a.f_, a.f_.sub(a.v_, b.v_)};
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  check_same(a.f_, b.f_);
  return {a.f_, a.f_.mul(a.v_, b.v_)};
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  check_same(a.f_, b.f_);
  return {a.f_, a.f_.mul(a.v_, a.f_.inv(b.v_))};
}

std::string FieldElement::to_string() const {
  if (!f_.valid()) return "?";
  if (f_.degree() == 1) return std::to_string(v_);
  std::ostringstream os;
  os << '[';
  auto c = coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
  os << ']';
  return os.str();
}

bool enumeration_less(const FieldElement& a, const FieldElement& b) {
  check_same(a.field(), b.field());
  return a.field().rank_of(a.raw()) < b.field().rank_of(b.raw());
}

std::uint64_t element_order(const FieldElement& a) {
  if (a.is_zero()) fail(ErrorKind::ZeroElement, "order of zero");
  const FieldData& d = *a.field().data();
  std::uint64_t n = d.size - 1;
  for (std::uint64_t r : d.order_primes) {
    while (n % r == 0 && a.field().pow(a.raw(), n / r) == 1) n /= r;
  }
  return n;
}

FieldElement primitive_element(Field f) {
  const FieldData& d = *f.data();
  std::call_once(d.primitive_once, [&] { d.primitive = find_primitive(d); });
  return {f, d.primitive};
}

FieldElement frobenius_power(const FieldElement& a, std::uint64_t q) {
  if (!exact_log(q, a.field().characteristic())) {
    fail(ErrorKind::BadFrobeniusBase, std::to_string(q) + " is not a power of the characteristic");
  }
  return {a.field(), a.field().pow(a.raw(), q)};
}

bool in_subfield(const FieldElement& a, std::uint64_t q) { return frobenius_power(a, q) == a; }

namespace {

Raw embedding_root(Field from, Field to) {
  Registry& reg = registry();
  {
    std::lock_guard lock(reg.mu);
    auto it = reg.embeddings.find({from.data(), to.data()});
    if (it != reg.embeddings.end()) return it->second;
  }
  std::vector<Raw> c;
  for (std::uint64_t m : from.modulus()) c.push_back(to.from_int(static_cast<std::int64_t>(m)));
  auto roots = roots_in_field(Polynomial(to, c));
  if (roots.empty()) fail(ErrorKind::FieldMismatch, "no embedding of " + from.name() + " into " + to.name());
  Raw r = roots.front().raw();
  std::lock_guard lock(reg.mu);
  reg.embeddings.try_emplace({from.data(), to.data()}, r);
  return reg.embeddings.at({from.data(), to.data()});
}

void require_subfield(Field from, Field to) {
  if (from.characteristic() != to.characteristic() || to.degree() % from.degree() != 0) {
    fail(ErrorKind::FieldMismatch, from.name() + " does not embed in " + to.name());
  }
}

}  // namespace

FieldElement embed(const FieldElement& a, Field target) {
  Field from = a.field();
  if (from == target) return a;
  require_subfield(from, target);
  if (from.degree() == 1) return target.from_integer(static_cast<std::int64_t>(a.raw()));
  Raw r = embedding_root(from, target);
  auto c = a.coeffs();
  Raw acc = 0;
  for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) {
    acc = target.add(target.mul(acc, r), target.from_int(static_cast<std::int64_t>(c[i])));
  }
  return {target, acc};
}

FieldElement restrict_to(const FieldElement& a, Field sub) {
  Field big = a.field();
  if (big == sub) return a;
  require_subfield(sub, big);
  const std::uint64_t p = big.characteristic();
  const unsigned ks = sub.degree(), kb = big.degree();
  if (!in_subfield(a, sub.size())) fail(ErrorKind::FieldMismatch, "element not in " + sub.name());
  // Solve sum_i c_i r^i = a over GF(p): kb equations, ks unknowns.
  Raw r = ks == 1 ? 1 : embedding_root(sub, big);
  std::vector<std::vector<std::uint64_t>> rows(kb, std::vector<std::uint64_t>(ks + 1));
  Raw power = 1;
  for (unsigned j = 0; j < ks; ++j) {
    auto col = big.coeffs(power);
    for (unsigned i = 0; i < kb; ++i) rows[i][j] = col[i];
    power = big.mul(power, r);
  }
  auto rhs = a.coeffs();
  for (unsigned i = 0; i < kb; ++i) rows[i][ks] = rhs[i];
  auto inv_mod = [&](std::uint64_t x) { return make_field(p, 1).inv(x); };
  unsigned prow = 0;
  std::vector<int> pivot_of(ks, -1);
  for (unsigned col = 0; col < ks && prow < kb; ++col) {
    unsigned sel = prow;
    while (sel < kb && rows[sel][col] == 0) ++sel;
    if (sel == kb) continue;
    std::swap(rows[sel], rows[prow]);
    std::uint64_t iv = inv_mod(rows[prow][col]);
    for (auto& v : rows[prow]) v = static_cast<std::uint64_t>(static_cast<u128>(v) * iv % p);
    for (unsigned i = 0; i < kb; ++i) {
      if (i == prow || rows[i][col] == 0) continue;
      std::uint64_t m = rows[i][col];
      for (unsigned j = 0; j <= ks; ++j) {
        std::uint64_t t = static_cast<std::uint64_t>(static_cast<u128>(m) * rows[prow][j] % p);
        rows[i][j] = (rows[i][j] + p - t) % p;
      }
    }
    pivot_of[col] = static_cast<int>(prow);
    ++prow;
  }
  std::vector<std::uint64_t> c(ks, 0);
  for (unsigned j = 0; j < ks; ++j) {
    if (pivot_of[j] >= 0) c[j] = rows[pivot_of[j]][ks];
  }
  FieldElement out = sub.from_coeffs(c);
  if (embed(out, big) != a) fail(ErrorKind::FieldMismatch, "element not in the image of " + sub.name());
  return out;
}

namespace {

constexpr std::uint64_t kExhaustiveRootLimit = 1ULL << 16;

FieldElement lift_into(const FieldElement& a, Field ambient) {
  if (a.field() == ambient) return a;
  return embed(a, ambient);
}

}  // namespace

std::vector<FieldElement> all_kth_roots_by_gcd(const FieldElement& a, unsigned k, Field ambient) {
  if (k == 0) fail(ErrorKind::InvalidArgument, "root index must be positive");
  FieldElement b = lift_into(a, ambient);
  if (k == 1) return {b};
  return roots_in_field(Polynomial::binomial(k, b));
}

std::vector<FieldElement> all_kth_roots(const FieldElement& a, unsigned k, Field ambient) {
  if (k == 0) fail(ErrorKind::InvalidArgument, "root index must be positive");
  FieldElement b = lift_into(a, ambient);
  if (k == 1) return {b};
  if (ambient.size() > kExhaustiveRootLimit) return all_kth_roots_by_gcd(b, k, ambient);
  std::vector<FieldElement> out;
  for (std::uint64_t rank = 0; rank < ambient.size(); ++rank) {
    Raw r = ambient.at_rank(rank);
    if (ambient.pow(r, k) == b.raw()) out.emplace_back(ambient, r);
  }
  return out;
}

}  // namespace simspec::galois
