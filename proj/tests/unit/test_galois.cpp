#include <random>
#include <set>

#include "doctest.h"
#include "simspec/error.hpp"
#include "simspec/galois/field.hpp"
#include "simspec/galois/serialize.hpp"
#include "simspec/galois/number_theory.hpp"
#include "simspec/galois/polynomial.hpp"

using namespace simspec;
using namespace simspec::galois;

namespace {

Polynomial poly(Field f, std::vector<std::int64_t> c) {
  std::vector<Raw> r;
  for (auto v : c) r.push_back(f.from_int(v));
  return Polynomial(f, r);
}

// Order by repeated multiplication, independent of the library's prime-divisor route.
std::uint64_t naive_order(const FieldElement& a) {
  FieldElement x = a;
  std::uint64_t n = 1;
  while (!x.is_one()) {
    x *= a;
    ++n;
  }
  return n;
}

Polynomial random_poly(Field f, int deg, std::mt19937_64& rng) {
  std::vector<Raw> c(deg + 1);
  for (auto& v : c) v = rng() % f.size();
  c.back() = 1 + rng() % (f.size() - 1);
  return Polynomial(f, c);
}

}  // namespace

TEST_CASE("make_field canonical moduli") {
  Field f7 = make_field(7, 1);
  CHECK(f7.modulus() == std::vector<std::uint64_t>{0, 1});
  Field f16 = make_field(2, 4);
  CHECK(f16.size() == 16);
  // x^4+x^3+1: (1,0,0,1,1) precedes (1,1,0,0,1) low degree first
  CHECK(f16.modulus() == std::vector<std::uint64_t>{1, 0, 0, 1, 1});
  CHECK(make_field(2, 4) == f16);
  CHECK(field_of_size(16) == f16);

  Field f4096 = make_field(2, 12, f16);
  CHECK(f4096.size() == 4096);
  CHECK(f4096.degree() == 12);

  CHECK_THROWS_AS(make_field(6, 1), Error);
  try {
    make_field(6, 1);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::CompositeCharacteristic);
  }
  try {
    make_field(5, 0);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DegreeZero);
  }
  try {
    make_field(2, 6, make_field(2, 4));
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::FieldMismatch);
  }
}

TEST_CASE("canonical modulus is the smallest irreducible by brute force") {
  for (auto [p, k] : std::vector<std::pair<std::uint64_t, unsigned>>{{2, 2}, {2, 3}, {2, 5}, {3, 2}, {3, 3}, {5, 2}, {7, 2}}) {
    Field base = make_field(p, 1);
    Field f = make_field(p, k);
    // low degree first lexicographic = enumerate constant term slowest
    std::vector<std::uint64_t> best;
    std::uint64_t total = 1;
    for (unsigned i = 0; i < k; ++i) total *= p;
    std::vector<std::vector<std::uint64_t>> cands;
    for (std::uint64_t n = 0; n < total; ++n) {
      std::vector<std::uint64_t> c(k + 1, 0);
      std::uint64_t m = n;
      for (unsigned i = 0; i < k; ++i) {
        c[i] = m % p;
        m /= p;
      }
      c[k] = 1;
      cands.push_back(c);
    }
    std::sort(cands.begin(), cands.end());
    for (const auto& c : cands) {
      // irreducible iff no root and no factor, checked by trial division of all monic lower degree polys
      std::vector<Raw> cr(c.begin(), c.end());
      Polynomial g(base, cr);
      bool irreducible = true;
      for (unsigned d = 1; d <= k / 2 && irreducible; ++d) {
        std::uint64_t cnt = 1;
        for (unsigned i = 0; i < d; ++i) cnt *= p;
        for (std::uint64_t n = 0; n < cnt; ++n) {
          std::vector<Raw> h(d + 1, 0);
          std::uint64_t m = n;
          for (unsigned i = 0; i < d; ++i) {
            h[i] = m % p;
            m /= p;
          }
          h[d] = 1;
          if ((g % Polynomial(base, h)).is_zero()) {
            irreducible = false;
            break;
          }
        }
      }
      if (irreducible) {
        best = c;
        break;
      }
    }
    CHECK(f.modulus() == best);
  }
}

TEST_CASE("field arithmetic examples") {
  Field f7 = make_field(7, 1);
  auto e = [&](int v) { return f7.from_integer(v); };
  CHECK(e(3) * e(5) == e(1));
  CHECK(e(3).inverse() == e(5));
  CHECK(e(3).pow(-1) == e(5));
  CHECK(e(3).pow(-2) == e(4));
  CHECK_THROWS_AS(e(1) / e(0), Error);
  Field f16 = make_field(2, 4);
  for (Raw a = 0; a < 16; ++a) CHECK(f16.pow(a, 16) == a);
  Field f9 = make_field(3, 2);
  CHECK_THROWS_AS(f9.one() + f7.one(), Error);
}

TEST_CASE("element order and primitive element") {
  Field f7 = make_field(7, 1);
  CHECK(element_order(f7.from_integer(3)) == 6);
  CHECK(element_order(f7.one()) == 1);
  CHECK_THROWS_AS(element_order(f7.zero()), Error);
  CHECK(primitive_element(f7) == f7.from_integer(3));
  CHECK(primitive_element(make_field(2, 1)) == make_field(2, 1).one());

  for (std::uint64_t q : {4ULL, 8ULL, 9ULL, 16ULL, 25ULL, 27ULL, 49ULL, 64ULL, 121ULL, 256ULL}) {
    Field f = field_of_size(q);
    // enumeration oracle: first element in rank order whose naive order is q-1
    FieldElement first;
    for (std::uint64_t r = 1; r < q; ++r) {
      FieldElement a = f.element_at_rank(r);
      if (naive_order(a) == q - 1) {
        first = a;
        break;
      }
    }
    CHECK(primitive_element(f) == first);
    for (Raw a = 1; a < q; ++a) {
      FieldElement x(f, a);
      CHECK(element_order(x) == naive_order(x));
      CHECK((q - 1) % element_order(x) == 0);
      CHECK(x.pow(static_cast<std::int64_t>(q - 1)).is_one());
    }
  }
}

TEST_CASE("enumeration rank") {
  Field f9 = make_field(3, 2);
  // (c0, c1) with c0 most significant
  CHECK(f9.at_rank(1) == f9.pack(std::vector<std::uint64_t>{0, 1}));
  CHECK(f9.at_rank(3) == f9.pack(std::vector<std::uint64_t>{1, 0}));
  for (std::uint64_t r = 0; r < 9; ++r) CHECK(f9.rank_of(f9.at_rank(r)) == r);
}

TEST_CASE("frobenius") {
  Field f16 = make_field(2, 4);
  for (Raw a = 0; a < 16; ++a) CHECK(frobenius_power(FieldElement(f16, a), 16) == FieldElement(f16, a));
  Field f7 = make_field(7, 1);
  CHECK(frobenius_power(f7.from_integer(3), 7) == f7.from_integer(3));
  CHECK_THROWS_AS(frobenius_power(f7.from_integer(3), 6), Error);

  // q = 4, GF(64): y1 of order 63, two q-Frobenius steps give y1^{q^2}
  Field f64 = make_field(2, 6);
  FieldElement y1 = primitive_element(f64);
  CHECK(frobenius_power(frobenius_power(y1, 4), 4) == y1.pow(16));
  CHECK(frobenius_power(y1, 64) == y1);
}

TEST_CASE("all_kth_roots") {
  Field f7 = make_field(7, 1);
  auto r = all_kth_roots(f7.from_integer(6), 3, f7);
  REQUIRE(r.size() == 3);
  CHECK(r[0] == f7.from_integer(3));
  CHECK(r[1] == f7.from_integer(5));
  CHECK(r[2] == f7.from_integer(6));
  CHECK(all_kth_roots(f7.from_integer(3), 2, f7).empty());
  Field f49 = make_field(7, 2);
  auto s = all_kth_roots(f7.from_integer(3), 2, f49);
  REQUIRE(s.size() == 2);
  CHECK(s[0] == -s[1]);
  CHECK(s[0] * s[0] == embed(f7.from_integer(3), f49));
  CHECK(all_kth_roots(f7.from_integer(4), 1, f7) == std::vector<FieldElement>{f7.from_integer(4)});

  // the two strategies agree
  for (std::uint64_t q : {7ULL, 16ULL, 49ULL, 64ULL, 81ULL, 1024ULL}) {
    Field f = field_of_size(q);
    for (Raw a = 0; a < std::min<std::uint64_t>(q, 80); ++a) {
      for (unsigned k : {2u, 3u}) {
        auto x = all_kth_roots(FieldElement(f, a), k, f);
        auto y = all_kth_roots_by_gcd(FieldElement(f, a), k, f);
        CHECK(x == y);
        CHECK(x.size() <= k);
        if (a != 0 && (q - 1) % k == 0 && !x.empty() && !(k == 2 && q % 2 == 0)) CHECK(x.size() == k);
      }
    }
  }
  // large field goes through the gcd route
  Field big = make_field(2, 20);
  FieldElement g = primitive_element(big);
  auto cube = all_kth_roots(g.pow(3), 3, big);
  CHECK(cube.size() == 3);  // 3 | 2^20 - 1
  for (auto& c : cube) CHECK(c.pow(3) == g.pow(3));
}

TEST_CASE("embedding is a ring homomorphism") {
  std::mt19937_64 rng(7);
  for (auto [sub, sup] : std::vector<std::pair<std::uint64_t, std::uint64_t>>{{4, 16}, {16, 4096}, {4, 64}, {8, 64}, {9, 729}, {5, 25}, {16, 256}}) {
    Field a = field_of_size(sub), b = field_of_size(sup);
    for (int i = 0; i < 50; ++i) {
      FieldElement x(a, rng() % sub), y(a, rng() % sub);
      CHECK(embed(x + y, b) == embed(x, b) + embed(y, b));
      CHECK(embed(x * y, b) == embed(x, b) * embed(y, b));
      CHECK(restrict_to(embed(x, b), a) == x);
      CHECK(in_subfield(embed(x, b), sub));
    }
  }
}

TEST_CASE("polynomial examples") {
  Field f7 = make_field(7, 1);
  Polynomial g = gcd(poly(f7, {2, -3, 1}), poly(f7, {3, -4, 1}));
  CHECK(g == poly(f7, {-1, 1}));
  Field f2 = make_field(2, 1);
  CHECK(poly(f2, {0, 0, 0, 1}).derivative() == poly(f2, {0, 0, 1}));
  CHECK(poly(f2, {0, 0, 1, 0, 1}).derivative().is_zero());
  CHECK_FALSE(is_squarefree(poly(f7, {1, -2, 1})));
  CHECK(is_squarefree(poly(f2, {1, 1, 1})));
  CHECK_FALSE(is_squarefree(poly(f2, {0, 0, 1, 0, 1})));
  CHECK_THROWS_AS(is_squarefree(Polynomial(f2)), Error);
  CHECK_THROWS_AS(divmod(poly(f7, {1, 1}), Polynomial(f7)), Error);

  auto [q, r] = divmod(poly(f7, {1, 2, 3, 4}), poly(f7, {5, 1}));
  CHECK(q * poly(f7, {5, 1}) + r == poly(f7, {1, 2, 3, 4}));
  CHECK(r.degree() < 1);
}

TEST_CASE("random gcd properties") {
  std::mt19937_64 rng(11);
  for (std::uint64_t q : {2ULL, 7ULL, 16ULL, 25ULL}) {
    Field f = field_of_size(q);
    for (int i = 0; i < 40; ++i) {
      Polynomial a = random_poly(f, 1 + rng() % 6, rng);
      Polynomial b = random_poly(f, 1 + rng() % 6, rng);
      Polynomial c = random_poly(f, rng() % 4, rng);
      Polynomial fa = a * c, fb = b * c;
      Polynomial g = gcd(fa, fb);
      CHECK(g.is_monic());
      CHECK(divides(g, fa));
      CHECK(divides(g, fb));
      CHECK(divides(c.monic(), g));
      CHECK((a * b).degree() == a.degree() + b.degree());
      if (c.degree() > 0) CHECK_FALSE(is_squarefree(fa * fb));
    }
  }
}

TEST_CASE("squarefree factorization and radical") {
  Field f2 = make_field(2, 1);
  Polynomial x = Polynomial::monomial(f2, 1);
  Polynomial x1 = poly(f2, {1, 1});
  Polynomial t = poly(f2, {1, 1, 1});
  Polynomial f = x * x1.pow(2) * t.pow(4) * x.pow(2);  // x^3 (x+1)^2 (x^2+x+1)^4
  auto sf = squarefree_factorization(f);
  Polynomial rebuilt = Polynomial::constant(f2.one());
  for (auto& [e, g] : sf) {
    CHECK(is_squarefree(g));
    rebuilt = rebuilt * g.pow(e);
  }
  CHECK(rebuilt == f);
  CHECK(radical(f) == x * x1 * t);
  CHECK(multiplicity(t, f) == 4);
  CHECK(multiplicity(x, f) == 3);

  Field f16 = make_field(2, 4);
  Polynomial g = Polynomial::binomial(3, primitive_element(f16)).pow(6) * Polynomial::monomial(f16, 1);
  Polynomial rg = Polynomial::constant(f16.one());
  for (auto& [e, h] : squarefree_factorization(g)) rg = rg * h.pow(e);
  CHECK(rg == g);
  CHECK(radical(g).degree() == 4);
}

TEST_CASE("roots and irreducibility") {
  Field f16 = make_field(2, 4);
  Polynomial all = Polynomial::monomial(f16, 16) - Polynomial::monomial(f16, 1);
  CHECK(roots_in_field(all).size() == 16);
  CHECK(is_irreducible(poly(make_field(2, 1), {1, 1, 0, 0, 1})));
  CHECK_FALSE(is_irreducible(poly(make_field(2, 1), {1, 0, 0, 0, 1})));
  CHECK(is_irreducible(poly(make_field(3, 1), {1, 0, 1})));
  CHECK(roots_in_field(Polynomial::binomial(2, make_field(7, 1).from_integer(3))).empty());
}

TEST_CASE("json round trip") {
  Field f = make_field(3, 2);
  auto j = field_to_json(f);
  CHECK(j["p"] == 3);
  CHECK(field_from_json(j) == f);
  FieldElement a = f.element_at_rank(5);
  CHECK(element_from_json(f, element_to_json(a)) == a);
  CHECK(element_from_json(make_field(7, 1), 10) == make_field(7, 1).from_integer(3));
  CHECK_THROWS_AS(element_from_json(f, nlohmann::json("bad")), Error);
}

TEST_CASE("number theory") {
  CHECK(is_prime(2));
  CHECK(is_prime(1000000007ULL));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(561));
  CHECK(prime_divisors(4095) == std::vector<std::uint64_t>{3, 5, 7, 13});
  CHECK(exact_log(32, 2) == 5u);
  CHECK_FALSE(exact_log(24, 2));
}
