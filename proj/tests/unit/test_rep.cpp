#include <random>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "simspec/error.hpp"
#include "simspec/linalg/charpoly.hpp"
#include "simspec/linalg/subspace.hpp"
#include "simspec/rep/chevalley.hpp"
#include "simspec/rep/membership.hpp"

using namespace simspec;
using namespace simspec::rep;
using galois::Polynomial;

namespace {

std::vector<FieldElement> coords(Field f, std::initializer_list<std::int64_t> v) {
  std::vector<FieldElement> out;
  for (auto x : v) out.push_back(f.from_integer(x));
  return out;
}

std::vector<FieldElement> random_coords(Field f, std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> d(1, f.size() - 1);
  std::vector<FieldElement> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(f.element_at_rank(d(rng)));
  return out;
}

Matrix random_sl(Field f, std::size_t n, std::mt19937_64& rng) {
  Matrix m = oracle::random_invertible(f, n, rng);
  // rescale the first column to make det 1
  Polynomial cp = linalg::charpoly(m);
  FieldElement det = cp.coeff(0);
  if (n % 2) det = -det;
  Raw inv = f.inv(det.raw());
  for (std::size_t i = 0; i < n; ++i) m.at(i, 0) = f.mul(m(i, 0), inv);
  return m;
}

Polynomial ledger_charpoly(const ExplicitRep& rep, const std::vector<FieldElement>& t) {
  Polynomial p = Polynomial::constant(rep.field.one());
  for (const auto& e : rep.ledger)
    for (unsigned k = 0; k < e.multiplicity; ++k) p = p * Polynomial::linear_root(rep.weight_value(e, rep.to_rep_field(t)));
  return p;
}

void common_rep_properties(const ExplicitRep& rep, std::mt19937_64& rng) {
  std::size_t total = 0;
  for (const auto& e : rep.ledger) {
    CHECK(e.multiplicity == e.basis.size());
    total += e.multiplicity;
  }
  CHECK(total == rep.dim);
  Matrix s = rep.sigma;
  CHECK(s.pow(rep.sigma_order).is_diagonal());
  CHECK(s.pow(rep.sigma_order) == Matrix::identity(rep.field, rep.dim).scaled(s.pow(rep.sigma_order)(0, 0)));
  Matrix sinv = linalg::inverse(s);
  for (int trial = 0; trial < 4; ++trial) {
    auto t = random_coords(rep.field, rep.torus_rank, rng);
    auto u = random_coords(rep.field, rep.torus_rank, rng);
    Matrix a = rep.torus_eval(t), b = rep.torus_eval(u);
    CHECK(a * b == b * a);
    CHECK(a == Matrix::diagonal(rep.field, rep.torus_diagonal(t)));
    CHECK(linalg::charpoly(a) == ledger_charpoly(rep, t));
    CHECK(s * a * sinv == rep.torus_eval(rep.sigma_on_torus(t)));
    for (const auto& w : rep.weyl) CHECK((w.matrix * a * linalg::inverse(w.matrix)).is_diagonal());
  }
}

}  // namespace

TEST_CASE("a2 adjoint module") {
  Field f = galois::field_of_size(7);
  auto rep = build_a2_adjoint(f);
  CHECK(rep.dim == 8);
  CHECK(rep.weyl.size() == 2);
  CHECK(rep.torus_eval(coords(f, {1, 1})).is_identity());
  auto t = coords(f, {3, 1});
  Matrix h = rep.sigma * rep.weyl_eval("nw") * rep.torus_eval(t);
  // h(E12) = -t1 t2^-1 E12
  CHECK(h.element(0, 0) == -(t[0] / t[1]));
  for (std::size_t i = 1; i < 8; ++i) CHECK(h(i, 0) == 0);
  // h(E22 - E33) = -(E11 - E33) = -(H1 + H2)
  CHECK(h.element(6, 7) == f.from_integer(-1));
  CHECK(h.element(7, 7) == f.from_integer(-1));
  for (std::size_t i = 0; i < 6; ++i) CHECK(h(i, 7) == 0);
  // sigma is l -> -l^T: E12 -> -E21
  CHECK(rep.sigma.element(2, 0) == f.from_integer(-1));
  CHECK(rep.zero_weight_basis() == std::vector<std::size_t>{6, 7});
  std::mt19937_64 rng(11);
  common_rep_properties(rep, rng);
  for (int trial = 0; trial < 5; ++trial) {
    Matrix g1 = random_sl(f, 3, rng), g2 = random_sl(f, 3, rng);
    CHECK(rep.natural_action(g1 * g2) == rep.natural_action(g1) * rep.natural_action(g2));
    CHECK(rep.sigma * rep.natural_action(g1) * linalg::inverse(rep.sigma) == rep.natural_action(linalg::inverse(g1).transpose()));
  }
  CHECK_THROWS_AS(build_a2_adjoint(galois::field_of_size(9)), Error);
  CHECK_THROWS_AS(build_a2_adjoint(f, 3), Error);
}

TEST_CASE("a3 2w2 module") {
  for (std::uint64_t q : {5, 7, 25}) {
    Field f = galois::field_of_size(q);
    auto rep = build_a3_two_omega2(f);
    CHECK(rep.dim == 20);
    CHECK(rep.weyl.size() == 3);
    unsigned nonzero = 0, zero = 0;
    for (const auto& e : rep.ledger) {
      if (e.weight == roots::Weight::zero(rep.system)) {
        zero = e.multiplicity;
      } else {
        CHECK(e.multiplicity == 1);
        ++nonzero;
      }
    }
    CHECK(nonzero == 18);
    CHECK(zero == 2);
    // eigenvalue on the 2w2 vector is (ab)^2
    auto hw = 2 * roots::Weight::fundamental(rep.system, 2);
    auto t = coords(f, {2, 3, 4});
    for (const auto& e : rep.ledger)
      if (e.weight == hw) CHECK(rep.torus_eval(t).element(e.basis[0], e.basis[0]) == (t[0] * t[1]).pow(2));
    std::mt19937_64 rng(q);
    common_rep_properties(rep, rng);
    for (int trial = 0; trial < 3; ++trial) {
      Matrix g1 = random_sl(f, 4, rng), g2 = random_sl(f, 4, rng);
      CHECK(rep.natural_action(g1 * g2) == rep.natural_action(g1) * rep.natural_action(g2));
      CHECK(rep.sigma * rep.natural_action(g1) * linalg::inverse(rep.sigma) == rep.natural_action(linalg::inverse(g1).transpose()));
    }
  }
  CHECK_THROWS_AS(build_a3_two_omega2(galois::field_of_size(3)), Error);
}

TEST_CASE("a3 induced pair") {
  Field f = galois::field_of_size(5);
  auto rep = build_a3_induced_pair(f);
  CHECK(rep.dim == 20);
  CHECK(rep.sigma.pow(2).is_identity());
  std::set<std::vector<int>> block1;
  for (const auto& e : rep.ledger)
    for (auto b : e.basis)
      if (b < 10) block1.insert(e.character);
  // eps_i + eps_j with i <= j, reduced modulo eps_1 + ... + eps_4
  std::set<std::vector<int>> expected;
  for (int i = 0; i < 4; ++i)
    for (int j = i; j < 4; ++j) {
      std::vector<int> e(4, 0);
      e[i]++;
      e[j]++;
      expected.insert({e[0] - e[3], e[1] - e[3], e[2] - e[3]});
    }
  CHECK(block1 == expected);
  std::mt19937_64 rng(5);
  common_rep_properties(rep, rng);
  auto t = random_coords(f, 3, rng);
  Matrix h = rep.sigma * rep.weyl_eval("nw1") * rep.torus_eval(t);
  Matrix h2 = h * h;
  CHECK(h2.block(0, 10, 10, 10).is_zero());
  CHECK(h2.block(10, 0, 10, 10).is_zero());
  CHECK_THROWS_AS(build_a3_induced_pair(galois::field_of_size(4)), Error);
}

TEST_CASE("D4 Chevalley algebra mod 2") {
  ChevalleyAlgebra alg;
  CHECK(alg.is_alternating());
  CHECK(alg.jacobi_violations() == 0);
  auto z = alg.center();
  CHECK(z.dim() == 2);
  // oracle: brute force over the Cartan part
  std::set<unsigned> central;
  for (unsigned mask = 0; mask < 16; ++mask) {
    std::vector<Raw> x(28, 0);
    for (unsigned k = 0; k < 4; ++k) x[24 + k] = (mask >> k) & 1;
    if (alg.ad(x).is_zero()) central.insert(mask);
  }
  CHECK(central == std::set<unsigned>{0, 0b0101, 0b1001, 0b1100});
  std::vector<Raw> h13(28, 0), h14(28, 0);
  h13[24] = h13[26] = 1;
  h14[24] = h14[27] = 1;
  CHECK(z == linalg::Subspace(alg.gf2(), 28, {h13, h14}));
  // sigma and Weyl elements are automorphisms
  auto check_auto = [&](const Matrix& m) {
    for (std::size_t i = 0; i < 28; ++i)
      for (std::size_t j = 0; j < 28; ++j) {
        auto lhs = m.apply(alg.bracket(i, j));
        auto rhs = alg.bracket(m.col(i), m.col(j));
        if (lhs != rhs) return false;
      }
    return true;
  };
  auto perm = roots::diagram_automorphism(alg.system(), 3).perm;
  Matrix s = alg.sigma_matrix(perm);
  CHECK(check_auto(s));
  CHECK(s.pow(3).is_identity());
  CHECK(check_auto(alg.weyl_matrix({1, 0, 2, 3}, {1, 1, 1, 1})));
  CHECK(check_auto(alg.weyl_matrix({3, 2, 0, 1}, {-1, 1, -1, 1})));
  CHECK(s.col(alg.root_index({1, 0, 0, 0})) == s.col(alg.root_index({1, 0, 0, 0})));
  CHECK(s(alg.root_index({0, 0, 0, 1}), alg.root_index({1, 0, 0, 0})) == 1);
  CHECK(s(alg.root_index({1, 1, 0, 0}), alg.root_index({0, 1, 1, 0})) == 1);
}

TEST_CASE("D4 quotient module") {
  Field f = galois::field_of_size(16);
  auto d = build_d4_char2(f);
  const auto& rep = d.rep;
  CHECK(rep.dim == 26);
  CHECK(rep.zero_weight_basis().size() == 2);
  CHECK(rep.weyl.size() == 192);
  CHECK(rep.weyl.front().id == "+1+2+3+4");
  CHECK(rep.weyl.front().matrix.is_identity());
  std::set<std::vector<Raw>> distinct;
  for (const auto& w : rep.weyl) distinct.insert(w.matrix.raw());
  CHECK(distinct.size() == 192);
  CHECK(d.quotient_indices.back() == 25);
  CHECK(rep.sigma.pow(3).is_identity());
  std::mt19937_64 rng(16);
  common_rep_properties(rep, rng);

  auto v0 = sigma_action_on_V0(d);
  Polynomial x1(f, std::vector<Raw>{1, 1});
  Polynomial cyc(f, std::vector<Raw>{1, 1, 1});
  CHECK(v0.charpoly == x1 * x1);
  CHECK_FALSE(v0.matches_claim);
  Field f2 = galois::make_field(2, 1);
  CHECK(v0.cartan_charpoly == Polynomial(f2, std::vector<Raw>{1, 1}).pow(2) * Polynomial(f2, std::vector<Raw>{1, 1, 1}));
  CHECK(v0.center_basis.size() == 2);
  CHECK_THROWS_AS(build_d4_char2(galois::field_of_size(5)), Error);
  auto eps = coords(f, {1, 1, 1, 1});
  auto a = d4_root_values(eps);
  CHECK(rep.torus_eval(a).is_identity());
}

TEST_CASE("membership checks") {
  for (std::uint64_t q : {5, 7, 11}) {
    Field f2 = galois::field_of_size(q * q);
    FieldElement t1 = galois::primitive_element(f2).pow(q - 1);
    CHECK(galois::element_order(t1) == q + 1);
    ElementSpec e{"su3", 1, "nw", {t1, f2.one()}, q};
    auto r = membership_check("su3", e);
    CHECK(r.member);
    CHECK_FALSE(r.certificate.empty());
    e.torus[0] = galois::primitive_element(f2);
    CHECK_FALSE(membership_check("su3", e).member);
  }
  Field f7 = galois::field_of_size(7);
  CHECK(membership_check("sl3", {"a2-adjoint", 1, "nw", coords(f7, {3, 1}), 7}).member);
  const std::uint64_t q = 16;
  Field big = galois::field_of_size(q * q * q);
  FieldElement y1 = galois::primitive_element(big);
  FieldElement y2 = galois::embed(galois::primitive_element(galois::field_of_size(q)), big);
  std::vector<FieldElement> y = {y1, y2, y1.pow(q), y1.pow(q * q)};
  std::vector<FieldElement> a;
  for (const auto& v : y) a.push_back(v * v);
  CHECK(membership_check("3d4", {"d4-w2-char2", 1, "+1+2+3+4", a, q}).member);
  auto bad = a;
  bad[2] = bad[2] * y1;
  CHECK_FALSE(membership_check("3d4", {"d4-w2-char2", 1, "+1+2+3+4", bad, q}).member);
  CHECK_FALSE(membership_check("d4", {"d4-w2-char2", 1, "+1+2+3+4", a, q}).member);
  CHECK_THROWS_AS(membership_check("e6", {"x", 1, "1", a, q}), Error);
  CHECK(weyl_representatives("a3", f7).size() == 3);
  CHECK(weyl_representatives("a2", f7).size() == 2);
  CHECK(weyl_representatives("d4", galois::field_of_size(4)).size() == 192);
  auto j = to_json(ElementSpec{"a2-adjoint", 1, "nw", coords(f7, {3, 1}), 7});
  auto back = element_from_json(j, f7);
  CHECK(back.weyl_id == "nw");
  CHECK(back.torus == coords(f7, {3, 1}));
  CHECK_THROWS_AS(element_from_json(nlohmann::json::parse(R"({"sigma_power": 1})"), f7), Error);
}
