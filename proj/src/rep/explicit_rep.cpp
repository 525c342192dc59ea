#include "simspec/rep/explicit_rep.hpp"

#include <algorithm>
#include <map>

#include "simspec/error.hpp"
#include "simspec/galois/serialize.hpp"
#include "simspec/linalg/subspace.hpp"
#include "simspec/rep/chevalley.hpp"
#include "simspec/rep/membership.hpp"

namespace simspec::rep {

namespace {

using linalg::Subspace;

using Pair = std::pair<std::size_t, std::size_t>;

std::vector<Pair> index_pairs(std::size_t n, bool strict) {
  std::vector<Pair> out;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = strict ? a + 1 : a; b < n; ++b) out.emplace_back(a, b);
  return out;
}

Matrix sym2(const Matrix& m) {
  const Field f = m.field();
  const auto pairs = index_pairs(m.rows(), false);
  Matrix out(f, pairs.size(), pairs.size());
  for (std::size_t col = 0; col < pairs.size(); ++col) {
    auto [a, b] = pairs[col];
    for (std::size_t row = 0; row < pairs.size(); ++row) {
      auto [c, d] = pairs[row];
      Raw v = f.mul(m(c, a), m(d, b));
      if (c != d) v = f.add(v, f.mul(m(d, a), m(c, b)));
      out.at(row, col) = v;
    }
  }
  return out;
}

Matrix wedge2(const Matrix& m) {
  const Field f = m.field();
  const auto pairs = index_pairs(m.rows(), true);
  Matrix out(f, pairs.size(), pairs.size());
  for (std::size_t col = 0; col < pairs.size(); ++col) {
    auto [i, j] = pairs[col];
    for (std::size_t row = 0; row < pairs.size(); ++row) {
      auto [k, l] = pairs[row];
      out.at(row, col) = f.sub(f.mul(m(k, i), m(l, j)), f.mul(m(l, i), m(k, j)));
    }
  }
  return out;
}

void check_twist(Field f, Raw twist, unsigned order) {
  if (twist == 0 || f.pow(twist, order) != 1)
    fail(ErrorKind::InvalidArgument, "sigma twist must be a root of unity of order dividing " + std::to_string(order));
}

void require_char_not(Field f, std::initializer_list<std::uint64_t> bad, const std::string& what) {
  for (auto p : bad)
    if (f.characteristic() == p) fail(ErrorKind::BadCharacteristic, what + " needs characteristic outside {2, 3}");
}

// Groups basis vectors by their epsilon weight; A_n epsilon vectors are
// reduced so that the last coordinate is 0.
std::vector<LedgerEntry> ledger_from_epsilon(const roots::RootSystemPtr& sys, const std::vector<std::vector<int>>& eps) {
  std::map<std::vector<int>, std::vector<std::size_t>> groups;
  std::vector<std::vector<int>> order;
  for (std::size_t i = 0; i < eps.size(); ++i) {
    std::vector<int> e = eps[i];
    const int last = e.back();
    for (auto& x : e) x -= last;
    if (!groups.count(e)) order.push_back(e);
    groups[e].push_back(i);
  }
  std::vector<LedgerEntry> out;
  for (const auto& e : order) {
    roots::QVec q(e.begin(), e.end());
    LedgerEntry le{roots::Weight::from_coords(sys, q, roots::Basis::Epsilon), static_cast<unsigned>(groups[e].size()), groups[e], {}};
    le.character.assign(e.begin(), e.end() - 1);
    out.push_back(std::move(le));
  }
  return out;
}

std::vector<FieldElement> invert_all(const std::vector<FieldElement>& t) {
  std::vector<FieldElement> out;
  for (const auto& x : t) out.push_back(x.inverse());
  return out;
}

std::vector<WeylRep> realize_weyl(const std::vector<WeylRep>& natural, const std::function<Matrix(const Matrix&)>& act) {
  std::vector<WeylRep> out;
  for (const auto& w : natural) out.push_back({w.id, act(w.matrix)});
  return out;
}

// Symmetric pairing on Lambda^2 F^4: e_I ^ e_J = J(I, J) e_1234.
Matrix wedge_pairing(Field f) {
  const auto pairs = index_pairs(4, true);
  Matrix j(f, 6, 6);
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = 0; b < 6; ++b) {
      std::vector<std::size_t> idx = {pairs[a].first, pairs[a].second, pairs[b].first, pairs[b].second};
      std::vector<std::size_t> sorted = idx;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) continue;
      int inversions = 0;
      for (int x = 0; x < 4; ++x)
        for (int y = x + 1; y < 4; ++y)
          if (idx[x] > idx[y]) ++inversions;
      j.at(a, b) = f.from_int(inversions % 2 ? -1 : 1);
    }
  return j;
}

}  // namespace

std::vector<FieldElement> ExplicitRep::to_rep_field(const std::vector<FieldElement>& coords) const {
  std::vector<FieldElement> out;
  for (const auto& c : coords) out.push_back(c.field() == field ? c : galois::embed(c, field));
  return out;
}

std::vector<Raw> ExplicitRep::torus_diagonal(const std::vector<FieldElement>& coords) const {
  if (coords.size() != torus_rank) fail(ErrorKind::DimensionMismatch, label + " expects " + std::to_string(torus_rank) + " torus coordinates");
  auto t = to_rep_field(coords);
  for (const auto& x : t)
    if (x.is_zero()) fail(ErrorKind::ZeroElement, "torus coordinates must be nonzero");
  std::vector<Raw> d(dim, 0);
  for (const auto& e : ledger) {
    Raw v = weight_value(e, t).raw();
    for (auto i : e.basis) d[i] = v;
  }
  return d;
}

Matrix ExplicitRep::torus_eval(const std::vector<FieldElement>& coords) const {
  if (natural_action) {
    auto d = torus_diagonal(coords);  // validates
    (void)d;
    return natural_action(a_type_torus_matrix(to_rep_field(coords)));
  }
  return Matrix::diagonal(field, torus_diagonal(coords));
}

std::size_t ExplicitRep::weyl_index(const std::string& id) const {
  for (std::size_t i = 0; i < weyl.size(); ++i)
    if (weyl[i].id == id) return i;
  fail(ErrorKind::InvalidArgument, "unknown Weyl representative '" + id + "' for " + label);
}

const Matrix& ExplicitRep::weyl_eval(const std::string& id) const { return weyl[weyl_index(id)].matrix; }

FieldElement ExplicitRep::weight_value(const LedgerEntry& e, const std::vector<FieldElement>& coords) const {
  FieldElement v = field.one();
  for (std::size_t i = 0; i < e.character.size(); ++i)
    if (e.character[i] != 0) v *= coords[i].pow(e.character[i]);
  return v;
}

std::vector<std::size_t> ExplicitRep::zero_weight_basis() const {
  for (const auto& e : ledger)
    if (e.weight == roots::Weight::zero(system)) return e.basis;
  return {};
}

std::vector<std::size_t> ExplicitRep::nonzero_weight_basis() const {
  std::vector<std::size_t> out;
  for (const auto& e : ledger)
    if (!(e.weight == roots::Weight::zero(system))) out.insert(out.end(), e.basis.begin(), e.basis.end());
  std::sort(out.begin(), out.end());
  return out;
}

Matrix a_type_torus_matrix(const std::vector<FieldElement>& coords) {
  if (coords.empty()) fail(ErrorKind::DimensionMismatch, "empty torus");
  Field f = coords[0].field();
  std::vector<Raw> d;
  FieldElement prod = f.one();
  for (const auto& c : coords) {
    d.push_back(c.raw());
    prod *= c;
  }
  d.push_back(prod.inverse().raw());
  return Matrix::diagonal(f, d);
}

std::vector<FieldElement> d4_root_values(const std::vector<FieldElement>& t) {
  if (t.size() != 4) fail(ErrorKind::DimensionMismatch, "D4 epsilon-coordinates need 4 entries");
  return {t[0] / t[1], t[1] / t[2], t[2] / t[3], t[2] * t[3]};
}

ExplicitRep build_a2_adjoint(Field f, Raw twist) {
  require_char_not(f, {2, 3}, "a2-adjoint");
  check_twist(f, twist, 2);
  ExplicitRep rep;
  rep.label = "a2-adjoint";
  rep.dim = 8;
  rep.field = f;
  rep.sigma_order = 2;
  rep.system = roots::build_root_system('A', 2);
  rep.torus_rank = 2;
  const std::vector<Pair> units = {{0, 1}, {0, 2}, {1, 0}, {1, 2}, {2, 0}, {2, 1}};

  // basis element k as a 3x3 matrix, and coordinates of a trace-zero matrix
  auto basis_matrix = [units](Field g, std::size_t k) {
    Matrix b(g, 3, 3);
    if (k < 6) {
      b.at(units[k].first, units[k].second) = 1;
    } else {
      b.at(k - 6, k - 6) = 1;
      b.at(k - 5, k - 5) = g.neg(1);
    }
    return b;
  };
  auto coords_of = [units](const Matrix& l) {
    Field g = l.field();
    std::vector<Raw> c(8, 0);
    for (std::size_t k = 0; k < 6; ++k) c[k] = l(units[k].first, units[k].second);
    c[6] = l(0, 0);
    c[7] = g.neg(l(2, 2));
    return c;
  };
  rep.natural_action = [basis_matrix, coords_of](const Matrix& g) {
    Matrix ginv = linalg::inverse(g);
    Matrix out(g.field(), 8, 8);
    for (std::size_t k = 0; k < 8; ++k) {
      auto c = coords_of(g * basis_matrix(g.field(), k) * ginv);
      for (std::size_t i = 0; i < 8; ++i) out.at(i, k) = c[i];
    }
    return out;
  };
  Matrix sigma(f, 8, 8);
  for (std::size_t k = 0; k < 8; ++k) {
    auto c = coords_of(basis_matrix(f, k).transpose().scaled(f.neg(twist)));
    for (std::size_t i = 0; i < 8; ++i) sigma.at(i, k) = c[i];
  }
  rep.sigma = sigma;
  rep.weyl = realize_weyl(weyl_representatives("a2", f), rep.natural_action);

  std::vector<std::vector<int>> eps;
  for (auto [i, j] : units) {
    std::vector<int> e(3, 0);
    e[i] = 1;
    e[j] = -1;
    eps.push_back(e);
  }
  eps.push_back({0, 0, 0});
  eps.push_back({0, 0, 0});
  rep.ledger = ledger_from_epsilon(rep.system, eps);
  rep.sigma_on_torus = invert_all;
  return rep;
}

ExplicitRep build_a3_two_omega2(Field f, Raw twist) {
  require_char_not(f, {2, 3}, "a3-2w2");
  check_twist(f, twist, 2);
  ExplicitRep rep;
  rep.label = "a3-2w2";
  rep.dim = 20;
  rep.field = f;
  rep.sigma_order = 2;
  rep.system = roots::build_root_system('A', 3);
  rep.torus_rank = 3;

  auto big = [](const Matrix& g) { return sym2(wedge2(g)); };
  std::vector<Matrix> gens;
  for (std::size_t i = 0; i + 1 < 4; ++i) {
    for (auto [r, c] : {Pair{i, i + 1}, Pair{i + 1, i}}) {
      Matrix x = Matrix::identity(f, 4);
      x.at(r, c) = 1;
      gens.push_back(big(x));
    }
  }
  Subspace line = linalg::fixed_space(gens);
  if (line.dim() != 1) fail(ErrorKind::InvariantNotFound, "expected a single invariant line in Sym^2(Lambda^2), found dimension " + std::to_string(line.dim()));
  const std::vector<Raw> v0 = line.vectors()[0];

  const Matrix j = wedge_pairing(f);
  const auto sp = index_pairs(6, false);
  // B(m, v0) for each monomial m of Sym^2
  Matrix row(f, 1, sp.size());
  for (std::size_t m = 0; m < sp.size(); ++m) {
    Raw s = 0;
    for (std::size_t n = 0; n < sp.size(); ++n) {
      if (v0[n] == 0) continue;
      auto [a, b] = sp[m];
      auto [c, d] = sp[n];
      Raw bm = f.add(f.mul(j(a, c), j(b, d)), f.mul(j(a, d), j(b, c)));
      s = f.add(s, f.mul(bm, v0[n]));
    }
    row.at(0, m) = s;
  }
  Subspace w = linalg::kernel(row);
  if (w.dim() != 20 || w.contains(v0)) fail(ErrorKind::InvariantNotFound, "Pfaffian line is not a complement of its orthogonal");
  const Matrix basis = w.basis().transpose();

  rep.natural_action = [big, basis](const Matrix& g) {
    Matrix b = g.field() == basis.field() ? basis : linalg::embed(basis, g.field());
    return linalg::restrict_action(big(g), b);
  };
  rep.sigma = linalg::restrict_action(sym2(j), basis).scaled(twist);
  rep.weyl = realize_weyl(weyl_representatives("a3", f), rep.natural_action);

  const auto wp = index_pairs(4, true);
  auto monomial_eps = [&](std::size_t m) {
    std::vector<int> e(4, 0);
    for (auto idx : {sp[m].first, sp[m].second}) {
      e[wp[idx].first] += 1;
      e[wp[idx].second] += 1;
    }
    return e;
  };
  std::vector<std::vector<int>> eps;
  for (const auto& v : w.vectors()) {
    std::optional<std::vector<int>> e;
    for (std::size_t m = 0; m < v.size(); ++m) {
      if (v[m] == 0) continue;
      auto em = monomial_eps(m);
      if (e && *e != em) fail(ErrorKind::InvariantNotFound, "complement basis vector is not a weight vector");
      e = em;
    }
    eps.push_back(*e);
  }
  rep.ledger = ledger_from_epsilon(rep.system, eps);
  rep.sigma_on_torus = invert_all;
  return rep;
}

ExplicitRep build_a3_induced_pair(Field f, Raw twist) {
  if (f.characteristic() == 2) fail(ErrorKind::BadCharacteristic, "a3-induced needs odd characteristic");
  check_twist(f, twist, 2);
  ExplicitRep rep;
  rep.label = "a3-induced";
  rep.dim = 20;
  rep.field = f;
  rep.sigma_order = 2;
  rep.system = roots::build_root_system('A', 3);
  rep.torus_rank = 3;
  rep.natural_action = [](const Matrix& g) { return linalg::block_diag({sym2(g), sym2(linalg::inverse(g).transpose())}); };
  Matrix s(f, 20, 20);
  for (std::size_t i = 0; i < 10; ++i) {
    s.at(i, i + 10) = twist;
    s.at(i + 10, i) = twist;
  }
  rep.sigma = s;
  rep.weyl = realize_weyl(weyl_representatives("a3", f), rep.natural_action);
  std::vector<std::vector<int>> eps;
  for (int sign : {1, -1})
    for (auto [a, b] : index_pairs(4, false)) {
      std::vector<int> e(4, 0);
      e[a] += sign;
      e[b] += sign;
      eps.push_back(e);
    }
  rep.ledger = ledger_from_epsilon(rep.system, eps);
  rep.sigma_on_torus = invert_all;
  return rep;
}

ExplicitRep build_case(const std::string& label, Field f, Raw twist) {
  if (label == "a2-adjoint") return build_a2_adjoint(f, twist);
  if (label == "a3-2w2") return build_a3_two_omega2(f, twist);
  if (label == "a3-induced") return build_a3_induced_pair(f, twist);
  if (label == "d4-w2-char2") return build_d4_char2(f, twist).rep;
  fail(ErrorKind::UnknownCase, "unknown case '" + label + "'");
}

nlohmann::json to_json(const ExplicitRep& rep) {
  nlohmann::json ledger = nlohmann::json::array();
  for (const auto& e : rep.ledger) ledger.push_back({{"weight", e.weight.to_string()}, {"multiplicity", e.multiplicity}, {"basis", e.basis}});
  return {{"label", rep.label}, {"dim", rep.dim}, {"field", galois::field_to_json(rep.field)}, {"sigma_order", rep.sigma_order}, {"ledger", ledger}};
}

}  // namespace simspec::rep
