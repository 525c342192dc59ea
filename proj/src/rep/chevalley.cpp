#include "simspec/rep/chevalley.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "simspec/error.hpp"
#include "simspec/galois/serialize.hpp"
#include "simspec/linalg/charpoly.hpp"
#include "simspec/rep/membership.hpp"

namespace simspec::rep {

namespace {

constexpr std::size_t kRoots = 24;
constexpr std::size_t kDim = 28;

roots::IVec negate(roots::IVec c) {
  for (auto& x : c) x = -x;
  return c;
}

roots::IVec add(const roots::IVec& a, const roots::IVec& b) {
  roots::IVec c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

bool is_zero(const roots::IVec& c) {
  return std::all_of(c.begin(), c.end(), [](int x) { return x == 0; });
}

}  // namespace

ChevalleyAlgebra::ChevalleyAlgebra() : sys_(roots::build_root_system('D', 4)), f2_(galois::make_field(2, 1)) {
  roots_ = sys_->positive_roots;
  for (const auto& r : sys_->positive_roots) roots_.push_back(negate(r));
  table_.assign(kDim * kDim, std::vector<Raw>(kDim, 0));
  for (std::size_t i = 0; i < kDim; ++i)
    for (std::size_t j = 0; j < kDim; ++j) {
      auto& out = table_[i * kDim + j];
      if (i < kRoots && j < kRoots) {
        roots::IVec s = add(roots_[i], roots_[j]);
        if (is_zero(s)) {
          // H_alpha, with coefficients of the positive root
          for (unsigned k = 0; k < 4; ++k) out[kRoots + k] = std::abs(roots_[i][k]) % 2;
        } else {
          auto it = std::find(roots_.begin(), roots_.end(), s);
          if (it != roots_.end()) out[it - roots_.begin()] = 1;
        }
      } else if (i < kRoots || j < kRoots) {
        const std::size_t x = i < kRoots ? i : j;
        const unsigned h = static_cast<unsigned>((i < kRoots ? j : i) - kRoots);
        out[x] = std::abs(sys_->labels_of(roots_[x])[h]) % 2;
      }
    }
}

std::size_t ChevalleyAlgebra::root_index(const roots::IVec& c) const {
  auto it = std::find(roots_.begin(), roots_.end(), c);
  if (it == roots_.end()) fail(ErrorKind::InvalidArgument, "not a root of D4");
  return it - roots_.begin();
}

std::string ChevalleyAlgebra::basis_label(std::size_t i) const {
  if (i >= kRoots) return "H" + std::to_string(i - kRoots + 1);
  std::ostringstream os;
  os << "X[";
  for (std::size_t k = 0; k < 4; ++k) os << (k ? "," : "") << roots_[i][k];
  os << "]";
  return os.str();
}

std::vector<Raw> ChevalleyAlgebra::bracket(const std::vector<Raw>& x, const std::vector<Raw>& y) const {
  std::vector<Raw> out(kDim, 0);
  for (std::size_t i = 0; i < kDim; ++i) {
    if (!x[i]) continue;
    for (std::size_t j = 0; j < kDim; ++j) {
      if (!y[j]) continue;
      const auto& b = table_[i * kDim + j];
      for (std::size_t k = 0; k < kDim; ++k) out[k] ^= b[k];
    }
  }
  return out;
}

bool ChevalleyAlgebra::is_alternating() const {
  for (std::size_t i = 0; i < kDim; ++i) {
    if (std::any_of(table_[i * kDim + i].begin(), table_[i * kDim + i].end(), [](Raw v) { return v != 0; })) return false;
    for (std::size_t j = 0; j < kDim; ++j)
      if (table_[i * kDim + j] != table_[j * kDim + i]) return false;  // -1 = 1
  }
  return true;
}

std::size_t ChevalleyAlgebra::jacobi_violations() const {
  auto e = [](std::size_t i) {
    std::vector<Raw> v(kDim, 0);
    v[i] = 1;
    return v;
  };
  std::size_t bad = 0;
  for (std::size_t i = 0; i < kDim; ++i)
    for (std::size_t j = 0; j < kDim; ++j)
      for (std::size_t k = 0; k < kDim; ++k) {
        auto a = bracket(e(i), bracket(j, k));
        auto b = bracket(e(j), bracket(k, i));
        auto c = bracket(e(k), bracket(i, j));
        for (std::size_t t = 0; t < kDim; ++t)
          if (a[t] ^ b[t] ^ c[t]) {
            ++bad;
            break;
          }
      }
  return bad;
}

Matrix ChevalleyAlgebra::ad(const std::vector<Raw>& x) const {
  Matrix m(f2_, kDim, kDim);
  for (std::size_t j = 0; j < kDim; ++j) {
    std::vector<Raw> e(kDim, 0);
    e[j] = 1;
    auto col = bracket(x, e);
    for (std::size_t i = 0; i < kDim; ++i) m.at(i, j) = col[i];
  }
  return m;
}

linalg::Subspace ChevalleyAlgebra::center() const {
  // x -> [x, e_b] for every b, stacked
  Matrix a(f2_, kDim * kDim, kDim);
  for (std::size_t b = 0; b < kDim; ++b)
    for (std::size_t i = 0; i < kDim; ++i) {
      const auto& v = table_[i * kDim + b];
      for (std::size_t k = 0; k < kDim; ++k) a.at(b * kDim + k, i) = v[k];
    }
  return linalg::kernel(a);
}

Matrix ChevalleyAlgebra::sigma_matrix(const std::vector<unsigned>& perm) const {
  Matrix m(f2_, kDim, kDim);
  for (std::size_t i = 0; i < kRoots; ++i) {
    roots::IVec img(4);
    for (unsigned k = 0; k < 4; ++k) img[perm[k]] = roots_[i][k];
    m.at(root_index(img), i) = 1;
  }
  for (unsigned k = 0; k < 4; ++k) m.at(kRoots + perm[k], kRoots + k) = 1;
  return m;
}

Matrix ChevalleyAlgebra::weyl_matrix(const std::vector<unsigned>& target, const std::vector<int>& sign) const {
  auto act = [&](const roots::IVec& c) {
    roots::QVec eps = roots::Weight::root(sys_, c).coords(roots::Basis::Epsilon);
    roots::QVec img(4, 0);
    for (unsigned i = 0; i < 4; ++i) img[target[i]] = eps[i] * sign[i];
    roots::QVec simple = roots::Weight::from_coords(sys_, img, roots::Basis::Epsilon).coords(roots::Basis::SimpleRoot);
    roots::IVec out;
    for (const auto& x : simple) out.push_back(static_cast<int>(x.numerator()));
    return out;
  };
  Matrix m(f2_, kDim, kDim);
  for (std::size_t i = 0; i < kRoots; ++i) m.at(root_index(act(roots_[i])), i) = 1;
  for (unsigned k = 0; k < 4; ++k) {
    roots::IVec simple(4, 0);
    simple[k] = 1;
    roots::IVec img = act(simple);
    for (unsigned l = 0; l < 4; ++l) m.at(kRoots + l, kRoots + k) = std::abs(img[l]) % 2;
  }
  return m;
}

D4Construction build_d4_char2(Field f, Raw twist) {
  if (f.characteristic() != 2) fail(ErrorKind::BadCharacteristic, "d4-w2-char2 is built in characteristic 2 only");
  if (twist == 0 || f.pow(twist, 3) != 1) fail(ErrorKind::InvalidArgument, "sigma twist must be a cube root of unity");
  D4Construction d{ChevalleyAlgebra(), {}, {}, {}};
  const auto& alg = d.algebra;
  d.center = alg.center();
  if (d.center.dim() != 2)
    fail(ErrorKind::CenterDimensionUnexpected, "Lie centre has dimension " + std::to_string(d.center.dim()) + ", expected 2");
  d.quotient_indices = linalg::quotient_basis(d.center);

  ExplicitRep& rep = d.rep;
  rep.label = "d4-w2-char2";
  rep.dim = d.quotient_indices.size();
  rep.field = f;
  rep.sigma_order = 3;
  rep.system = alg.system();
  rep.torus_rank = 4;
  auto quotient = [&](const Matrix& m) { return linalg::embed(linalg::induced_quotient_action(m, d.center), f); };
  const auto sigma_perm = roots::diagram_automorphism(rep.system, 3).perm;
  rep.sigma = quotient(alg.sigma_matrix(sigma_perm)).scaled(twist);

  std::vector<unsigned> target = {0, 1, 2, 3};
  do {
    for (unsigned mask = 0; mask < 16; ++mask) {
      if (__builtin_popcount(mask) % 2) continue;
      std::vector<int> sign(4);
      std::string id;
      for (unsigned i = 0; i < 4; ++i) {
        sign[i] = (mask >> i) & 1 ? -1 : 1;
        id += (sign[i] < 0 ? "-" : "+") + std::to_string(target[i] + 1);
      }
      rep.weyl.push_back({id, quotient(alg.weyl_matrix(target, sign))});
    }
  } while (std::next_permutation(target.begin(), target.end()));

  LedgerEntry zero{roots::Weight::zero(rep.system), 0, {}, {0, 0, 0, 0}};
  for (std::size_t k = 0; k < d.quotient_indices.size(); ++k) {
    const std::size_t b = d.quotient_indices[k];
    if (b < kRoots) {
      rep.ledger.push_back({roots::Weight::root(rep.system, alg.root(b)), 1, {k}, alg.root(b)});
    } else {
      zero.basis.push_back(k);
      ++zero.multiplicity;
    }
  }
  rep.ledger.push_back(zero);
  rep.sigma_on_torus = [sigma_perm](const std::vector<FieldElement>& a) {
    std::vector<FieldElement> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[sigma_perm[i]] = a[i];
    return out;
  };
  return d;
}

SigmaOnV0 sigma_action_on_V0(const D4Construction& d) {
  const ExplicitRep& rep = d.rep;
  const Field f = rep.field;
  SigmaOnV0 r;
  const auto zero = rep.zero_weight_basis();
  Matrix v0(f, zero.size(), zero.size());
  for (std::size_t i = 0; i < zero.size(); ++i)
    for (std::size_t j = 0; j < zero.size(); ++j) v0.at(i, j) = rep.sigma(zero[i], zero[j]);
  r.v0_matrix = v0;
  r.charpoly = linalg::charpoly(v0);
  r.squarefree = galois::squarefree_factorization(r.charpoly);
  r.claimed = galois::Polynomial(f, std::vector<Raw>{1, 1, 1});
  r.matches_claim = r.charpoly == r.claimed;
  const auto perm = roots::diagram_automorphism(rep.system, 3).perm;
  r.cartan_matrix = d.algebra.sigma_matrix(perm).block(kRoots, kRoots, 4, 4);
  r.cartan_charpoly = linalg::charpoly(r.cartan_matrix);
  for (const auto& v : d.center.vectors()) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i]) s += (s.empty() ? "" : "+") + d.algebra.basis_label(i);
    r.center_basis.push_back(s);
  }
  return r;
}

nlohmann::json to_json(const SigmaOnV0& r) {
  nlohmann::json sf = nlohmann::json::array();
  for (const auto& [e, g] : r.squarefree) sf.push_back({{"exponent", e}, {"factor", g.to_string()}});
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < r.v0_matrix.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < r.v0_matrix.cols(); ++j) row.push_back(galois::element_to_json(r.v0_matrix.element(i, j)));
    rows.push_back(row);
  }
  return {{"v0_matrix", rows},
          {"charpoly", r.charpoly.to_string()},
          {"charpoly_coefficients", galois::polynomial_to_json(r.charpoly)},
          {"squarefree_factorization", sf},
          {"claimed", r.claimed.to_string()},
          {"matches_claim", r.matches_claim},
          {"cartan_charpoly", r.cartan_charpoly.to_string()},
          {"center_basis", r.center_basis}};
}

}  // namespace simspec::rep
